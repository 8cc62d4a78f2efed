"""Galois groups of random walks on linear groups.

Rationals are returned as :class:`fractions.Fraction`; polynomial
coefficients are listed from the constant term upward.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import _galwalk
from ._galwalk import GroupTooLarge

__all__ = [
    "GroupTooLarge",
    "__version__",
    "census_mod_p",
    "char_poly",
    "coset_weyl_structure",
    "counterexample_closed_form",
    "counterexample_oracle",
    "frobenius_cycle_type",
    "identify",
    "predicted_group",
    "quadratic_galois",
    "quartic_galois",
    "rng_algorithm",
    "run",
    "sample_walk",
    "scenario_info",
    "scenario_names",
    "weyl_group",
]

__version__ = _galwalk.version()


def _q(x: Any) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    return str(Fraction(x))


def _coeffs(coeffs: Iterable[Any]) -> list[str]:
    return [_q(c) for c in coeffs]


def _rows(rows: Sequence[Sequence[Any]]) -> list[list[str]]:
    return [[_q(x) for x in row] for row in rows]


def _fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _group(d):
    if d is None:
        return None
    d = dict(d)
    d["distribution"] = {t: Fraction(f) for t, f in d["distribution"].items()}
    return d


def rng_algorithm() -> str:
    return _galwalk.rng_algorithm()


def scenario_names() -> list[str]:
    return list(_galwalk.scenario_names())


def scenario_info(name: str) -> dict:
    d = dict(_galwalk.scenario_info(name))
    d["generators"] = [{"matrix": _fractions(g["matrix"]), "label": g["label"]} for g in d["generators"]]
    return d


def sample_walk(scenario: str, k: int, seed: int = 1, index: int = 0) -> dict:
    d = dict(_galwalk.sample_walk(scenario, k, seed, index))
    d["matrix"] = _fractions(d["matrix"])
    return d


def char_poly(rows: Sequence[Sequence[Any]]) -> list[Fraction]:
    return [Fraction(c) for c in _galwalk.char_poly(_rows(rows))]


def frobenius_cycle_type(coeffs: Iterable[Any], p: int, multiplicity: int = 1):
    """Returns (status, cycle type or None)."""
    return _galwalk.frobenius_cycle_type(_coeffs(coeffs), p, multiplicity)


def quadratic_galois(coeffs: Iterable[Any]) -> str:
    return _galwalk.quadratic_galois(_coeffs(coeffs))


def quartic_galois(coeffs: Iterable[Any]) -> tuple[str, bool]:
    return tuple(_galwalk.quartic_galois(_coeffs(coeffs)))


def predicted_group(scenario: str, coset: int):
    return _group(_galwalk.predicted_group(scenario, coset))


def weyl_group(scenario: str, coset: int):
    return _group(_galwalk.weyl_group(scenario, coset))


def identify(coeffs: Iterable[Any], scenario: str, coset: int, **kwargs) -> dict:
    return dict(_galwalk.identify(_coeffs(coeffs), scenario, coset, **kwargs))


def census_mod_p(scenario: str, p: int) -> list[dict]:
    return [dict(c) for c in _galwalk.census_mod_p(scenario, p)]


def counterexample_oracle(k: int) -> dict:
    d = dict(_galwalk.counterexample_oracle(k))
    d["trivial_fraction"] = Fraction(d["trivial_fraction"])
    return d


def counterexample_closed_form(k: int) -> Fraction:
    return Fraction(_galwalk.counterexample_closed_form(k))


def coset_weyl_structure(n: int) -> dict:
    d = dict(_galwalk.coset_weyl_structure(n))
    d["torsion_invariants"] = [int(x) for x in d["torsion_invariants"]]
    d["total_order"] = int(d["total_order"])
    return d


def run(verb: str, **config: Any) -> str:
    """Runs a CLI verb and returns its CSV or JSON text.

    Keyword arguments use the config-file keys (scenario, k, samples,
    primes_min, primes_max, budget, seed, format, tv_max, coverage_min,
    fp_primes, threads).
    """
    return _galwalk.run_verb(verb, json.dumps(config))
