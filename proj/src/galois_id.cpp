#include "galwalk/galois_id.hpp"

#include <algorithm>
#include <cmath>

namespace galwalk {

std::map<CycleType, Rational> SampleSummary::empirical() const {
  std::map<CycleType, Rational> out;
  if (good_count == 0) return out;
  for (const auto& [t, c] : counts) {
    Rational q(static_cast<unsigned long>(c), static_cast<unsigned long>(good_count));
    q.canonicalize();
    out[t] = q;
  }
  return out;
}

SampleSummary collect_samples(const RationalPolynomial& f, const std::vector<std::uint32_t>& primes,
                              std::size_t budget, int multiplicity) {
  if (f.is_zero() || !squarefree_root(f, multiplicity))
    throw NotSquarefreeInput("collect_samples: characteristic polynomial is not regular semisimple: " + f.to_string());
  SampleSummary s;
  s.degree = f.degree();
  for (std::uint32_t p : primes) {
    if (s.good_count >= budget) break;
    FrobeniusSample fs = frobenius_cycle_type(f, p, multiplicity);
    if (fs.status == FrobeniusStatus::good) {
      ++s.good_count;
      ++s.counts[*fs.cycle_type];
    } else {
      ++s.bad_count;
    }
  }
  return s;
}

SampleSummary collect_samples(const RationalPolynomial& f, PrimeWindow window, std::size_t budget,
                              int multiplicity) {
  return collect_samples(f, primes_in(window.min, window.max), budget, multiplicity);
}

std::string to_string(SmallGroup g) {
  switch (g) {
    case SmallGroup::C1: return "C1";
    case SmallGroup::C2: return "C2";
    case SmallGroup::C3: return "C3";
    case SmallGroup::S3: return "S3";
    case SmallGroup::V4: return "V4";
    case SmallGroup::C4: return "C4";
    case SmallGroup::D4: return "D4";
    case SmallGroup::A4: return "A4";
    case SmallGroup::S4: return "S4";
  }
  return "?";
}

bool is_rational_square(const Rational& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_num_mpz_t()) != 0 && mpz_perfect_square_p(x.get_den_mpz_t()) != 0;
}

namespace {

using IntPoly = std::vector<Integer>;  // degree-indexed

Integer eval(const IntPoly& g, const Integer& x) {
  Integer acc = 0;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly derivative(const IntPoly& g) {
  IntPoly d;
  for (std::size_t i = 1; i < g.size(); ++i) d.push_back(g[i] * static_cast<unsigned long>(i));
  return d;
}

// Integers m such that every real root of g lies in [m, m+1]. g has nonzero
// leading coefficient and degree >= 1.
std::vector<Integer> real_root_brackets(const IntPoly& g) {
  const std::size_t deg = g.size() - 1;
  std::vector<Integer> out;
  if (deg == 0) return out;
  if (deg == 1) {
    Integer m;
    Integer num = -g[0];
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), g[1].get_mpz_t());
    out.push_back(m);
    return out;
  }
  std::vector<Integer> crit = real_root_brackets(derivative(g));
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  // Cauchy bound: every root has |x| < 1 + max|c_i| / |lead|.
  Integer maxc = 0;
  for (std::size_t i = 0; i < deg; ++i) maxc = std::max(maxc, Integer(abs(g[i])));
  Integer bound;
  mpz_cdiv_q(bound.get_mpz_t(), maxc.get_mpz_t(), Integer(abs(g[deg])).get_mpz_t());
  bound += 2;

  // g is monotone on [c_i + 1, c_{i+1}] and on the two outer rays.
  std::vector<std::pair<Integer, Integer>> monotone;
  Integer lo = -bound;
  for (const auto& c : crit) {
    monotone.emplace_back(lo, c);
    out.push_back(c);
    lo = c + 1;
  }
  monotone.emplace_back(lo, bound);

  for (auto [L, R] : monotone) {
    if (L > R) continue;
    int sl = sgn(eval(g, L)), sr = sgn(eval(g, R));
    if (sl == 0) out.push_back(L);
    if (sr == 0) out.push_back(R);
    if (sl * sr >= 0) continue;
    // Invariant: sign(g(L)) = sl, sign(g(R)) = sr = -sl.
    while (R - L > 1) {
      Integer mid = (L + R) / 2;
      int sm = sgn(eval(g, mid));
      if (sm == 0) {
        L = mid;
        break;
      }
      if (sm == sl) L = mid;
      else R = mid;
    }
    out.push_back(L);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Cubic discriminant of a monic x^3 + p x^2 + q x + r.
Rational cubic_discriminant(const Rational& p, const Rational& q, const Rational& r) {
  return p * p * q * q - 4 * q * q * q - 4 * p * p * p * r - 27 * r * r + 18 * p * q * r;
}

RationalPolynomial deflate(const RationalPolynomial& f, const Rational& root) {
  return divide(f, RationalPolynomial{Rational(-root), Rational(1)}).quotient;
}

}  // namespace

std::vector<Rational> rational_roots(const RationalPolynomial& f_in) {
  if (f_in.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  RationalPolynomial f = f_in.monic();
  while (f.degree() >= 1 && f[0] == 0) {
    if (roots.empty()) roots.push_back(0);
    f = divide(f, RationalPolynomial{Rational(0), Rational(1)}).quotient;
  }
  if (f.degree() < 1) return roots;

  // x = D·T turns f into a monic integer polynomial g with integer roots only.
  const int deg = f.degree();
  Integer D = f.denominator_lcm();
  IntPoly g(deg + 1);
  Integer Dpow = 1;
  for (int i = deg; i >= 0; --i) {
    Rational c = f[i] * Rational(Dpow);
    g[i] = c.get_num();
    Dpow *= D;
  }
  for (const auto& m : real_root_brackets(g))
    for (const Integer& x : {m, Integer(m + 1)})
      if (eval(g, x) == 0) {
        Rational r(x, D);
        r.canonicalize();
        roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

SmallGroup quadratic_galois(const RationalPolynomial& f_in) {
  if (f_in.degree() != 2) throw std::invalid_argument("quadratic_galois: degree must be 2");
  RationalPolynomial f = f_in.monic();
  Rational disc = f[1] * f[1] - 4 * f[0];
  if (disc == 0) throw NotSquarefreeInput("quadratic_galois: repeated root");
  return is_rational_square(disc) ? SmallGroup::C1 : SmallGroup::C2;
}

QuarticGalois quartic_galois_exact(const RationalPolynomial& f_in) {
  if (f_in.degree() != 4) throw std::invalid_argument("quartic_galois_exact: degree must be 4");
  if (!squarefree_over_q(f_in)) throw NotSquarefreeInput("quartic_galois_exact: repeated root");
  RationalPolynomial f = f_in.monic();

  std::vector<Rational> roots = rational_roots(f);
  if (!roots.empty()) {
    RationalPolynomial h = f;
    for (const auto& r : roots) h = deflate(h, r);
    switch (h.degree()) {
      case 0: return {SmallGroup::C1, false};
      case 2: return {SmallGroup::C2, false};
      case 3: {
        RationalPolynomial m = h.monic();
        return {is_rational_square(cubic_discriminant(m[2], m[1], m[0])) ? SmallGroup::C3 : SmallGroup::S3, false};
      }
      default: throw std::logic_error("quartic_galois_exact: inconsistent root count");
    }
  }

  const Rational a = f[3], b = f[2], c = f[1], d = f[0];
  // Resolvent cubic with roots α1α2+α3α4, α1α3+α2α4, α1α4+α2α3.
  const Rational rp = -b, rq = a * c - 4 * d, rr = -(a * a * d - 4 * b * d + c * c);
  RationalPolynomial resolvent{rr, rq, rp, Rational(1)};
  const Rational disc = cubic_discriminant(rp, rq, rr);
  std::vector<Rational> rroots = rational_roots(resolvent);

  // A factorization into rational quadratics (x²+px+q)(x²+p'x+q') forces
  // r = q + q' to be a resolvent root, q q' = d, p + p' = a, p p' = b - r.
  for (const auto& r : rroots) {
    Rational dq = r * r - 4 * d, dp = a * a - 4 * (b - r);
    if (!is_rational_square(dq) || !is_rational_square(dp)) continue;
    const Rational rq_(Integer(sqrt(dq.get_num())), Integer(sqrt(dq.get_den())));
    const Rational rp_(Integer(sqrt(dp.get_num())), Integer(sqrt(dp.get_den())));
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        Rational q1 = (r + s1 * rq_) / 2, q2 = (r - s1 * rq_) / 2;
        Rational p1 = (a + s2 * rp_) / 2, p2 = (a - s2 * rp_) / 2;
        RationalPolynomial f1{q1, p1, Rational(1)}, f2{q2, p2, Rational(1)};
        if (f1 * f2 == f) {
          Rational d1 = p1 * p1 - 4 * q1, d2 = p2 * p2 - 4 * q2;
          return {is_rational_square(d1 * d2) ? SmallGroup::C2 : SmallGroup::V4, false};
        }
      }
  }

  if (rroots.empty()) return {is_rational_square(disc) ? SmallGroup::A4 : SmallGroup::S4, true};
  if (rroots.size() == 3) return {SmallGroup::V4, true};
  // One rational resolvent root r: C4 iff x² - r x + d and x² + a x + (b - r)
  // both split over Q(√disc).
  const Rational& r = rroots.front();
  auto splits = [&disc](const Rational& delta) { return is_rational_square(delta) || is_rational_square(delta * disc); };
  bool cyclic = splits(r * r - 4 * d) && splits(a * a - 4 * (b - r));
  return {cyclic ? SmallGroup::C4 : SmallGroup::D4, true};
}

bool certify_sn(const SampleSummary& summary, int n) {
  if (n < 1) return false;
  if (n == 1) return true;
  auto seen = [&](const CycleType& t) { return summary.counts.count(t) && summary.counts.at(t) > 0; };
  if (!seen(CycleType({n}))) return false;
  std::vector<int> transposition(n - 1, 1);
  transposition[0] = 2;
  if (!seen(CycleType(transposition))) return false;
  auto is_prime = [](int q) {
    if (q < 2) return false;
    for (int k = 2; k * k <= q; ++k)
      if (q % k == 0) return false;
    return true;
  };
  for (const auto& [t, c] : summary.counts) {
    if (c == 0) continue;
    for (int part : t.parts())
      if (is_prime(part) && 2 * part > n) return true;
  }
  return false;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedSn: return "certified_sn";
    case VerdictKind::CertifiedExact: return "certified_exact";
    case VerdictKind::Consistent: return "consistent";
    case VerdictKind::Rejected: return "rejected";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

double tv_distance(const SampleSummary& summary, const EnumeratedGroup& target) {
  if (summary.good_count == 0) return 1.0;
  Rational total = 0;
  auto emp = summary.empirical();
  for (const auto& [t, f] : target.type_distribution()) {
    auto it = emp.find(t);
    total += abs(f - (it == emp.end() ? Rational(0) : it->second));
  }
  for (const auto& [t, f] : emp)
    if (!target.type_distribution().count(t)) total += f;
  return Rational(total / 2).get_d();
}

Verdict match_verdict(const SampleSummary& summary, const PredictedGroup& target, const Thresholds& thresholds) {
  if (summary.degree != target.degree)
    throw DimensionMismatch("match_verdict: sample degree " + std::to_string(summary.degree) +
                            " differs from target degree " + std::to_string(target.degree));
  Verdict v;
  v.target = target.name;
  const auto& dist = target.group->type_distribution();
  std::size_t covered = 0;
  for (const auto& [t, f] : dist)
    if (summary.counts.count(t) && summary.counts.at(t) > 0) ++covered;
  for (const auto& [t, c] : summary.counts)
    if (c > 0 && !dist.count(t)) v.foreign_types.push_back(t);
  v.coverage = dist.empty() ? 1.0 : static_cast<double>(covered) / static_cast<double>(dist.size());
  v.tv_distance = tv_distance(summary, *target.group);

  if (summary.good_count == 0) {
    v.kind = VerdictKind::Inconclusive;
  } else if (!v.foreign_types.empty()) {
    v.kind = VerdictKind::Rejected;
  } else if (target.natural_symmetric && certify_sn(summary, target.degree)) {
    v.kind = VerdictKind::CertifiedSn;
  } else if (v.coverage >= thresholds.coverage_min && v.tv_distance <= thresholds.tv_max) {
    v.kind = VerdictKind::Consistent;
  } else if (covered == dist.size() && v.tv_distance > thresholds.tv_max) {
    v.kind = VerdictKind::Rejected;
  } else {
    v.kind = VerdictKind::Inconclusive;
  }
  return v;
}

Identification identify(const RationalPolynomial& f, const PredictedGroup& target,
                        const std::vector<std::uint32_t>& primes, std::size_t budget, const Thresholds& thresholds) {
  Identification id;
  auto root = squarefree_root(f, target.multiplicity);
  if (!root) {
    id.regular_semisimple = false;
    id.verdict.target = target.name;
    id.verdict.kind = VerdictKind::Inconclusive;
    return id;
  }
  id.regular_semisimple = true;
  id.summary = collect_samples(f, primes, budget, target.multiplicity);
  id.verdict = match_verdict(id.summary, target, thresholds);

  if (target.exact_name.empty() || id.verdict.kind == VerdictKind::Rejected) return id;
  std::string exact;
  if (root->degree() == 2) {
    exact = to_string(quadratic_galois(*root));
  } else if (root->degree() == 4) {
    QuarticGalois q = quartic_galois_exact(*root);
    if (q.irreducible == target.group->is_transitive()) exact = to_string(q.group);
  }
  if (!exact.empty() && exact == target.exact_name) {
    id.verdict.kind = VerdictKind::CertifiedExact;
    id.verdict.exact_group = exact;
  }
  return id;
}

}  // namespace galwalk
