#include "galwalk/scenarios.hpp"

#include <stdexcept>

namespace galwalk {

namespace {

RationalMatrix elementary(std::size_t n, std::size_t i, std::size_t j, const Rational& c = 1) {
  RationalMatrix m = RationalMatrix::identity(n);
  m(i, j) = c;
  return m;
}

std::vector<RationalMatrix> sl_elementary(std::size_t n) {
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(elementary(n, i, j));
  return out;
}

// Places `blocks` along the diagonal of a larger matrix.
RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dim();
  RationalMatrix m(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m(off + i, off + j) = b(i, j);
    off += b.dim();
  }
  return m;
}

// Block permutation matrix sending block i to block (i+1) mod d.
RationalMatrix block_shift(std::size_t n, std::size_t d) {
  RationalMatrix m(n * d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t i = 0; i < n; ++i) m(((b + 1) % d) * n + i, b * n + i) = 1;
  return m;
}

Scenario sl(int n) {
  std::vector<Generator> raw;
  for (auto& e : sl_elementary(n)) raw.push_back({std::move(e), 0});
  return {"sl" + std::to_string(n), "SL_" + std::to_string(n) + "(Z), elementary generators",
          make_admissible(raw, ComponentGroup()), {"identity"}};
}

// A -> diag(A, (A^t)^-1) and tau -> [[0, I], [I, 0]] inside GL_2n.
Scenario sl_tau(int n) {
  std::vector<Generator> raw;
  for (const auto& e : sl_elementary(n))
    raw.push_back({block_diagonal({e, mat_inverse(e.transpose())}), 0});
  raw.push_back({block_shift(n, 2), 1});
  return {"sl_tau" + std::to_string(n),
          "SL_" + std::to_string(n) + "(Z) x| <A -> (A^t)^-1> in GL_" + std::to_string(2 * n) + "(Q)",
          make_admissible(raw, ComponentGroup::cyclic(2)), {"identity", "tau"}};
}

// SL_n^d with the cyclic shift of factors, in GL_{nd}.
Scenario sl_power_cyclic(int n, int d) {
  std::vector<Generator> raw;
  const RationalMatrix id = RationalMatrix::identity(n);
  for (int f = 0; f < d; ++f)
    for (const auto& e : sl_elementary(n)) {
      std::vector<RationalMatrix> blocks(d, id);
      blocks[f] = e;
      raw.push_back({block_diagonal(blocks), 0});
    }
  raw.push_back({block_shift(n, d), 1});
  std::vector<std::string> names{"identity"};
  for (int c = 1; c < d; ++c) names.push_back("shift^" + std::to_string(c));
  return {"sl_power_cyclic" + std::to_string(n) + "x" + std::to_string(d),
          "SL_" + std::to_string(n) + "(Z)^" + std::to_string(d) + " x| <cyclic shift>",
          make_admissible(raw, ComponentGroup::cyclic(d)), std::move(names)};
}

// a + b·sqrt2 -> [[a, 2b], [b, a]], applied entrywise to a 2x2 matrix.
RationalMatrix embed_sqrt2(const std::vector<std::vector<std::pair<long, long>>>& m) {
  RationalMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto [a, b] = m[i][j];
      out(2 * i, 2 * j) = a;
      out(2 * i, 2 * j + 1) = 2 * b;
      out(2 * i + 1, 2 * j) = b;
      out(2 * i + 1, 2 * j + 1) = a;
    }
  return out;
}

Scenario res_scalars_sqrt2() {
  std::vector<Generator> raw{
      {embed_sqrt2({{{1, 0}, {1, 0}}, {{0, 0}, {1, 0}}}), 0},
      {embed_sqrt2({{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}}), 0},
      {embed_sqrt2({{{1, 0}, {0, 0}}, {{1, 0}, {1, 0}}}), 0},
      {embed_sqrt2({{{1, 0}, {0, 0}}, {{0, 1}, {1, 0}}}), 0},
      // diag(1 + sqrt2, -1 + sqrt2), the fundamental unit and its inverse.
      {embed_sqrt2({{{1, 1}, {0, 0}}, {{0, 0}, {-1, 1}}}), 0},
  };
  return {"res_scalars_sqrt2", "SL_2(Z[sqrt2]) in GL_4(Q) by the regular representation",
          make_admissible(raw, ComponentGroup()), {"identity"}};
}

Scenario nonsemisimple_counterexample() {
  std::vector<Generator> raw{
      {RationalMatrix{{2, 0}, {0, 3}}, 0},
      {RationalMatrix{{0, 1}, {1, 0}}, 1},
  };
  return {"nonsemisimple_counterexample", "diagonal torus with the coordinate swap: {A, A^-1, J, I}",
          make_admissible(raw, ComponentGroup::cyclic(2)), {"diagonal", "antidiagonal"}};
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"sl2",
          "sl3",
          "sl4",
          "sl_tau2",
          "sl_tau4",
          "sl_power_cyclic2x2",
          "sl_power_cyclic2x3",
          "res_scalars_sqrt2",
          "nonsemisimple_counterexample"};
}

Scenario make_scenario(const std::string& name) {
  if (name == "sl2") return sl(2);
  if (name == "sl3") return sl(3);
  if (name == "sl4") return sl(4);
  if (name == "sl_tau2") return sl_tau(2);
  if (name == "sl_tau4") return sl_tau(4);
  if (name == "sl_power_cyclic2x2") return sl_power_cyclic(2, 2);
  if (name == "sl_power_cyclic2x3") return sl_power_cyclic(2, 3);
  if (name == "res_scalars_sqrt2") return res_scalars_sqrt2();
  if (name == "nonsemisimple_counterexample") return nonsemisimple_counterexample();
  throw std::invalid_argument("unknown scenario: " + name);
}

std::vector<Scenario> builtin_scenarios() {
  std::vector<Scenario> out;
  for (const auto& n : scenario_names()) out.push_back(make_scenario(n));
  return out;
}

}  // namespace galwalk
