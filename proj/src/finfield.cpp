#include "galwalk/finfield.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace galwalk {

std::size_t FiniteGroupModP::order() const {
  std::size_t n = 0;
  for (const auto& c : cosets) n += c.size();
  return n;
}

namespace {

// Up to 16 entries of 8 bits each.
struct Key {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    return static_cast<std::size_t>(k.lo * 0x9E3779B97F4A7C15ULL ^ (k.hi + 0x632BE59BD9B4E019ULL + (k.lo << 6)));
  }
};

Key pack(const PrimeFieldMatrix& m) {
  Key k;
  const auto& e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(e[i]) << (8 * (i % 8));
    (i < 8 ? k.lo : k.hi) |= v;
  }
  return k;
}

}  // namespace

FiniteGroupModP enumerate_mod_p(const GeneratorSet& gens, std::uint32_t p, std::size_t bound) {
  if (p == 2) throw BadPrime("enumerate_mod_p: p = 2 is excluded");
  if (p >= 256 || gens.dim() > 4)
    throw std::invalid_argument("enumerate_mod_p: requires p < 256 and dimension <= 4");
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("enumerate_mod_p: modulus is not prime");

  std::vector<PrimeFieldMatrix> red;
  std::vector<int> labels;
  for (const auto& g : gens.generators()) {
    auto m = reduce_matrix_mod_p(g.matrix, p);
    if (!m) throw BadPrime("enumerate_mod_p: generator does not reduce mod " + std::to_string(p));
    if (m->determinant() == 0) throw BadPrime("enumerate_mod_p: generator is singular mod " + std::to_string(p));
    red.push_back(std::move(*m));
    labels.push_back(g.label);
  }

  const ComponentGroup& cg = gens.component_group();
  std::vector<PrimeFieldMatrix> elems{PrimeFieldMatrix::identity(p, gens.dim())};
  std::vector<int> elem_labels{0};
  std::unordered_map<Key, std::uint32_t, KeyHash> seen{{pack(elems[0]), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < red.size(); ++s) {
      PrimeFieldMatrix next = elems[head] * red[s];
      int label = cg.multiply(elem_labels[head], labels[s]);
      auto [it, inserted] = seen.try_emplace(pack(next), static_cast<std::uint32_t>(elems.size()));
      if (!inserted) {
        if (elem_labels[it->second] != label)
          throw std::logic_error("enumerate_mod_p: coset labels are not well defined mod " + std::to_string(p));
        continue;
      }
      if (elems.size() >= bound)
        throw GroupTooLarge("enumerate_mod_p: more than " + std::to_string(bound) + " elements mod " +
                            std::to_string(p));
      elems.push_back(std::move(next));
      elem_labels.push_back(label);
    }
  }

  FiniteGroupModP out;
  out.p = p;
  out.dim = gens.dim();
  out.cosets.resize(cg.order());
  for (std::size_t i = 0; i < elems.size(); ++i) out.cosets[elem_labels[i]].push_back(std::move(elems[i]));
  return out;
}

std::optional<CycleType> element_cycle_type(const PrimeFieldMatrix& g, int multiplicity) {
  auto r = squarefree_root_mod_p(char_poly_mod_p(g), multiplicity);
  if (!r) return std::nullopt;
  auto t = distinct_degree_pattern(*r);
  if (!t) return std::nullopt;
  return t->repeated(multiplicity);
}

CosetCensus census(const std::vector<PrimeFieldMatrix>& elements, std::uint32_t p, int coset, int multiplicity) {
  CosetCensus c;
  c.p = p;
  c.coset = coset;
  c.total = elements.size();
  for (const auto& g : elements) {
    auto t = element_cycle_type(g, multiplicity);
    if (!t) continue;
    ++c.rs_count;
    ++c.type_counts[*t];
  }
  return c;
}

DensityReport density_report(const std::vector<CosetCensus>& censuses,
                             const std::vector<std::map<CycleType, Rational>>& targets) {
  if (censuses.empty()) throw std::invalid_argument("density_report: no censuses");
  if (targets.size() != censuses.size()) throw std::invalid_argument("density_report: one target per census required");
  DensityReport rep;
  for (std::size_t i = 0; i < censuses.size(); ++i) {
    const CosetCensus& c = censuses[i];
    const auto& target = targets[i];
    std::map<CycleType, bool> types;
    for (const auto& [t, f] : target) types[t] = true;
    for (const auto& [t, n] : c.type_counts) types.try_emplace(t, false);
    for (const auto& [t, in_target] : types) {
      DensityRow row;
      row.p = c.p;
      row.coset = c.coset;
      row.type = t;
      auto it = c.type_counts.find(t);
      row.count = it == c.type_counts.end() ? 0 : it->second;
      row.rs_density = c.rs_count ? static_cast<double>(row.count) / static_cast<double>(c.rs_count) : 0.0;
      row.coset_density = c.total ? static_cast<double>(row.count) / static_cast<double>(c.total) : 0.0;
      row.in_target = in_target;
      if (in_target) {
        row.predicted = target.at(t).get_d();
        row.flagged = row.count == 0;
        rep.min_density = std::min(rep.min_density, row.coset_density);
        if (row.flagged) ++rep.violations;
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace galwalk
