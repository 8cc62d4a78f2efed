#include "galwalk/permkit.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace galwalk {

Permutation::Permutation(std::size_t n) : images_(n) {
  if (n > 256) throw std::invalid_argument("Permutation: degree above 256");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("Permutation: images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img.at(c[i]) = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  Permutation r;
  r.images_ = std::move(inv);
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& relabel) const {
  return relabel * *this * relabel.inverse();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Permutation product: degree mismatch");
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

std::string Permutation::to_string() const {
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      if (j != i) s += " ";
      s += std::to_string(j);
      seen[j] = true;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

CycleType cycle_type(const Permutation& g) {
  std::vector<int> parts;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = g(static_cast<int>(j))) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

// ---------------------------------------------------------------------------

Rational EnumeratedGroup::frequency(const CycleType& t) const {
  auto it = distribution_.find(t);
  return it == distribution_.end() ? Rational(0) : it->second;
}

bool EnumeratedGroup::contains(const Permutation& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool EnumeratedGroup::is_transitive() const {
  if (degree_ == 0) return true;
  std::vector<bool> reached(degree_, false);
  for (const auto& g : elements_) reached[g(0)] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

EnumeratedGroup enumerate(const std::vector<Permutation>& generators, std::size_t degree, std::size_t bound) {
  if (bound < 1) throw std::invalid_argument("enumerate: bound must be positive");
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("enumerate: generator degree mismatch");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> frontier;
  Permutation id(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw GroupTooLarge("enumerate: more than " + std::to_string(bound) + " elements");
        frontier.push_back(std::move(next));
      }
    }
  }

  EnumeratedGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(gens);
  G.elements_.assign(seen.begin(), seen.end());
  std::sort(G.elements_.begin(), G.elements_.end());
  std::map<CycleType, std::size_t> counts;
  for (const auto& g : G.elements_) ++counts[cycle_type(g)];
  for (const auto& [t, c] : counts) {
    Rational q(static_cast<unsigned long>(c), static_cast<unsigned long>(G.elements_.size()));
    q.canonicalize();
    G.distribution_[t] = q;
  }
  return G;
}

EnumeratedGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return enumerate(gens, n);
}

EnumeratedGroup alternating_group(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, static_cast<int>(i)}}));
  return enumerate(gens, n);
}

EnumeratedGroup cyclic_group(std::size_t n) {
  std::vector<int> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  return enumerate({Permutation::from_cycles(n, {cyc})}, n);
}

EnumeratedGroup trivial_group(std::size_t n) { return enumerate({}, n); }

EnumeratedGroup wreath_product(const EnumeratedGroup& base, const EnumeratedGroup& top, std::size_t bound) {
  const std::size_t d = base.degree();
  const std::size_t m = top.degree();
  if (d == 0 || m == 0) throw std::invalid_argument("wreath_product: empty factor");
  // |base wr top| = |base|^m · |top|; refuse before enumerating.
  double predicted = static_cast<double>(top.order());
  for (std::size_t j = 0; j < m; ++j) predicted *= static_cast<double>(base.order());
  if (predicted > static_cast<double>(bound))
    throw GroupTooLarge("wreath_product: predicted order exceeds the enumeration bound");

  const std::size_t N = d * m;
  std::vector<Permutation> gens;
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& b : base.generators()) {
      std::vector<std::uint8_t> img(N);
      std::iota(img.begin(), img.end(), 0);
      for (std::size_t i = 0; i < d; ++i) img[j * d + i] = static_cast<std::uint8_t>(j * d + b(static_cast<int>(i)));
      gens.emplace_back(std::move(img));
    }
  for (const auto& t : top.generators()) {
    std::vector<std::uint8_t> img(N);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < d; ++i) img[j * d + i] = static_cast<std::uint8_t>(t(static_cast<int>(j)) * d + i);
    gens.emplace_back(std::move(img));
  }
  return enumerate(gens, N, bound);
}

EnumeratedGroup wreath_product(std::size_t d, const EnumeratedGroup& top, std::size_t bound) {
  if (d < 1) throw std::invalid_argument("wreath_product: block size must be positive");
  return wreath_product(cyclic_group(d), top, bound);
}

EnumeratedGroup direct_product(const std::vector<EnumeratedGroup>& factors, std::size_t bound) {
  std::size_t N = 0;
  for (const auto& f : factors) N += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<std::uint8_t> img(N);
      std::iota(img.begin(), img.end(), 0);
      for (std::size_t i = 0; i < f.degree(); ++i)
        img[offset + i] = static_cast<std::uint8_t>(offset + g(static_cast<int>(i)));
      gens.emplace_back(std::move(img));
    }
    offset += f.degree();
  }
  return enumerate(gens, N, bound);
}

EnumeratedGroup diagonal_action(const EnumeratedGroup& g, std::size_t copies) {
  const std::size_t n = g.degree();
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<std::uint8_t> img(n * copies);
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t i = 0; i < n; ++i) img[c * n + i] = static_cast<std::uint8_t>(c * n + x(static_cast<int>(i)));
    gens.emplace_back(std::move(img));
  }
  return enumerate(gens, n * copies);
}

EnumeratedGroup semidirect_by_action(const EnumeratedGroup& normal, const EnumeratedGroup& acting,
                                     std::size_t bound) {
  if (normal.degree() != acting.degree())
    throw std::invalid_argument("semidirect_by_action: factors act on different point sets");
  for (const auto& a : acting.generators())
    for (const auto& x : normal.generators())
      if (!normal.contains(x.conjugated_by(a)))
        throw std::invalid_argument("semidirect_by_action: acting factor does not normalize the normal factor");
  std::size_t meet = 0;
  for (const auto& x : acting.elements()) meet += normal.contains(x) ? 1 : 0;
  if (meet != 1) throw std::invalid_argument("semidirect_by_action: factors intersect nontrivially");

  std::vector<Permutation> gens = normal.generators();
  gens.insert(gens.end(), acting.generators().begin(), acting.generators().end());
  EnumeratedGroup G = enumerate(gens, normal.degree(), bound);
  if (G.order() != normal.order() * acting.order())
    throw std::invalid_argument("semidirect_by_action: order check failed");
  return G;
}

}  // namespace galwalk
