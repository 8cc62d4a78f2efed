#include "galwalk/walker.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace galwalk {

ComponentGroup::ComponentGroup() : ComponentGroup(std::vector<std::vector<int>>{{0}}) {}

ComponentGroup::ComponentGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int m = order();
  if (m == 0) throw std::invalid_argument("component group must be nonempty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != m) throw std::invalid_argument("component group table is not square");
    for (int x : row)
      if (x < 0 || x >= m) throw std::invalid_argument("component group table entry out of range");
  }
  for (int a = 0; a < m; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw std::invalid_argument("element 0 must be the identity");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("component group table is not associative");
  inverse_.assign(m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  if (std::count(inverse_.begin(), inverse_.end(), -1) != 0)
    throw std::invalid_argument("component group table lacks inverses");
}

ComponentGroup ComponentGroup::cyclic(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return ComponentGroup(std::move(t));
}

GeneratorSet::GeneratorSet(std::vector<Generator> gens, ComponentGroup group)
    : gens_(std::move(gens)), group_(std::move(group)) {
  if (gens_.empty()) throw std::invalid_argument("generator set is empty");
}

GeneratorSet make_admissible(const std::vector<Generator>& raw, const ComponentGroup& group) {
  if (raw.empty()) throw std::invalid_argument("make_admissible: empty generating set");
  const std::size_t n = raw.front().matrix.dim();
  for (const auto& g : raw) {
    if (g.matrix.dim() != n) throw std::invalid_argument("make_admissible: generators differ in dimension");
    if (g.label < 0 || g.label >= group.order())
      throw std::invalid_argument("make_admissible: label outside the component group");
    if (g.matrix.is_identity() && g.label != 0)
      throw std::invalid_argument("make_admissible: identity matrix carries a non-identity label");
  }

  std::vector<Generator> out;
  auto contains = [&out](const RationalMatrix& m) {
    return std::find_if(out.begin(), out.end(), [&](const Generator& g) { return g.matrix == m; }) != out.end();
  };
  for (const auto& g : raw) {
    if (contains(g.matrix)) continue;
    out.push_back(g);
    RationalMatrix inv = mat_inverse(g.matrix);
    if (!contains(inv)) out.push_back({std::move(inv), group.inverse(g.label)});
  }
  auto id = RationalMatrix::identity(n);
  if (!contains(id)) out.push_back({std::move(id), 0});
  return GeneratorSet(std::move(out), group);
}

const char* const kRngAlgorithm =
    "mt19937_64 seeded by std::seed_seq{seed_lo32,seed_hi32,index_lo32,index_hi32}; uniform ints by rejection";

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

std::uint64_t SampleStream::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Largest multiple of bound representable; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

WalkSample sample_walk(const GeneratorSet& gens, int k, std::uint64_t seed, std::uint64_t index) {
  if (k < 0) throw std::invalid_argument("sample_walk: negative step count");
  SampleStream stream(seed, index);
  WalkSample s;
  s.element = RationalMatrix::identity(gens.dim());
  s.label = 0;
  s.length = k;
  s.seed = seed;
  s.index = index;
  s.word.reserve(k);
  const auto& g = gens.generators();
  for (int step = 0; step < k; ++step) {
    auto pick = static_cast<std::uint16_t>(stream.below(g.size()));
    s.word.push_back(pick);
    if (!g[pick].matrix.is_identity()) s.element = s.element * g[pick].matrix;
    s.label = gens.component_group().multiply(s.label, g[pick].label);
  }
  return s;
}

std::vector<WalkSample> batch_sample(const GeneratorSet& gens, int k, std::size_t count, std::uint64_t seed,
                                     unsigned threads) {
  if (count == 0) throw std::invalid_argument("batch_sample: count must be positive");
  std::vector<WalkSample> out(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = sample_walk(gens, k, seed, i);
    return out;
  }
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) out[i] = sample_walk(gens, k, seed, i);
    });
  return out;
}

}  // namespace galwalk
