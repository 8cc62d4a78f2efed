#include "galwalk/modpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace galwalk {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x <= 0) throw std::invalid_argument("cycle type parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::parse(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    } else if (ch == ',' || ch == ')' || ch == ' ') {
      if (!cur.empty()) parts.push_back(std::stoi(cur));
      cur.clear();
    } else if (ch != '(') {
      throw std::invalid_argument("cannot parse cycle type: " + text);
    }
  }
  if (!cur.empty()) parts.push_back(std::stoi(cur));
  return CycleType(std::move(parts));
}

int CycleType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool CycleType::contains_part(int part) const {
  return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

CycleType CycleType::repeated(int multiplicity) const {
  std::vector<int> out;
  out.reserve(parts_.size() * multiplicity);
  for (int x : parts_)
    for (int i = 0; i < multiplicity; ++i) out.push_back(x);
  return CycleType(std::move(out));
}

std::string CycleType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<CycleType> partitions(int n) {
  std::vector<CycleType> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(rest, maxpart); x >= 1; --x) {
      cur.push_back(x);
      rec(rest - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------
// F_p[T]

PrimeFieldPolynomial fp_trim(PrimeFieldPolynomial f) {
  while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
  return f;
}

PrimeFieldPolynomial fp_monic(const PrimeFieldPolynomial& f) {
  if (f.coeffs.empty()) return f;
  PrimeFieldPolynomial g = f;
  std::uint32_t inv = mod_inv(f.coeffs.back(), f.p);
  for (auto& c : g.coeffs) c = mod_mul(c, inv, f.p);
  return g;
}

PrimeFieldPolynomial fp_sub(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b) {
  const std::uint32_t p = a.p;
  PrimeFieldPolynomial r{p, std::vector<std::uint32_t>(std::max(a.coeffs.size(), b.coeffs.size()), 0)};
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    std::uint32_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    std::uint32_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    r.coeffs[i] = (x + p - y) % p;
  }
  return fp_trim(std::move(r));
}

PrimeFieldPolynomial fp_mul(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {a.p, {}};
  const std::uint32_t p = a.p;
  std::vector<std::uint64_t> acc(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j]) % p;
  PrimeFieldPolynomial r{p, std::vector<std::uint32_t>(acc.begin(), acc.end())};
  return fp_trim(std::move(r));
}

namespace {

// Quotient and remainder of a by nonzero m.
std::pair<PrimeFieldPolynomial, PrimeFieldPolynomial> fp_divmod(const PrimeFieldPolynomial& a,
                                                                const PrimeFieldPolynomial& m) {
  if (m.coeffs.empty()) throw std::domain_error("F_p polynomial division by zero");
  const std::uint32_t p = a.p;
  std::vector<std::uint32_t> rem = a.coeffs;
  const int dm = m.degree();
  if (a.degree() < dm) return {{p, {}}, fp_trim(a)};
  std::vector<std::uint32_t> quo(a.degree() - dm + 1, 0);
  const std::uint32_t inv = mod_inv(m.coeffs.back(), p);
  for (int i = a.degree(); i >= dm; --i) {
    if (rem[i] == 0) continue;
    std::uint32_t q = mod_mul(rem[i], inv, p);
    quo[i - dm] = q;
    for (int j = 0; j <= dm; ++j) rem[i - dm + j] = (rem[i - dm + j] + p - mod_mul(q, m.coeffs[j], p)) % p;
  }
  return {fp_trim({p, std::move(quo)}), fp_trim({p, std::move(rem)})};
}

}  // namespace

PrimeFieldPolynomial fp_rem(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& m) {
  return fp_divmod(a, m).second;
}

PrimeFieldPolynomial fp_div(const PrimeFieldPolynomial& a, const PrimeFieldPolynomial& m) {
  return fp_divmod(a, m).first;
}

PrimeFieldPolynomial fp_derivative(const PrimeFieldPolynomial& f) {
  PrimeFieldPolynomial d{f.p, {}};
  for (std::size_t i = 1; i < f.coeffs.size(); ++i)
    d.coeffs.push_back(mod_mul(f.coeffs[i], static_cast<std::uint32_t>(i % f.p), f.p));
  return fp_trim(std::move(d));
}

PrimeFieldPolynomial fp_gcd(PrimeFieldPolynomial a, PrimeFieldPolynomial b) {
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.coeffs.empty()) {
    PrimeFieldPolynomial r = fp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

PrimeFieldPolynomial fp_powmod(const PrimeFieldPolynomial& base, std::uint64_t e, const PrimeFieldPolynomial& m) {
  PrimeFieldPolynomial result = fp_rem({base.p, {1}}, m);
  PrimeFieldPolynomial b = fp_rem(base, m);
  while (e) {
    if (e & 1) result = fp_rem(fp_mul(result, b), m);
    b = fp_rem(fp_mul(b, b), m);
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------

bool squarefree_over_q(const RationalPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_over_q: zero polynomial");
  return gcd(f, f.derivative()).degree() <= 0;
}

namespace {

RationalPolynomial power(const RationalPolynomial& f, int m) {
  RationalPolynomial r{Rational(1)};
  for (int i = 0; i < m; ++i) r = r * f;
  return r;
}

PrimeFieldPolynomial fp_power(const PrimeFieldPolynomial& f, int m) {
  PrimeFieldPolynomial r{f.p, {1}};
  for (int i = 0; i < m; ++i) r = fp_mul(r, f);
  return r;
}

}  // namespace

std::optional<RationalPolynomial> squarefree_root(const RationalPolynomial& f, int multiplicity) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_root: zero polynomial");
  if (multiplicity < 1 || f.degree() % multiplicity != 0) return std::nullopt;
  RationalPolynomial monic = f.monic();
  RationalPolynomial radical = divide(monic, gcd(monic, monic.derivative())).quotient.monic();
  if (power(radical, multiplicity) != monic) return std::nullopt;
  return radical;
}

std::optional<PrimeFieldPolynomial> squarefree_root_mod_p(const PrimeFieldPolynomial& f, int multiplicity) {
  PrimeFieldPolynomial monic = fp_monic(fp_trim(f));
  if (monic.coeffs.empty()) throw std::invalid_argument("squarefree_root_mod_p: zero polynomial");
  if (multiplicity < 1 || monic.degree() % multiplicity != 0) return std::nullopt;
  if (multiplicity == 1) {
    if (fp_gcd(monic, fp_derivative(monic)).degree() > 0) return std::nullopt;
    return monic;
  }
  if (static_cast<std::uint32_t>(monic.degree()) >= monic.p)
    throw std::invalid_argument("squarefree_root_mod_p: degree must be below p for repeated roots");
  PrimeFieldPolynomial radical = fp_monic(fp_div(monic, fp_gcd(monic, fp_derivative(monic))));
  if (fp_power(radical, multiplicity) != monic) return std::nullopt;
  return radical;
}

std::optional<CycleType> distinct_degree_pattern(const PrimeFieldPolynomial& g_in) {
  PrimeFieldPolynomial g = fp_monic(fp_trim(g_in));
  if (g.coeffs.empty()) throw std::invalid_argument("distinct_degree_pattern: zero polynomial");
  if (g.degree() == 0) return CycleType{};
  if (fp_gcd(g, fp_derivative(g)).degree() > 0) return std::nullopt;

  const std::uint32_t p = g.p;
  const PrimeFieldPolynomial x{p, {0, 1 % p}};
  std::vector<int> parts;
  PrimeFieldPolynomial h = fp_rem(x, g);  // T^{p^d} mod g
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = fp_powmod(h, p, g);
    PrimeFieldPolynomial f = fp_gcd(g, fp_sub(h, x));
    if (f.degree() > 0) {
      for (int i = 0; i < f.degree() / d; ++i) parts.push_back(d);
      g = fp_div(g, f);
      h = fp_rem(h, g);
    }
  }
  if (g.degree() > 0) parts.push_back(g.degree());
  return CycleType(std::move(parts));
}

FrobeniusSample frobenius_cycle_type(const RationalPolynomial& f, std::uint32_t p, int multiplicity) {
  FrobeniusSample s;
  s.p = p;
  auto reduced = reduce_poly_mod_p(f, p);
  if (!reduced) {
    s.status = FrobeniusStatus::bad_prime;
    return s;
  }
  if (multiplicity > 1 && static_cast<std::uint32_t>(reduced->degree()) >= p) {
    s.status = FrobeniusStatus::bad_prime;
    return s;
  }
  auto root = squarefree_root_mod_p(*reduced, multiplicity);
  if (!root) {
    s.status = FrobeniusStatus::not_squarefree;
    return s;
  }
  auto pattern = distinct_degree_pattern(*root);
  if (!pattern) {
    s.status = FrobeniusStatus::not_squarefree;
    return s;
  }
  s.status = FrobeniusStatus::good;
  s.cycle_type = pattern->repeated(multiplicity);
  return s;
}

std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  for (std::uint32_t i = std::max<std::uint32_t>(lo, 2); i <= hi; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

}  // namespace galwalk
