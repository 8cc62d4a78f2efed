#include "galwalk/exactmat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace galwalk {

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::from_roots(const std::vector<Rational>& roots) {
  RationalPolynomial f{Rational(1)};
  for (const auto& r : roots) f = f * RationalPolynomial{Rational(-r), Rational(1)};
  return f;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RationalPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

bool RationalPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  Rational lc = leading();
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] / lc;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer RationalPolynomial::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a) {
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

PolyDivision divide(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial{}, a};
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / lb;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
  }
  return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), a_(n * n) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch("matrix rows must form a square array");
    a_.insert(a_.end(), row.begin(), row.end());
  }
  // mpq_class(num, den) is not reduced on construction.
  for (auto& x : a_) x.canonicalize();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    m(i, i) = d[i];
    m(i, i).canonicalize();
  }
  return m;
}

RationalMatrix RationalMatrix::companion(const RationalPolynomial& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial");
  auto n = static_cast<std::size_t>(f.degree());
  RationalMatrix m(n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -f[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Rational RationalMatrix::determinant() const {
  std::vector<Rational> m = a_;
  Rational det = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      det = -det;
    }
    const Rational pv = m[c * n_ + c];
    det *= pv;
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (m[r * n_ + c] == 0) continue;
      Rational f = m[r * n_ + c] / pv;
      for (std::size_t j = c; j < n_; ++j) m[r * n_ + j] -= f * m[c * n_ + j];
    }
  }
  return det;
}

bool RationalMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RationalMatrix::is_integral() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("mat_mul: dimension mismatch");
  const std::size_t n = a.dim();
  RationalMatrix c(n);
  Rational acc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k) == 0 || b(k, j) == 0) continue;
        acc += a(i, k) * b(k, j);
      }
      c(i, j) = acc;
    }
  return c;
}

RationalMatrix mat_inverse(const RationalMatrix& a) {
  const std::size_t n = a.dim();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) throw SingularMatrix("mat_inverse: singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const Rational pv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= pv;
      inv(c, j) /= pv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RationalPolynomial char_poly(const RationalMatrix& a) {
  // M_0 = 0, M_k = A·M_{k-1} + c_{n-k+1}·I, c_{n-k} = -tr(A·M_k)/k.
  const std::size_t n = a.dim();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = std::move(am);
    c[n - k] = -(a * m).trace() / static_cast<unsigned long>(k);
  }
  return RationalPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// F_p

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("mod_inv: zero has no inverse");
  return mod_pow(a, p - 2, p);
}

std::string PrimeFieldPolynomial::to_string() const {
  std::ostringstream os;
  if (coeffs.empty()) os << "0";
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs[i] == 0) continue;
    os << (first ? "" : " + ");
    if (coeffs[i] != 1 || i == 0) os << coeffs[i];
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  os << " (mod " << p << ")";
  return os.str();
}

std::optional<std::uint32_t> reduce_rational_mod_p(const Rational& x, std::uint32_t p) {
  unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  unsigned long num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
  return mod_mul(static_cast<std::uint32_t>(num), mod_inv(static_cast<std::uint32_t>(den), p), p);
}

std::optional<PrimeFieldPolynomial> reduce_poly_mod_p(const RationalPolynomial& f, std::uint32_t p) {
  PrimeFieldPolynomial g{p, {}};
  g.coeffs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    auto r = reduce_rational_mod_p(c, p);
    if (!r) return std::nullopt;
    g.coeffs.push_back(*r);
  }
  if (g.coeffs.empty() || g.coeffs.back() == 0) return std::nullopt;
  return g;
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint32_t p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::uint32_t p, std::size_t n) {
  PrimeFieldMatrix m(p, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_) throw DimensionMismatch("PrimeFieldMatrix product: shape or modulus mismatch");
  const std::size_t n = a.n_;
  PrimeFieldMatrix c(a.p_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
      c(i, j) = static_cast<std::uint32_t>(acc % a.p_);
    }
  return c;
}

std::uint32_t PrimeFieldMatrix::determinant() const {
  std::vector<std::uint32_t> m = a_;
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      det = (p_ - det) % p_;
    }
    det = mod_mul(det, m[c * n_ + c], p_);
    std::uint32_t inv = mod_inv(m[c * n_ + c], p_);
    for (std::size_t r = c + 1; r < n_; ++r) {
      std::uint32_t f = mod_mul(m[r * n_ + c], inv, p_);
      if (f == 0) continue;
      for (std::size_t j = c; j < n_; ++j)
        m[r * n_ + j] = (m[r * n_ + j] + p_ - mod_mul(f, m[c * n_ + j], p_)) % p_;
    }
  }
  return det;
}

std::optional<PrimeFieldMatrix> reduce_matrix_mod_p(const RationalMatrix& a, std::uint32_t p) {
  PrimeFieldMatrix m(p, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto r = reduce_rational_mod_p(a(i, j), p);
      if (!r) return std::nullopt;
      m(i, j) = *r;
    }
  return m;
}

PrimeFieldPolynomial char_poly_mod_p(const PrimeFieldMatrix& a) {
  const std::uint32_t p = a.modulus();
  const std::size_t n = a.dim();
  auto sub = [p](std::uint32_t x, std::uint32_t y) { return (x + p - y) % p; };

  // Reduce to upper Hessenberg form by similarity transforms.
  PrimeFieldMatrix h = a;
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    std::uint32_t inv = mod_inv(h(c + 1, c), p);
    for (std::size_t r = c + 2; r < n; ++r) {
      std::uint32_t f = mod_mul(h(r, c), inv, p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(r, j) = sub(h(r, j), mod_mul(f, h(c + 1, j), p));
      for (std::size_t i = 0; i < n; ++i) h(i, c + 1) = (h(i, c + 1) + mod_mul(f, h(i, r), p)) % p;
    }
  }

  // Leading principal minors: P_k = (T - h_kk)·P_{k-1} - sum_i h_ik·(prod sub-diag)·P_{i-1}.
  std::vector<std::vector<std::uint32_t>> P(n + 1);
  P[0] = {1 % p};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> next(k + 1, 0);
    const auto& prev = P[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = (next[d + 1] + prev[d]) % p;
      next[d] = sub(next[d], mod_mul(h(k - 1, k - 1), prev[d], p));
    }
    std::uint32_t prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = mod_mul(prod, h(i + 1, i), p);
      if (prod == 0) break;
      std::uint32_t coef = mod_mul(prod, h(i, k - 1), p);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < P[i].size(); ++d) next[d] = sub(next[d], mod_mul(coef, P[i][d], p));
    }
    P[k] = std::move(next);
  }
  return PrimeFieldPolynomial{p, std::move(P[n])};
}

}  // namespace galwalk
