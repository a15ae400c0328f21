#include "coxdec/scalar.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>

namespace coxdec {

namespace {

// integer polynomial division, exact: num / den with den monic
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
  assert(!den.empty() && den.back() == 1);
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<mpz_class> quot(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    mpz_class c = num[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("cyclotomic division is not exact");
  return quot;
}

// Phi_n(x) via x^n - 1 = prod_{d | n} Phi_d(x)
std::vector<mpz_class> cyclotomic_poly(int n) {
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divide_exact(std::move(num), cyclotomic_poly(d));
  }
  return num;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational mpfr_to_rational(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rational(0);
  mpz_class mant;
  mp_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rational q(mant);
  if (e >= 0) {
    mpz_class two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= two_e;
  } else {
    mpz_class two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= two_e;
  }
  return q;
}

}  // namespace

CycField::CycField(int conductor) : n_(conductor) {
  if (conductor < 2) throw conductor_error("conductor must be >= 2");
  min_poly_ = cyclotomic_poly(2 * n_);
  degree_ = static_cast<int>(min_poly_.size()) - 1;
  if (degree_ != euler_phi(2 * n_))
    throw std::logic_error("cyclotomic polynomial has the wrong degree");

  // rows for x^(degree+k) mod Phi_{2N}; products need powers up to
  // x^(2 degree - 2) and two_cos needs powers up to x^(2N - 1)
  const int rows = std::max(degree_ - 1, 2 * n_ - degree_);
  reduction_.resize(rows);
  std::vector<mpz_class> cur(degree_, 0);  // x^degree mod Phi = -lower part
  for (int j = 0; j < degree_; ++j) cur[j] = -min_poly_[j];
  for (int k = 0; k < rows; ++k) {
    reduction_[k] = cur;
    // multiply by x, reduce once
    mpz_class top = cur[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < degree_; ++j) cur[j] -= top * min_poly_[j];
  }

  for (int m = 2; m <= std::max(3, n_); ++m)
    if (m <= 3 || n_ % m == 0) candidates_.push_back(m);
}

std::shared_ptr<const CycField> CycField::make(int conductor) {
  return std::shared_ptr<const CycField>(new CycField(conductor));
}

CycReal CycField::zero() const {
  return CycReal(shared_from_this(), std::vector<Rational>(degree_, Rational(0)));
}

CycReal CycField::one() const { return rational(Rational(1)); }

CycReal CycField::rational(const Rational& q) const {
  std::vector<Rational> c(degree_, Rational(0));
  c[0] = q;
  return CycReal(shared_from_this(), std::move(c));
}

CycReal CycField::integer(long v) const { return rational(Rational(v)); }

CycReal CycField::two_cos(int k) const {
  // zeta^k + zeta^(2N-k), exponents mod 2N, reduced mod Phi
  std::vector<Rational> c(degree_, Rational(0));
  auto add_power = [&](int e) {
    e %= 2 * n_;
    if (e < 0) e += 2 * n_;
    if (e < degree_) {
      c[e] += 1;
    } else {
      const auto& row = reduction_[e - degree_];
      for (int j = 0; j < degree_; ++j) c[j] += Rational(row[j]);
    }
  };
  add_power(k);
  add_power(2 * n_ - k);
  return CycReal(shared_from_this(), std::move(c));
}

CycReal CycField::cos_pi_over(int m) const {
  if (m == 0) return one();  // m = infinity
  if (m < 2) throw conductor_error("cos_pi_over: m must be >= 2 or infinite");
  if (m == 2) return zero();
  if (m == 3) return rational(Rational(1, 2));
  if (n_ % m != 0)
    throw conductor_error("cos(pi/" + std::to_string(m) +
                          ") not representable at conductor " + std::to_string(n_));
  CycReal half = two_cos(n_ / m);
  return half * Rational(1, 2);
}

const std::vector<std::pair<Rational, Rational>>& CycField::enclosures(int prec) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = enclosure_cache_.find(prec);
  if (it != enclosure_cache_.end()) return it->second;

  std::vector<std::pair<Rational, Rational>> table(degree_);
  mpfr_t pi_lo, pi_hi, t_lo, t_hi, v_lo, v_hi;
  mpfr_inits2(prec, pi_lo, pi_hi, t_lo, t_hi, v_lo, v_hi, (mpfr_ptr) nullptr);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  for (int j = 0; j < degree_; ++j) {
    int k = j % (2 * n_);
    if (k > n_) k = 2 * n_ - k;  // cos((2N-k)pi/N) = cos(k pi/N)
    if (k == 0) {
      table[j] = {Rational(1), Rational(1)};
    } else if (k == n_) {
      table[j] = {Rational(-1), Rational(-1)};
    } else if (2 * k == n_) {
      table[j] = {Rational(0), Rational(0)};
    } else {
      // theta = k*pi/N in (0, pi); cos decreasing there
      mpfr_mul_ui(t_lo, pi_lo, static_cast<unsigned long>(k), MPFR_RNDD);
      mpfr_div_ui(t_lo, t_lo, static_cast<unsigned long>(n_), MPFR_RNDD);
      mpfr_mul_ui(t_hi, pi_hi, static_cast<unsigned long>(k), MPFR_RNDU);
      mpfr_div_ui(t_hi, t_hi, static_cast<unsigned long>(n_), MPFR_RNDU);
      mpfr_cos(v_lo, t_hi, MPFR_RNDD);
      mpfr_cos(v_hi, t_lo, MPFR_RNDU);
      table[j] = {mpfr_to_rational(v_lo), mpfr_to_rational(v_hi)};
      assert(table[j].first <= table[j].second);
    }
  }
  mpfr_clears(pi_lo, pi_hi, t_lo, t_hi, v_lo, v_hi, (mpfr_ptr) nullptr);
  return enclosure_cache_.emplace(prec, std::move(table)).first->second;
}

bool CycReal::is_zero() const {
  for (const auto& q : coords_)
    if (q != 0) return false;
  return true;
}

bool CycReal::is_rational() const {
  for (std::size_t j = 1; j < coords_.size(); ++j)
    if (coords_[j] != 0) return false;
  return true;
}

Rational CycReal::rational_value() const {
  assert(is_rational());
  return coords_.empty() ? Rational(0) : coords_[0];
}

CycReal CycReal::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& q : c) q = -q;
  return CycReal(field_, std::move(c));
}

CycReal CycReal::operator+(const CycReal& o) const {
  assert(field_ == o.field_);
  std::vector<Rational> c(coords_);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += o.coords_[j];
  return CycReal(field_, std::move(c));
}

CycReal CycReal::operator-(const CycReal& o) const {
  assert(field_ == o.field_);
  std::vector<Rational> c(coords_);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] -= o.coords_[j];
  return CycReal(field_, std::move(c));
}

CycReal& CycReal::operator+=(const CycReal& o) {
  assert(field_ == o.field_);
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
  return *this;
}

CycReal& CycReal::operator-=(const CycReal& o) {
  assert(field_ == o.field_);
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= o.coords_[j];
  return *this;
}

CycReal CycReal::operator*(const CycReal& o) const {
  assert(field_ == o.field_);
  const int d = field_->degree_;
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.coords_[j] == 0) continue;
      conv[i + j] += coords_[i] * o.coords_[j];
    }
  }
  std::vector<Rational> c(conv.begin(), conv.begin() + d);
  for (int k = 0; k + 1 < d; ++k) {
    const Rational& top = conv[d + k];
    if (top == 0) continue;
    const auto& row = field_->reduction_[k];
    for (int j = 0; j < d; ++j)
      if (row[j] != 0) c[j] += top * Rational(row[j]);
  }
  return CycReal(field_, std::move(c));
}

CycReal CycReal::operator*(const Rational& q) const {
  std::vector<Rational> c(coords_);
  for (auto& x : c) x *= q;
  return CycReal(field_, std::move(c));
}

bool CycReal::operator==(const CycReal& o) const {
  assert(field_ == o.field_);
  return coords_ == o.coords_;
}

CycReal CycReal::inverse() const {
  if (is_zero()) throw std::domain_error("CycReal: division by zero");
  if (is_rational()) return field_->rational(1 / coords_[0]);
  const int d = field_->degree_;
  // columns of the multiplication-by-*this map: this * zeta^j
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1, Rational(0)));
  CycReal power = field_->one();
  for (int j = 0; j < d; ++j) {
    CycReal col = *this * power;
    for (int i = 0; i < d; ++i) a[i][j] = col.coords_[i];
    if (j + 1 < d) {
      // power *= zeta
      std::vector<Rational> shifted(d, Rational(0));
      for (int i = 0; i + 1 < d; ++i) shifted[i + 1] = power.coords_[i];
      const Rational& top = power.coords_[d - 1];
      if (top != 0) {
        const auto& row = field_->reduction_[0];
        for (int i = 0; i < d; ++i) shifted[i] += top * Rational(row[i]);
      }
      power = CycReal(field_, std::move(shifted));
    }
  }
  a[0][d] = 1;  // solve (mult map) x = 1
  // Gaussian elimination over Q
  std::vector<int> pivot_row(d, -1);
  int r = 0;
  for (int c = 0; c < d && r < d; ++c) {
    int p = -1;
    for (int i = r; i < d; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (int j = c; j <= d; ++j) a[r][j] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j <= d; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_row[c] = r;
    ++r;
  }
  std::vector<Rational> x(d, Rational(0));
  for (int c = 0; c < d; ++c)
    if (pivot_row[c] >= 0) x[c] = a[pivot_row[c]][d];
  CycReal result(field_, std::move(x));
  assert((*this * result) == field_->one());
  return result;
}

int CycReal::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coords_[0]);
  for (int prec = 64;; prec *= 2) {
    const auto& enc = field_->enclosures(prec);
    Rational lo(0), hi(0);
    for (std::size_t j = 0; j < coords_.size(); ++j) {
      const Rational& q = coords_[j];
      if (q == 0) continue;
      if (q > 0) {
        lo += q * enc[j].first;
        hi += q * enc[j].second;
      } else {
        lo += q * enc[j].second;
        hi += q * enc[j].first;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    // interval still straddles zero; the value is nonzero, so refine
  }
}

std::optional<int> CycReal::recognize_cos() const {
  for (int m : field_->cos_candidates())
    if (*this == field_->cos_pi_over(m)) return m;
  return std::nullopt;
}

bool CycReal::in_COS() const {
  if (recognize_cos()) return true;
  return (*this - field_->one()).sign() >= 0;
}

double CycReal::to_double() const {
  const auto& enc = field_->enclosures(128);
  Rational v(0);
  for (std::size_t j = 0; j < coords_.size(); ++j)
    if (coords_[j] != 0) v += coords_[j] * enc[j].first;
  return v.get_d();
}

std::string CycReal::str() const {
  // fold cos(j pi/N) = cos((2N-j) pi/N) = -cos((N-j) pi/N) so the display
  // only uses angles in [0, pi/2]
  const int n = field_->conductor();
  std::vector<Rational> display(n / 2 + 1, Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    int k = static_cast<int>(j) % (2 * n);
    Rational q = coords_[j];
    if (k > n) k = 2 * n - k;
    if (2 * k > n) {
      k = n - k;
      q = -q;
    }
    display[k] += q;
  }
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= n / 2; ++k) {
    const Rational& q = display[k];
    if (q == 0) continue;
    Rational a = abs(q);
    if (first) {
      if (q < 0) os << "-";
      first = false;
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "cos(" << k << "pi/" << n << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

std::size_t CycReal::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  constexpr unsigned long kMod = 0x1fffffffffffffffull;
  for (const auto& q : coords_) {
    unsigned long hn = mpz_fdiv_ui(q.get_num().get_mpz_t(), kMod);
    unsigned long hd = mpz_fdiv_ui(q.get_den().get_mpz_t(), kMod);
    h ^= hn + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= hd + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace coxdec
