#ifndef COXDEC_SCALAR_HPP
#define COXDEC_SCALAR_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxdec {

using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize; this does
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Thrown when a requested cosine does not live in the ambient field.
struct conductor_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CycReal;

// The real subfield of Q(zeta), zeta = exp(i*pi/N), fixed conductor N.
// Internally elements are polynomials in zeta reduced mod Phi_{2N}, so the
// zero test is just "all coordinates zero".  Real elements evaluate to
// sum_j q_j cos(j*pi/N) over the reduced coordinates.
class CycField : public std::enable_shared_from_this<CycField> {
 public:
  static std::shared_ptr<const CycField> make(int conductor);

  int conductor() const { return n_; }
  int degree() const { return degree_; }

  CycReal zero() const;
  CycReal one() const;
  CycReal rational(const Rational& q) const;
  CycReal integer(long v) const;

  // cos(pi/m); m == 0 encodes m = infinity and yields 1.
  // Requires 2m | 2N (always satisfiable for m in {2,3}).
  CycReal cos_pi_over(int m) const;

  // zeta^k + zeta^{-k}, i.e. 2*cos(k*pi/N), reduced.
  CycReal two_cos(int k) const;

  // m >= 2 admitted by this field, i.e. with cos(pi/m) representable.
  const std::vector<int>& cos_candidates() const { return candidates_; }

 private:
  explicit CycField(int conductor);

  friend class CycReal;

  // rational enclosures of cos(j*pi/N), j = 0..degree-1, at given precision
  const std::vector<std::pair<Rational, Rational>>& enclosures(int prec) const;

  int n_;                                  // conductor N
  int degree_;                             // phi(2N)
  std::vector<mpz_class> min_poly_;        // Phi_{2N}, degree_+1 coefficients
  std::vector<std::vector<mpz_class>> reduction_;  // x^(degree_+k) mod Phi
  std::vector<int> candidates_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<std::pair<Rational, Rational>>> enclosure_cache_;
};

using FieldPtr = std::shared_ptr<const CycField>;

// One element of the fixed real cyclotomic field.  Immutable in practice:
// arithmetic returns fresh values, so sharing across threads is safe.
class CycReal {
 public:
  CycReal() = default;  // empty value; only assignment is meaningful

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;            // lies in Q
  Rational rational_value() const;     // requires is_rational()

  CycReal operator-() const;
  CycReal operator+(const CycReal& o) const;
  CycReal operator-(const CycReal& o) const;
  CycReal operator*(const CycReal& o) const;
  CycReal operator*(const Rational& q) const;
  CycReal& operator+=(const CycReal& o);
  CycReal& operator-=(const CycReal& o);

  // field inverse, by solving the multiplication system over Q
  CycReal inverse() const;  // throws std::domain_error on zero
  CycReal operator/(const CycReal& o) const { return *this * o.inverse(); }

  bool operator==(const CycReal& o) const;
  bool operator!=(const CycReal& o) const { return !(*this == o); }

  // Exact sign: 0 from the canonical form, otherwise certified interval
  // refinement (precision doubles until the interval excludes zero).
  int sign() const;

  // m >= 2 with *this == cos(pi/m) exactly, searching the field's candidates.
  std::optional<int> recognize_cos() const;

  // member of COS = {cos(pi/m) | m >= 2} union [1, inf)
  bool in_COS() const;

  double to_double() const;
  std::string str() const;  // "1/2 + cos(1/4 pi)" style, deterministic

  std::size_t hash() const;

 private:
  friend class CycField;
  CycReal(FieldPtr f, std::vector<Rational> c)
      : field_(std::move(f)), coords_(std::move(c)) {}

  FieldPtr field_;
  std::vector<Rational> coords_;
};

}  // namespace coxdec

#endif
