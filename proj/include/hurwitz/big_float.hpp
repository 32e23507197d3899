#ifndef HURWITZ_BIG_FLOAT_HPP
#define HURWITZ_BIG_FLOAT_HPP

#include <mpfr.h>

#include <optional>
#include <string>

#include "hurwitz/rational.hpp"

namespace hurwitz {

inline constexpr mpfr_prec_t kDefaultPrecision = 512;

/// Arbitrary-precision binary float (RAII over mpfr_t). The precision is
/// fixed at construction; binary operations produce a result at the smaller
/// of the two operand precisions and never upgrade.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
  BigFloat(long value, mpfr_prec_t prec);
  BigFloat(const Rational& value, mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t prec);
  /// 2^e at the given precision.
  static BigFloat exp2(long e, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long b);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  BigFloat abs() const;
  BigFloat sqrt() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with the requested number of significant digits.
  std::string to_string(int digits = 40) const;
  /// Exact rational value of the stored binary float.
  Rational to_rational() const;

 private:
  mpfr_t value_;
};

BigFloat max(const BigFloat& a, const BigFloat& b);

/// Complex number over BigFloat; both parts share one precision.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(0L, prec) {}
  BigComplex(const Rational& re, mpfr_prec_t prec) : re_(re, prec), im_(0L, prec) {}

  /// exp(2 pi i j / n)
  static BigComplex unit_root(long j, long n, mpfr_prec_t prec);

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex operator-() const { return BigComplex(-re_, -im_); }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(const BigComplex& a, long b);

  /// acc += a * b without extra temporaries for the result.
  friend void add_product(BigComplex& acc, const BigComplex& a, const BigComplex& b);

  BigComplex conj() const { return BigComplex(re_, -im_); }
  BigFloat abs() const;
  /// max(|re|, |im|); cheap magnitude used for tolerances.
  BigFloat norm_inf() const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

 private:
  BigFloat re_;
  BigFloat im_;
};

/// Continued-fraction reconstruction: the first convergent p/q with
/// q <= max_denominator and |x - p/q| <= tolerance, if any.
std::optional<Rational> reconstruct_rational(const BigFloat& x, const BigInt& max_denominator,
                                             const BigFloat& tolerance);

}  // namespace hurwitz

#endif  // HURWITZ_BIG_FLOAT_HPP
