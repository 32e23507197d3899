#include "hurwitz/big_float.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <memory>

namespace hurwitz {

namespace {

mpfr_prec_t min_prec(const BigFloat& a, const BigFloat& b) {
  return std::min(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp2(long e, mpfr_prec_t prec) {
  BigFloat r(1L, prec);
  mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
  return r;
}

// Compound assignment keeps the smaller precision of the two operands.
#define HURWITZ_BIGFLOAT_COMPOUND(op, fn)                      \
  BigFloat& BigFloat::operator op(const BigFloat& rhs) {       \
    if (rhs.precision() < precision()) {                       \
      mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);     \
    }                                                          \
    fn(value_, value_, rhs.value_, MPFR_RNDN);                 \
    return *this;                                              \
  }
HURWITZ_BIGFLOAT_COMPOUND(+=, mpfr_add)
HURWITZ_BIGFLOAT_COMPOUND(-=, mpfr_sub)
HURWITZ_BIGFLOAT_COMPOUND(*=, mpfr_mul)
HURWITZ_BIGFLOAT_COMPOUND(/=, mpfr_div)
#undef HURWITZ_BIGFLOAT_COMPOUND

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

#define HURWITZ_BIGFLOAT_BINARY(op, fn)                        \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
    BigFloat r(min_prec(a, b));                                \
    fn(r.value_, a.value_, b.value_, MPFR_RNDN);               \
    return r;                                                  \
  }
HURWITZ_BIGFLOAT_BINARY(+, mpfr_add)
HURWITZ_BIGFLOAT_BINARY(-, mpfr_sub)
HURWITZ_BIGFLOAT_BINARY(*, mpfr_mul)
HURWITZ_BIGFLOAT_BINARY(/, mpfr_div)
#undef HURWITZ_BIGFLOAT_BINARY

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), value_) < 0 || buf == nullptr) {
    return "nan";
  }
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Rational BigFloat::to_rational() const {
  Rational r;
  mpfr_get_q(r.get_mpq_t(), value_);
  r.canonicalize();
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  if (im_.precision() != re_.precision()) {
    const auto p = std::min(re_.precision(), im_.precision());
    mpfr_prec_round(re_.get(), p, MPFR_RNDN);
    mpfr_prec_round(im_.get(), p, MPFR_RNDN);
  }
}

BigComplex BigComplex::unit_root(long j, long n, mpfr_prec_t prec) {
  // Evaluate at a few guard bits, then round to the requested precision.
  const mpfr_prec_t work = prec + 32;
  BigFloat angle = BigFloat::pi(work) * (2 * j);
  angle /= BigFloat(n, work);
  BigFloat s(work), c(work);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  mpfr_prec_round(s.get(), prec, MPFR_RNDN);
  mpfr_prec_round(c.get(), prec, MPFR_RNDN);
  return BigComplex(std::move(c), std::move(s));
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  BigComplex r(std::min(a.precision(), b.precision()));
  add_product(r, a, b);
  return r;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  *this = *this * rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  const mpfr_prec_t p = std::min(precision(), rhs.precision());
  BigFloat den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  BigFloat re = re_ * rhs.re_ + im_ * rhs.im_;
  BigFloat im = im_ * rhs.re_ - re_ * rhs.im_;
  re /= den;
  im /= den;
  re_ = std::move(re);
  im_ = std::move(im);
  if (re_.precision() != p) mpfr_prec_round(re_.get(), p, MPFR_RNDN);
  if (im_.precision() != p) mpfr_prec_round(im_.get(), p, MPFR_RNDN);
  return *this;
}

BigComplex operator*(const BigComplex& a, long b) { return BigComplex(a.re_ * b, a.im_ * b); }

void add_product(BigComplex& acc, const BigComplex& a, const BigComplex& b) {
  // Scratch registers reused per thread; sized lazily to the accumulator.
  thread_local mpfr_t t1, t2;
  thread_local bool ready = false;
  const mpfr_prec_t p = std::min({acc.precision(), a.precision(), b.precision()});
  if (!ready) {
    mpfr_init2(t1, p);
    mpfr_init2(t2, p);
    ready = true;
  } else if (mpfr_get_prec(t1) != p) {
    mpfr_set_prec(t1, p);
    mpfr_set_prec(t2, p);
  }
  if (acc.precision() != p) {
    mpfr_prec_round(acc.re_.get(), p, MPFR_RNDN);
    mpfr_prec_round(acc.im_.get(), p, MPFR_RNDN);
  }
  mpfr_mul(t1, a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(t2, a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_sub(t1, t1, t2, MPFR_RNDN);
  mpfr_add(acc.re_.get(), acc.re_.get(), t1, MPFR_RNDN);
  mpfr_mul(t1, a.re_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_mul(t2, a.im_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(t1, t1, t2, MPFR_RNDN);
  mpfr_add(acc.im_.get(), acc.im_.get(), t1, MPFR_RNDN);
}

BigFloat BigComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
  return r;
}

BigFloat BigComplex::norm_inf() const { return max(re_.abs(), im_.abs()); }

std::optional<Rational> reconstruct_rational(const BigFloat& x, const BigInt& max_denominator,
                                             const BigFloat& tolerance) {
  const mpfr_prec_t prec = x.precision();
  // Convergents h_n / k_n of the continued fraction of x, seeded with
  // h_{-2}/k_{-2} = 0/1 and h_{-1}/k_{-1} = 1/0.
  BigInt h_prev = 0, h = 1, k_prev = 1, k = 0;
  BigFloat rest = x;
  for (int iter = 0; iter < 4 * static_cast<int>(prec); ++iter) {
    BigFloat fl(prec);
    mpfr_floor(fl.get(), rest.get());
    BigInt digit;
    mpfr_get_z(digit.get_mpz_t(), fl.get(), MPFR_RNDN);
    BigInt h_next = digit * h + h_prev;
    BigInt k_next = digit * k + k_prev;
    if (k_next > max_denominator) return std::nullopt;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    Rational candidate(h, k);
    candidate.canonicalize();
    BigFloat diff = x - BigFloat(candidate, prec + 64);
    if (diff.abs() <= tolerance) return candidate;
    BigFloat frac = rest - fl;
    if (frac.is_zero()) return std::nullopt;
    rest = BigFloat(1L, prec) / frac;
  }
  return std::nullopt;
}

}  // namespace hurwitz
