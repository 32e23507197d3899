#ifndef HURWITZ_SERIES_HPP
#define HURWITZ_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hurwitz/big_float.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coefficient fields: exact rationals and fixed-precision complex floats.
// Precision-carrying fields need an existing value to manufacture constants.
template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational from_long(long v, const Rational&) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct FieldTraits<BigComplex> {
  static BigComplex zero_like(const BigComplex& like) { return BigComplex(like.precision()); }
  static BigComplex from_long(long v, const BigComplex& like) { return BigComplex(v, like.precision()); }
  static bool is_zero(const BigComplex& x) { return x.is_zero(); }
};

namespace detail {

template <class T>
void mul_add(T& acc, const T& x, const T& y) {
  if constexpr (std::is_same_v<T, BigComplex>) {
    add_product(acc, x, y);
  } else {
    acc += x * y;
  }
}

}  // namespace detail

template <class T>
T zero_like(const T& like) {
  return FieldTraits<T>::zero_like(like);
}

template <class T>
T from_long(long v, const T& like) {
  return FieldTraits<T>::from_long(v, like);
}

/// Truncated power series sum_{i=0}^{D} c_i v^i in one tagged variable.
/// Coefficients beyond the truncation order D are unknown, not zero, and are
/// never produced by arithmetic: every binary operation truncates to the
/// smaller of its operands' orders.
template <class T>
class PowerSeries {
 public:
  PowerSeries(std::string variable, std::vector<T> coeffs)
      : variable_(std::move(variable)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw SeriesError("power series needs at least one coefficient");
  }

  static PowerSeries zero(std::string variable, int order, const T& like) {
    return PowerSeries(std::move(variable), std::vector<T>(order + 1, zero_like(like)));
  }
  static PowerSeries constant(std::string variable, int order, const T& value) {
    auto s = zero(std::move(variable), order, value);
    s.coeffs_[0] = value;
    return s;
  }
  /// c * v^degree, truncated at `order`.
  static PowerSeries monomial(std::string variable, int order, int degree, const T& c) {
    auto s = zero(std::move(variable), order, c);
    if (degree <= order) s.coeffs_[degree] = c;
    return s;
  }

  const std::string& variable() const { return variable_; }
  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }

  const T& operator[](int i) const {
    if (i < 0 || i > truncation()) throw SeriesError("coefficient beyond truncation order");
    return coeffs_[i];
  }
  T& operator[](int i) {
    if (i < 0 || i > truncation()) throw SeriesError("coefficient beyond truncation order");
    return coeffs_[i];
  }

  PowerSeries truncated(int order) const {
    if (order > truncation()) throw SeriesError("cannot extend a truncated series");
    return PowerSeries(variable_, std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  PowerSeries& operator+=(const PowerSeries& rhs) {
    check_tag(rhs);
    shrink_to(std::min(truncation(), rhs.truncation()));
    for (int i = 0; i <= truncation(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& rhs) {
    check_tag(rhs);
    shrink_to(std::min(truncation(), rhs.truncation()));
    for (int i = 0; i <= truncation(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  PowerSeries operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend PowerSeries operator*(PowerSeries a, const T& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }

  /// Cauchy product; truncation is the minimum of the two.
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    f.check_tag(g);
    const int order = std::min(f.truncation(), g.truncation());
    auto r = zero(f.variable_, order, f.coeffs_[0]);
    for (int i = 0; i <= order; ++i) {
      if (FieldTraits<T>::is_zero(f.coeffs_[i])) continue;
      for (int j = 0; i + j <= order; ++j) detail::mul_add(r.coeffs_[i + j], f.coeffs_[i], g.coeffs_[j]);
    }
    return r;
  }

  /// d/dv; the truncation order drops by one (floor at zero).
  PowerSeries derivative() const {
    const int order = std::max(truncation() - 1, 0);
    auto r = zero(variable_, order, coeffs_[0]);
    for (int i = 1; i <= truncation(); ++i) r.coeffs_[i - 1] = coeffs_[i] * from_long(i, coeffs_[i]);
    return r;
  }

  /// this(inner(w)); inner must have zero constant term.
  PowerSeries compose(const PowerSeries& inner) const {
    if (!FieldTraits<T>::is_zero(inner.coeffs_[0])) {
      throw SeriesError("composition requires an inner series without constant term");
    }
    const int order = std::min(truncation(), inner.truncation());
    auto in = inner.truncated(order);
    auto r = constant(inner.variable_, order, coeffs_[order]);
    for (int i = order - 1; i >= 0; --i) {
      r = r * in;
      r.coeffs_[0] += coeffs_[i];
    }
    return r;
  }

  /// Multiplicative inverse; requires an invertible constant term.
  PowerSeries inverse() const {
    if (FieldTraits<T>::is_zero(coeffs_[0])) throw SeriesError("series with zero constant term is not invertible");
    auto r = zero(variable_, truncation(), coeffs_[0]);
    const T one = from_long(1, coeffs_[0]);
    const T inv0 = one / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (int i = 1; i <= truncation(); ++i) {
      T acc = zero_like(coeffs_[0]);
      for (int j = 1; j <= i; ++j) detail::mul_add(acc, coeffs_[j], r.coeffs_[i - j]);
      r.coeffs_[i] = -acc * inv0;
    }
    return r;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_tag(const PowerSeries& other) const {
    if (other.variable_ != variable_) {
      throw SeriesError("variable mismatch: '" + variable_ + "' vs '" + other.variable_ + "'");
    }
  }
  void shrink_to(int order) { coeffs_.resize(order + 1, coeffs_[0]); }

  std::string variable_;
  std::vector<T> coeffs_;
};

/// Compositional inverse g of f (f(0) = 0, f'(0) = 1) with f(g(v)) = v
/// through degree `order`, by the fixed point g = v - (f - id)(g).
template <class T>
PowerSeries<T> series_reversion(const PowerSeries<T>& f, int order) {
  if (order > f.truncation()) throw SeriesError("reversion order exceeds truncation of f");
  const T& like = f[0];
  if (!FieldTraits<T>::is_zero(f[0]) || !FieldTraits<T>::is_zero(f[1] - from_long(1, like))) {
    throw SeriesError("series reversion requires f(0) = 0 and f'(0) = 1");
  }
  auto nonlinear = f.truncated(order);
  nonlinear[1] = zero_like(like);
  auto identity = PowerSeries<T>::monomial(f.variable(), order, 1, from_long(1, like));
  auto g = identity;
  // Each pass fixes at least one more coefficient.
  for (int pass = 0; pass < order; ++pass) {
    g = identity - nonlinear.compose(g);
  }
  return g;
}

/// Laurent series sum_{e=L}^{R} c_e v^e with an explicit floor L (every
/// coefficient below L is zero) and an explicit retained order R (every
/// coefficient above R is unknown).
template <class T>
class LaurentSeries {
 public:
  LaurentSeries(std::string variable, int floor, std::vector<T> coeffs)
      : variable_(std::move(variable)), floor_(floor), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw SeriesError("Laurent series needs at least one coefficient");
  }

  static LaurentSeries zero(std::string variable, int floor, int top, const T& like) {
    if (top < floor) throw SeriesError("Laurent series top below floor");
    return LaurentSeries(std::move(variable), floor, std::vector<T>(top - floor + 1, zero_like(like)));
  }
  static LaurentSeries from_power_series(const PowerSeries<T>& p, int shift = 0) {
    return LaurentSeries(p.variable(), shift, p.coefficients());
  }

  const std::string& variable() const { return variable_; }
  int floor() const { return floor_; }
  int top() const { return floor_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }

  /// Coefficient of v^e; zero below the floor, an error above the retained order.
  T coeff(int e) const {
    if (e > top()) throw SeriesError("Laurent coefficient beyond retained order");
    if (e < floor_) return zero_like(coeffs_[0]);
    return coeffs_[e - floor_];
  }
  T& at(int e) {
    if (e < floor_ || e > top()) throw SeriesError("Laurent coefficient outside stored range");
    return coeffs_[e - floor_];
  }

  /// Multiply by v^k.
  LaurentSeries shifted(int k) const { return LaurentSeries(variable_, floor_ + k, coeffs_); }

  /// Drop stored orders above `top`.
  LaurentSeries truncated(int top_order) const {
    if (top_order > top()) throw SeriesError("cannot extend a truncated Laurent series");
    if (top_order < floor_) return zero(variable_, floor_, floor_, coeffs_[0]);
    return LaurentSeries(variable_, floor_, std::vector<T>(coeffs_.begin(), coeffs_.begin() + (top_order - floor_ + 1)));
  }

  /// Raise the floor to `new_floor`, dropping the stored coefficients below
  /// it. The caller asserts those are zero.
  LaurentSeries with_floor(int new_floor) const {
    if (new_floor <= floor_) {
      std::vector<T> c(floor_ - new_floor, zero_like(coeffs_[0]));
      c.insert(c.end(), coeffs_.begin(), coeffs_.end());
      return LaurentSeries(variable_, new_floor, std::move(c));
    }
    if (new_floor > top()) throw SeriesError("floor raised past retained order");
    return LaurentSeries(variable_, new_floor, std::vector<T>(coeffs_.begin() + (new_floor - floor_), coeffs_.end()));
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_tag(b);
    const int lo = std::min(a.floor_, b.floor_);
    const int hi = std::min(a.top(), b.top());
    if (hi < lo) throw SeriesError("sum has no retained coefficients");
    auto r = zero(a.variable_, lo, hi, a.coeffs_[0]);
    for (int e = a.floor_; e <= std::min(a.top(), hi); ++e) r.coeffs_[e - lo] += a.coeffs_[e - a.floor_];
    for (int e = b.floor_; e <= std::min(b.top(), hi); ++e) r.coeffs_[e - lo] += b.coeffs_[e - b.floor_];
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
  LaurentSeries operator-() const {
    auto r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend LaurentSeries operator*(LaurentSeries a, const T& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }

  /// Product; floor L1 + L2, retained order min(R1 + L2, R2 + L1).
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    a.check_tag(b);
    const int lo = a.floor_ + b.floor_;
    const int hi = std::min(a.top() + b.floor_, b.top() + a.floor_);
    auto r = zero(a.variable_, lo, hi, a.coeffs_[0]);
    const int n = hi - lo;
    for (int i = 0; i <= n && i < static_cast<int>(a.coeffs_.size()); ++i) {
      if (FieldTraits<T>::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= n && j < static_cast<int>(b.coeffs_.size()); ++j) {
        detail::mul_add(r.coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
      }
    }
    return r;
  }

  /// Accumulate `other` into this series over this series' stored range.
  /// `other` must know every coefficient in that range.
  void accumulate(const LaurentSeries& other) {
    check_tag(other);
    if (other.top() < top()) throw SeriesError("accumulated series is truncated too early");
    for (int e = std::max(floor_, other.floor_); e <= top(); ++e) coeffs_[e - floor_] += other.coeffs_[e - other.floor_];
    if (other.floor_ < floor_) {
      for (int e = other.floor_; e < floor_; ++e) {
        if (!FieldTraits<T>::is_zero(other.coeffs_[e - other.floor_])) {
          throw SeriesError("accumulated series reaches below the accumulator floor");
        }
      }
    }
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.variable_ == b.variable_ && a.floor_ == b.floor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_tag(const LaurentSeries& other) const {
    if (other.variable_ != variable_) {
      throw SeriesError("variable mismatch: '" + variable_ + "' vs '" + other.variable_ + "'");
    }
  }

  std::string variable_;
  int floor_;
  std::vector<T> coeffs_;
};

/// Inverse of a nonzero Laurent series, retained through v^{order}. The
/// leading term is the first nonzero stored coefficient.
template <class T>
LaurentSeries<T> laurent_invert(const LaurentSeries<T>& u, int order) {
  const auto& c = u.coefficients();
  std::size_t lead = 0;
  while (lead < c.size() && FieldTraits<T>::is_zero(c[lead])) ++lead;
  if (lead == c.size()) throw SeriesError("cannot invert an identically zero Laurent series");
  const int valuation = u.floor() + static_cast<int>(lead);
  // u = v^val * w with w(0) != 0; 1/u = v^{-val} / w.
  const int needed = order + valuation;  // relative order required of 1/w
  const int available = u.top() - valuation;
  if (needed > available) throw SeriesError("Laurent inverse requested beyond the input's retained order");
  if (needed < 0) throw SeriesError("requested order is below the inverse's leading term");
  PowerSeries<T> w(u.variable(), std::vector<T>(c.begin() + lead, c.begin() + lead + needed + 1));
  return LaurentSeries<T>::from_power_series(w.inverse(), -valuation);
}

/// Coefficient of t^{-1}.
template <class T>
T residue_coeff(const LaurentSeries<T>& f) {
  return f.coeff(-1);
}

/// Wave-function container: power series in x whose coefficients are Laurent
/// series in hbar. x-degrees 0..X are all present.
class BiSeriesXH {
 public:
  explicit BiSeriesXH(std::vector<LaurentSeries<Rational>> by_degree);
  /// All x-degrees 0..x_order set to zero with hbar range [floor, top].
  static BiSeriesXH zero(int x_order, int h_floor, int h_top);

  int x_truncation() const { return static_cast<int>(terms_.size()) - 1; }
  const LaurentSeries<Rational>& operator[](int degree) const;
  LaurentSeries<Rational>& operator[](int degree);
  /// Smallest retained hbar order across x-degrees.
  int h_truncation() const;

  BiSeriesXH truncated(int x_order) const;
  BiSeriesXH truncated_h(int h_top) const;

  friend BiSeriesXH operator+(const BiSeriesXH& a, const BiSeriesXH& b);
  friend BiSeriesXH operator-(const BiSeriesXH& a, const BiSeriesXH& b);
  friend BiSeriesXH operator*(const BiSeriesXH& a, const BiSeriesXH& b);
  friend BiSeriesXH operator*(const BiSeriesXH& a, const Rational& c);
  friend bool operator==(const BiSeriesXH& a, const BiSeriesXH& b);

  /// x * f (x-degrees shift up; truncation rises by one).
  BiSeriesXH times_x(int power = 1) const;
  /// hbar^k * f.
  BiSeriesXH times_hbar(int k = 1) const;
  /// -hbar d/dx.
  BiSeriesXH y_hat() const;

  /// True when every retained coefficient is zero.
  bool is_zero() const;

 private:
  std::vector<LaurentSeries<Rational>> terms_;
};

/// Dense coefficient tensor of a series in n variables, each truncated at D;
/// shape (D+1)^n, row-major with the first variable slowest.
template <class T>
class MultiSeries {
 public:
  MultiSeries(int variables, int order, const T& like)
      : n_(variables), order_(order), data_(size_for(variables, order), zero_like(like)) {}

  int variables() const { return n_; }
  int truncation() const { return order_; }
  std::size_t size() const { return data_.size(); }

  std::size_t flat(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != n_) throw SeriesError("exponent arity mismatch");
    std::size_t idx = 0;
    for (int e : exps) {
      if (e < 0 || e > order_) throw SeriesError("exponent beyond truncation order");
      idx = idx * (order_ + 1) + static_cast<std::size_t>(e);
    }
    return idx;
  }
  std::vector<int> exponents(std::size_t flat_index) const {
    std::vector<int> exps(n_);
    for (int i = n_ - 1; i >= 0; --i) {
      exps[i] = static_cast<int>(flat_index % (order_ + 1));
      flat_index /= (order_ + 1);
    }
    return exps;
  }
  const T& operator[](std::size_t i) const { return data_[i]; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& at(const std::vector<int>& exps) const { return data_[flat(exps)]; }
  T& at(const std::vector<int>& exps) { return data_[flat(exps)]; }

 private:
  static std::size_t size_for(int n, int order) {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(order + 1);
    return s;
  }
  int n_;
  int order_;
  std::vector<T> data_;
};

}  // namespace hurwitz

#endif  // HURWITZ_SERIES_HPP
