#include "hurwitz/series.hpp"

namespace hurwitz {

namespace {

constexpr const char* kHbar = "hbar";

int max_top(const std::vector<LaurentSeries<Rational>>& terms) {
  int t = terms.front().top();
  for (const auto& s : terms) t = std::max(t, s.top());
  return t;
}

}  // namespace

BiSeriesXH::BiSeriesXH(std::vector<LaurentSeries<Rational>> by_degree) : terms_(std::move(by_degree)) {
  if (terms_.empty()) throw SeriesError("bivariate series needs x-degree 0");
  for (const auto& t : terms_) {
    if (t.variable() != kHbar) throw SeriesError("wave-function coefficients must be series in hbar");
  }
}

BiSeriesXH BiSeriesXH::zero(int x_order, int h_floor, int h_top) {
  std::vector<LaurentSeries<Rational>> terms;
  terms.reserve(x_order + 1);
  for (int d = 0; d <= x_order; ++d) terms.push_back(LaurentSeries<Rational>::zero(kHbar, h_floor, h_top, Rational(0)));
  return BiSeriesXH(std::move(terms));
}

const LaurentSeries<Rational>& BiSeriesXH::operator[](int degree) const {
  if (degree < 0 || degree > x_truncation()) throw SeriesError("x-degree beyond truncation");
  return terms_[degree];
}

LaurentSeries<Rational>& BiSeriesXH::operator[](int degree) {
  if (degree < 0 || degree > x_truncation()) throw SeriesError("x-degree beyond truncation");
  return terms_[degree];
}

int BiSeriesXH::h_truncation() const {
  int t = terms_.front().top();
  for (const auto& s : terms_) t = std::min(t, s.top());
  return t;
}

BiSeriesXH BiSeriesXH::truncated(int x_order) const {
  if (x_order > x_truncation()) throw SeriesError("cannot extend x truncation");
  return BiSeriesXH(std::vector<LaurentSeries<Rational>>(terms_.begin(), terms_.begin() + x_order + 1));
}

BiSeriesXH BiSeriesXH::truncated_h(int h_top) const {
  std::vector<LaurentSeries<Rational>> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(t.truncated(h_top));
  return BiSeriesXH(std::move(terms));
}

BiSeriesXH operator+(const BiSeriesXH& a, const BiSeriesXH& b) {
  const int x = std::min(a.x_truncation(), b.x_truncation());
  std::vector<LaurentSeries<Rational>> terms;
  terms.reserve(x + 1);
  for (int d = 0; d <= x; ++d) terms.push_back(a.terms_[d] + b.terms_[d]);
  return BiSeriesXH(std::move(terms));
}

BiSeriesXH operator-(const BiSeriesXH& a, const BiSeriesXH& b) { return a + b * Rational(-1); }

BiSeriesXH operator*(const BiSeriesXH& a, const BiSeriesXH& b) {
  const int x = std::min(a.x_truncation(), b.x_truncation());
  std::vector<LaurentSeries<Rational>> terms;
  terms.reserve(x + 1);
  for (int d = 0; d <= x; ++d) {
    LaurentSeries<Rational> acc = a.terms_[0] * b.terms_[d];
    for (int i = 1; i <= d; ++i) acc = acc + a.terms_[i] * b.terms_[d - i];
    terms.push_back(std::move(acc));
  }
  return BiSeriesXH(std::move(terms));
}

BiSeriesXH operator*(const BiSeriesXH& a, const Rational& c) {
  std::vector<LaurentSeries<Rational>> terms;
  terms.reserve(a.terms_.size());
  for (const auto& t : a.terms_) terms.push_back(t * c);
  return BiSeriesXH(std::move(terms));
}

bool operator==(const BiSeriesXH& a, const BiSeriesXH& b) { return a.terms_ == b.terms_; }

BiSeriesXH BiSeriesXH::times_x(int power) const {
  if (power < 0) throw SeriesError("negative x power");
  std::vector<LaurentSeries<Rational>> terms;
  terms.reserve(terms_.size() + power);
  const int top = max_top(terms_);
  for (int d = 0; d < power; ++d) terms.push_back(LaurentSeries<Rational>::zero(kHbar, 0, std::max(top, 0), Rational(0)));
  terms.insert(terms.end(), terms_.begin(), terms_.end());
  return BiSeriesXH(std::move(terms));
}

BiSeriesXH BiSeriesXH::times_hbar(int k) const {
  std::vector<LaurentSeries<Rational>> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(t.shifted(k));
  return BiSeriesXH(std::move(terms));
}

BiSeriesXH BiSeriesXH::y_hat() const {
  if (x_truncation() == 0) throw SeriesError("y_hat of a series known only at x-degree 0 carries no coefficients");
  std::vector<LaurentSeries<Rational>> terms;
  terms.reserve(terms_.size() - 1);
  for (int d = 1; d <= x_truncation(); ++d) terms.push_back(terms_[d].shifted(1) * Rational(-d));
  return BiSeriesXH(std::move(terms));
}

bool BiSeriesXH::is_zero() const {
  for (const auto& t : terms_) {
    for (const auto& c : t.coefficients()) {
      if (c != 0) return false;
    }
  }
  return true;
}

}  // namespace hurwitz
