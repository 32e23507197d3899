#include "hurwitz/toprec.hpp"

#include <algorithm>
#include <stdexcept>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

const char* const kTopRecConvention =
    "omega_{0,1} = -y dx; omega_{0,2} = dz1 dz2/(z1-z2)^2; "
    "K(z1,z) = -dz1/((z1-z)(y(z)-y(zbar)) dx(z)), kernel integration constant dropped; "
    "coefficients c[mu] of prod x_i^{mu_i-1} dx_i compared with prod mu_i H(mu)";

namespace {

constexpr const char* kLocal = "s";
constexpr const char* kX = "x";
constexpr std::size_t kMaxTensor = std::size_t(1) << 21;

BigComplex cpow(const BigComplex& z, int e) {
  BigComplex r(1L, z.precision());
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

ComplexSeries to_complex(const PowerSeries<Rational>& p, const std::string& var, mpfr_prec_t prec) {
  std::vector<BigComplex> c;
  c.reserve(p.coefficients().size());
  for (const auto& q : p.coefficients()) c.emplace_back(q, prec);
  return ComplexSeries(var, std::move(c));
}

// (alpha + s)^e as a polynomial in s, padded to `order`.
ComplexSeries shifted_power(const BigComplex& alpha, int e, int order) {
  auto r = ComplexSeries::zero(kLocal, order, alpha);
  for (int j = 0; j <= e && j <= order; ++j) r[j] = cpow(alpha, e - j) * BigComplex(Rational(binomial(e, j)), alpha.precision());
  return r;
}

// acc[e] += sum_i x[i] y[e - i] over acc's stored range.
void add_product_range(ComplexLaurent& acc, const ComplexLaurent& x, const ComplexLaurent& y) {
  if (x.top() < acc.top() - y.floor() || y.top() < acc.top() - x.floor()) {
    throw SeriesError("product range exceeds retained order of a factor");
  }
  const auto& xc = x.coefficients();
  const auto& yc = y.coefficients();
  for (int e = std::max(acc.floor(), x.floor() + y.floor()); e <= acc.top(); ++e) {
    BigComplex& out = acc.at(e);
    const int lo = std::max(x.floor(), e - y.top());
    const int hi = std::min(x.top(), e - y.floor());
    for (int i = lo; i <= hi; ++i) {
      const BigComplex& xi = xc[i - x.floor()];
      if (xi.is_zero()) continue;
      add_product(out, xi, yc[e - i - y.floor()]);
    }
  }
  if (x.floor() + y.floor() < acc.floor()) throw SeriesError("product reaches below accumulator floor");
}

bool laurent_is_zero(const ComplexLaurent& f) {
  for (const auto& c : f.coefficients()) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Digits of a flat index in base `base`, most significant first.
std::vector<int> digits(std::size_t flat, std::size_t base, int count) {
  std::vector<int> d(count);
  for (int i = count - 1; i >= 0; --i) {
    d[i] = static_cast<int>(flat % base);
    flat /= base;
  }
  return d;
}

BigFloat tolerance_for(mpfr_prec_t prec) { return BigFloat::exp2(-static_cast<long>(prec / 2), prec); }

}  // namespace

std::vector<BigComplex> branch_points(int a, mpfr_prec_t prec) {
  if (a < 1) throw std::invalid_argument("branch_points needs a >= 1");
  BigFloat rho(make_rational(1, a + 1), prec);
  mpfr_rootn_ui(rho.get(), rho.get(), static_cast<unsigned long>(a), MPFR_RNDN);
  std::vector<BigComplex> out;
  out.reserve(a);
  for (int j = 0; j < a; ++j) out.push_back(BigComplex::unit_root(j, a, prec) * BigComplex(rho, BigFloat(prec)));
  return out;
}

PowerSeries<Rational> curve_x_series(int a, int order) {
  auto x = PowerSeries<Rational>::monomial("z", order, 1, Rational(1));
  if (a + 1 <= order) x[a + 1] = -1;
  return x;
}

PowerSeries<Rational> curve_y_series(int a, int order) {
  // z^{a-1}/(z^a - 1) = -sum_k z^{a-1+ak}
  auto y = PowerSeries<Rational>::zero("z", order, Rational(0));
  for (int e = a - 1; e <= order; e += a) y[e] = -1;
  return y;
}

ComplexSeries local_conjugate(int a, const BigComplex& alpha, int order) {
  const mpfr_prec_t prec = alpha.precision();
  // x(alpha + s) = sum_j c_j s^j with c_1 = 0 at a branch point.
  std::vector<BigComplex> c(a + 2, BigComplex(prec));
  for (int j = 2; j <= a + 1; ++j) c[j] = -(cpow(alpha, a + 1 - j) * BigComplex(Rational(binomial(a + 1, j)), prec));
  if (c[2].is_zero()) throw std::runtime_error("branch point is not simple");

  const int N = order;
  auto one = ComplexSeries::constant(kLocal, N, BigComplex(1L, prec));
  auto u = ComplexSeries::constant(kLocal, N, BigComplex(-1L, prec));
  int known = 1;
  for (int iter = 0; iter < 64 && known <= 2 * (N + 1); ++iter) {
    auto G = ComplexSeries::zero(kLocal, N, c[2]);
    auto Gu = ComplexSeries::zero(kLocal, N, c[2]);
    auto p = one;        // u^i
    auto h = one;        // 1 + u + ... + u^i
    auto dh = ComplexSeries::zero(kLocal, N, c[2]);  // d/du of h
    for (int j = 2; j <= a + 1; ++j) {
      dh = dh + p * from_long(j - 1, c[2]);
      p = p * u;
      h = h + p;
      // h = 1 + ... + u^{j-1}, dh its u-derivative
      auto sh = ComplexSeries::monomial(kLocal, N, j - 2, c[j]);
      G = G + h * sh;
      Gu = Gu + dh * sh;
    }
    u = u - G * Gu.inverse();
    known *= 2;
  }
  auto sbar = ComplexSeries::zero(kLocal, N, c[2]);
  for (int i = 1; i <= N; ++i) sbar[i] = u[i - 1];
  return sbar;
}

BranchFrame make_branch_frame(int a, const BigComplex& alpha, int order) {
  const mpfr_prec_t prec = alpha.precision();
  const int N = order + 2;
  auto sbar = local_conjugate(a, alpha, N);
  auto u = ComplexSeries::zero(kLocal, N - 1, alpha);
  for (int i = 0; i < N; ++i) u[i] = sbar[i + 1];
  auto sbar_prime = sbar.derivative();

  // Y(s) = (alpha+s)^{a-1} / ((alpha+s)^a - 1)
  auto den = shifted_power(alpha, a, N);
  den[0] -= BigComplex(1L, prec);
  auto Y = shifted_power(alpha, a - 1, N) * den.inverse();
  auto dy = Y - Y.compose(sbar);
  // x'(alpha + s) = 1 - (a+1)(alpha+s)^a
  auto xp = -(shifted_power(alpha, a, N) * BigComplex(long(a + 1), prec));
  xp[0] += BigComplex(1L, prec);
  // Both vanish at s = 0; divide each by s.
  auto dy1 = ComplexSeries::zero(kLocal, N - 1, alpha);
  auto xp1 = ComplexSeries::zero(kLocal, N - 1, alpha);
  for (int i = 0; i < N; ++i) {
    dy1[i] = dy[i + 1];
    xp1[i] = xp[i + 1];
  }
  auto W = ComplexLaurent::from_power_series((dy1 * xp1).inverse(), -2);
  return BranchFrame{alpha, std::move(u), std::move(sbar), std::move(sbar_prime), std::move(W), order};
}

const BigComplex& PoleTensor::at(const std::vector<int>& slots) const {
  if (static_cast<int>(slots.size()) != n) throw std::invalid_argument("pole tensor arity mismatch");
  std::size_t idx = 0;
  for (int b : slots) idx = idx * slot_size() + static_cast<std::size_t>(b);
  return data.at(idx);
}

namespace {

// Per-frame expansions of the pole basis in the local coordinate s.
struct FrameBasis {
  std::vector<ComplexLaurent> E;     // index beta * J + j - 1: (alpha - beta + s)^{-j}
  std::vector<ComplexLaurent> Ebar;  // (alpha - beta + sbar)^{-j} sbar'
  std::vector<ComplexLaurent> O;     // index j - 1: omega_{0,2}(z, z_i) coefficient (j-1) s^{j-2}
  std::vector<ComplexLaurent> Obar;  // (j-1) sbar^{j-2} sbar'
  ComplexLaurent B02;                // omega_{0,2}(z, zbar)/(ds)^2 times sbar'
  int J = 0;
  int top = 0;
};

FrameBasis make_basis(const BranchFrame& f, const std::vector<BigComplex>& alphas, int frame, int J, int top) {
  const mpfr_prec_t prec = f.alpha.precision();
  const int a = static_cast<int>(alphas.size());
  const int N = top + J;  // power-series order used before shifting by s^{-j}
  const BigComplex one(1L, prec);
  auto sbar = f.sbar.truncated(std::min(f.sbar.truncation(), N));
  auto sbp = f.sbar_prime;
  auto u = f.u;
  if (sbp.truncation() < N || u.truncation() < N) throw SeriesError("branch frame order too small");
  sbp = sbp.truncated(N);
  u = u.truncated(N);
  auto uinv = u.inverse();

  FrameBasis b{{}, {}, {}, {}, ComplexLaurent::zero(kLocal, 0, 0, one), J, top};
  b.E.reserve(a * J);
  b.Ebar.reserve(a * J);
  for (int beta = 0; beta < a; ++beta) {
    if (beta == frame) {
      auto pw = ComplexSeries::constant(kLocal, N, one);
      for (int j = 1; j <= J; ++j) {
        auto mono = ComplexLaurent::from_power_series(ComplexSeries::constant(kLocal, top + j, one), -j);
        b.E.push_back(mono);
        pw = pw * uinv;
        b.Ebar.push_back(ComplexLaurent::from_power_series((pw * sbp).truncated(top + j), -j));
      }
    } else {
      const BigComplex d = alphas[frame] - alphas[beta];
      auto lin = ComplexSeries::monomial(kLocal, top, 1, one);
      lin[0] = d;
      auto inv = lin.inverse();
      auto linb = sbar.truncated(top);
      linb[0] = d;
      auto invb = linb.inverse();
      auto p = ComplexSeries::constant(kLocal, top, one);
      auto pb = p;
      for (int j = 1; j <= J; ++j) {
        p = p * inv;
        pb = pb * invb;
        b.E.push_back(ComplexLaurent::from_power_series(p));
        b.Ebar.push_back(ComplexLaurent::from_power_series(pb * sbp.truncated(top)));
      }
    }
  }
  auto sbar_pow = ComplexSeries::constant(kLocal, top, one);
  for (int j = 1; j <= J; ++j) {
    if (j == 1) {
      b.O.push_back(ComplexLaurent::zero(kLocal, 0, top, one));
      b.Obar.push_back(ComplexLaurent::zero(kLocal, 0, top, one));
      continue;
    }
    const BigComplex w(long(j - 1), prec);
    b.O.push_back(ComplexLaurent::from_power_series(ComplexSeries::monomial(kLocal, top, j - 2, w)));
    b.Obar.push_back(ComplexLaurent::from_power_series(sbar_pow * sbp.truncated(top) * w));
    sbar_pow = sbar_pow * sbar.truncated(top);
  }
  // (s - sbar)^{-2} sbar' = s^{-2} (1 - u)^{-2} sbar'
  auto omu = ComplexSeries::constant(kLocal, top + 2, one) - u.truncated(top + 2);
  b.B02 = ComplexLaurent::from_power_series((omu * omu).inverse() * sbp.truncated(top + 2), -2);
  return b;
}

}  // namespace

TopologicalRecursion::TopologicalRecursion(int a, mpfr_prec_t prec, int max_euler)
    : a_(a), prec_(prec), max_euler_(max_euler) {
  if (a < 1) throw std::invalid_argument("toprec needs a >= 1");
  if (max_euler < 1) throw std::invalid_argument("max_euler must be positive");
  const int jmax = 3 * max_euler + 3;
  frame_order_ = 2 * jmax + 4 + jmax;
  for (const auto& alpha : branch_points(a, prec)) frames_.push_back(make_branch_frame(a, alpha, frame_order_));
}

const PoleTensor& TopologicalRecursion::omega(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw std::invalid_argument("omega(g,n) needs 2g-2+n > 0");
  if (2 * g - 2 + n > max_euler_) throw std::invalid_argument("(g,n) beyond this recursion's Euler bound");
  auto it = memo_.find({g, n});
  if (it != memo_.end()) return it->second;
  PoleTensor t = compute(g, n);
  return memo_.emplace(std::make_pair(g, n), std::move(t)).first->second;
}

PoleTensor TopologicalRecursion::compute(int g, int n) {
  const int a = a_;
  const int kout = pole_order_bound(g, n);
  const int J = kout + 2;  // working order, trimmed to kout afterwards
  const int jmax = 3 * max_euler_ + 3;
  const int top = 2 * jmax + 4;
  const std::size_t S = static_cast<std::size_t>(a) * J;
  const std::size_t rest_count = ipow(S, n - 1);
  if (rest_count * S > kMaxTensor) throw std::runtime_error("pole tensor exceeds memory budget");

  // Factors that can appear in the bracket.
  struct Factor {
    int g, n;
  };
  std::vector<Factor> needed;
  auto stable = [](int gg, int nn) { return nn >= 1 && gg >= 0 && 2 * gg - 2 + nn > 0; };
  if (g >= 1 && stable(g - 1, n + 1)) needed.push_back({g - 1, n + 1});
  for (int nn = 1; nn <= n; ++nn) {
    for (int gg = 0; gg <= g; ++gg) {
      if (stable(gg, nn) && 2 * gg - 2 + nn < 2 * g - 2 + n) needed.push_back({gg, nn});
    }
  }
  for (const auto& fct : needed) omega(fct.g, fct.n);

  std::vector<BigComplex> alphas;
  for (const auto& f : frames_) alphas.push_back(f.alpha);

  PoleTensor out;
  out.g = g;
  out.n = n;
  out.a = a;
  out.max_order = J;
  out.data.assign(rest_count * S, BigComplex(prec_));

  for (int fr = 0; fr < a; ++fr) {
    const BranchFrame& frame = frames_[fr];
    const FrameBasis basis = make_basis(frame, alphas, fr, jmax, top);
    const BigComplex one(1L, prec_);

    // First-slot partial evaluations of each needed factor, in z and zbar.
    struct Partial {
      int J;
      std::size_t S;
      std::vector<ComplexLaurent> pe, pec;
      std::vector<char> nonzero;
    };
    std::map<std::pair<int, int>, Partial> partial;
    for (const auto& fct : needed) {
      const PoleTensor& w = memo_.at({fct.g, fct.n});
      Partial p;
      p.J = w.max_order;
      p.S = static_cast<std::size_t>(w.slot_size());
      const std::size_t R = ipow(p.S, fct.n - 1);
      p.pe.reserve(R);
      p.pec.reserve(R);
      p.nonzero.assign(R, 0);
      for (std::size_t r = 0; r < R; ++r) {
        auto acc = ComplexLaurent::zero(kLocal, -p.J, top, one);
        auto accb = ComplexLaurent::zero(kLocal, 0, top, one);
        for (std::size_t b1 = 0; b1 < p.S; ++b1) {
          const BigComplex& c = w.data[b1 * R + r];
          if (c.is_zero()) continue;
          const int beta = static_cast<int>(b1) / p.J;
          const int j = static_cast<int>(b1) % p.J + 1;
          acc.accumulate(basis.E[beta * jmax + j - 1] * c);
          const auto& eb = basis.Ebar[beta * jmax + j - 1];
          if (eb.floor() < accb.floor()) accb = accb.with_floor(eb.floor());
          accb.accumulate(eb * c);
          p.nonzero[r] = 1;
        }
        p.pe.push_back(std::move(acc));
        p.pec.push_back(std::move(accb));
      }
      partial.emplace(std::make_pair(fct.g, fct.n), std::move(p));
    }

    // Maps output rest digits (order J) to a factor's flat rest index, or -1.
    auto sub_index = [&](const std::vector<int>& d, const std::vector<int>& positions, int jw, std::size_t sw,
                         long& idx) {
      idx = 0;
      for (int pos : positions) {
        const int beta = d[pos] / J;
        const int j = d[pos] % J + 1;
        if (j > jw) return false;
        idx = idx * static_cast<long>(sw) + beta * jw + (j - 1);
      }
      return true;
    };

    const int bfloor = -2 * jmax - 2;
    const int m_count = std::min(J, -bfloor + 1);
    for (std::size_t r = 0; r < rest_count; ++r) {
      const std::vector<int> d = digits(r, S, n - 1);
      auto B = ComplexLaurent::zero(kLocal, bfloor, 1, one);
      bool any = false;

      if (g >= 1) {
        if (g - 1 == 0 && n + 1 == 2) {
          B.accumulate(basis.B02.truncated(1).with_floor(bfloor));
          any = true;
        } else {
          const Partial& p = partial.at({g - 1, n + 1});
          std::vector<int> all(n - 1);
          for (int i = 0; i < n - 1; ++i) all[i] = i;
          long tail;
          if (sub_index(d, all, p.J, p.S, tail)) {
            const std::size_t R = ipow(p.S, n - 1);
            for (std::size_t b2 = 0; b2 < p.S; ++b2) {
              const std::size_t key = b2 * R + static_cast<std::size_t>(tail);
              if (!p.nonzero[key]) continue;
              const int beta = static_cast<int>(b2) / p.J;
              const int j = static_cast<int>(b2) % p.J + 1;
              add_product_range(B, p.pe[key], basis.Ebar[beta * jmax + j - 1]);
              any = true;
            }
          }
        }
      }

      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> I, Jset;
        for (int i = 0; i < n - 1; ++i) ((mask >> i) & 1u ? I : Jset).push_back(i);
        const int n1 = static_cast<int>(I.size()) + 1;
        const int n2 = static_cast<int>(Jset.size()) + 1;
        for (int g1 = 0; g1 <= g; ++g1) {
          const int g2 = g - g1;
          if ((g1 == 0 && n1 == 1) || (g2 == 0 && n2 == 1)) continue;
          const ComplexLaurent* A = nullptr;
          const ComplexLaurent* Ab = nullptr;
          if (g1 == 0 && n1 == 2) {
            const int beta = d[I[0]] / J, j = d[I[0]] % J + 1;
            if (beta != fr) continue;
            A = &basis.O[j - 1];
          } else {
            const Partial& p = partial.at({g1, n1});
            long idx;
            if (!sub_index(d, I, p.J, p.S, idx) || !p.nonzero[idx]) continue;
            A = &p.pe[idx];
          }
          if (g2 == 0 && n2 == 2) {
            const int beta = d[Jset[0]] / J, j = d[Jset[0]] % J + 1;
            if (beta != fr) continue;
            Ab = &basis.Obar[j - 1];
          } else {
            const Partial& p = partial.at({g2, n2});
            long idx;
            if (!sub_index(d, Jset, p.J, p.S, idx) || !p.nonzero[idx]) continue;
            Ab = &p.pec[idx];
          }
          add_product_range(B, *A, *Ab);
          any = true;
        }
      }
      if (!any || laurent_is_zero(B)) continue;

      // Res_{s=0} dz1/(z1 - alpha - s) W B ds: coefficient of (z1-alpha)^{-m-1}.
      const auto& W = frame.W;
      for (int m = 0; m < -bfloor; ++m) {
        const int e = -m - 1;
        BigComplex acc(prec_);
        for (int i = W.floor(); i <= e - bfloor; ++i) {
          add_product(acc, W.coefficients()[i - W.floor()], B.coeff(e - i));
        }
        if (acc.is_zero()) continue;
        if (m >= m_count) {
          if (!(acc.norm_inf() < BigFloat::exp2(-static_cast<long>(prec_ * 3 / 4), prec_))) {
            throw std::runtime_error("pole order exceeds working bound");
          }
          continue;
        }
        out.data[(static_cast<std::size_t>(fr) * J + m) * rest_count + r] -= acc;
      }
    }
  }

  // Trim every slot to the pole-order bound after checking the discarded part.
  BigFloat scale(1L, prec_);
  for (const auto& c : out.data) scale = max(scale, c.norm_inf());
  const BigFloat threshold = BigFloat::exp2(-static_cast<long>(prec_ * 3 / 4), prec_) * scale;
  PoleTensor trimmed;
  trimmed.g = g;
  trimmed.n = n;
  trimmed.a = a;
  trimmed.max_order = kout;
  const std::size_t St = static_cast<std::size_t>(a) * kout;
  trimmed.data.assign(ipow(St, n), BigComplex(prec_));
  for (std::size_t flat = 0; flat < out.data.size(); ++flat) {
    const auto d = digits(flat, S, n);
    bool keep = true;
    std::size_t idx = 0;
    for (int b : d) {
      const int beta = b / J, j = b % J + 1;
      if (j > kout) keep = false;
      idx = idx * St + static_cast<std::size_t>(beta * kout + j - 1);
    }
    if (keep) {
      trimmed.data[idx] = out.data[flat];
    } else if (!(out.data[flat].norm_inf() <= threshold)) {
      throw std::runtime_error("pole order bound " + std::to_string(kout) + " violated for omega_{" +
                               std::to_string(g) + "," + std::to_string(n) + "}");
    }
  }
  return trimmed;
}

const std::vector<ComplexSeries>& TopologicalRecursion::x_basis(int M) {
  auto it = x_basis_.find(M);
  if (it != x_basis_.end()) return it->second;
  const int jmax = 3 * max_euler_ + 1;
  auto zx = series_reversion(curve_x_series(a_, M + 1), M + 1);
  auto z = to_complex(PowerSeries<Rational>(kX, zx.coefficients()), kX, prec_);
  auto zp = z.derivative().truncated(M);
  z = z.truncated(M);
  std::vector<ComplexSeries> basis;
  for (const auto& f : frames_) {
    auto base = z;
    base[0] = -f.alpha;
    auto inv = base.inverse();
    auto p = zp;
    for (int j = 1; j <= jmax; ++j) {
      p = p * inv;
      basis.push_back(p);
    }
  }
  return x_basis_.emplace(M, std::move(basis)).first->second;
}

std::vector<BigComplex> TopologicalRecursion::x_expansion(int g, int n, int M) {
  if (M < 1) throw std::invalid_argument("mu-max must be positive");
  if (g == 0 && n == 1) {
    auto zx = series_reversion(curve_x_series(a_, M), M);
    auto y = curve_y_series(a_, M).compose(PowerSeries<Rational>("z", zx.coefficients()));
    std::vector<BigComplex> out;
    for (int mu = 1; mu <= M; ++mu) out.emplace_back(Rational(-y[mu - 1]), prec_);
    return out;
  }
  const PoleTensor& t = omega(g, n);
  const auto& basis = x_basis(M);
  const int jw = t.max_order;
  const int jb = 3 * max_euler_ + 1;
  const std::size_t S = static_cast<std::size_t>(t.slot_size());

  // Contract the leading slot and append the x-index at the end, n times.
  std::vector<BigComplex> cur = t.data;
  std::size_t lead = S;
  std::size_t rest = cur.size() / S;
  for (int step = 0; step < n; ++step) {
    std::vector<BigComplex> next(rest * M, BigComplex(prec_));
    for (std::size_t b = 0; b < lead; ++b) {
      const int beta = static_cast<int>(b) / jw;
      const int j = static_cast<int>(b) % jw + 1;
      const auto& P = basis[beta * jb + j - 1];
      for (std::size_t r = 0; r < rest; ++r) {
        const BigComplex& c = cur[b * rest + r];
        if (c.is_zero()) continue;
        for (int mu = 1; mu <= M; ++mu) add_product(next[r * M + (mu - 1)], c, P[mu - 1]);
      }
    }
    cur = std::move(next);
    if (step + 1 < n) {
      lead = S;
      rest = cur.size() / S;
    }
  }
  return cur;
}

std::size_t CorrelatorExpansion::flat(const std::vector<int>& mu) const {
  if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("mu arity mismatch");
  std::size_t idx = 0;
  for (int m : mu) {
    if (m < 1 || m > M) throw std::out_of_range("mu entry outside expansion range");
    idx = idx * M + static_cast<std::size_t>(m - 1);
  }
  return idx;
}

CorrelatorExpansion correlator(int g, int n, int a, int M, mpfr_prec_t prec) {
  if (g == 0 && n == 2) throw std::invalid_argument("(g,n) = (0,2) is not a conjecture output");
  if (!(g == 0 && n == 1) && (g < 0 || n < 1 || 2 * g - 2 + n <= 0)) {
    throw std::invalid_argument("correlator needs 2g-2+n > 0 or (g,n) = (0,1)");
  }
  const int euler = std::max(1, 2 * g - 2 + n);
  TopologicalRecursion lo(a, prec, euler);
  TopologicalRecursion hi(a, prec + 64, euler);
  CorrelatorExpansion out;
  out.g = g;
  out.n = n;
  out.a = a;
  out.M = M;
  out.prec = prec;
  out.coeffs = lo.x_expansion(g, n, M);
  const auto ref = hi.x_expansion(g, n, M);
  out.error.reserve(out.coeffs.size());
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    BigComplex diff(prec + 64);
    diff = ref[i] - BigComplex(out.coeffs[i].real(), out.coeffs[i].imag());
    BigFloat mag = max(BigFloat(1L, prec), out.coeffs[i].abs());
    out.error.push_back(diff.abs() * 2L + BigFloat::exp2(8 - static_cast<long>(prec), prec) * mag);
  }
  return out;
}

bool ConjectureReport::passed() const {
  if (!problems.empty() || entries.empty()) return false;
  return std::all_of(entries.begin(), entries.end(), [](const ConjectureEntry& e) { return e.within_tolerance && e.exact; });
}

nlohmann::json ConjectureReport::to_json() const {
  nlohmann::json j;
  j["convention"] = kTopRecConvention;
  j["a"] = a;
  j["g"] = g;
  j["n"] = n;
  j["mu_max"] = M;
  j["prec"] = prec;
  j["tolerance"] = tolerance_for(prec).to_string(6);
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    j["entries"].push_back({{"mu", e.mu},
                            {"tr", e.tr.real().to_string(30)},
                            {"tr_imag", e.tr.imag().to_string(6)},
                            {"cutjoin", to_string(e.cutjoin)},
                            {"abs_err", e.abs_err.to_string(6)},
                            {"err_estimate", e.error_estimate.to_string(6)},
                            {"exact", e.exact},
                            {"pass", e.within_tolerance}});
  }
  j["problems"] = problems;
  j["passed"] = passed();
  return j;
}

ConjectureReport check_conjecture(CutJoinEngine& engine, int g, int n, int a, int M, mpfr_prec_t prec) {
  ConjectureReport rep;
  rep.g = g;
  rep.n = n;
  rep.a = a;
  rep.M = M;
  rep.prec = prec;
  const CorrelatorExpansion ex = correlator(g, n, a, M, prec);
  const BigFloat tol = tolerance_for(prec);
  const BigInt max_den(1000000000000L);

  std::vector<int> mu(n, 1);
  while (true) {
    ConjectureEntry e;
    e.mu = mu;
    e.tr = ex.at(mu);
    e.error_estimate = ex.error[ex.flat(mu)];
    Rational expected = engine.hurwitz(a, g, mu);
    for (int m : mu) expected *= m;
    e.cutjoin = expected;
    e.abs_err = (e.tr - BigComplex(expected, prec)).abs();
    e.within_tolerance = e.abs_err <= tol && e.error_estimate <= tol;
    auto rec = reconstruct_rational(e.tr.real(), max_den, tol);
    e.reconstructed = rec.has_value();
    e.exact = rec && *rec == expected && e.tr.imag().abs() <= tol;
    // Symmetry under index permutations.
    auto perm = mu;
    while (std::next_permutation(perm.begin(), perm.end())) {
      BigFloat d = (ex.at(perm) - e.tr).abs();
      if (!(d <= tol)) rep.problems.push_back("asymmetric at " + partition_to_string(perm));
    }
    rep.entries.push_back(std::move(e));
    // Next nondecreasing tuple with entries <= M.
    int i = n - 1;
    while (i >= 0 && mu[i] == M) --i;
    if (i < 0) break;
    ++mu[i];
    for (int k = i + 1; k < n; ++k) mu[k] = mu[i];
  }
  return rep;
}

nlohmann::json SpectralReport::to_json() const {
  return {{"a", a}, {"D", D}, {"leading", to_string(leading)}, {"nonzero", nonzero}, {"passed", passed()}};
}

SpectralReport check_spectral_from_F01(int a, int D) {
  if (a < 1 || D < 1) throw std::invalid_argument("check_spectral_from_F01 needs a >= 1, D >= 1");
  SpectralReport rep;
  rep.a = a;
  rep.D = D;
  // F01 = sum_k H(ak) x^{ak}; y = -F01'
  auto y = PowerSeries<Rational>::zero(kX, D, Rational(0));
  for (int k = 1; a * k - 1 <= D; ++k) y[a * k - 1] = -closed_form_01(a, k) * (a * k);
  auto xy = PowerSeries<Rational>::zero(kX, D, Rational(0));
  for (int i = 0; i < D; ++i) xy[i + 1] = y[i];
  auto one_plus = xy;
  one_plus[0] += 1;
  auto rhs = y;
  for (int i = 0; i < a; ++i) rhs = rhs * one_plus;
  rep.leading = a - 1 <= D ? rhs[a - 1] : Rational(0);
  auto residual = rhs;
  if (a - 1 <= D) residual[a - 1] += 1;
  for (int i = 0; i < D; ++i) {
    if (residual[i] != 0) rep.nonzero.push_back("x^" + std::to_string(i) + ": " + to_string(residual[i]));
  }
  return rep;
}

}  // namespace hurwitz
