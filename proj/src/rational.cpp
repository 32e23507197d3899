#include "hurwitz/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hurwitz {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt p(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // row-by-row: S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j] * j + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

}  // namespace hurwitz
