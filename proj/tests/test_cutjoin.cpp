#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/factorisation.hpp"

using namespace hurwitz;

TEST_CASE("refined base case and one step") {
  CutJoinEngine e;
  for (int a = 1; a <= 4; ++a) {
    for (int ell = 1; ell <= a; ++ell) CHECK(e.refined(a, 0, a, ell, {}) == (ell == 1 ? Rational(1, a) : Rational(0)));
  }
  CHECK(e.refined(2, 0, 4, 1, {}) == make_rational(1, 4));
  CHECK(e.refined(2, 0, 4, 2, {}) == make_rational(1, 4));
  CHECK(e.refined(1, 0, 2, 1, {}) == make_rational(1, 2));
}

TEST_CASE("plain numbers") {
  CutJoinEngine e;
  CHECK(e.hurwitz(2, 0, {4}) == make_rational(1, 2));
  for (int a = 1; a <= 5; ++a) CHECK(e.hurwitz(a, 0, {a}) == Rational(1, a));
  CHECK(e.hurwitz(1, 0, {1, 1}) == 1);
  CHECK(e.hurwitz(2, 0, {3}) == 0);
  CHECK(e.hurwitz(3, 0, {1, 1}) == 0);
}

TEST_CASE("closed form for one part") {
  CHECK(closed_form_01(1, 1) == 1);
  CHECK(closed_form_01(2, 3) == make_rational(7, 6));
  CHECK(closed_form_01(1, 2) == make_rational(1, 2));
  CutJoinEngine e;
  for (int a = 1; a <= 4; ++a) {
    for (int k = 1; k <= 20; ++k) CHECK(e.hurwitz(a, 0, {a * k}) == closed_form_01(a, k));
  }
}

TEST_CASE("symmetry in the order of parts") {
  CutJoinEngine e;
  CHECK(e.refined(2, 0, 2, 2, {1, 3}) == e.refined(2, 0, 2, 2, {3, 1}));
  CHECK(e.hurwitz(2, 1, {1, 3, 2}) == e.hurwitz(2, 1, {2, 1, 3}));
}

TEST_CASE("recursion agrees with the oracle on small cases") {
  CutJoinEngine e;
  for (int a : {1, 2, 3}) {
    for (int d = a; d <= 6; d += a) {
      auto census = run_census(Flavor::MonotoneOrbifold, a, d, 6, CountMode::FixedSigma0);
      for (const auto& mu : partitions_of(d)) {
        for (int g = 0; g <= 2; ++g) {
          const int m = factorisation_length(Flavor::MonotoneOrbifold, a, g, mu);
          if (m < 0 || m > 6) continue;
          CAPTURE(a);
          CAPTURE(g);
          CAPTURE(partition_to_string(mu));
          CHECK(e.hurwitz(a, g, mu) == census.hurwitz(g, mu));
          for (std::size_t i = 0; i < mu.size(); ++i) {
            std::vector<int> rest = mu;
            rest.erase(rest.begin() + static_cast<long>(i));
            for (int ell = 1; ell <= a; ++ell) CHECK(e.refined(a, g, mu[i], ell, rest) == census.refined_hurwitz(g, mu[i], ell, rest));
          }
        }
      }
    }
  }
}

TEST_CASE("cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "hurwitz_cache_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "cache.txt";
  std::filesystem::remove(path);

  SUBCASE("empty file") {
    { std::ofstream(path) << ""; }
    CHECK(ValueCache::load(path).size() == 0);
  }
  SUBCASE("random entries") {
    std::mt19937 rng(7);
    ValueCache c(path);
    for (int i = 0; i < 100; ++i) {
      std::vector<int> rest(rng() % 4);
      for (int& p : rest) p = 1 + static_cast<int>(rng() % 6);
      const Rational v(static_cast<long>(rng() % 1000) - 500, 1 + static_cast<long>(rng() % 97));
      Rational cv = v;
      cv.canonicalize();
      if (i % 2) {
        auto k = RefinedKey::make(1 + rng() % 4, rng() % 3, 1 + rng() % 8, 1 + rng() % 4, rest);
        if (!c.find(k)) c.store(k, cv);
      } else {
        rest.push_back(1 + static_cast<int>(rng() % 5));
        auto k = PlainKey::make(1 + rng() % 4, rng() % 3, rest);
        if (!c.find(k)) c.store(k, cv);
      }
    }
    c.flush();
    CHECK(ValueCache::load(path) == c);
  }
  SUBCASE("warm cache skips the recursion") {
    {
      CutJoinEngine e(ValueCache::load(path));
      CHECK(e.hurwitz(2, 0, {4}) == make_rational(1, 2));
      CHECK(e.recursion_calls() > 0);
      e.cache().flush();
    }
    CutJoinEngine warm(ValueCache::load(path));
    CHECK(warm.hurwitz(2, 0, {4}) == make_rational(1, 2));
    CHECK(warm.recursion_calls() == 0);
  }
  SUBCASE("malformed lines are rejected with their line number") {
    ValueCache c;
    CHECK_THROWS_WITH_AS(c.parse("a=1 g=0 mu=1 H=1\na=1 g=0 mu=2 H=1/2 colour=red\n"), "cache line 2: unknown field 'colour'",
                         CacheFormatError);
    CHECK_THROWS_AS(c.parse("a=1 g=0 mu=x H=1\n"), CacheFormatError);
    CHECK_THROWS_AS(c.parse("a=1 g=0 mu1=2 H=1\n"), CacheFormatError);
    CHECK_THROWS_AS(c.parse("a=1 g=0 mu=2 H=1/0\n"), CacheFormatError);
    CHECK_THROWS_AS(c.parse("a=1 g=0 mu=2 H=1/2\na=1 g=0 mu=2 H=1/3\n"), CacheFormatError);
  }
  std::filesystem::remove_all(dir);
}
