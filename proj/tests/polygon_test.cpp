#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qrot/polygon.hpp"
#include "test_util.hpp"

using namespace qrot;
using qrot_test::dense;

namespace {

std::multiset<int> coarea_multiset(const std::vector<Path>& paths) {
  std::multiset<int> m;
  for (const auto& p : paths) m.insert(p.coarea);
  return m;
}

}  // namespace

TEST_CASE("heptagon structure") {
  FanTriangulation t = FanTriangulation::build(RegularCF({1, 2, 1, 1}));
  CHECK(t.vertex_count() == 7);
  CHECK(t.inner_count() == 3);
  CHECK(t.c_seq() == Seq{2, 2, 3});
  REQUIRE(t.triangles().size() == 5);
  CHECK(t.triangles()[0].v == std::array<int, 3>{0, 6, 1});
  CHECK_FALSE(t.triangles()[0].base_up);
  CHECK(t.triangles()[1].v == std::array<int, 3>{1, 2, 6});
  CHECK(t.triangles()[4].v == std::array<int, 3>{3, 4, 5});

  CHECK(t.quiddity() == std::vector<int>{1, 2, 2, 3, 1, 2, 4});

  FanTriangulation t2 = FanTriangulation::build(NegativeCF({2, 2, 3}));
  CHECK(t2.a_seq() == Seq{1, 2, 1, 1});
  CHECK(t2.quiddity() == t.quiddity());
}

TEST_CASE("heptagon oriented edges and weights") {
  FanTriangulation t = FanTriangulation::build(RegularCF({1, 2, 1, 1}));
  std::map<std::pair<int, int>, int> expect = {
      {{4, 3}, 2}, {{3, 2}, 1}, {{2, 1}, 1},  // top row
      {{6, 0}, 0}, {{5, 6}, 0},               // bottom row
      {{4, 5}, 0},                            // rightmost
      {{6, 1}, 0}, {{2, 6}, 0}, {{3, 6}, 0}, {{5, 3}, 1}};
  std::map<std::pair<int, int>, int> got;
  for (const auto& e : t.oriented_edges()) got[{e.from, e.to}] = e.weight_exp;
  CHECK(got == expect);
}

TEST_CASE("smallest fan") {
  FanTriangulation t = FanTriangulation::build(RegularCF({1, 1}));
  CHECK(t.vertex_count() == 4);
  REQUIRE(t.triangles().size() == 2);
  CHECK(t.triangles()[0].v == std::array<int, 3>{0, 3, 1});
  CHECK(t.triangles()[1].v == std::array<int, 3>{1, 2, 3});
  // paths 2 -> 1 counted by the classical continuant K_2(1,1) = 2
  CHECK(enumerate_paths(t, 2, 1).size() == 2);
}

TEST_CASE("heptagon path enumeration") {
  FanTriangulation t = FanTriangulation::build(RegularCF({1, 2, 1, 1}));

  auto to0 = enumerate_paths(t, 4, 0);
  CHECK(to0.size() == 5);
  CHECK(coarea_multiset(to0) == std::multiset<int>{0, 1, 2, 2, 3});
  CHECK(path_generating_poly(t, 4, 0, PathStatistic::kCoarea) ==
        dense({1, 1, 2, 1}));

  auto to1 = enumerate_paths(t, 4, 1);
  CHECK(to1.size() == 7);
  CHECK(coarea_multiset(to1) == std::multiset<int>{0, 1, 2, 2, 3, 3, 4});
  CHECK(path_generating_poly(t, 4, 1, PathStatistic::kCoarea) ==
        dense({1, 1, 2, 2, 1}));

  for (const auto& paths : {to0, to1})
    for (const Path& p : paths) {
      CHECK(p.weight_exp == p.coarea);
      CHECK(p.area + p.coarea == 4);
    }

  CHECK_THROWS_AS(enumerate_paths(t, 9, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_paths(t, 0, -1), std::invalid_argument);
}

TEST_CASE("coarea generating polynomials are the continuants") {
  for (long long r = 2; r <= 25; ++r)
    for (long long s = 1; s < r; ++s) {
      if (std::gcd(r, s) != 1) continue;
      Rational x(r, s);
      RegularCF a = regular_expansion(x);
      NegativeCF c = negative_expansion(x);
      FanTriangulation t = FanTriangulation::build(a);
      const int k = t.inner_count();

      LaurentPoly num = path_generating_poly(t, k + 1, 1, PathStatistic::kCoarea);
      LaurentPoly den = path_generating_poly(t, k + 1, 0, PathStatistic::kCoarea);
      CHECK(num == continuant_E(c.terms()));
      CHECK(num == continuant_K(a.terms()));
      CHECK(den ==
            continuant_E(Seq(c.terms().begin() + 1, c.terms().end())));
      CHECK(num.eval_at_one() == r);
      CHECK(den.eval_at_one() == s);

      // per-path: the weight exponent is the coarea
      for (int target : {0, 1})
        for (const Path& p : enumerate_paths(t, k + 1, target))
          CHECK(p.weight_exp == p.coarea);
    }
}

TEST_CASE("convergent identities") {
  for (long long r = 2; r <= 20; ++r)
    for (long long s = 1; s < r; ++s) {
      if (std::gcd(r, s) != 1) continue;
      Rational x(r, s);
      RegularCF a = regular_expansion(x);
      NegativeCF c = negative_expansion(x);
      FanTriangulation t = FanTriangulation::build(a);
      const int k = t.inner_count();
      Mat2 m = mat_plus(a.terms());

      CHECK(path_generating_poly(t, k + 2, 1, PathStatistic::kCoarea) ==
            m.a12);  // mirror of K_{2m-1}(a_1..a_{2m-1})
      CHECK(path_generating_poly(t, k + 2, 0, PathStatistic::kCoarea) ==
            m.a22);  // mirror of K_{2m-2}(a_2..a_{2m-1})
      CHECK(path_generating_poly(t, k, 1, PathStatistic::kCoarea) ==
            continuant_E(Seq(c.terms().begin(), c.terms().end() - 1)));
      CHECK(path_generating_poly(t, k, 0, PathStatistic::kCoarea) ==
            continuant_E(Seq(c.terms().begin() + 1, c.terms().end() - 1)));
    }
}

TEST_CASE("area + coarea is constant per endpoint pair") {
  for (long long r = 2; r <= 15; ++r)
    for (long long s = 1; s < r; ++s) {
      if (std::gcd(r, s) != 1) continue;
      FanTriangulation t =
          FanTriangulation::build(regular_expansion(Rational(r, s)));
      const int k = t.inner_count();
      const int total = static_cast<int>(t.triangles().size()) - 1;
      for (int from : {k, k + 1, k + 2})
        for (int to : {0, 1}) {
          auto paths = enumerate_paths(t, from, to);
          if (paths.empty()) continue;
          const int sum = paths[0].area + paths[0].coarea;
          for (const Path& p : paths) CHECK(p.area + p.coarea == sum);
          if (from == k + 1) CHECK(sum == total);
        }
    }
}

TEST_CASE("weight statistic equals coarea statistic as polynomials") {
  for (long long r = 2; r <= 20; ++r)
    for (long long s = 1; s < r; ++s) {
      if (std::gcd(r, s) != 1) continue;
      FanTriangulation t =
          FanTriangulation::build(regular_expansion(Rational(r, s)));
      const int k = t.inner_count();
      for (int to : {0, 1})
        CHECK(path_generating_poly(t, k + 1, to, PathStatistic::kWeight) ==
              path_generating_poly(t, k + 1, to, PathStatistic::kCoarea));
    }
}
