#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "mgt/quadratic.hpp"

using namespace mgt;

TEST_CASE("trivial form polarizes to trivial bicharacter") {
  auto g = FiniteAbelianGroup::parse("2,4");
  auto q = trivial_form(g);
  auto b = q.polarize();
  auto all = enumerate(g);
  for (const auto& x : all)
    for (const auto& y : all) CHECK(b.pair(x, y) == RootOfUnity::one());
}

TEST_CASE("polarization on Z/3 with q(a) = zeta3^{a^2}") {
  auto g = FiniteAbelianGroup::cyclic(3);
  std::vector<RootOfUnity> table = {RootOfUnity::one(), RootOfUnity(3, 1), RootOfUnity(3, 1)};
  QuadraticForm q(g, table);  // q(2) = zeta3^4 = zeta3
  auto b = q.polarize();
  // <1,1> = q(2)/q(1)^2 = zeta3^{-1} = zeta3^2
  CHECK(b.pair({1}, {1}) == RootOfUnity(3, 2));
}

TEST_CASE("invalid tables are rejected with InvalidForm") {
  auto g = FiniteAbelianGroup::cyclic(3);
  // q(1) != q(-1)
  CHECK_THROWS_AS(
      QuadraticForm(g, {RootOfUnity::one(), RootOfUnity(3, 1), RootOfUnity(3, 2)}), Error);
  // q(0) != 1
  CHECK_THROWS_AS(
      QuadraticForm(g, {RootOfUnity(3, 1), RootOfUnity(3, 1), RootOfUnity(3, 1)}), Error);
  // value of too-high order on Z/3 (q(1) = -1 breaks the cyclic constraint)
  CHECK_THROWS_AS(
      QuadraticForm(g, {RootOfUnity::one(), RootOfUnity::minus_one(), RootOfUnity::minus_one()}),
      Error);
}

TEST_CASE("nondegeneracy") {
  auto z2 = FiniteAbelianGroup::cyclic(2);
  CHECK(trivial_form(FiniteAbelianGroup::trivial()).is_nondegenerate());
  CHECK(!trivial_form(z2).is_nondegenerate());
  // q(1) = i on Z/2 is nondegenerate
  QuadraticForm qi(z2, {RootOfUnity::one(), RootOfUnity(4, 1)});
  CHECK(qi.is_nondegenerate());
}

TEST_CASE("evaluation form on Z/2 and Z/3") {
  auto m2 = evaluation_form(FiniteAbelianGroup::cyclic(2));
  CHECK(m2.group().orders() == std::vector<long long>{2, 2});
  // q((1, chi_1)) = chi_1(1) = -1
  CHECK(m2.form().value({1, 1}) == RootOfUnity::minus_one());
  CHECK(m2.form().value({1, 0}) == RootOfUnity::one());

  // L = Z/3: all nine values match the direct character evaluation
  auto l3 = FiniteAbelianGroup::cyclic(3);
  auto m3 = evaluation_form(l3);
  auto d = dual(l3);
  for (long long ell = 0; ell < 3; ++ell)
    for (long long c = 0; c < 3; ++c)
      CHECK(m3.form().value({ell, c}) == d.pair({c}, {ell}));

  // trivial L
  CHECK(evaluation_form(FiniteAbelianGroup::trivial()).group().is_trivial());
}

TEST_CASE("evaluation form bicharacter matches chi(l') chi'(l)") {
  auto l = FiniteAbelianGroup::parse("2,2");
  auto m = evaluation_form(l);
  auto b = m.form().polarize();
  auto d = dual(l);
  auto all = enumerate(m.group());
  for (const auto& x : all)
    for (const auto& y : all) {
      std::vector<long long> lx(x.coords().begin(), x.coords().begin() + 2);
      std::vector<long long> cx(x.coords().begin() + 2, x.coords().end());
      std::vector<long long> ly(y.coords().begin(), y.coords().begin() + 2);
      std::vector<long long> cy(y.coords().begin() + 2, y.coords().end());
      CHECK(b.pair(x, y) == d.pair(cx, ly) * d.pair(cy, lx));
    }
}

TEST_CASE("evaluation form is nondegenerate for every L of order <= 64") {
  for (const auto& l : all_abelian_groups(64, true)) {
    auto m = evaluation_form(l);  // constructor throws if degenerate
    CHECK(m.group().order() == l.order() * l.order());
  }
}

TEST_CASE("split form") {
  auto m = split_form(1, 3);
  CHECK(m.group().orders() == std::vector<long long>{3, 3});
  // isotropic vector count (q = 1) including 0: brute force
  int isotropic = 0;
  for (const auto& x : enumerate(m.group()))
    if (m.form().value(x).is_one()) ++isotropic;
  CHECK(isotropic == 5);
  CHECK_THROWS_AS(split_form(1, 2), Error);
  CHECK_THROWS_AS(split_form(1, 9), Error);
  // nondegeneracy of split_form(2,3) is checked by the MetricGroup constructor
  CHECK(split_form(2, 3).group().order() == 81);
}

TEST_CASE("enumerate_quadratic_forms counts") {
  CHECK(enumerate_quadratic_forms(FiniteAbelianGroup::trivial()).size() == 1);
  CHECK(enumerate_quadratic_forms(FiniteAbelianGroup::cyclic(2)).size() == 4);
  CHECK(enumerate_quadratic_forms(FiniteAbelianGroup::cyclic(2), true).size() == 2);
  CHECK(enumerate_quadratic_forms(FiniteAbelianGroup::cyclic(3)).size() == 3);
  CHECK(enumerate_quadratic_forms(FiniteAbelianGroup::cyclic(4)).size() == 8);
  CHECK(enumerate_quadratic_forms(FiniteAbelianGroup::parse("2,2")).size() == 32);
  // the nondegenerate forms on Z/2 are q(1) = +-i
  auto nd = enumerate_quadratic_forms(FiniteAbelianGroup::cyclic(2), true);
  std::set<RootOfUnity> vals;
  for (const auto& q : nd) vals.insert(q.value({1}));
  CHECK(vals == std::set<RootOfUnity>{RootOfUnity(4, 1), RootOfUnity(4, 3)});
}

TEST_CASE("form count is invariant under presentation permutation") {
  auto a = FiniteAbelianGroup::parse("2,3");
  auto b = FiniteAbelianGroup::parse("3,2");
  CHECK(enumerate_quadratic_forms(a).size() == enumerate_quadratic_forms(b).size());
  auto c = FiniteAbelianGroup::parse("2,4");
  auto d = FiniteAbelianGroup::parse("4,2");
  CHECK(enumerate_quadratic_forms(c).size() == enumerate_quadratic_forms(d).size());
}

TEST_CASE("odd order: forms biject with symmetric bicharacters") {
  // q -> polarization is injective and hits every symmetric bicharacter
  for (const char* spec : {"3", "5", "9", "3,3"}) {
    auto a = FiniteAbelianGroup::parse(spec);
    auto forms = enumerate_quadratic_forms(a);
    std::set<std::vector<long long>> pols;
    long long e = a.exponent();
    for (const auto& q : forms) {
      auto b = q.polarize();
      std::vector<long long> key;
      for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) key.push_back(b.gram(i, j).embed(e));
      pols.insert(key);
    }
    CHECK(pols.size() == forms.size());
    // symmetric bicharacter count: prod n_i (diag) * prod gcd (cross)
    long long expected = 1;
    for (std::size_t i = 0; i < a.rank(); ++i) expected *= a.orders()[i];
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = i + 1; j < a.rank(); ++j)
        expected *= std::gcd(a.orders()[i], a.orders()[j]);
    CHECK(static_cast<long long>(pols.size()) == expected);
  }
}

TEST_CASE("diagonal relation <a,a> = q(2a)/q(a)^2") {
  auto a = FiniteAbelianGroup::parse("2,4");
  for (const auto& q : enumerate_quadratic_forms(a)) {
    auto b = q.polarize();
    for (const auto& x : enumerate(a)) {
      auto x2 = x + x;
      CHECK(b.pair(x, x) == q.value(x2) / (q.value(x) * q.value(x)));
    }
  }
}

TEST_CASE("metric group rejects degenerate forms") {
  CHECK_THROWS_AS(MetricGroup(trivial_form(FiniteAbelianGroup::cyclic(2))), Error);
}
