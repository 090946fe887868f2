#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mgt/json_io.hpp"

using namespace mgt;

TEST_CASE("root of unity round trip") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 100; ++it) {
    long long n = 1 + static_cast<long long>(rng() % 360);
    RootOfUnity x(n, static_cast<long long>(rng() % n));
    CHECK(root_from_json(to_json(x)) == x);
  }
  CHECK(to_json(RootOfUnity(2, 1)) == Json{{"order", 2}, {"exp", 1}});
}

TEST_CASE("group round trip and spec strings") {
  auto g = FiniteAbelianGroup::parse("2,4");
  CHECK(group_from_json(to_json(g)) == g);
  CHECK(to_json(g)["orders"] == Json::array({2, 4}));
  CHECK(group_from_json(to_json(FiniteAbelianGroup::trivial())).is_trivial());
}

TEST_CASE("form round trip across enumerated forms") {
  for (const char* spec : {"2", "3", "2,2"}) {
    auto g = FiniteAbelianGroup::parse(spec);
    for (const auto& q : enumerate_quadratic_forms(g)) {
      CHECK(form_from_json(to_json(q)) == q);
    }
  }
}

TEST_CASE("cochain round trip") {
  auto g = FiniteAbelianGroup::parse("2,2");
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    Cochain c(g, 3, 8);
    for (auto& v : c.table()) v = static_cast<long long>(rng() % 8);
    CHECK(cochain_from_json(to_json(c)) == c);
  }
}

TEST_CASE("homomorphism round trip") {
  auto g = FiniteAbelianGroup::parse("3,3");
  Homomorphism f(g, g, {{0, 1}, {1, 0}});
  auto j = to_json(f);
  CHECK(hom_from_json(j) == f);
}

TEST_CASE("form spec strings") {
  auto ev2 = parse_form_spec("ev:2");
  CHECK(ev2.group().orders() == std::vector<long long>{2, 2});
  auto sp = parse_form_spec("split:1,3");
  CHECK(sp.group().orders() == std::vector<long long>{3, 3});
  auto tr = parse_form_spec("trivial:5");
  CHECK(tr.is_trivial());
  CHECK_THROWS_AS(parse_form_spec("nope"), Error);
  CHECK_THROWS_AS(parse_form_spec("split:1"), Error);
  CHECK_THROWS_AS(parse_form_spec("file:/does/not/exist.json"), Error);
}

TEST_CASE("form file round trip through disk") {
  auto q = evaluation_form(FiniteAbelianGroup::cyclic(3)).form();
  auto path = std::string("/tmp/mgt_test_form.json");
  {
    std::ofstream out(path);
    out << to_json(q).dump();
  }
  auto q2 = parse_form_spec("file:" + path);
  CHECK(q2 == q);
}

TEST_CASE("subgroup serialization carries generators") {
  auto g = FiniteAbelianGroup::parse("2,2");
  auto subs = enumerate_subgroups(g);
  for (const auto& s : subs) {
    auto j = to_json(s);
    CHECK(j["order"].get<long long>() == s.order());
    CHECK(j["elements"].size() == static_cast<std::size_t>(s.order()));
  }
}
