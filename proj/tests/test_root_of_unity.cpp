#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <random>

#include "doctest.h"
#include "mgt/root_of_unity.hpp"

using mgt::RootOfUnity;

TEST_CASE("canonical form and identities") {
  CHECK(RootOfUnity(1, 0) * RootOfUnity(4, 1) == RootOfUnity(4, 1));
  CHECK(RootOfUnity(4, 1) * RootOfUnity(4, 1) == RootOfUnity(2, 1));  // i*i = -1
  CHECK(RootOfUnity(3, 1) * RootOfUnity(2, 1) == RootOfUnity(6, 5));
  CHECK(RootOfUnity(6, 2) == RootOfUnity(3, 1));  // gcd reduction
  CHECK(RootOfUnity(5, 10) == RootOfUnity::one());
  CHECK(RootOfUnity(4, -1) == RootOfUnity(4, 3));
}

TEST_CASE("pow") {
  CHECK(RootOfUnity(4, 1).pow(0) == RootOfUnity::one());
  CHECK(RootOfUnity(4, 1).pow(-1) == RootOfUnity(4, 3));
  CHECK(RootOfUnity(6, 1).pow(4) == RootOfUnity(3, 2));
  CHECK(RootOfUnity(12, 5).pow(12) == RootOfUnity::one());
}

TEST_CASE("embed") {
  CHECK(RootOfUnity(2, 1).embed(8) == 4);
  CHECK(RootOfUnity(1, 0).embed(12) == 0);
  CHECK_THROWS_AS(RootOfUnity(3, 1).embed(4), mgt::Error);
  // round-trip through canonicalization
  CHECK(RootOfUnity(8, RootOfUnity(2, 1).embed(8)) == RootOfUnity(2, 1));
}

TEST_CASE("inverse cancels") {
  std::mt19937_64 rng(20240901);
  for (int it = 0; it < 200; ++it) {
    long long n = 1 + static_cast<long long>(rng() % 360);
    long long e = static_cast<long long>(rng() % n);
    RootOfUnity a(n, e);
    CHECK(a * a.pow(-1) == RootOfUnity::one());
  }
}

TEST_CASE("mul is associative and commutative") {
  long long old = RootOfUnity::order_cap();
  RootOfUnity::set_order_cap(1LL << 40);  // triple lcms overflow the default input cap
  std::mt19937_64 rng(42);
  for (int it = 0; it < 1000; ++it) {
    long long n1 = 1 + static_cast<long long>(rng() % 360);
    long long n2 = 1 + static_cast<long long>(rng() % 360);
    long long n3 = 1 + static_cast<long long>(rng() % 360);
    RootOfUnity a(n1, static_cast<long long>(rng() % n1));
    RootOfUnity b(n2, static_cast<long long>(rng() % n2));
    RootOfUnity c(n3, static_cast<long long>(rng() % n3));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
  RootOfUnity::set_order_cap(old);
}

TEST_CASE("float oracle over operation chains") {
  long long old = RootOfUnity::order_cap();
  RootOfUnity::set_order_cap(1LL << 40);
  std::mt19937_64 rng(7);
  // chain operands have order dividing 2520 so lcms along the chain stay sane
  std::vector<long long> divisors;
  for (long long d = 1; d <= 2520; ++d)
    if (2520 % d == 0) divisors.push_back(d);
  for (int it = 0; it < 1000; ++it) {
    long long n = 1 + static_cast<long long>(rng() % 360);
    RootOfUnity x(n, static_cast<long long>(rng() % n));
    std::complex<double> fx = x.approx();
    int chain = static_cast<int>(rng() % 8) + 1;
    for (int s = 0; s < chain; ++s) {
      switch (rng() % 3) {
        case 0: {
          long long m = divisors[rng() % divisors.size()];
          RootOfUnity y(m, static_cast<long long>(rng() % m));
          x *= y;
          fx *= y.approx();
          break;
        }
        case 1: {
          long long k = static_cast<long long>(rng() % 7) - 3;
          fx = std::pow(fx, std::complex<double>(static_cast<double>(k), 0.0));
          x = x.pow(k);
          break;
        }
        default: {
          x = x.inverse();
          fx = 1.0 / fx;
          break;
        }
      }
    }
    CHECK(std::abs(fx - x.approx()) < 1e-9);
  }
  RootOfUnity::set_order_cap(old);
}

TEST_CASE("order cap is enforced") {
  long long old = RootOfUnity::order_cap();
  RootOfUnity::set_order_cap(100);
  CHECK_THROWS_AS(RootOfUnity(101, 1), mgt::Error);
  CHECK_THROWS_AS(RootOfUnity(64, 1) * RootOfUnity(27, 1), mgt::Error);
  RootOfUnity::set_order_cap(old);
}
