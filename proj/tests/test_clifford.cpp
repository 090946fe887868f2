#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mgt/clifford.hpp"

using namespace mgt;

namespace {

CliffordElement random_element(const QuadraticSpace& v, std::mt19937_64& rng) {
  std::vector<long long> c(std::size_t{1} << v.dim, 0);
  for (auto& x : c) x = static_cast<long long>(rng() % static_cast<unsigned long long>(v.p));
  return CliffordElement(v, std::move(c));
}

}  // namespace

TEST_CASE("defining relations") {
  auto v = QuadraticSpace::diagonal(3, {1, 2});
  auto e1 = CliffordElement::generator(v, 0);
  auto e2 = CliffordElement::generator(v, 1);
  CHECK(e1 * e1 == CliffordElement::scalar(v, 1));
  CHECK(e2 * e2 == CliffordElement::scalar(v, 2));
  // anticommutator of distinct generators is b(e_i, e_j) (zero here)
  CHECK((e1 * e2 + e2 * e1).is_zero());

  auto s = QuadraticSpace::split(3, 1);
  auto l = CliffordElement::generator(s, 0);
  auto f = CliffordElement::generator(s, 1);
  CHECK((l * f + f * l) == CliffordElement::scalar(s, 1));  // b(l, phi) = 1
  CHECK((l * l).is_zero());
  CHECK((f * f).is_zero());
}

TEST_CASE("associativity on 500 random triples at (p, n) = (3, 3)") {
  auto v = QuadraticSpace::diagonal(3, {1, 1, 2});
  std::mt19937_64 rng(99);
  for (int it = 0; it < 500; ++it) {
    auto a = random_element(v, rng), b = random_element(v, rng), c = random_element(v, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("bilinearity and unit") {
  auto v = QuadraticSpace::split(3, 1);
  std::mt19937_64 rng(7);
  auto one = CliffordElement::scalar(v, 1);
  for (int it = 0; it < 50; ++it) {
    auto a = random_element(v, rng), b = random_element(v, rng), c = random_element(v, rng);
    CHECK(a * one == a);
    CHECK(one * a == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("grading respected by multiplication") {
  auto v = QuadraticSpace::diagonal(5, {1, 2});
  std::mt19937_64 rng(12);
  for (int it = 0; it < 100; ++it) {
    auto a = random_element(v, rng), b = random_element(v, rng);
    for (int pa = 0; pa <= 1; ++pa)
      for (int pb = 0; pb <= 1; ++pb) {
        std::vector<long long> ca(a.coeffs()), cb(b.coeffs());
        for (std::size_t m = 0; m < ca.size(); ++m) {
          if (__builtin_popcountll(m) % 2 != pa) ca[m] = 0;
          if (__builtin_popcountll(m) % 2 != pb) cb[m] = 0;
        }
        CliffordElement ha(v, ca), hb(v, cb);
        auto prod = ha * hb;
        if (prod.is_zero()) continue;
        CHECK(prod.parity() == (pa + pb) % 2);
      }
  }
}

TEST_CASE("transpose") {
  auto v = QuadraticSpace::split(3, 1);
  auto e1 = CliffordElement::generator(v, 0);
  auto e2 = CliffordElement::generator(v, 1);
  // (e1 e2)^T = e2 e1 = -e1 e2 + b(e1, e2)
  auto lhs = transpose(e1 * e2);
  auto rhs = (e1 * e2).scaled(-1) + CliffordElement::scalar(v, v.b[0][1]);
  CHECK(lhs == rhs);
  CHECK(transpose(CliffordElement::scalar(v, 1)) == CliffordElement::scalar(v, 1));

  std::mt19937_64 rng(3);
  auto w = QuadraticSpace::diagonal(3, {1, 2, 1});
  for (int it = 0; it < 500; ++it) {
    auto a = random_element(w, rng), b = random_element(w, rng);
    CHECK(transpose(a * b) == transpose(b) * transpose(a));
  }
  // on a diagonal space the subset basis transposes by the sign (-1)^{k(k-1)/2}
  for (std::size_t m = 0; m < 8; ++m) {
    std::vector<long long> c(8, 0);
    c[m] = 1;
    CliffordElement basis(w, c);
    int k = __builtin_popcountll(m);
    long long sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(transpose(basis) == basis.scaled(sign));
  }
}

TEST_CASE("inverse") {
  auto v = QuadraticSpace::split(3, 1);
  std::mt19937_64 rng(42);
  int invertible = 0;
  for (int it = 0; it < 100; ++it) {
    auto a = random_element(v, rng);
    auto ai = inverse(a);
    if (ai) {
      ++invertible;
      CHECK(a * *ai == CliffordElement::scalar(v, 1));
      CHECK(*ai * a == CliffordElement::scalar(v, 1));
    }
  }
  CHECK(invertible > 0);
}

TEST_CASE("lipschitz group of a zero-dimensional space") {
  auto v = QuadraticSpace::diagonal(3, {});
  auto g = lipschitz_group(v);
  CHECK(g.order() == 2);  // the nonzero scalars
  for (const auto& e : g.elements) CHECK(e.action.empty());
}

TEST_CASE("first isomorphism count for the split plane over F_3") {
  auto v = QuadraticSpace::split(3, 1);
  auto g = lipschitz_group(v);
  auto o = orthogonal_matrices(v);
  CHECK(o.size() == 4);  // O_2^+(F_3)
  CHECK(g.order() / (3 - 1) == static_cast<long long>(o.size()));
}

TEST_CASE("reflection images and spin report for the split plane over F_3") {
  auto rep = spin_analysis(QuadraticSpace::split(3, 1));
  CHECK(rep.o_order == 4);
  CHECK(rep.gamma_order == 8);
  CHECK(rep.surjective);
  CHECK(rep.kernel_is_scalars);
  CHECK(rep.norm_diagram_commutes);
  CHECK(rep.reflections_ok);
  CHECK(rep.reflection_norms_match);
  CHECK(rep.cartan_dieudonne_ok);
  // -1 is not a square mod 3, so the norm kernel is proper of order 2
  CHECK(rep.ker_no_order == 2);
  CHECK(rep.pin_covers_ker_no);
  CHECK(rep.pin_kernel_pm_one);
  CHECK(rep.pin_order == 4);  // double cover of ker(N_O)
  CHECK(rep.so_order == 2);
  CHECK(rep.spin_order == 2);
}

TEST_CASE("spin report for the three-dimensional diagonal space over F_3") {
  auto rep = spin_analysis(QuadraticSpace::diagonal(3, {1, 1, 1}));
  CHECK(rep.o_order == 48);  // |O_3(F_3)| = 2 * 3 * (3^2 - 1)
  CHECK(rep.surjective);
  CHECK(rep.kernel_is_scalars);
  CHECK(rep.gamma_order == 2 * 48);
  CHECK(rep.norm_diagram_commutes);
  CHECK(rep.reflections_ok);
  CHECK(rep.cartan_dieudonne_ok);
  CHECK(rep.pin_covers_ker_no);
  CHECK(rep.pin_kernel_pm_one);
}

TEST_CASE("spin report for (p, n) = (5, 1) diagonal") {
  auto rep = spin_analysis(QuadraticSpace::diagonal(5, {1}));
  // O(1-dim) = {+-1}; gamma = homogeneous invertibles = scalars + scalar*e1
  CHECK(rep.o_order == 2);
  CHECK(rep.surjective);
  CHECK(rep.kernel_is_scalars);
  CHECK(rep.norm_diagram_commutes);
  CHECK(rep.pin_kernel_pm_one);
}

TEST_CASE("spin report for the split space (5, 2)") {
  auto rep = spin_analysis(QuadraticSpace::split(5, 1));
  CHECK(rep.o_order == 8);  // 2 (5 - 1)
  CHECK(rep.gamma_order == 4 * 8);
  CHECK(rep.surjective);
  CHECK(rep.kernel_is_scalars);
  CHECK(rep.norm_diagram_commutes);
  CHECK(rep.reflections_ok);
  CHECK(rep.reflection_norms_match);
  CHECK(rep.cartan_dieudonne_ok);
  CHECK(rep.pin_covers_ker_no);
  CHECK(rep.pin_kernel_pm_one);
}

TEST_CASE("spinor module at n = 1 and n = 2 over F_3") {
  auto r1 = spinor_module(3, 1);
  CHECK(r1.cl_dim == 4);
  CHECK(r1.end_dim == 4);
  CHECK(r1.relations_ok);
  CHECK(r1.bijective);

  auto r2 = spinor_module(3, 2);
  CHECK(r2.cl_dim == 16);
  CHECK(r2.end_dim == 16);
  CHECK(r2.relations_ok);
  CHECK(r2.bijective);
}

TEST_CASE("degenerate spaces are rejected") {
  auto v = QuadraticSpace::diagonal(3, {0});
  CHECK(!v.nondegenerate());
  CHECK_THROWS_AS(lipschitz_group(v), Error);
  CHECK_THROWS_AS(QuadraticSpace::diagonal(2, {1}), Error);
  CHECK_THROWS_AS(QuadraticSpace::diagonal(9, {1}), Error);
}
