// Acceptance suite: one line per criterion, exit code = number of failures.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mgt/center.hpp"
#include "mgt/clifford.hpp"
#include "mgt/cli_runner.hpp"
#include "mgt/cohomology.hpp"
#include "mgt/orthogonal.hpp"
#include "mgt/subgroups.hpp"

using namespace mgt;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> body;
};

// all scalar-cohomology classes of H^3(L) as normalized pointed-fusion data
std::vector<PointedFusionData> all_h3_classes(const FiniteAbelianGroup& l) {
  auto h3 = cohomology(l, 3, CoefficientSpec::scalars());
  long long common = 1;
  for (long long f : h3.invariant_factors) common = std::lcm(common, f);
  if (common == 1) common = 2;
  std::vector<PointedFusionData> out;
  std::vector<long long> digits(h3.invariant_factors.size(), 0);
  while (true) {
    Cochain tau(l, 3, common);
    for (std::size_t i = 0; i < digits.size(); ++i)
      if (digits[i] != 0)
        tau = tau + h3.representatives[i].scaled(digits[i]).embedded(common);
    out.push_back(make_pointed_fusion_data(l, tau));
    std::size_t pos = digits.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < h3.invariant_factors[pos]) {
        done = false;
        break;
      }
      digits[pos] = 0;
    }
    if (done || digits.empty()) break;
  }
  return out;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "abelian 3-cocycle classes match quadratic forms", [](std::string& d) {
    bool ok = true;
    for (const char* spec : {"", "2", "3", "2,2"}) {
      auto a = FiniteAbelianGroup::parse(spec);
      auto rep = em_correspondence(a);
      std::string label = a.is_trivial() ? "0" : a.str();
      d += "[" + label + ": classes " + std::to_string(rep.class_count) + ", forms " +
           std::to_string(rep.form_count) + "] ";
      if (rep.class_count != rep.form_count || !rep.bijective) ok = false;
      if (spec == std::string("2") && (rep.class_count != 4 || rep.form_count != 4)) ok = false;
    }
    return ok;
  }});

  criteria.push_back({2, "scalar cohomology of Z/2 in degrees 2 and 3", [](std::string& d) {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto h2 = cohomology(z2, 2, CoefficientSpec::scalars());
    auto h3 = cohomology(z2, 3, CoefficientSpec::scalars());
    d = "H^2 = " + h2.factors_str() + ", H^3 = " + h3.factors_str();
    return h2.order() == 1 && h3.invariant_factors == std::vector<long long>{2};
  }});

  criteria.push_back({3, "untwisted center is the evaluation form, |L| <= 8", [](std::string& d) {
    bool ok = true;
    int count = 0;
    for (const auto& l : all_abelian_groups(8, true)) {
      auto data = make_pointed_fusion_data(l, Cochain(l, 3, 2));
      auto t = solve_trivialization(data);
      auto cls = classify_center(data, t);
      auto ev = evaluation_form(l);
      bool match = cls.metric.form() == ev.form();
      // diagonal of b agrees with the asymmetric standard braiding's diagonal
      auto du = dual(l);
      std::size_t r = l.rank();
      long long na = ev.group().order();
      for (long long x = 0; x < na && match; ++x) {
        auto cx = ev.group().coords_of(x);
        std::vector<long long> lp(cx.begin(), cx.begin() + static_cast<long>(r));
        std::vector<long long> cp(cx.begin() + static_cast<long>(r), cx.end());
        if (RootOfUnity(cls.cocycle_pair.modulus(), cls.cocycle_pair.b_at(x, x)) !=
            du.pair(cp, lp))
          match = false;
      }
      if (!match) {
        ok = false;
        d += "[mismatch at L = " + l.str() + "] ";
      }
      ++count;
    }
    d += std::to_string(count) + " groups checked";
    return ok;
  }});

  criteria.push_back({4, "trivialization and hexagons for every pointed class on Z/3 and (Z/2)^2",
                      [](std::string& d) {
    bool ok = true;
    for (const char* spec : {"3", "2,2"}) {
      auto l = FiniteAbelianGroup::parse(spec);
      int idx = 0;
      for (auto& data : all_h3_classes(l)) {
        std::string label = std::string(spec) + "#" + std::to_string(idx++);
        if (!is_center_pointed(data)) {
          d += "[" + label + ": not pointed, skipped] ";
          continue;
        }
        try {
          auto t = solve_trivialization(data);
          auto cls = classify_center(data, t);
          auto hex = is_abelian_three_cocycle(cls.cocycle_pair);
          if (hex.ok) {
            d += "[" + label + ": ok] ";
          } else {
            d += "[" + label + ": hexagons fail: " + hex.witness + "] ";
            ok = false;
          }
        } catch (const Error& e) {
          d += "[" + label + ": " + std::string(to_string(e.kind())) + "] ";
          ok = false;
        }
      }
    }
    return ok;
  }});

  criteria.push_back({5, "pointedness on (Z/3)^3: symmetric yes, alternating no", [](std::string& d) {
    auto l = FiniteAbelianGroup::parse("3,3,3");
    long long n = l.order();
    Cochain sym(l, 3, 3), alt(l, 3, 3);
    for (long long x = 0; x < n; ++x)
      for (long long y = 0; y < n; ++y)
        for (long long z = 0; z < n; ++z) {
          auto a = l.coords_of(x), b = l.coords_of(y), c = l.coords_of(z);
          sym.set({x, y, z}, a[0] * b[0] * c[0]);
          alt.set({x, y, z}, a[0] * b[1] * c[2]);
        }
    auto ds = make_pointed_fusion_data(l, sym);
    auto da = make_pointed_fusion_data(l, alt);
    bool ps = is_center_pointed(ds), pa = is_center_pointed(da);
    bool os = is_center_pointed_commutator_oracle(ds);
    bool oa = is_center_pointed_commutator_oracle(da);
    d = "symmetric: solver " + std::string(ps ? "pointed" : "not pointed") + ", oracle " +
        (os ? "pointed" : "not pointed") + "; alternating: solver " +
        (pa ? "pointed" : "not pointed") + ", oracle " + (oa ? "pointed" : "not pointed");
    return ps && os && !pa && !oa;
  }});

  criteria.push_back({6, "split orthogonal orders match the classical formula", [](std::string& d) {
    bool ok = true;
    for (auto [n, p] : std::vector<std::pair<long long, long long>>{{1, 3}, {1, 5}, {2, 3}}) {
      auto rep = split_orthogonal_check(n, p, 4096, 1LL << 36, 0);
      d += "[(" + std::to_string(n) + "," + std::to_string(p) + "): |O| " +
           std::to_string(rep.brute_force_order) + " vs " + std::to_string(rep.formula_order) +
           ", [O:SO] = " + std::to_string(rep.so_index) + "] ";
      if (!rep.equal || rep.so_index < 1 || rep.so_index > 2) ok = false;
    }
    // det(id) = 1 and SO is a closed subgroup on the largest case
    auto m = split_form(2, 3);
    if (determinant(m, Homomorphism::identity(m.group())) != 1) ok = false;
    auto so = special_orthogonal_group(orthogonal_group(m, 4096, 1LL << 36, 0));
    if (!so.is_subgroup_closed()) ok = false;
    d += "det(id) = 1, SO subgroup check done";
    return ok;
  }});

  criteria.push_back({7, "Clifford, Pin and Spin over F_3 in the split plane", [](std::string& d) {
    auto v = QuadraticSpace::split(3, 1);
    auto rep = spin_analysis(v);
    auto sm = spinor_module(3, 1);
    long long scalars = 1;
    for (std::size_t i = 0; i < (std::size_t{1} << v.dim); ++i) scalars *= v.p;
    d = "dim Cl = " + std::to_string(std::size_t{1} << v.dim) + " (" +
        std::to_string(scalars) + " elements), |Gamma| = " + std::to_string(rep.gamma_order) +
        ", |O| = " + std::to_string(rep.o_order) + ", |Pin| = " + std::to_string(rep.pin_order) +
        ", |Spin| = " + std::to_string(rep.spin_order);
    return (std::size_t{1} << v.dim) == 4 && scalars == 81 && rep.surjective &&
           rep.kernel_is_scalars && rep.pin_covers_ker_no && rep.pin_kernel_pm_one &&
           rep.norm_diagram_commutes && rep.reflections_ok && rep.reflection_norms_match &&
           sm.bijective && sm.relations_ok && sm.end_dim == 4;
  }});

  criteria.push_back({8, "coefficient mu_16 and torsor Z/2 for ev(Z/2)", [](std::string& d) {
    auto m = evaluation_form(FiniteAbelianGroup::cyclic(2));
    auto rep = coefficient_torsor_report(m, FiniteAbelianGroup::cyclic(2));
    bool ok = rep.l == 2 && rep.coefficient_modulus == 16 && rep.torsor_size == 2 &&
              rep.h3_factors == std::vector<long long>{2};
    d = "l = " + std::to_string(rep.l) + ", coefficient mu_" +
        std::to_string(rep.coefficient_modulus) + ", torsor order " +
        std::to_string(rep.torsor_size);
    // non-square order must error
    auto z2 = FiniteAbelianGroup::cyclic(2);
    MetricGroup tiny(QuadraticForm(z2, {RootOfUnity::one(), RootOfUnity(4, 1)}));
    bool threw = false;
    try {
      coefficient_torsor_report(tiny, FiniteAbelianGroup::cyclic(2));
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::NotSquareOrder;
    }
    d += threw ? ", NotSquareOrder raised" : ", NotSquareOrder missing";
    return ok && threw;
  }});

  criteria.push_back({9, "Lagrangian count of ev(Z/3) equals the direct split-form scan",
                      [](std::string& d) {
    auto m = evaluation_form(FiniteAbelianGroup::cyclic(3));
    long long from_subgroups = 0;
    for (const auto& s : enumerate_subgroups(m.group()))
      if (is_lagrangian(s, m)) ++from_subgroups;

    // independent scan: order-3 cyclic subgroups of the split form with q = 1
    auto sp = split_form(1, 3);
    const auto& g = sp.group();
    long long generators_isotropic = 0;
    for (long long idx = 1; idx < g.order(); ++idx) {
      auto x = g.coords_of(idx);
      auto x2 = g.add(x, x);
      if (sp.form().value(x).is_one() && sp.form().value(x2).is_one()) ++generators_isotropic;
    }
    long long from_scan = generators_isotropic / 2;  // each line has two generators
    d = "subgroup enumeration: " + std::to_string(from_subgroups) +
        ", direct scan: " + std::to_string(from_scan);
    return from_subgroups == from_scan;
  }});

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.body(detail);
    } catch (const Error& e) {
      detail += std::string(" unexpected error: ") + e.what();
    } catch (const std::exception& e) {
      detail += std::string(" unexpected exception: ") + e.what();
    }
    std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", c.number, c.name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
  }
  if (failures)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures;
}
