#include "mgt/center.hpp"

#include <algorithm>

#include "mgt/intlinalg.hpp"

namespace mgt {

namespace {

long long mod_reduce(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

PointedFusionData make_pointed_fusion_data(const FiniteAbelianGroup& l, const Cochain& tau) {
  if (!(tau.group() == l) || tau.degree() != 3)
    fail(ErrorKind::ShapeMismatch, "pointed fusion data needs a degree-3 cochain on L");
  if (!is_cocycle(tau)) fail(ErrorKind::InvalidCocycle, "tau is not a 3-cocycle");
  PointedFusionData out;
  out.l = l;
  if (tau.is_normalized()) {
    out.tau = tau;
    out.normalization_shift = Cochain(l, 2, tau.modulus());
  } else {
    auto [clean, shift] = normalize_cocycle(tau);
    out.tau = clean;
    out.normalization_shift = shift;
  }
  return out;
}

Cochain twist_two_cocycle(const PointedFusionData& d, const std::vector<long long>& ell) {
  const auto& g = d.l;
  long long n = g.order();
  long long li = g.index_of(ell);
  Cochain out(g, 2, d.modulus());
  auto tau = [&](long long a, long long b, long long c) {
    return d.tau.table()[static_cast<std::size_t>((a * n + b) * n + c)];
  };
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y)
      out.set({x, y}, tau(li, x, y) + tau(x, y, li) - tau(x, li, y));
  if (!is_cocycle(out))
    fail(ErrorKind::VerificationFailure, "twist of a 3-cocycle failed the 2-cocycle check");
  return out;
}

bool is_center_pointed(const PointedFusionData& d) {
  long long enlarged = checked_mul(d.modulus(), d.l.order());
  for (std::size_t i = 0; i < d.l.rank(); ++i) {
    std::vector<long long> gen(d.l.rank(), 0);
    gen[i] = 1 % d.l.orders()[i];
    Cochain t = twist_two_cocycle(d, gen).embedded(enlarged);
    if (!coboundary_preimage(t)) return false;
  }
  return true;
}

bool is_center_pointed_commutator_oracle(const PointedFusionData& d) {
  long long n = d.l.order();
  for (std::size_t i = 0; i < d.l.rank(); ++i) {
    std::vector<long long> gen(d.l.rank(), 0);
    gen[i] = 1 % d.l.orders()[i];
    Cochain t = twist_two_cocycle(d, gen);
    for (long long x = 0; x < n; ++x)
      for (long long y = 0; y < n; ++y)
        if (t.at({x, y}) != t.at({y, x})) return false;
  }
  return true;
}

Cochain CenterTrivialization::at(const std::vector<long long>& ell) const {
  Cochain out(l, 1, modulus);
  for (std::size_t i = 0; i < l.rank(); ++i) {
    long long c = mod_reduce(ell[i], l.orders()[i]);
    if (c == 0) continue;
    out = out + gen_cochains[i].scaled(c);
  }
  return out;
}

bool CenterTrivialization::verify(const PointedFusionData& d) const {
  long long n = l.order();
  // homomorphism in the subscript
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      auto x = l.coords_of(i), y = l.coords_of(j);
      if (!(at(l.add(x, y)) == at(x) + at(y))) return false;
    }
  // d(t_ell) = T_ell for every ell
  for (long long i = 0; i < n; ++i) {
    auto x = l.coords_of(i);
    Cochain target = twist_two_cocycle(d, x).embedded(modulus);
    if (!(differential(at(x)) == target)) return false;
  }
  return true;
}

namespace {

struct TrivializationSystem {
  long long n = 0;
  std::size_t k = 0;
  long long enlarged = 1;
  IntMat mat;
  std::vector<long long> rhs;

  explicit TrivializationSystem(const PointedFusionData& d) {
    const auto& g = d.l;
    n = g.order();
    k = g.rank();
    long long e = g.exponent();
    enlarged = checked_mul(d.modulus(), checked_mul(e, e));
    long long scale = enlarged / d.modulus();
    std::size_t vars = k * static_cast<std::size_t>(n);  // t_{e_i}(x)

    auto var = [&](std::size_t i, long long x) {
      return i * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
    };

    // order constraints: n_i * t_{e_i} = 0
    for (std::size_t i = 0; i < k; ++i)
      for (long long x = 0; x < n; ++x) {
        std::vector<long long> row(vars, 0);
        row[var(i, x)] = g.orders()[i];
        mat.push_back(std::move(row));
        rhs.push_back(0);
      }
    // for every ell: sum_i c_i(ell) d(t_{e_i}) = T_ell
    for (long long li = 0; li < n; ++li) {
      auto ell = g.coords_of(li);
      Cochain target = twist_two_cocycle(d, ell);
      for (long long u = 0; u < n; ++u)
        for (long long v = 0; v < n; ++v) {
          std::vector<long long> row(vars, 0);
          long long uv = g.index_of(g.add(g.coords_of(u), g.coords_of(v)));
          for (std::size_t i = 0; i < k; ++i) {
            long long c = ell[i];
            if (c == 0) continue;
            row[var(i, v)] += c;
            row[var(i, uv)] -= c;
            row[var(i, u)] += c;
          }
          mat.push_back(std::move(row));
          rhs.push_back(target.at({u, v}) * scale);
        }
    }
  }
};

}  // namespace

CenterTrivialization solve_trivialization(const PointedFusionData& d) {
  if (!is_center_pointed(d))
    fail(ErrorKind::InvalidCocycle, "center is not pointed; no trivialization exists");
  TrivializationSystem sys(d);
  auto sol = solve_mod(sys.mat, sys.rhs, sys.enlarged);
  if (!sol)
    fail(ErrorKind::NoSolution,
         "trivialization system unsolvable: no subscript-homomorphic t reaches every twist");
  CenterTrivialization out;
  out.l = d.l;
  out.modulus = sys.enlarged;
  for (std::size_t i = 0; i < sys.k; ++i) {
    std::vector<long long> table(sol->begin() + static_cast<long>(i * sys.n),
                                 sol->begin() + static_cast<long>((i + 1) * sys.n));
    out.gen_cochains.emplace_back(d.l, 1, sys.enlarged, std::move(table));
  }
  if (!out.verify(d))
    fail(ErrorKind::VerificationFailure, "trivialization solution failed re-verification");
  return out;
}

long long trivialization_solution_count(const PointedFusionData& d) {
  TrivializationSystem sys(d);
  // solutions = kernel size when feasible, otherwise zero
  if (!solve_mod(sys.mat, sys.rhs, sys.enlarged)) return 0;
  std::size_t vars = sys.mat.empty() ? 0 : sys.mat[0].size();
  return kernel_size_mod(sys.mat, vars, sys.enlarged);
}

CenterClassification classify_center(const PointedFusionData& d,
                                     const CenterTrivialization& t) {
  const auto& l = d.l;
  std::size_t r = l.rank();
  long long nl = l.order();
  FiniteAbelianGroup a = l.direct_sum(l);
  long long na = a.order();
  long long big = t.modulus;
  long long e = l.exponent();
  if (big % e != 0) big = checked_mul(big, e / std::gcd(big, e));

  // associator: tau pulled back along the projection to L
  Cochain tau_a(a, 3, big);
  {
    Cochain tau_big = d.tau.embedded(big);
    std::vector<long long> lpart(static_cast<std::size_t>(na), 0);
    for (long long idx = 0; idx < na; ++idx) {
      auto c = a.coords_of(idx);
      std::vector<long long> lc(c.begin(), c.begin() + static_cast<long>(r));
      lpart[static_cast<std::size_t>(idx)] = l.index_of(lc);
    }
    for (long long x = 0; x < na; ++x)
      for (long long y = 0; y < na; ++y)
        for (long long z = 0; z < na; ++z)
          tau_a.set({x, y, z},
                    tau_big.table()[static_cast<std::size_t>(
                        (lpart[static_cast<std::size_t>(x)] * nl +
                         lpart[static_cast<std::size_t>(y)]) *
                            nl +
                        lpart[static_cast<std::size_t>(z)])]);
  }

  // braiding: b((l1,c1),(l2,c2)) = c1(l2) + t_{l1}(l2) + t_{l2}(l1)
  auto du = dual(l);
  std::vector<long long> b(static_cast<std::size_t>(na * na), 0);
  std::vector<Cochain> t_all;
  t_all.reserve(static_cast<std::size_t>(nl));
  for (long long li = 0; li < nl; ++li) t_all.push_back(t.at(l.coords_of(li)));
  long long tscale = big / t.modulus;
  for (long long x = 0; x < na; ++x) {
    auto cx = a.coords_of(x);
    std::vector<long long> l1(cx.begin(), cx.begin() + static_cast<long>(r));
    std::vector<long long> c1(cx.begin() + static_cast<long>(r), cx.end());
    long long l1i = l.index_of(l1);
    for (long long y = 0; y < na; ++y) {
      auto cy = a.coords_of(y);
      std::vector<long long> l2(cy.begin(), cy.begin() + static_cast<long>(r));
      long long l2i = l.index_of(l2);
      long long acc = du.pair(c1, l2).embed(big);
      acc += t_all[static_cast<std::size_t>(l1i)].at({l2i}) * tscale;
      acc += t_all[static_cast<std::size_t>(l2i)].at({l1i}) * tscale;
      b[static_cast<std::size_t>(x * na + y)] = mod_reduce(acc, big);
    }
  }

  AbelianThreeCocycle pair{a, std::move(tau_a), std::move(b)};
  auto hex = is_abelian_three_cocycle(pair);
  if (!hex.ok) fail(ErrorKind::HexagonViolation, hex.witness);
  QuadraticForm q = quadratic_form_of(pair);
  CenterClassification out{MetricGroup(std::move(q)), std::move(pair)};
  return out;
}

}  // namespace mgt
