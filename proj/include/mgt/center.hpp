#pragma once

#include <optional>

#include "mgt/cohomology.hpp"

namespace mgt {

// Classifying data of a pointed fusion category: a finite abelian group L
// with a normalized 3-cocycle on it.  Un-normalized input is shifted by a
// coboundary at intake and the shift is kept.
struct PointedFusionData {
  FiniteAbelianGroup l;
  Cochain tau;                  // degree 3, normalized cocycle
  Cochain normalization_shift;  // degree 2; input tau = stored tau + d(shift)

  long long modulus() const { return tau.modulus(); }
};

PointedFusionData make_pointed_fusion_data(const FiniteAbelianGroup& l, const Cochain& tau);

// T_ell(x, y) = tau(ell,x,y) + tau(x,y,ell) - tau(x,ell,y); a 2-cocycle.
Cochain twist_two_cocycle(const PointedFusionData& d, const std::vector<long long>& ell);

// The center is pointed iff every generator twist is a coboundary over the
// divisible scalars; solved over mu_{N |L|}, which is torsion enough.
bool is_center_pointed(const PointedFusionData& d);

// Independent route: with divisible coefficients a 2-cocycle class is
// trivial iff its commutator pairing c(x,y) - c(y,x) vanishes identically.
bool is_center_pointed_commutator_oracle(const PointedFusionData& d);

// Trivializations t with t_{l+l'} = t_l + t_{l'} as cochains and
// d(t_l) = T_l for every l, solved over mu_{N exponent(L)^2}.
struct CenterTrivialization {
  FiniteAbelianGroup l;
  long long modulus = 1;             // enlarged modulus
  std::vector<Cochain> gen_cochains;  // t at each generator, degree 1

  Cochain at(const std::vector<long long>& ell) const;  // t_ell
  bool verify(const PointedFusionData& d) const;
};

CenterTrivialization solve_trivialization(const PointedFusionData& d);

// Number of solutions of the trivialization system (0 when unsolvable).
long long trivialization_solution_count(const PointedFusionData& d);

// The center's classifying data: metric group on L + L^ and the abelian
// 3-cocycle (tau o proj, b) with
//   b((l1,c1),(l2,c2)) = c1(l2) * t_{l1}(l2) * t_{l2}(l1).
struct CenterClassification {
  MetricGroup metric;
  AbelianThreeCocycle cocycle_pair;
};

CenterClassification classify_center(const PointedFusionData& d,
                                     const CenterTrivialization& t);

}  // namespace mgt
