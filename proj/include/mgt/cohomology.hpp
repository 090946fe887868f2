#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgt/cochain.hpp"
#include "mgt/quadratic.hpp"

namespace mgt {

struct CoefficientSpec {
  bool full_scalars = false;  // divisible coefficients, computed integrally
  long long modulus = 1;      // mu_N when full_scalars is false

  static CoefficientSpec mu(long long n) { return {false, n}; }
  static CoefficientSpec scalars() { return {true, 0}; }
};

struct CohomologyGroup {
  int degree = 0;
  CoefficientSpec coefficients;
  std::vector<long long> invariant_factors;  // each > 1, divisibility chain
  std::vector<Cochain> representatives;      // cocycles, pairwise non-cohomologous

  long long order() const {
    long long t = 1;
    for (long long f : invariant_factors) t *= f;
    return t;
  }
  std::string factors_str() const;
};

struct CohomologyCaps {
  long long max_full_table = 1 << 21;   // |G|^{degree+1} bound
  long long max_normalized_dim = 4096;  // (|G|-1)^{degree} bound
};

// H^degree(G, coefficients).  mu_N mode reduces the integer bar complex mod
// N; full-scalars mode computes H^{degree+1}(G, Z), which is isomorphic for
// finite G since the scalars are divisible, and converts representatives
// back to finite-modulus cochains in the requested degree.
CohomologyGroup cohomology(const FiniteAbelianGroup& g, int degree, CoefficientSpec coeff,
                           CohomologyCaps caps = {});

// Order of the stabilized image of H^degree(G, mu_N) in the colimit over
// enlarging coefficients; equals the full-scalars order once N is divisible
// enough.  Used as the independent route for cross-checks.
long long stable_scalar_cohomology_order(const FiniteAbelianGroup& g, int degree,
                                         long long base_modulus, CohomologyCaps caps = {});

// Solve d(t) = z in the given modulus; canonical solution or nullopt.
std::optional<Cochain> coboundary_preimage(const Cochain& z);

// ---- abelian (braided) three-cocycles ----------------------------------

// Pair (tau, b): tau an ordinary 3-cocycle, b a function A^2 -> mu_N tying
// the braiding to the associator through the two hexagon families.
struct AbelianThreeCocycle {
  FiniteAbelianGroup group;
  Cochain tau;                  // degree 3
  std::vector<long long> b;     // |A|^2 exponents mod modulus()
  long long modulus() const { return tau.modulus(); }

  long long b_at(long long i, long long j) const {
    return b[static_cast<std::size_t>(i * group.order() + j)];
  }
};

struct HexagonReport {
  bool ok = false;
  std::string witness;  // empty when ok
};

// d(tau) = 0 plus both hexagon families, checked on every triple:
//   T_x(y,z) =  b(x,z) - b(x,y+z) + b(x,y)
//   T_z(x,y) = -b(x,z) + b(x+y,z) - b(y,z)
// with T_x(y,z) = tau(x,y,z) + tau(y,z,x) - tau(y,x,z).
HexagonReport is_abelian_three_cocycle(const AbelianThreeCocycle& x);

// q(a) = zeta_N^{b(a,a)}; throws InvalidCocycle if the axioms fail.
QuadraticForm quadratic_form_of(const AbelianThreeCocycle& x);

// ---- Eilenberg-MacLane correspondence ----------------------------------

struct EmReport {
  FiniteAbelianGroup group;
  long long modulus = 0;         // 2 * exponent^2
  long long cocycle_count = 0;   // |Z^3_ab|
  long long coboundary_count = 0;
  long long class_count = 0;
  long long form_count = 0;
  bool surjective = false;  // every quadratic form is hit by some class
  bool bijective = false;   // class_count == form_count and surjective
};

// Enumerates abelian 3-cocycles modulo abelian coboundaries by linear
// algebra over Z/N and verifies the diagonal map onto quadratic forms.
EmReport em_correspondence(const FiniteAbelianGroup& a, long long order_cap = 4);

// A representative abelian 3-cocycle with prescribed diagonal form, if any.
std::optional<AbelianThreeCocycle> abelian_cocycle_for_form(const QuadraticForm& q,
                                                            long long modulus);

// ---- ambient groups for the degree-3/degree-4 obstructions --------------

struct TorsorReport {
  long long l = 0;                 // sqrt |A|
  long long coefficient_modulus = 0;  // l^4
  std::vector<long long> h4_factors;  // H^4(G_sub, mu_{l^4})
  std::vector<long long> h3_factors;  // H^3(G_sub, scalars)
  long long torsor_size = 1;          // |H^3|
};

TorsorReport coefficient_torsor_report(const MetricGroup& m, const FiniteAbelianGroup& g_sub,
                                       CohomologyCaps caps = {});

}  // namespace mgt
