#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgt/errors.hpp"

namespace mgt {

// Nondegenerate quadratic space over F_p, p odd, with q given on a basis and
// b(u, v) = q(u+v) - q(u) - q(v) the anticommutator pairing; b(e_i, e_i) is
// 2 q(e_i).
struct QuadraticSpace {
  long long p = 3;
  std::size_t dim = 0;
  std::vector<long long> q_diag;            // q(e_i)
  std::vector<std::vector<long long>> b;    // full symmetric matrix

  static QuadraticSpace diagonal(long long p, const std::vector<long long>& coeffs);
  // split space L + L*: q(l, phi) = phi(l); dim = 2 * half
  static QuadraticSpace split(long long p, std::size_t half);

  long long q_of(const std::vector<long long>& x) const;
  bool nondegenerate() const;

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b_) {
    return a.p == b_.p && a.dim == b_.dim && a.q_diag == b_.q_diag && a.b == b_.b;
  }
};

// Element of Cl(V, q) in the subset basis e_S = e_{i1}...e_{ik} (indices
// increasing); coefficient vector indexed by bitmask.
class CliffordElement {
 public:
  CliffordElement() = default;
  CliffordElement(QuadraticSpace space, std::vector<long long> coeffs);

  static CliffordElement scalar(const QuadraticSpace& v, long long c);
  static CliffordElement generator(const QuadraticSpace& v, std::size_t i);
  static CliffordElement vector_elt(const QuadraticSpace& v, const std::vector<long long>& x);

  const QuadraticSpace& space() const { return space_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long coeff(std::size_t mask) const { return coeffs_[mask]; }

  bool is_zero() const;
  // -1: not homogeneous; 0: even; 1: odd
  int parity() const;
  bool is_grade_one() const;
  std::vector<long long> grade_one_coords() const;

  friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  CliffordElement scaled(long long c) const;

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  QuadraticSpace space_;
  std::vector<long long> coeffs_;
};

// Reversal anti-automorphism: e_{i1}...e_{ik} -> e_{ik}...e_{i1}.
CliffordElement transpose(const CliffordElement& a);

std::optional<CliffordElement> inverse(const CliffordElement& a);

// F_p matrix as rows; used for maps on V and on spinors.
using FpMat = std::vector<std::vector<long long>>;

long long fp_det(FpMat m, long long p);
std::size_t fp_rank(FpMat m, long long p);

struct LipschitzElement {
  CliffordElement g;
  int parity = 0;
  FpMat action;  // image in O(V, q), columns are images of basis vectors
};

struct LipschitzGroup {
  QuadraticSpace space;
  std::vector<LipschitzElement> elements;

  long long order() const { return static_cast<long long>(elements.size()); }
};

struct LipschitzCaps {
  long long max_candidates = 1LL << 22;  // homogeneous coefficient vectors
  long long max_vectors = 1 << 16;       // p^dim for exhaustive q checks
};

// All homogeneous invertible g whose twisted conjugation preserves V.
LipschitzGroup lipschitz_group(const QuadraticSpace& v, LipschitzCaps caps = {});

// O(V, q) by brute force over matrices, for the first-isomorphism cross-check.
std::vector<FpMat> orthogonal_matrices(const QuadraticSpace& v, long long scan_cap = 1LL << 26);

long long spinor_norm(const LipschitzElement& g);  // g g^T, must be a scalar

bool is_square_mod(long long a, long long p);

// Everything the desk-scale checks need about Gamma, Pin, Spin.
struct SpinReport {
  QuadraticSpace space;
  long long gamma_order = 0;
  long long o_order = 0;          // brute-forced independently
  bool surjective = false;        // Gamma -> O hits every orthogonal matrix
  bool kernel_is_scalars = false;
  long long pin_order = 0;
  long long spin_order = 0;
  long long so_order = 0;          // det = 1 matrices in O
  long long ker_no_order = 0;      // kernel of the square-class norm on O
  bool pin_covers_ker_no = false;  // image of Pin is exactly ker(N_O)
  bool pin_kernel_pm_one = false;  // Pin -> ker(N_O) has kernel {+-1}
  bool norm_diagram_commutes = false;  // N_O(pi(g)) = class of N(g)
  bool reflections_ok = false;     // v in Gamma maps to the reflection about v
  bool reflection_norms_match = false;  // N(r_v) lies in the class of q(v)
  bool cartan_dieudonne_ok = false;     // reflections generate O
};

SpinReport spin_analysis(const QuadraticSpace& v, LipschitzCaps caps = {});

// Spinor module of the split space: exterior algebra on the dual half, with
// the L part acting by contraction and the L* part by wedging.  Verifies
// v . v . w = q(v) w and that Cl -> End is bijective.
struct SpinorModuleReport {
  long long p = 0;
  std::size_t half = 0;
  long long cl_dim = 0;       // 2^{2 half}
  long long end_dim = 0;      // (2^half)^2
  bool relations_ok = false;
  bool bijective = false;
};

SpinorModuleReport spinor_module(long long p, std::size_t half);

}  // namespace mgt
