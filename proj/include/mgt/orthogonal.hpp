#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mgt/quadratic.hpp"

namespace mgt {

// O(A, q): automorphisms of A preserving q, found by scanning every
// well-defined endomorphism matrix and filtering on q o f = q, then on
// bijectivity.  No generator shortcuts; correctness over speed.
class OrthogonalGroup {
 public:
  OrthogonalGroup() = default;

  const MetricGroup& metric() const { return metric_; }
  const std::vector<Homomorphism>& elements() const { return elements_; }
  long long order() const { return static_cast<long long>(elements_.size()); }

  // q o f = q and bijectivity for every stored element.
  bool verify() const;

  bool is_subgroup_closed() const;  // closed under composition, has inverses

  friend OrthogonalGroup orthogonal_group(const MetricGroup& m, long long order_cap,
                                          long long scan_cap, int threads);
  friend OrthogonalGroup special_orthogonal_group(const OrthogonalGroup& o);

 private:
  MetricGroup metric_;
  std::vector<Homomorphism> elements_;
};

struct OrthogonalScanCaps {
  long long order_cap = 4096;
  long long scan_cap = 1LL << 36;
};

OrthogonalGroup orthogonal_group(const MetricGroup& m, long long order_cap = 4096,
                                 long long scan_cap = 1LL << 36, int threads = 0);

// Squarefree part of |(g-1)A|; 1 means the trivial square class.
long long determinant(const MetricGroup& m, const Homomorphism& g);

long long squarefree_part(long long n);

// Kernel of the determinant square-class map.
OrthogonalGroup special_orthogonal_group(const OrthogonalGroup& o);

// det value -> multiplicity over the whole group
std::map<long long, long long> determinant_spectrum(const OrthogonalGroup& o);

struct SplitCheckReport {
  long long n = 0, p = 0;
  long long brute_force_order = 0;
  long long formula_order = 0;  // 2 p^{n(n-1)} (p^n - 1) prod_{i<n} (p^{2i} - 1)
  bool equal = false;
  long long so_order = 0;
  long long so_index = 0;
};

SplitCheckReport split_orthogonal_check(long long n, long long p, long long order_cap = 4096,
                                        long long scan_cap = 1LL << 36, int threads = 0);

}  // namespace mgt
