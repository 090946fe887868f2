#pragma once

#include <optional>
#include <vector>

#include "mgt/quadratic.hpp"

namespace mgt {

// Subgroup of an explicit finite abelian group: the sorted list of element
// indices, plus a minimal-cardinality generating list.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(FiniteAbelianGroup parent, std::vector<long long> element_indices);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<long long>& element_indices() const { return elements_; }
  const std::vector<std::vector<long long>>& generators() const { return generators_; }
  long long order() const { return static_cast<long long>(elements_.size()); }

  bool contains_index(long long idx) const;

  // Cyclic decomposition of the subgroup: basis elements (coords in the
  // parent) whose orders are the invariant-style factors; the subgroup is
  // their internal direct sum.
  struct Basis {
    std::vector<std::vector<long long>> elements;  // coords in parent
    std::vector<long long> orders;
  };
  Basis basis() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elements_.size() != b.elements_.size()) return a.elements_.size() < b.elements_.size();
    return a.elements_ < b.elements_;
  }

 private:
  FiniteAbelianGroup parent_;
  std::vector<long long> elements_;  // sorted indices, closed, contains 0
  std::vector<std::vector<long long>> generators_;
};

// All subgroups, each exactly once, sorted by (order, element set).
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& a, long long order_cap = 256);

bool is_isotropic(const Subgroup& l, const QuadraticForm& q);
bool is_lagrangian(const Subgroup& l, const MetricGroup& m);

// A Lagrangian realized by an isomorphism L + L^ -> A that carries the
// evaluation form to q and maps the L summand onto the subgroup.
struct Polarization {
  MetricGroup metric;
  Subgroup lagrangian;
  FiniteAbelianGroup l_abstract;  // cyclic shape of the Lagrangian
  Homomorphism iso;               // L + L^ -> A

  bool verify() const;  // pullback of q along iso equals the evaluation form
};

std::vector<Polarization> find_polarizations(const MetricGroup& m, long long order_cap = 256);

// First isometry of metric groups found by generator-image backtracking, if
// any: an isomorphism f with q2(f(x)) = q1(x).
std::optional<Homomorphism> find_isometry(const MetricGroup& from, const MetricGroup& to);

}  // namespace mgt
