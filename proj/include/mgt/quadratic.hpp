#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgt/abelian.hpp"
#include "mgt/root_of_unity.hpp"

namespace mgt {

// Symmetric bicharacter A x A -> mu, stored by its Gram data on generators:
// diagonal values <e_i, e_i> and cross values <e_i, e_j> for i < j.  Values
// on arbitrary pairs are products of these.
class Bicharacter {
 public:
  Bicharacter() = default;
  Bicharacter(FiniteAbelianGroup group, std::vector<RootOfUnity> diag,
              std::vector<std::vector<RootOfUnity>> cross);

  const FiniteAbelianGroup& group() const { return group_; }

  RootOfUnity pair(const std::vector<long long>& a, const std::vector<long long>& b) const;
  RootOfUnity pair(const Element& a, const Element& b) const;

  // gram entry <e_i, e_j>
  RootOfUnity gram(std::size_t i, std::size_t j) const;

  bool is_nondegenerate() const;

  friend bool operator==(const Bicharacter& x, const Bicharacter& y) {
    return x.group_ == y.group_ && x.diag_ == y.diag_ && x.cross_ == y.cross_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<RootOfUnity> diag_;
  std::vector<std::vector<RootOfUnity>> cross_;  // cross_[i][j] for i < j
};

// Quadratic form q: A -> mu with q(a) = q(-a) and biadditive symmetric
// polarization q(a+b)/(q(a)q(b)).  Stored as a full value table in element
// index order; the constructor validates the axioms exactly and reports a
// witness on failure.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(FiniteAbelianGroup group, std::vector<RootOfUnity> table);

  // Build from values on generators: v[i] = q(e_i), diagonal self-pairings
  // derived, cross[i][j] = <e_i, e_j> for i < j.  For odd factors v is
  // derived from the chosen self-pairing instead; see enumerate.
  static QuadraticForm from_generator_data(const FiniteAbelianGroup& group,
                                           const std::vector<RootOfUnity>& gen_values,
                                           const std::vector<RootOfUnity>& self_pairings,
                                           const std::vector<std::vector<RootOfUnity>>& cross);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<RootOfUnity>& table() const { return table_; }

  RootOfUnity value(const std::vector<long long>& coords) const;
  RootOfUnity value(const Element& a) const;

  Bicharacter polarize() const;
  bool is_nondegenerate() const;
  bool is_trivial() const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.group_ == b.group_ && a.table_ == b.table_;
  }
  friend bool operator!=(const QuadraticForm& a, const QuadraticForm& b) { return !(a == b); }

 private:
  void validate() const;

  FiniteAbelianGroup group_;
  std::vector<RootOfUnity> table_;
};

// A metric group is a pair (A, q) with q nondegenerate.
class MetricGroup {
 public:
  MetricGroup() = default;
  explicit MetricGroup(QuadraticForm q);

  const QuadraticForm& form() const { return q_; }
  const FiniteAbelianGroup& group() const { return q_.group(); }

  friend bool operator==(const MetricGroup& a, const MetricGroup& b) { return a.q_ == b.q_; }

 private:
  QuadraticForm q_;
};

// Trivial form on a group (q == 1); degenerate unless the group is trivial.
QuadraticForm trivial_form(const FiniteAbelianGroup& a);

// Evaluation form on L + L^: q(l, chi) = chi(l).  Always nondegenerate.
MetricGroup evaluation_form(const FiniteAbelianGroup& l);

// Hyperbolic/evaluation form of signature (n, n) over F_p, p an odd prime:
// the evaluation form of (Z/p)^n.
MetricGroup split_form(long long n, long long p);

// All quadratic forms on A, deterministic order.  Forms are parametrized by
// generator values and cross pairings; each candidate is validated.
std::vector<QuadraticForm> enumerate_quadratic_forms(const FiniteAbelianGroup& a,
                                                     bool nondegenerate_only = false,
                                                     long long order_cap = 4096);

}  // namespace mgt
