#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mgt/errors.hpp"
#include "mgt/root_of_unity.hpp"

namespace mgt {

// Finite abelian group given as an explicit product of cyclic factors
// Z/n1 x ... x Z/nk.  Presentations are not canonicalized: two isomorphic
// but differently presented groups are distinct objects, so coordinates
// stay stable.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  explicit FiniteAbelianGroup(std::vector<long long> cyclic_orders)
      : orders_(std::move(cyclic_orders)) {
    for (long long n : orders_)
      if (n < 1) fail(ErrorKind::ParseError, "cyclic order must be >= 1");
  }

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(std::vector<long long>{}); }
  static FiniteAbelianGroup cyclic(long long n) { return FiniteAbelianGroup({n}); }

  // Spec string "n1,n2,...", empty string = trivial group.
  static FiniteAbelianGroup parse(const std::string& s);

  const std::vector<long long>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }

  long long order() const {
    long long o = 1;
    for (long long n : orders_) {
      if (__builtin_mul_overflow(o, n, &o))
        fail(ErrorKind::CapExceeded, "group order overflows 64 bits");
    }
    return o;
  }

  long long exponent() const {
    long long e = 1;
    for (long long n : orders_) e = std::lcm(e, n);
    return e;
  }

  bool is_trivial() const { return order() == 1; }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }
  friend bool operator!=(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return !(a == b);
  }

  std::string str() const;

  // Elements are indexed 0..order-1 in lexicographic coordinate order;
  // index 0 is the identity.
  long long index_of(const std::vector<long long>& coords) const;
  std::vector<long long> coords_of(long long index) const;

  std::vector<long long> add(const std::vector<long long>& a,
                             const std::vector<long long>& b) const;
  std::vector<long long> neg(const std::vector<long long>& a) const;
  std::vector<long long> scalar_mul(long long k, const std::vector<long long>& a) const;
  std::vector<long long> zero() const { return std::vector<long long>(orders_.size(), 0); }

  long long element_order(const std::vector<long long>& a) const;

  // Direct sum, coordinates concatenated.
  FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& other) const;

 private:
  std::vector<long long> orders_;
};

// Element of an explicit group; carries its parent so that mixing parents is
// detected rather than silently reduced.
class Element {
 public:
  Element() = default;
  Element(FiniteAbelianGroup group, std::vector<long long> coords);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<long long>& coords() const { return coords_; }
  long long index() const { return group_.index_of(coords_); }
  bool is_zero() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend bool operator==(const Element& a, const Element& b) {
    return a.group_ == b.group_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string str() const;

 private:
  FiniteAbelianGroup group_;
  std::vector<long long> coords_;
};

std::vector<Element> enumerate(const FiniteAbelianGroup& g);

// Homomorphism between explicit groups, as a matrix of residues:
// m[j][i] is the coefficient of source generator i in target factor j.
// Well-definedness means m[j][i] * n_i == 0 (mod m_j) for all entries.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
               std::vector<std::vector<long long>> matrix);

  static Homomorphism identity(const FiniteAbelianGroup& g);
  static Homomorphism zero(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target);

  const FiniteAbelianGroup& source() const { return source_; }
  const FiniteAbelianGroup& target() const { return target_; }
  const std::vector<std::vector<long long>>& matrix() const { return m_; }

  bool well_defined() const;

  std::vector<long long> apply_coords(const std::vector<long long>& coords) const;
  Element apply(const Element& x) const;

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.m_ == b.m_;
  }
  friend bool operator!=(const Homomorphism& a, const Homomorphism& b) { return !(a == b); }
  friend bool operator<(const Homomorphism& a, const Homomorphism& b) { return a.m_ < b.m_; }

  std::string str() const;

 private:
  FiniteAbelianGroup source_, target_;
  std::vector<std::vector<long long>> m_;
};

Homomorphism compose(const Homomorphism& f, const Homomorphism& g);  // f after g
bool is_isomorphism(const Homomorphism& f, long long cap = 4096);

// Character dual.  The dual group has the same cyclic orders; the pairing is
// ev(chi, a) = zeta_E^{sum_i c_i a_i (E / n_i)} with E = exponent(A).
struct DualGroup {
  FiniteAbelianGroup group;  // the dual, same orders
  FiniteAbelianGroup base;

  // pairing(chi_coords, a_coords) as an exact scalar of order dividing E
  RootOfUnity pair(const std::vector<long long>& chi, const std::vector<long long>& a) const;
};

DualGroup dual(const FiniteAbelianGroup& a);

// All endomorphism matrices compatible with the cyclic orders, as a stream.
// Candidate count is prod_{i,j} gcd(n_i, m_j); the visitor returns false to
// stop early.  Enumeration order is fixed (mixed radix, row-major).
long long endomorphism_candidate_count(const FiniteAbelianGroup& src,
                                       const FiniteAbelianGroup& dst);
void for_each_homomorphism(const FiniteAbelianGroup& src, const FiniteAbelianGroup& dst,
                           const std::function<bool(const std::vector<std::vector<long long>>&)>& visit);

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAbelianGroup& src,
                                                  const FiniteAbelianGroup& dst,
                                                  long long scan_cap = 1LL << 24);

std::vector<Homomorphism> enumerate_automorphisms(const FiniteAbelianGroup& a,
                                                  long long order_cap = 4096,
                                                  long long scan_cap = 1LL << 24);

// All abelian groups of order 2..max_order (inclusive), each once up to
// isomorphism, presented with invariant-factor-style prime power lists.
std::vector<FiniteAbelianGroup> all_abelian_groups(long long max_order,
                                                   bool include_trivial = false);

}  // namespace mgt
