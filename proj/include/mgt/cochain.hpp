#pragma once

#include <string>
#include <vector>

#include "mgt/abelian.hpp"

namespace mgt {

// Inhomogeneous bar-resolution cochain on a finite abelian group, with
// values written additively as exponents mod N (the value is zeta_N^e).
// The table covers all |G|^degree argument tuples in lexicographic index
// order; degree 0 is a single constant.
class Cochain {
 public:
  Cochain() = default;
  Cochain(FiniteAbelianGroup group, int degree, long long modulus);
  Cochain(FiniteAbelianGroup group, int degree, long long modulus,
          std::vector<long long> table);

  static Cochain zero(const FiniteAbelianGroup& g, int degree, long long modulus) {
    return Cochain(g, degree, modulus);
  }

  const FiniteAbelianGroup& group() const { return group_; }
  int degree() const { return degree_; }
  long long modulus() const { return modulus_; }
  const std::vector<long long>& table() const { return table_; }
  std::vector<long long>& table() { return table_; }

  long long at(const std::vector<long long>& element_indices) const;
  void set(const std::vector<long long>& element_indices, long long value);

  bool is_zero() const;
  bool is_normalized() const;  // vanishes whenever an argument is the identity

  // Same cochain seen in mu_{N'} for N | N' (exponents scaled by N'/N).
  Cochain embedded(long long bigger_modulus) const;

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain scaled(long long k) const;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.group_ == b.group_ && a.degree_ == b.degree_ && a.modulus_ == b.modulus_ &&
           a.table_ == b.table_;
  }

  std::string str() const;

 private:
  FiniteAbelianGroup group_;
  int degree_ = 0;
  long long modulus_ = 1;
  std::vector<long long> table_;
};

// Bar differential; degree goes up by one, d o d = 0.
Cochain differential(const Cochain& c);

bool is_cocycle(const Cochain& c);

// Normalized representative of the same class: returns (c - d sigma, sigma)
// with the first component vanishing on identity slots.
std::pair<Cochain, Cochain> normalize_cocycle(const Cochain& c);

// tuple <-> flat table index helpers
long long tuple_to_flat(const std::vector<long long>& tuple, long long base);
std::vector<long long> flat_to_tuple(long long flat, long long base, int len);

}  // namespace mgt
