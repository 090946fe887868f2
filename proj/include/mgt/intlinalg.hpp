#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mgt/errors.hpp"

namespace mgt {

// Dense integer matrices with checked 64-bit arithmetic.  Everything here is
// desk scale; on overflow we throw instead of growing to bignums.
using IntMat = std::vector<std::vector<long long>>;

long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);

IntMat identity_mat(std::size_t n);
IntMat transpose(const IntMat& m);
IntMat mat_mul(const IntMat& a, const IntMat& b);

struct SmithResult {
  IntMat s;        // diagonal form, same shape as input
  IntMat row_ops;  // unimodular U with U * A * V = S
  IntMat col_ops;  // unimodular V
  std::vector<long long> diagonal;  // nonnegative d1 | d2 | ..., zeros trimmed off
};

// Smith normal form over the integers with transforms.
SmithResult smith_normal_form(IntMat a);

// Invariant factors > 1 of coker(A : Z^c -> Z^r), i.e. of Z^r / colspan(A),
// together with the free rank of the cokernel.
struct CokernelShape {
  std::vector<long long> invariant_factors;  // each > 1
  std::size_t free_rank = 0;
  long long torsion_order() const {
    long long t = 1;
    for (long long f : invariant_factors) t = checked_mul(t, f);
    return t;
  }
};
CokernelShape cokernel_shape(const IntMat& a, std::size_t rows);

// Basis (as columns) of the integer kernel lattice {x : A x = 0}.
IntMat kernel_lattice(const IntMat& a);

// Basis (as columns) of {x : A x == 0 (mod n)}; full rank, contains n*Z^c.
IntMat kernel_lattice_mod(const IntMat& a, long long n);

// One integral solution of A x = b, if any.
std::optional<std::vector<long long>> solve_integer(const IntMat& a,
                                                    const std::vector<long long>& b);

// ---- arithmetic mod N -------------------------------------------------

// Row-style Howell form of a matrix over Z/N.  The rows of the result span
// the same row module; pivots are strictly to the right as you go down, each
// pivot p divides N, entries above a pivot are reduced mod p, and for every
// row the annihilator multiples are present further down.  This makes
// membership tests and canonical coset representatives straightforward.
class HowellForm {
 public:
  HowellForm(std::size_t cols, long long modulus);

  void add_row(std::vector<long long> row);
  void add_rows(const IntMat& rows);

  const IntMat& rows() const { return rows_; }
  long long modulus() const { return n_; }
  std::size_t cols() const { return cols_; }

  // Size of the spanned submodule of (Z/N)^cols.
  long long span_size() const;

  bool contains(std::vector<long long> row) const;

  // Canonical representative of row + span: reduce by every pivot.
  std::vector<long long> reduce(std::vector<long long> row) const;

 private:
  std::size_t cols_;
  long long n_;
  IntMat rows_;  // kept in Howell form
};

// Solve A x == b (mod n).  Returns the canonical solution (particular
// solution reduced by the kernel's Howell form) or nullopt.
std::optional<std::vector<long long>> solve_mod(const IntMat& a,
                                                const std::vector<long long>& b, long long n);

// Howell form of {x : A x == 0 (mod n)} as a row module: kernel description.
HowellForm kernel_mod(const IntMat& a, long long n);

// |{A x mod n : x}|, the size of the image submodule of (Z/n)^rows.
long long image_size_mod(const IntMat& a, std::size_t rows, long long n);

// |{x in (Z/n)^cols : A x == 0 mod n}|.
long long kernel_size_mod(const IntMat& a, std::size_t cols, long long n);

// Factored sizes, for counts too large for 64 bits: prime -> exponent.
std::map<long long, int> factor_ll(long long n);
std::map<long long, int> image_size_mod_factored(const IntMat& a, std::size_t rows, long long n);

// Structure of the quotient (K + nZ^c)/(L + nZ^c) for sublattices given by
// generator columns; K must contain L modulo n.  Returns invariant factors
// (> 1) and representative columns lifting quotient generators.
struct QuotientShape {
  std::vector<long long> invariant_factors;
  IntMat representatives;  // one column per invariant factor
  long long size() const {
    long long t = 1;
    for (long long f : invariant_factors) t = checked_mul(t, f);
    return t;
  }
};
QuotientShape quotient_mod(const IntMat& k_gens, const IntMat& l_gens, std::size_t dim,
                           long long n);

// Quotient of integer lattices span(k_gens)/span(l_gens) inside Z^dim; the
// quotient must be finite (equal ranks).  Returns invariant factors > 1 and
// representative columns.
QuotientShape quotient_lattice(const IntMat& k_gens, const IntMat& l_gens, std::size_t dim);

}  // namespace mgt
