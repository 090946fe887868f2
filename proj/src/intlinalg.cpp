#include "mgt/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace mgt {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorKind::CapExceeded, "integer overflow in linear algebra");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorKind::CapExceeded, "integer overflow in linear algebra");
  return r;
}

namespace {

long long mod_reduce(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

// g = gcd(a,b) with x a + y b = g
long long xgcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = (a < 0 ? -1 : 1);
    y = 0;
    return std::abs(a);
  }
  long long x1, y1;
  long long g = xgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long mod_inverse(long long a, long long n) {
  long long x, y;
  long long g = xgcd(mod_reduce(a, n), n, x, y);
  if (g != 1) fail(ErrorKind::NoSolution, "element not invertible mod n");
  return mod_reduce(x, n);
}

}  // namespace

IntMat identity_mat(std::size_t n) {
  IntMat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& m) {
  std::size_t r = m.size(), c = r ? m[0].size() : 0;
  IntMat t(c, std::vector<long long>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j][i] = m[i][j];
  return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  IntMat out(r, std::vector<long long>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < c; ++j)
        out[i][j] = checked_add(out[i][j], checked_mul(a[i][t], b[t][j]));
    }
  return out;
}

SmithResult smith_normal_form(IntMat a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  IntMat u = identity_mat(rows), v = identity_mat(cols);

  auto row_addmul = [&](std::size_t i, std::size_t j, long long c) {
    if (c == 0) return;
    for (std::size_t t = 0; t < cols; ++t)
      a[i][t] = checked_add(a[i][t], checked_mul(c, a[j][t]));
    for (std::size_t t = 0; t < rows; ++t)
      u[i][t] = checked_add(u[i][t], checked_mul(c, u[j][t]));
  };
  auto col_addmul = [&](std::size_t i, std::size_t j, long long c) {
    if (c == 0) return;
    for (std::size_t t = 0; t < rows; ++t)
      a[t][i] = checked_add(a[t][i], checked_mul(c, a[t][j]));
    for (std::size_t t = 0; t < cols; ++t)
      v[t][i] = checked_add(v[t][i], checked_mul(c, v[t][j]));
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < rows; ++t) std::swap(a[t][i], a[t][j]);
    for (std::size_t t = 0; t < cols; ++t) std::swap(v[t][i], v[t][j]);
  };
  auto row_negate = [&](std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  };

  long long n = static_cast<long long>(std::min(rows, cols));
  for (long long step = 0; step < n; ++step) {
    std::size_t s = static_cast<std::size_t>(step);
    // find minimal nonzero |entry| in the trailing block
    std::size_t pi = s, pj = s;
    long long best = 0;
    for (std::size_t i = s; i < rows; ++i)
      for (std::size_t j = s; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
          best = std::abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    row_swap(s, pi);
    col_swap(s, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = s + 1; i < rows; ++i)
        if (a[i][s] != 0) {
          long long q = a[i][s] / a[s][s];
          row_addmul(i, s, -q);
          if (a[i][s] != 0) {  // remainder smaller than pivot: swap up and redo
            row_swap(s, i);
            clean = false;
          }
        }
      for (std::size_t j = s + 1; j < cols; ++j)
        if (a[s][j] != 0) {
          long long q = a[s][j] / a[s][s];
          col_addmul(j, s, -q);
          if (a[s][j] != 0) {
            col_swap(s, j);
            clean = false;
          }
        }
    }
    if (a[s][s] < 0) row_negate(s);

    // divisibility sweep: pivot must divide the rest of the block
    for (std::size_t i = s + 1; i < rows; ++i) {
      bool bad = false;
      for (std::size_t j = s + 1; j < cols && !bad; ++j)
        if (a[i][j] % a[s][s] != 0) bad = true;
      if (bad) {
        row_addmul(s, i, 1);
        --step;  // redo this pivot
        break;
      }
    }
  }

  SmithResult res;
  res.diagonal.clear();
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    if (a[i][i] != 0) res.diagonal.push_back(a[i][i]);
  }
  res.s = std::move(a);
  res.row_ops = std::move(u);
  res.col_ops = std::move(v);
  return res;
}

CokernelShape cokernel_shape(const IntMat& a, std::size_t rows) {
  CokernelShape out;
  if (a.empty() || a[0].empty()) {
    out.free_rank = rows;
    return out;
  }
  SmithResult snf = smith_normal_form(a);
  for (long long d : snf.diagonal)
    if (d > 1) out.invariant_factors.push_back(d);
  out.free_rank = rows - snf.diagonal.size();
  return out;
}

IntMat kernel_lattice(const IntMat& a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  if (cols == 0) return IntMat{};
  if (rows == 0) return identity_mat(cols);
  SmithResult snf = smith_normal_form(a);
  std::size_t r = snf.diagonal.size();
  IntMat basis(cols, std::vector<long long>(cols - r, 0));
  for (std::size_t j = r; j < cols; ++j)
    for (std::size_t i = 0; i < cols; ++i) basis[i][j - r] = snf.col_ops[i][j];
  return basis;
}

IntMat kernel_lattice_mod(const IntMat& a, long long n) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  if (cols == 0) return IntMat{};
  if (rows == 0) return identity_mat(cols);
  SmithResult snf = smith_normal_form(a);
  std::size_t nd = snf.diagonal.size();
  // columns of V scaled by n/gcd(d_i, n); free columns unscaled
  IntMat basis(cols, std::vector<long long>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    long long scale = 1;
    if (j < nd) scale = n / std::gcd(snf.diagonal[j], n);
    for (std::size_t i = 0; i < cols; ++i)
      basis[i][j] = checked_mul(snf.col_ops[i][j], scale);
  }
  return basis;
}

std::optional<std::vector<long long>> solve_integer(const IntMat& a,
                                                    const std::vector<long long>& b) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  if (rows != b.size()) fail(ErrorKind::ShapeMismatch, "solve_integer shape mismatch");
  if (rows == 0) return std::vector<long long>(cols, 0);
  SmithResult snf = smith_normal_form(a);
  std::vector<long long> ub(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j)
      ub[i] = checked_add(ub[i], checked_mul(snf.row_ops[i][j], b[j]));
  std::size_t nd = snf.diagonal.size();
  std::vector<long long> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < nd) {
      if (ub[i] % snf.diagonal[i] != 0) return std::nullopt;
      y[i] = ub[i] / snf.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<long long> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      x[i] = checked_add(x[i], checked_mul(snf.col_ops[i][j], y[j]));
  return x;
}

// ---- Howell form -------------------------------------------------------

HowellForm::HowellForm(std::size_t cols, long long modulus) : cols_(cols), n_(modulus) {
  if (modulus <= 0) fail(ErrorKind::ParseError, "modulus must be positive");
}

void HowellForm::add_row(std::vector<long long> row) {
  if (row.size() != cols_) fail(ErrorKind::ShapeMismatch, "HowellForm row width mismatch");
  std::vector<std::vector<long long>> queue;
  queue.push_back(std::move(row));

  auto pivot_col = [&](const std::vector<long long>& r) {
    std::size_t c = 0;
    while (c < cols_ && r[c] == 0) ++c;
    return c;
  };
  // Multiply a row by the unit that turns its pivot into gcd(pivot, n);
  // afterwards the pivot divides n.
  auto normalize = [&](std::vector<long long>& r, std::size_t col) {
    long long pval = r[col];
    long long g = std::gcd(pval, n_);
    if (pval == g) return;
    long long w = mod_reduce(pval / g, n_ / g);
    long long u = mod_inverse(w, n_ / g);
    while (std::gcd(u, n_) != 1) u += n_ / g;
    for (auto& t : r) t = mod_reduce(t % n_ * (u % n_) % n_, n_);
  };
  auto queue_shadow = [&](const std::vector<long long>& r, std::size_t col) {
    long long mult = n_ / std::gcd(r[col], n_);
    if (mult == 1 || mult == n_) return;  // free pivot or unit pivot
    std::vector<long long> shadow(cols_);
    for (std::size_t t = 0; t < cols_; ++t) shadow[t] = mod_reduce(r[t] % n_ * mult % n_, n_);
    queue.push_back(std::move(shadow));
  };

  while (!queue.empty()) {
    std::vector<long long> r = std::move(queue.back());
    queue.pop_back();
    for (auto& x : r) x = mod_reduce(x, n_);

    std::size_t col = pivot_col(r);
    std::size_t at = 0;
    while (col < cols_) {
      while (at < rows_.size() && pivot_col(rows_[at]) < col) ++at;
      if (at < rows_.size() && pivot_col(rows_[at]) == col) {
        long long a = rows_[at][col], b = r[col];
        if (b % a == 0) {
          long long t = mod_reduce(b / a, n_);
          for (std::size_t c = col; c < cols_; ++c)
            r[c] = mod_reduce(r[c] - t % n_ * (rows_[at][c] % n_) % n_, n_);
        } else {
          // pivot strictly shrinks to gcd(a, b); re-derive its shadow
          long long x, y;
          long long g = xgcd(a, b, x, y);
          std::vector<long long> newpiv(cols_), newr(cols_);
          long long am = a / g, bm = b / g;
          for (std::size_t t = 0; t < cols_; ++t) {
            newpiv[t] =
                mod_reduce(x % n_ * (rows_[at][t] % n_) % n_ + y % n_ * (r[t] % n_) % n_, n_);
            newr[t] =
                mod_reduce(am % n_ * (r[t] % n_) % n_ - bm % n_ * (rows_[at][t] % n_) % n_, n_);
          }
          normalize(newpiv, col);
          rows_[at] = std::move(newpiv);
          queue_shadow(rows_[at], col);
          r = std::move(newr);
        }
        col = pivot_col(r);
      } else {
        normalize(r, col);
        rows_.insert(rows_.begin() + static_cast<long>(at), r);
        queue_shadow(rows_[at], col);
        break;
      }
    }
  }
}

void HowellForm::add_rows(const IntMat& rows) {
  for (const auto& r : rows) add_row(r);
}

long long HowellForm::span_size() const {
  long long size = 1;
  for (const auto& row : rows_) {
    std::size_t pcol = 0;
    while (pcol < cols_ && row[pcol] == 0) ++pcol;
    if (pcol == cols_) continue;
    size = checked_mul(size, n_ / std::gcd(row[pcol], n_));
  }
  return size;
}

bool HowellForm::contains(std::vector<long long> row) const {
  for (auto& x : row) x = mod_reduce(x, n_);
  for (const auto& prow : rows_) {
    std::size_t pcol = 0;
    while (pcol < cols_ && prow[pcol] == 0) ++pcol;
    if (pcol == cols_) continue;
    if (row[pcol] == 0) continue;
    long long p = prow[pcol];
    long long g = std::gcd(p, n_);
    if (row[pcol] % g != 0) return false;
    long long t = mod_reduce(row[pcol] / g * mod_inverse(p / g, n_ / g), n_);
    for (std::size_t c = 0; c < cols_; ++c)
      row[c] = mod_reduce(row[c] - t % n_ * (prow[c] % n_) % n_, n_);
  }
  return std::all_of(row.begin(), row.end(), [](long long x) { return x == 0; });
}

std::vector<long long> HowellForm::reduce(std::vector<long long> row) const {
  for (auto& x : row) x = mod_reduce(x, n_);
  for (const auto& prow : rows_) {
    std::size_t pcol = 0;
    while (pcol < cols_ && prow[pcol] == 0) ++pcol;
    if (pcol == cols_) continue;
    long long p = prow[pcol];
    long long g = std::gcd(p, n_);
    long long rem = mod_reduce(row[pcol], g);
    long long diff = row[pcol] - rem;  // divisible by g
    long long t = mod_reduce(diff / g * mod_inverse(p / g, n_ / g), n_);
    if (t == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      row[c] = mod_reduce(row[c] - t % n_ * (prow[c] % n_) % n_, n_);
  }
  return row;
}

namespace {

// Howell form of the rows [column_j(A) | e_j] over Z/n.  Rows whose leading
// block is zero have tails spanning ker(x -> A x); reducing [b | 0] gives
// feasibility and a witness for A x = b.
HowellForm augmented_howell(const IntMat& a, long long n) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  HowellForm h(rows + cols, n);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<long long> row(rows + cols, 0);
    for (std::size_t i = 0; i < rows; ++i) row[i] = mod_reduce(a[i][j], n);
    row[rows + j] = 1;
    h.add_row(std::move(row));
  }
  return h;
}

}  // namespace

HowellForm kernel_mod(const IntMat& a, long long n) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  HowellForm aug = augmented_howell(a, n);
  HowellForm h(cols, n);
  for (const auto& row : aug.rows()) {
    bool head_zero = true;
    for (std::size_t i = 0; i < rows && head_zero; ++i)
      if (row[i] != 0) head_zero = false;
    if (!head_zero) continue;
    h.add_row(std::vector<long long>(row.begin() + static_cast<long>(rows), row.end()));
  }
  return h;
}

long long image_size_mod(const IntMat& a, std::size_t rows, long long n) {
  HowellForm h(rows, n);
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<long long> row(rows);
    for (std::size_t i = 0; i < rows; ++i) row[i] = mod_reduce(a[i][j], n);
    h.add_row(std::move(row));
  }
  return h.span_size();
}

long long kernel_size_mod(const IntMat& a, std::size_t cols, long long n) {
  long long img = image_size_mod(a, a.size(), n);
  long long total = 1;
  for (std::size_t i = 0; i < cols; ++i) total = checked_mul(total, n);
  return total / img;
}

std::map<long long, int> factor_ll(long long n) {
  std::map<long long, int> out;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

std::map<long long, int> image_size_mod_factored(const IntMat& a, std::size_t rows, long long n) {
  HowellForm h(rows, n);
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<long long> row(rows);
    for (std::size_t i = 0; i < rows; ++i) row[i] = mod_reduce(a[i][j], n);
    h.add_row(std::move(row));
  }
  std::map<long long, int> out;
  for (const auto& row : h.rows()) {
    std::size_t pcol = 0;
    while (pcol < rows && row[pcol] == 0) ++pcol;
    if (pcol == rows) continue;
    for (auto [p, e] : factor_ll(n / std::gcd(row[pcol], n))) out[p] += e;
  }
  return out;
}

std::optional<std::vector<long long>> solve_mod(const IntMat& a,
                                                const std::vector<long long>& b, long long n) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  if (rows == 0) return std::vector<long long>(cols, 0);
  if (b.size() != rows) fail(ErrorKind::ShapeMismatch, "solve_mod shape mismatch");
  HowellForm aug = augmented_howell(a, n);
  std::vector<long long> probe(rows + cols, 0);
  for (std::size_t i = 0; i < rows; ++i) probe[i] = mod_reduce(b[i], n);
  auto reduced = aug.reduce(std::move(probe));
  for (std::size_t i = 0; i < rows; ++i)
    if (reduced[i] != 0) return std::nullopt;
  // b - (combination) = 0, so the tail holds -x
  std::vector<long long> x(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    long long v = reduced[rows + j] % n;
    x[j] = v == 0 ? 0 : n - v;
  }
  HowellForm ker = kernel_mod(a, n);
  return ker.reduce(std::move(x));
}

QuotientShape quotient_lattice(const IntMat& k_gens, const IntMat& l_gens, std::size_t dim) {
  QuotientShape out;
  if (k_gens.empty() || k_gens[0].empty()) return out;  // zero lattice quotient
  SmithResult snf = smith_normal_form(k_gens);
  std::size_t rank = snf.diagonal.size();
  // basis of span(k_gens): columns U^{-1} * diag(d)
  IntMat basis(dim, std::vector<long long>(rank, 0));
  for (std::size_t j = 0; j < rank; ++j) {
    std::vector<long long> e(dim, 0);
    e[j] = 1;
    auto z = solve_integer(snf.row_ops, e);
    if (!z) fail(ErrorKind::NoSolution, "quotient_lattice: transform not invertible");
    for (std::size_t i = 0; i < dim; ++i)
      basis[i][j] = checked_mul((*z)[i], snf.diagonal[j]);
  }

  IntMat rel(rank, std::vector<long long>(0));
  if (!l_gens.empty()) {
    std::size_t s = l_gens[0].size();
    for (std::size_t j = 0; j < s; ++j) {
      std::vector<long long> vec(dim);
      for (std::size_t i = 0; i < dim; ++i) vec[i] = l_gens[i][j];
      auto w = solve_integer(basis, vec);
      if (!w) fail(ErrorKind::NoSolution, "quotient_lattice: L not contained in K");
      for (std::size_t i = 0; i < rank; ++i) rel[i].push_back((*w)[i]);
    }
  }
  SmithResult rsnf = smith_normal_form(rel);
  if (rsnf.diagonal.size() != rank)
    fail(ErrorKind::NoSolution, "quotient_lattice: quotient not finite");
  for (std::size_t i = 0; i < rank; ++i) {
    if (rsnf.diagonal[i] <= 1) continue;
    out.invariant_factors.push_back(rsnf.diagonal[i]);
    std::vector<long long> e(rank, 0);
    e[i] = 1;
    auto z = solve_integer(rsnf.row_ops, e);
    if (!z) fail(ErrorKind::NoSolution, "quotient_lattice: transform not invertible");
    std::vector<long long> rep(dim, 0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t t = 0; t < rank; ++t)
        rep[r] = checked_add(rep[r], checked_mul(basis[r][t], (*z)[t]));
    out.representatives.push_back(std::move(rep));
  }
  if (!out.representatives.empty()) {
    IntMat cols(dim, std::vector<long long>(out.representatives.size(), 0));
    for (std::size_t j = 0; j < out.representatives.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) cols[i][j] = out.representatives[j][i];
    out.representatives = std::move(cols);
  } else {
    out.representatives = IntMat(dim, std::vector<long long>(0));
  }
  return out;
}

QuotientShape quotient_mod(const IntMat& k_gens, const IntMat& l_gens, std::size_t dim,
                           long long n) {
  // lattice K = span(k_gens) + n Z^dim, as a square basis
  IntMat kcols(dim, std::vector<long long>(0));
  auto append_cols = [&](const IntMat& m) {
    if (m.empty()) return;
    std::size_t c = m[0].size();
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < dim; ++i) kcols[i].push_back(m[i][j]);
  };
  append_cols(k_gens);
  IntMat nid(dim, std::vector<long long>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) nid[i][i] = n;
  append_cols(nid);

  SmithResult snf = smith_normal_form(kcols);
  if (snf.diagonal.size() != dim)
    fail(ErrorKind::NoSolution, "quotient_mod: K lattice not full rank");
  // basis B = U^{-1} * diag(d): column j is d_j * (U^{-1} e_j).
  // Solve U z = e_j instead of inverting U explicitly.
  IntMat basis(dim, std::vector<long long>(dim, 0));
  IntMat uinv(dim, std::vector<long long>(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<long long> e(dim, 0);
    e[j] = 1;
    auto z = solve_integer(snf.row_ops, e);
    if (!z) fail(ErrorKind::NoSolution, "quotient_mod: transform not invertible");
    for (std::size_t i = 0; i < dim; ++i) {
      uinv[i][j] = (*z)[i];
      basis[i][j] = checked_mul((*z)[i], snf.diagonal[j]);
    }
  }

  // relation matrix: express generators of L + nZ^dim in the K basis
  IntMat rel(dim, std::vector<long long>(0));
  auto add_relation = [&](const std::vector<long long>& vec) {
    auto w = solve_integer(basis, vec);
    if (!w) fail(ErrorKind::NoSolution, "quotient_mod: L not contained in K");
    for (std::size_t i = 0; i < dim; ++i) rel[i].push_back((*w)[i]);
  };
  if (!l_gens.empty()) {
    std::size_t c = l_gens[0].size();
    for (std::size_t j = 0; j < c; ++j) {
      std::vector<long long> vec(dim);
      for (std::size_t i = 0; i < dim; ++i) vec[i] = l_gens[i][j];
      add_relation(vec);
    }
  }
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<long long> vec(dim, 0);
    vec[j] = n;
    add_relation(vec);
  }

  SmithResult rsnf = smith_normal_form(rel);
  if (rsnf.diagonal.size() != dim)
    fail(ErrorKind::NoSolution, "quotient_mod: quotient not finite");
  QuotientShape out;
  // class representatives: basis * Urel^{-1} e_i for invariant factors > 1
  for (std::size_t i = 0; i < dim; ++i) {
    if (rsnf.diagonal[i] <= 1) continue;
    out.invariant_factors.push_back(rsnf.diagonal[i]);
    std::vector<long long> e(dim, 0);
    e[i] = 1;
    auto z = solve_integer(rsnf.row_ops, e);
    if (!z) fail(ErrorKind::NoSolution, "quotient_mod: transform not invertible");
    std::vector<long long> rep(dim, 0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t t = 0; t < dim; ++t)
        rep[r] = checked_add(rep[r], checked_mul(basis[r][t], (*z)[t]));
    for (auto& x : rep) x = mod_reduce(x, n);
    out.representatives.push_back(std::move(rep));
  }
  // representatives as columns
  if (!out.representatives.empty()) {
    IntMat cols(dim, std::vector<long long>(out.representatives.size(), 0));
    for (std::size_t j = 0; j < out.representatives.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) cols[i][j] = out.representatives[j][i];
    out.representatives = std::move(cols);
  } else {
    out.representatives = IntMat(dim, std::vector<long long>(0));
  }
  return out;
}

}  // namespace mgt
