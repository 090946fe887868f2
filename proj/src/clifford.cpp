#include "mgt/clifford.hpp"

#include <algorithm>
#include <numeric>

namespace mgt {

namespace {

long long mod_p(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

long long inv_mod_p(long long a, long long p) {
  long long r = 1, base = mod_p(a, p), e = p - 2;  // p prime
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

int popcount_ll(std::size_t m) { return __builtin_popcountll(m); }

std::vector<long long> flatten(const FpMat& m) {
  std::vector<long long> out;
  out.reserve(m.size() * m.size());
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

QuadraticSpace QuadraticSpace::diagonal(long long p, const std::vector<long long>& coeffs) {
  if (p == 2) fail(ErrorKind::EvenPrime, "quadratic space needs an odd prime");
  if (p < 2) fail(ErrorKind::ParseError, "quadratic space needs an odd prime");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(ErrorKind::ParseError, std::to_string(p) + " is not prime");
  QuadraticSpace v;
  v.p = p;
  v.dim = coeffs.size();
  v.q_diag.resize(v.dim);
  v.b.assign(v.dim, std::vector<long long>(v.dim, 0));
  for (std::size_t i = 0; i < v.dim; ++i) {
    v.q_diag[i] = mod_p(coeffs[i], p);
    v.b[i][i] = mod_p(2 * v.q_diag[i], p);
  }
  return v;
}

QuadraticSpace QuadraticSpace::split(long long p, std::size_t half) {
  QuadraticSpace v = diagonal(p, std::vector<long long>(2 * half, 0));
  for (std::size_t i = 0; i < half; ++i) {
    v.b[i][half + i] = 1;
    v.b[half + i][i] = 1;
  }
  return v;
}

long long QuadraticSpace::q_of(const std::vector<long long>& x) const {
  long long acc = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    acc += x[i] % p * (x[i] % p) % p * q_diag[i];
    for (std::size_t j = i + 1; j < dim; ++j) acc += x[i] % p * (x[j] % p) % p * b[i][j];
  }
  return mod_p(acc, p);
}

bool QuadraticSpace::nondegenerate() const { return fp_det(b, p) != 0; }

CliffordElement::CliffordElement(QuadraticSpace space, std::vector<long long> coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (std::size_t{1} << space_.dim))
    fail(ErrorKind::ShapeMismatch, "clifford coefficient table has wrong size");
  for (auto& c : coeffs_) c = mod_p(c, space_.p);
}

CliffordElement CliffordElement::scalar(const QuadraticSpace& v, long long c) {
  std::vector<long long> coeffs(std::size_t{1} << v.dim, 0);
  coeffs[0] = mod_p(c, v.p);
  return CliffordElement(v, std::move(coeffs));
}

CliffordElement CliffordElement::generator(const QuadraticSpace& v, std::size_t i) {
  std::vector<long long> coeffs(std::size_t{1} << v.dim, 0);
  coeffs[std::size_t{1} << i] = 1;
  return CliffordElement(v, std::move(coeffs));
}

CliffordElement CliffordElement::vector_elt(const QuadraticSpace& v,
                                            const std::vector<long long>& x) {
  std::vector<long long> coeffs(std::size_t{1} << v.dim, 0);
  for (std::size_t i = 0; i < v.dim; ++i) coeffs[std::size_t{1} << i] = mod_p(x[i], v.p);
  return CliffordElement(v, std::move(coeffs));
}

bool CliffordElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

int CliffordElement::parity() const {
  bool even = false, odd = false;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    (popcount_ll(m) % 2 ? odd : even) = true;
  }
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

bool CliffordElement::is_grade_one() const {
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    if (coeffs_[m] != 0 && popcount_ll(m) != 1) return false;
  return true;
}

std::vector<long long> CliffordElement::grade_one_coords() const {
  std::vector<long long> x(space_.dim, 0);
  for (std::size_t i = 0; i < space_.dim; ++i) x[i] = coeffs_[std::size_t{1} << i];
  return x;
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  if (!(a.space_ == b.space_)) fail(ErrorKind::ParentMismatch, "clifford addition mismatch");
  auto c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_p(c[i] + b.coeffs_[i], a.space_.p);
  return CliffordElement(a.space_, std::move(c));
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  if (!(a.space_ == b.space_)) fail(ErrorKind::ParentMismatch, "clifford subtraction mismatch");
  auto c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_p(c[i] - b.coeffs_[i], a.space_.p);
  return CliffordElement(a.space_, std::move(c));
}

CliffordElement CliffordElement::scaled(long long c) const {
  auto out = coeffs_;
  long long cm = mod_p(c, space_.p);
  for (auto& v : out) v = v * cm % space_.p;
  return CliffordElement(space_, std::move(out));
}

namespace {

// e_S * e_i as a sparse element; straightening e_j e_i = -e_i e_j + b(j, i)
// for j != i and e_i e_i = q(e_i).
void mul_basis_by_generator(const QuadraticSpace& v, std::size_t s_mask, std::size_t i,
                            long long coeff,
                            std::vector<std::pair<std::size_t, long long>>& out) {
  if (coeff == 0) return;
  if (s_mask == 0) {
    out.push_back({std::size_t{1} << i, coeff});
    return;
  }
  std::size_t m = static_cast<std::size_t>(63 - __builtin_clzll(s_mask));  // top generator
  if (m < i) {
    out.push_back({s_mask | (std::size_t{1} << i), coeff});
    return;
  }
  if (m == i) {
    out.push_back({s_mask ^ (std::size_t{1} << i), mod_p(coeff * v.q_diag[i], v.p)});
    return;
  }
  // m > i: e_S e_i = -(e_{S\m} e_i) e_m + b(m, i) e_{S\m}
  std::size_t rest = s_mask ^ (std::size_t{1} << m);
  std::vector<std::pair<std::size_t, long long>> inner;
  mul_basis_by_generator(v, rest, i, coeff, inner);
  for (auto [mask, c] : inner) {
    // masks here only use bits < m, so appending m is a plain union
    out.push_back({mask | (std::size_t{1} << m), mod_p(-c, v.p)});
  }
  long long bc = mod_p(coeff * v.b[m][i], v.p);
  if (bc != 0) out.push_back({rest, bc});
}

void mul_basis(const QuadraticSpace& v, std::size_t s_mask, std::size_t t_mask, long long coeff,
               std::vector<long long>& acc) {
  if (coeff == 0) return;
  if (t_mask == 0) {
    acc[s_mask] = mod_p(acc[s_mask] + coeff, v.p);
    return;
  }
  std::size_t i = static_cast<std::size_t>(__builtin_ctzll(t_mask));
  std::vector<std::pair<std::size_t, long long>> terms;
  mul_basis_by_generator(v, s_mask, i, coeff, terms);
  for (auto [mask, c] : terms) mul_basis(v, mask, t_mask ^ (std::size_t{1} << i), c, acc);
}

}  // namespace

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  if (!(a.space_ == b.space_)) fail(ErrorKind::ParentMismatch, "clifford product mismatch");
  const auto& v = a.space_;
  std::vector<long long> acc(a.coeffs_.size(), 0);
  for (std::size_t s = 0; s < a.coeffs_.size(); ++s) {
    if (a.coeffs_[s] == 0) continue;
    for (std::size_t t = 0; t < b.coeffs_.size(); ++t) {
      if (b.coeffs_[t] == 0) continue;
      mul_basis(v, s, t, a.coeffs_[s] * b.coeffs_[t] % v.p, acc);
    }
  }
  return CliffordElement(v, std::move(acc));
}

std::string CliffordElement::str() const {
  std::string out;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(coeffs_[m]);
    for (std::size_t i = 0; i < space_.dim; ++i)
      if (m & (std::size_t{1} << i)) out += " e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

CliffordElement transpose(const CliffordElement& a) {
  const auto& v = a.space();
  CliffordElement out = CliffordElement::scalar(v, 0);
  for (std::size_t m = 0; m < a.coeffs().size(); ++m) {
    if (a.coeff(m) == 0) continue;
    CliffordElement term = CliffordElement::scalar(v, a.coeff(m));
    for (std::size_t i = v.dim; i-- > 0;)
      if (m & (std::size_t{1} << i)) term = term * CliffordElement::generator(v, i);
    out = out + term;
  }
  return out;
}

long long fp_det(FpMat m, long long p) {
  std::size_t n = m.size();
  long long det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && mod_p(m[piv][col], p) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = mod_p(-det, p);
    }
    long long pv = mod_p(m[col][col], p);
    det = det * pv % p;
    long long inv = inv_mod_p(pv, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      long long f = mod_p(m[r][col], p) * inv % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] = mod_p(m[r][c] - f * m[col][c], p);
    }
  }
  return det;
}

std::size_t fp_rank(FpMat m, long long p) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && mod_p(m[piv][col], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long long inv = inv_mod_p(mod_p(m[rank][col], p), p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      long long f = mod_p(m[r][col], p) * inv % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) m[r][c] = mod_p(m[r][c] - f * m[rank][c], p);
    }
    ++rank;
  }
  return rank;
}

std::optional<CliffordElement> inverse(const CliffordElement& a) {
  const auto& v = a.space();
  std::size_t n = a.coeffs().size();
  long long p = v.p;
  // solve (left multiplication by a) x = 1 by elimination over F_p
  FpMat m(n, std::vector<long long>(n + 1, 0));
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<long long> col(n, 0);
    for (std::size_t s = 0; s < n; ++s)
      if (a.coeff(s) != 0) mul_basis(v, s, t, a.coeff(s), col);
    for (std::size_t r = 0; r < n; ++r) m[r][t] = col[r];
  }
  m[0][n] = 1;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && mod_p(m[piv][col], p) == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    long long inv = inv_mod_p(mod_p(m[rank][col], p), p);
    for (std::size_t c = 0; c <= n; ++c) m[rank][c] = mod_p(m[rank][c] * inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank) continue;
      long long f = mod_p(m[r][col], p);
      if (f == 0) continue;
      for (std::size_t c = 0; c <= n; ++c) m[r][c] = mod_p(m[r][c] - f * m[rank][c], p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < n) return std::nullopt;
  std::vector<long long> x(n, 0);
  for (std::size_t r = 0; r < n; ++r) x[pivot_col[r]] = m[r][n];
  return CliffordElement(v, std::move(x));
}

namespace {

// twisted conjugation (-1)^{p(g)} g v g^{-1} restricted to grade one
std::optional<FpMat> twisted_action(const QuadraticSpace& v, const CliffordElement& g,
                                    const CliffordElement& ginv, int parity) {
  FpMat m(v.dim, std::vector<long long>(v.dim, 0));
  for (std::size_t i = 0; i < v.dim; ++i) {
    CliffordElement w = g * CliffordElement::generator(v, i) * ginv;
    if (parity == 1) w = w.scaled(-1);
    if (!w.is_grade_one()) return std::nullopt;
    auto x = w.grade_one_coords();
    for (std::size_t j = 0; j < v.dim; ++j) m[j][i] = x[j];
  }
  return m;
}

std::vector<long long> apply_fp(const FpMat& m, const std::vector<long long>& x, long long p) {
  std::size_t n = m.size();
  std::vector<long long> y(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    long long acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc += m[r][c] * x[c];
    y[r] = mod_p(acc, p);
  }
  return y;
}

bool preserves_q(const QuadraticSpace& v, const FpMat& m) {
  long long total = 1;
  for (std::size_t i = 0; i < v.dim; ++i) total *= v.p;
  std::vector<long long> x(v.dim, 0);
  for (long long it = 0; it < total; ++it) {
    long long t = it;
    for (std::size_t i = 0; i < v.dim; ++i) {
      x[i] = t % v.p;
      t /= v.p;
    }
    if (v.q_of(apply_fp(m, x, v.p)) != v.q_of(x)) return false;
  }
  return true;
}

}  // namespace

LipschitzGroup lipschitz_group(const QuadraticSpace& v, LipschitzCaps caps) {
  if (!v.nondegenerate()) fail(ErrorKind::InvalidForm, "quadratic space is degenerate");
  std::size_t dim_cl = std::size_t{1} << v.dim;
  std::vector<std::size_t> even_masks, odd_masks;
  for (std::size_t m = 0; m < dim_cl; ++m)
    (popcount_ll(m) % 2 ? odd_masks : even_masks).push_back(m);

  {
    long long per = 1;
    for (std::size_t i = 0; i < even_masks.size(); ++i) {
      if (__builtin_mul_overflow(per, v.p, &per) || 2 * per > caps.max_candidates)
        fail(ErrorKind::CapExceeded, "lipschitz enumeration beyond candidate cap");
    }
  }

  LipschitzGroup out;
  out.space = v;
  for (int par = 0; par <= 1; ++par) {
    const auto& masks = (par == 0) ? even_masks : odd_masks;
    long long total = 1;
    for (std::size_t i = 0; i < masks.size(); ++i) total *= v.p;
    for (long long it = 1; it < total; ++it) {  // skip zero
      std::vector<long long> coeffs(dim_cl, 0);
      long long t = it;
      for (std::size_t i = 0; i < masks.size(); ++i) {
        coeffs[masks[i]] = t % v.p;
        t /= v.p;
      }
      CliffordElement g(v, std::move(coeffs));
      auto ginv = inverse(g);
      if (!ginv) continue;
      auto act = twisted_action(v, g, *ginv, par);
      if (!act) continue;
      out.elements.push_back({std::move(g), par, std::move(*act)});
    }
  }
  return out;
}

std::vector<FpMat> orthogonal_matrices(const QuadraticSpace& v, long long scan_cap) {
  long long cells = static_cast<long long>(v.dim) * static_cast<long long>(v.dim);
  long long total = 1;
  for (long long i = 0; i < cells; ++i) {
    if (__builtin_mul_overflow(total, v.p, &total) || total > scan_cap)
      fail(ErrorKind::CapExceeded, "orthogonal matrix scan beyond cap");
  }
  std::vector<FpMat> out;
  FpMat m(v.dim, std::vector<long long>(v.dim, 0));
  for (long long it = 0; it < total; ++it) {
    long long t = it;
    for (std::size_t r = 0; r < v.dim; ++r)
      for (std::size_t c = 0; c < v.dim; ++c) {
        m[r][c] = t % v.p;
        t /= v.p;
      }
    if (fp_det(m, v.p) == 0) continue;
    if (preserves_q(v, m)) out.push_back(m);
  }
  return out;
}

long long spinor_norm(const LipschitzElement& g) {
  CliffordElement n = g.g * transpose(g.g);
  for (std::size_t m = 1; m < n.coeffs().size(); ++m)
    if (n.coeff(m) != 0)
      fail(ErrorKind::NonScalarNorm, "spinor norm of a lipschitz element is not scalar");
  return n.coeff(0);
}

bool is_square_mod(long long a, long long p) {
  a = mod_p(a, p);
  if (a == 0) return true;
  for (long long x = 1; x < p; ++x)
    if (x * x % p == a) return true;
  return false;
}

SpinReport spin_analysis(const QuadraticSpace& v, LipschitzCaps caps) {
  SpinReport rep;
  rep.space = v;
  auto gamma = lipschitz_group(v, caps);
  rep.gamma_order = gamma.order();

  auto o_mats = orthogonal_matrices(v);
  rep.o_order = static_cast<long long>(o_mats.size());
  std::map<std::vector<long long>, bool> o_set;
  for (const auto& m : o_mats) o_set[flatten(m)] = true;

  FpMat id(v.dim, std::vector<long long>(v.dim, 0));
  for (std::size_t i = 0; i < v.dim; ++i) id[i][i] = 1;

  std::map<std::vector<long long>, long long> image_count;
  long long scalar_kernel = 0;
  bool kernel_only_scalars = true;
  bool images_in_o = true;
  for (const auto& e : gamma.elements) {
    auto key = flatten(e.action);
    ++image_count[key];
    if (!o_set.count(key)) images_in_o = false;
    if (e.action == id) {
      bool scalar = true;
      for (std::size_t m = 1; m < e.g.coeffs().size(); ++m)
        if (e.g.coeff(m) != 0) scalar = false;
      if (scalar)
        ++scalar_kernel;
      else
        kernel_only_scalars = false;
    }
  }
  rep.kernel_is_scalars = kernel_only_scalars && scalar_kernel == v.p - 1;
  rep.surjective = images_in_o && image_count.size() == o_mats.size();

  // norms and the square-class diagram
  bool diagram = true;
  std::map<std::vector<long long>, bool> no_class_is_square;
  for (const auto& e : gamma.elements) {
    long long n = spinor_norm(e);
    bool sq = is_square_mod(n, v.p);
    auto key = flatten(e.action);
    auto it = no_class_is_square.find(key);
    if (it == no_class_is_square.end())
      no_class_is_square[key] = sq;
    else if (it->second != sq)
      diagram = false;  // square class of N(g) must factor through O
  }
  rep.norm_diagram_commutes = diagram;

  long long ker_no = 0;
  for (const auto& [m, sq] : no_class_is_square)
    if (sq) ++ker_no;
  rep.ker_no_order = ker_no;

  std::vector<const LipschitzElement*> pin;
  for (const auto& e : gamma.elements) {
    LipschitzElement copy = e;
    if (spinor_norm(e) == 1) pin.push_back(&e);
    (void)copy;
  }
  rep.pin_order = static_cast<long long>(pin.size());

  std::map<std::vector<long long>, long long> pin_image;
  for (const auto* e : pin) ++pin_image[flatten(e->action)];
  bool covers = true;
  for (const auto& [m, sq] : no_class_is_square)
    if (sq && !pin_image.count(m)) covers = false;
  for (const auto& [m, cnt] : pin_image)
    if (!no_class_is_square[m]) covers = false;
  rep.pin_covers_ker_no = covers && static_cast<long long>(pin_image.size()) == ker_no;
  bool pm_one = true;
  for (const auto& [m, cnt] : pin_image)
    if (cnt != 2) pm_one = false;
  rep.pin_kernel_pm_one = pm_one;

  std::map<std::vector<long long>, bool> so_set;
  long long so = 0;
  for (const auto& m : o_mats)
    if (fp_det(m, v.p) == 1) {
      ++so;
      so_set[flatten(m)] = true;
    }
  rep.so_order = so;
  long long spin = 0;
  for (const auto* e : pin)
    if (so_set.count(flatten(e->action))) ++spin;
  rep.spin_order = spin;

  // reflections: anisotropic x sits in Gamma, acts as the reflection about x,
  // and its spinor norm is q(x)
  bool refl_ok = true, refl_norm_ok = true;
  long long total = 1;
  for (std::size_t i = 0; i < v.dim; ++i) total *= v.p;
  std::vector<FpMat> reflections;
  for (long long it = 1; it < total; ++it) {
    long long t = it;
    std::vector<long long> x(v.dim, 0);
    for (std::size_t i = 0; i < v.dim; ++i) {
      x[i] = t % v.p;
      t /= v.p;
    }
    long long qx = v.q_of(x);
    if (qx == 0) continue;
    CliffordElement gx = CliffordElement::vector_elt(v, x);
    auto ginv = inverse(gx);
    if (!ginv) {
      refl_ok = false;
      continue;
    }
    auto act = twisted_action(v, gx, *ginv, 1);
    if (!act) {
      refl_ok = false;
      continue;
    }
    long long qinv = inv_mod_p(qx, v.p);
    FpMat r(v.dim, std::vector<long long>(v.dim, 0));
    for (std::size_t col = 0; col < v.dim; ++col) {
      long long bcx = 0;  // b(e_col, x)
      for (std::size_t j = 0; j < v.dim; ++j) bcx += v.b[col][j] * x[j];
      bcx = mod_p(bcx, v.p);
      for (std::size_t row = 0; row < v.dim; ++row) {
        long long val = (row == col ? 1 : 0);
        val -= bcx * qinv % v.p * x[row] % v.p;
        r[row][col] = mod_p(val, v.p);
      }
    }
    if (*act != r) refl_ok = false;
    LipschitzElement le{gx, 1, *act};
    long long n = spinor_norm(le);
    if (is_square_mod(n, v.p) != is_square_mod(qx, v.p)) refl_norm_ok = false;
    if (std::find(reflections.begin(), reflections.end(), r) == reflections.end())
      reflections.push_back(r);
  }
  rep.reflections_ok = refl_ok;
  rep.reflection_norms_match = refl_norm_ok;

  // reflections generate O
  {
    std::map<std::vector<long long>, FpMat> closed;
    std::vector<FpMat> queue = {id};
    closed[flatten(id)] = id;
    while (!queue.empty()) {
      FpMat m = queue.back();
      queue.pop_back();
      for (const auto& r : reflections) {
        FpMat prod(v.dim, std::vector<long long>(v.dim, 0));
        for (std::size_t i = 0; i < v.dim; ++i)
          for (std::size_t j = 0; j < v.dim; ++j) {
            long long acc = 0;
            for (std::size_t k = 0; k < v.dim; ++k) acc += m[i][k] * r[k][j];
            prod[i][j] = mod_p(acc, v.p);
          }
        if (closed.emplace(flatten(prod), prod).second) queue.push_back(prod);
      }
    }
    rep.cartan_dieudonne_ok = closed.size() == o_mats.size();
  }
  return rep;
}

SpinorModuleReport spinor_module(long long p, std::size_t half) {
  SpinorModuleReport rep;
  rep.p = p;
  rep.half = half;
  QuadraticSpace v = QuadraticSpace::split(p, half);
  std::size_t sdim = std::size_t{1} << half;
  rep.cl_dim = 1LL << (2 * half);
  rep.end_dim = static_cast<long long>(sdim) * static_cast<long long>(sdim);

  auto sign_below = [&](std::size_t mask, std::size_t i) {
    int cnt = popcount_ll(mask & ((std::size_t{1} << i) - 1));
    return (cnt % 2 == 0) ? 1LL : p - 1;
  };
  // the L half contracts, the dual half wedges
  std::vector<FpMat> gen_action(2 * half, FpMat(sdim, std::vector<long long>(sdim, 0)));
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t t = 0; t < sdim; ++t)
      if (t & (std::size_t{1} << i))
        gen_action[i][t ^ (std::size_t{1} << i)][t] = sign_below(t, i);
    for (std::size_t t = 0; t < sdim; ++t)
      if (!(t & (std::size_t{1} << i)))
        gen_action[half + i][t | (std::size_t{1} << i)][t] = sign_below(t, i);
  }

  auto mat_mul_p = [&](const FpMat& a, const FpMat& b) {
    FpMat out(sdim, std::vector<long long>(sdim, 0));
    for (std::size_t i = 0; i < sdim; ++i)
      for (std::size_t k = 0; k < sdim; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j = 0; j < sdim; ++j)
          out[i][j] = mod_p(out[i][j] + a[i][k] * b[k][j], p);
      }
    return out;
  };

  bool relations = true;
  long long total = 1;
  for (std::size_t i = 0; i < 2 * half; ++i) total *= p;
  for (long long it = 0; it < total && relations; ++it) {
    long long t = it;
    std::vector<long long> x(2 * half, 0);
    for (std::size_t i = 0; i < 2 * half; ++i) {
      x[i] = t % p;
      t /= p;
    }
    FpMat rho(sdim, std::vector<long long>(sdim, 0));
    for (std::size_t i = 0; i < 2 * half; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t r = 0; r < sdim; ++r)
        for (std::size_t c = 0; c < sdim; ++c)
          rho[r][c] = mod_p(rho[r][c] + x[i] * gen_action[i][r][c], p);
    }
    FpMat sq = mat_mul_p(rho, rho);
    long long qx = v.q_of(x);
    for (std::size_t r = 0; r < sdim && relations; ++r)
      for (std::size_t c = 0; c < sdim; ++c)
        if (sq[r][c] != (r == c ? qx : 0)) {
          relations = false;
          break;
        }
  }
  rep.relations_ok = relations;
  if (!relations) fail(ErrorKind::RelationViolation, "spinor module violates v.v = q(v)");

  std::size_t cldim = std::size_t{1} << (2 * half);
  FpMat big(cldim, std::vector<long long>(cldim, 0));
  for (std::size_t s = 0; s < cldim; ++s) {
    FpMat m(sdim, std::vector<long long>(sdim, 0));
    for (std::size_t i = 0; i < sdim; ++i) m[i][i] = 1;
    for (std::size_t i = 0; i < 2 * half; ++i)
      if (s & (std::size_t{1} << i)) m = mat_mul_p(m, gen_action[i]);
    for (std::size_t r = 0; r < sdim; ++r)
      for (std::size_t c = 0; c < sdim; ++c) big[r * sdim + c][s] = m[r][c];
  }
  rep.bijective = fp_rank(big, p) == cldim;
  return rep;
}

}  // namespace mgt
