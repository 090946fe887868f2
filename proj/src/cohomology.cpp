#include "mgt/cohomology.hpp"

#include <algorithm>

#include "mgt/intlinalg.hpp"

namespace mgt {

namespace {

long long pow_ll(long long b, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) out = checked_mul(out, b);
  return out;
}

long long mod_reduce(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

// Normalized tuples: every entry a nonzero element index.  Flat order is
// lexicographic over entries 1..n-1.
long long norm_dim(long long n, int len) { return pow_ll(n - 1, len); }

std::vector<long long> norm_flat_to_tuple(long long flat, long long n, int len) {
  std::vector<long long> t(static_cast<std::size_t>(len), 0);
  for (int i = len; i-- > 0;) {
    t[static_cast<std::size_t>(i)] = 1 + flat % (n - 1);
    flat /= (n - 1);
  }
  return t;
}

long long norm_tuple_to_flat(const std::vector<long long>& tuple, long long n) {
  long long flat = 0;
  for (long long t : tuple) flat = flat * (n - 1) + (t - 1);
  return flat;
}

// Matrix of the bar differential C^deg_norm -> C^{deg+1}_norm.
IntMat normalized_differential_matrix(const FiniteAbelianGroup& g, int deg) {
  long long n = g.order();
  long long rows = norm_dim(n, deg + 1);
  long long cols = norm_dim(n, deg);
  IntMat mat(static_cast<std::size_t>(rows), std::vector<long long>(static_cast<std::size_t>(cols), 0));

  std::vector<long long> add(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      add[static_cast<std::size_t>(i * n + j)] =
          g.index_of(g.add(g.coords_of(i), g.coords_of(j)));

  std::vector<long long> sub(static_cast<std::size_t>(deg), 0);
  auto emit = [&](std::size_t row, const std::vector<long long>& t, long long coeff) {
    if (deg == 0) return;  // constants contribute nothing in normalized coords
    for (long long v : t)
      if (v == 0) return;
    mat[row][static_cast<std::size_t>(norm_tuple_to_flat(t, n))] += coeff;
  };

  for (long long r = 0; r < rows; ++r) {
    auto tuple = norm_flat_to_tuple(r, n, deg + 1);
    // drop first
    sub.assign(tuple.begin() + 1, tuple.end());
    emit(static_cast<std::size_t>(r), sub, 1);
    long long sign = -1;
    for (int i = 0; i < deg; ++i) {
      for (int t = 0; t < deg; ++t) {
        if (t < i)
          sub[static_cast<std::size_t>(t)] = tuple[static_cast<std::size_t>(t)];
        else if (t == i)
          sub[static_cast<std::size_t>(t)] =
              add[static_cast<std::size_t>(tuple[static_cast<std::size_t>(t)] * n +
                                           tuple[static_cast<std::size_t>(t) + 1])];
        else
          sub[static_cast<std::size_t>(t)] = tuple[static_cast<std::size_t>(t) + 1];
      }
      emit(static_cast<std::size_t>(r), sub, sign);
      sign = -sign;
    }
    sub.assign(tuple.begin(), tuple.end() - 1);
    emit(static_cast<std::size_t>(r), sub, sign);
  }
  return mat;
}

Cochain cochain_from_normalized(const FiniteAbelianGroup& g, int deg, long long modulus,
                                const std::vector<long long>& norm_table) {
  Cochain c(g, deg, modulus);
  long long n = g.order();
  for (long long f = 0; f < static_cast<long long>(norm_table.size()); ++f) {
    auto t = norm_flat_to_tuple(f, n, deg);
    c.set(t, norm_table[static_cast<std::size_t>(f)]);
  }
  return c;
}

std::vector<long long> normalized_coords_of(const Cochain& c) {
  long long n = c.group().order();
  long long m = norm_dim(n, c.degree());
  std::vector<long long> out(static_cast<std::size_t>(m), 0);
  for (long long f = 0; f < m; ++f)
    out[static_cast<std::size_t>(f)] = c.at(norm_flat_to_tuple(f, n, c.degree()));
  return out;
}

void check_caps(const FiniteAbelianGroup& g, int degree, const CohomologyCaps& caps) {
  long long n = g.order();
  long long full = 1;
  for (int i = 0; i < degree + 2; ++i) {
    if (__builtin_mul_overflow(full, n, &full) || full > caps.max_full_table)
      fail(ErrorKind::CapExceeded, "cohomology table size beyond cap");
  }
  if (n > 1 && norm_dim(n, degree + 1) > caps.max_normalized_dim)
    fail(ErrorKind::CapExceeded, "cohomology normalized dimension beyond cap");
}

}  // namespace

std::string CohomologyGroup::factors_str() const {
  if (invariant_factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += "+";
    s += "Z/" + std::to_string(invariant_factors[i]);
  }
  return s;
}

CohomologyGroup cohomology(const FiniteAbelianGroup& g, int degree, CoefficientSpec coeff,
                           CohomologyCaps caps) {
  if (degree < 0) fail(ErrorKind::ParseError, "negative cohomology degree");
  CohomologyGroup out;
  out.degree = degree;
  out.coefficients = coeff;

  if (degree == 0) {
    if (coeff.full_scalars)
      fail(ErrorKind::ParseError, "H^0 with divisible scalars is not finite");
    if (coeff.modulus > 1) {
      out.invariant_factors.push_back(coeff.modulus);
      Cochain one(g, 0, coeff.modulus);
      one.table()[0] = 1;
      out.representatives.push_back(one);
    }
    return out;
  }
  if (g.order() == 1) return out;  // all higher cohomology of the point vanishes

  if (!coeff.full_scalars) {
    long long n_mod = coeff.modulus;
    if (n_mod <= 0) fail(ErrorKind::ParseError, "modulus must be positive");
    check_caps(g, degree, caps);
    IntMat d_here = normalized_differential_matrix(g, degree);
    IntMat d_below = normalized_differential_matrix(g, degree - 1);
    std::size_t m = d_here.empty() ? 0 : d_here[0].size();
    if (n_mod == 1 || m == 0) return out;
    IntMat kernel = kernel_lattice_mod(d_here, n_mod);
    auto q = quotient_mod(kernel, d_below, m, n_mod);
    out.invariant_factors = q.invariant_factors;
    for (std::size_t j = 0; j < out.invariant_factors.size(); ++j) {
      std::vector<long long> col(m);
      for (std::size_t i = 0; i < m; ++i) col[i] = q.representatives[i][j];
      out.representatives.push_back(cochain_from_normalized(g, degree, n_mod, col));
    }
    // representatives are cocycles, pairwise non-cohomologous
    HowellForm cobound(m, n_mod);
    if (!d_below.empty() && !d_below[0].empty()) {
      for (std::size_t j = 0; j < d_below[0].size(); ++j) {
        std::vector<long long> row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = mod_reduce(d_below[i][j], n_mod);
        cobound.add_row(std::move(row));
      }
    }
    for (std::size_t i = 0; i < out.representatives.size(); ++i) {
      if (!is_cocycle(out.representatives[i]))
        fail(ErrorKind::VerificationFailure, "cohomology representative is not a cocycle");
      auto ci = normalized_coords_of(out.representatives[i]);
      for (std::size_t j = i + 1; j < out.representatives.size(); ++j) {
        auto cj = normalized_coords_of(out.representatives[j]);
        std::vector<long long> diff(m);
        for (std::size_t t = 0; t < m; ++t) diff[t] = mod_reduce(ci[t] - cj[t], n_mod);
        if (cobound.contains(diff))
          fail(ErrorKind::VerificationFailure, "cohomology representatives are cohomologous");
      }
      if (cobound.contains(ci) && out.invariant_factors[i] > 1)
        fail(ErrorKind::VerificationFailure, "cohomology representative is a coboundary");
    }
    return out;
  }

  // Divisible scalars: H^degree(G, scalars) = H^{degree+1}(G, Z).
  check_caps(g, degree + 1, caps);
  IntMat d_top = normalized_differential_matrix(g, degree + 1);
  IntMat d_mid = normalized_differential_matrix(g, degree);
  std::size_t m = d_top.empty() ? 0 : d_top[0].size();
  if (m == 0) return out;
  IntMat kernel = kernel_lattice(d_top);
  if (kernel.empty() || kernel[0].empty()) return out;
  auto q = quotient_lattice(kernel, d_mid, m);
  out.invariant_factors = q.invariant_factors;

  // Convert each integral class generator z of order d back to a mu_d-valued
  // cochain one degree down: solve d(w) = d * z over Z, take y = w mod d.
  for (std::size_t j = 0; j < out.invariant_factors.size(); ++j) {
    long long d = out.invariant_factors[j];
    std::vector<long long> z(m);
    for (std::size_t i = 0; i < m; ++i) z[i] = q.representatives[i][j];
    std::vector<long long> rhs(d_mid.size(), 0);
    // d_mid maps C^degree -> C^{degree+1}: rows = m
    for (std::size_t i = 0; i < m; ++i) rhs[i] = checked_mul(d, z[i]);
    auto w = solve_integer(d_mid, rhs);
    if (!w)
      fail(ErrorKind::VerificationFailure, "integral class of finite order has no witness");
    std::vector<long long> y(w->size());
    for (std::size_t i = 0; i < w->size(); ++i) y[i] = mod_reduce((*w)[i], d);
    Cochain rep = cochain_from_normalized(g, degree, d, y);
    if (!is_cocycle(rep))
      fail(ErrorKind::VerificationFailure, "scalar representative is not a cocycle");
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

long long stable_scalar_cohomology_order(const FiniteAbelianGroup& g, int degree,
                                         long long base_modulus, CohomologyCaps caps) {
  if (g.order() == 1 || degree == 0) return degree == 0 ? base_modulus : 1;
  check_caps(g, degree, caps);
  long long m_mod = base_modulus;
  long long me = checked_mul(m_mod, g.order());
  IntMat d_here = normalized_differential_matrix(g, degree);
  IntMat d_below = normalized_differential_matrix(g, degree - 1);
  std::size_t m = d_here.empty() ? 0 : d_here[0].size();
  if (m == 0) return 1;

  long long z_count = kernel_size_mod(d_here, m, m_mod);

  HowellForm span(m, m_mod);
  if (!d_below.empty() && !d_below[0].empty())
    for (std::size_t j = 0; j < d_below[0].size(); ++j) {
      std::vector<long long> row(m);
      for (std::size_t i = 0; i < m; ++i) row[i] = mod_reduce(d_below[i][j], m_mod);
      span.add_row(std::move(row));
    }
  // classes that die in the colimit: (d x / (M |G|)) mod M for x closed mod M|G|
  IntMat stage_kernel = kernel_lattice_mod(d_below, me);
  if (!stage_kernel.empty() && !stage_kernel[0].empty()) {
    std::size_t cols_below = d_below.empty() ? 0 : d_below[0].size();
    for (std::size_t j = 0; j < stage_kernel[0].size(); ++j) {
      std::vector<long long> y(m, 0);
      for (std::size_t r = 0; r < m; ++r) {
        long long acc = 0;
        for (std::size_t c = 0; c < cols_below; ++c)
          acc = checked_add(acc, checked_mul(d_below[r][c], stage_kernel[c][j]));
        if (acc % me != 0)
          fail(ErrorKind::VerificationFailure, "stage kernel is not closed at stage M|G|");
        y[r] = mod_reduce(acc / me, m_mod);
      }
      span.add_row(std::move(y));
    }
  }
  return z_count / span.span_size();
}

std::optional<Cochain> coboundary_preimage(const Cochain& z) {
  const auto& g = z.group();
  long long n = g.order();
  int deg = z.degree();
  if (deg == 0) return std::nullopt;
  long long cols = pow_ll(n, deg - 1);
  long long rows = pow_ll(n, deg);
  IntMat mat(static_cast<std::size_t>(rows),
             std::vector<long long>(static_cast<std::size_t>(cols), 0));
  for (long long col = 0; col < cols; ++col) {
    Cochain basis(g, deg - 1, z.modulus());
    basis.table()[static_cast<std::size_t>(col)] = 1;
    Cochain db = differential(basis);
    for (long long r = 0; r < rows; ++r)
      mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
          db.table()[static_cast<std::size_t>(r)];
  }
  auto sol = solve_mod(mat, z.table(), z.modulus());
  if (!sol) return std::nullopt;
  return Cochain(g, deg - 1, z.modulus(), *sol);
}

HexagonReport is_abelian_three_cocycle(const AbelianThreeCocycle& x) {
  HexagonReport rep;
  const auto& g = x.group;
  long long n = g.order();
  if (x.tau.degree() != 3 || !(x.tau.group() == g))
    fail(ErrorKind::ShapeMismatch, "abelian 3-cocycle needs a degree-3 cochain on the group");
  if (x.b.size() != static_cast<std::size_t>(n * n))
    fail(ErrorKind::ShapeMismatch, "braiding table has wrong size");

  Cochain dtau = differential(x.tau);
  if (!dtau.is_zero()) {
    long long flat = 0;
    while (dtau.table()[static_cast<std::size_t>(flat)] == 0) ++flat;
    rep.witness = "d(tau) != 0 at tuple flat index " + std::to_string(flat);
    return rep;
  }

  long long mod = x.modulus();
  std::vector<long long> add(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      add[static_cast<std::size_t>(i * n + j)] =
          g.index_of(g.add(g.coords_of(i), g.coords_of(j)));
  auto tau = [&](long long a, long long b, long long c) {
    return x.tau.table()[static_cast<std::size_t>((a * n + b) * n + c)];
  };
  auto bb = [&](long long a, long long b) {
    return x.b[static_cast<std::size_t>(a * n + b)];
  };
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      for (long long c = 0; c < n; ++c) {
        long long t_first = tau(a, b, c) + tau(b, c, a) - tau(b, a, c);
        long long rhs1 = bb(a, c) - bb(a, add[static_cast<std::size_t>(b * n + c)]) + bb(a, b);
        if (mod_reduce(t_first - rhs1, mod) != 0) {
          rep.witness = "first hexagon fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")";
          return rep;
        }
        long long t_last = tau(c, a, b) + tau(a, b, c) - tau(a, c, b);
        long long rhs2 = -bb(a, c) + bb(add[static_cast<std::size_t>(a * n + b)], c) - bb(b, c);
        if (mod_reduce(t_last - rhs2, mod) != 0) {
          rep.witness = "second hexagon fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")";
          return rep;
        }
      }
  rep.ok = true;
  return rep;
}

QuadraticForm quadratic_form_of(const AbelianThreeCocycle& x) {
  auto hex = is_abelian_three_cocycle(x);
  if (!hex.ok) fail(ErrorKind::InvalidCocycle, hex.witness);
  const auto& g = x.group;
  long long n = g.order();
  std::vector<RootOfUnity> table(static_cast<std::size_t>(n));
  for (long long a = 0; a < n; ++a)
    table[static_cast<std::size_t>(a)] = RootOfUnity(x.modulus(), x.b_at(a, a));
  try {
    return QuadraticForm(g, std::move(table));
  } catch (const Error& e) {
    fail(ErrorKind::InvalidCocycle, std::string("diagonal is not a quadratic form: ") + e.what());
  }
}

namespace {

// Constraint matrix for abelian 3-cocycles over full tables: variables are
// [tau | b], rows are d(tau) = 0 and both hexagon families.
struct AbelianCocycleSystem {
  long long n = 0;
  long long vars_tau = 0, vars_b = 0;
  IntMat mat;
  std::vector<long long> add;

  explicit AbelianCocycleSystem(const FiniteAbelianGroup& g) {
    n = g.order();
    vars_tau = n * n * n;
    vars_b = n * n;
    add.resize(static_cast<std::size_t>(n * n));
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j)
        add[static_cast<std::size_t>(i * n + j)] =
            g.index_of(g.add(g.coords_of(i), g.coords_of(j)));

    auto tau_var = [&](long long a, long long b, long long c) {
      return (a * n + b) * n + c;
    };
    auto b_var = [&](long long a, long long b) { return vars_tau + a * n + b; };

    // d(tau) rows
    for (long long a = 0; a < n; ++a)
      for (long long b = 0; b < n; ++b)
        for (long long c = 0; c < n; ++c)
          for (long long d = 0; d < n; ++d) {
            std::vector<long long> row(static_cast<std::size_t>(vars_tau + vars_b), 0);
            row[static_cast<std::size_t>(tau_var(b, c, d))] += 1;
            row[static_cast<std::size_t>(tau_var(add[static_cast<std::size_t>(a * n + b)], c, d))] -= 1;
            row[static_cast<std::size_t>(tau_var(a, add[static_cast<std::size_t>(b * n + c)], d))] += 1;
            row[static_cast<std::size_t>(tau_var(a, b, add[static_cast<std::size_t>(c * n + d)]))] -= 1;
            row[static_cast<std::size_t>(tau_var(a, b, c))] += 1;
            mat.push_back(std::move(row));
          }
    // hexagons
    for (long long a = 0; a < n; ++a)
      for (long long b = 0; b < n; ++b)
        for (long long c = 0; c < n; ++c) {
          std::vector<long long> row1(static_cast<std::size_t>(vars_tau + vars_b), 0);
          row1[static_cast<std::size_t>(tau_var(a, b, c))] += 1;
          row1[static_cast<std::size_t>(tau_var(b, c, a))] += 1;
          row1[static_cast<std::size_t>(tau_var(b, a, c))] -= 1;
          row1[static_cast<std::size_t>(b_var(a, c))] -= 1;
          row1[static_cast<std::size_t>(b_var(a, add[static_cast<std::size_t>(b * n + c)]))] += 1;
          row1[static_cast<std::size_t>(b_var(a, b))] -= 1;
          mat.push_back(std::move(row1));

          std::vector<long long> row2(static_cast<std::size_t>(vars_tau + vars_b), 0);
          row2[static_cast<std::size_t>(tau_var(c, a, b))] += 1;
          row2[static_cast<std::size_t>(tau_var(a, b, c))] += 1;
          row2[static_cast<std::size_t>(tau_var(a, c, b))] -= 1;
          row2[static_cast<std::size_t>(b_var(a, c))] += 1;
          row2[static_cast<std::size_t>(b_var(add[static_cast<std::size_t>(a * n + b)], c))] -= 1;
          row2[static_cast<std::size_t>(b_var(b, c))] += 1;
          mat.push_back(std::move(row2));
        }
  }
};

}  // namespace

EmReport em_correspondence(const FiniteAbelianGroup& a, long long order_cap) {
  if (a.order() > order_cap)
    fail(ErrorKind::CapExceeded, "abelian-cocycle enumeration beyond group-order cap");
  EmReport rep;
  rep.group = a;
  long long e = a.exponent();
  rep.modulus = 2 * e * e;
  long long n = a.order();
  long long n_mod = rep.modulus;

  AbelianCocycleSystem sys(a);
  long long vars = sys.vars_tau + sys.vars_b;
  // Solution and coboundary sets can be far larger than 64 bits; count the
  // class quotient through prime-exponent arithmetic:
  //   #classes = N^vars / |im(constraints)| / |im(coboundaries)|.
  auto constraint_image = image_size_mod_factored(sys.mat, sys.mat.size(), n_mod);

  // coboundary map sigma -> (d sigma, sigma(y,x) - sigma(x,y))
  IntMat cob(static_cast<std::size_t>(vars), std::vector<long long>(static_cast<std::size_t>(n * n), 0));
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y) {
      long long col = x * n + y;
      Cochain sigma(a, 2, n_mod);
      sigma.table()[static_cast<std::size_t>(col)] = 1;
      Cochain ds = differential(sigma);
      for (long long f = 0; f < sys.vars_tau; ++f)
        cob[static_cast<std::size_t>(f)][static_cast<std::size_t>(col)] =
            ds.table()[static_cast<std::size_t>(f)];
      // b part: sigma(y, x) - sigma(x, y)
      cob[static_cast<std::size_t>(sys.vars_tau + y * n + x)][static_cast<std::size_t>(col)] += 1;
      cob[static_cast<std::size_t>(sys.vars_tau + x * n + y)][static_cast<std::size_t>(col)] -= 1;
    }
  auto coboundary_image = image_size_mod_factored(cob, static_cast<std::size_t>(vars), n_mod);

  auto modulus_factors = factor_ll(n_mod);
  std::map<long long, long long> class_exp;
  for (auto [p, e] : modulus_factors) class_exp[p] = static_cast<long long>(e) * vars;
  for (auto [p, e] : constraint_image) class_exp[p] -= e;
  for (auto [p, e] : coboundary_image) class_exp[p] -= e;
  rep.class_count = 1;
  for (auto [p, e] : class_exp) {
    if (e < 0) fail(ErrorKind::VerificationFailure, "negative class-count exponent");
    for (long long i = 0; i < e; ++i) rep.class_count = checked_mul(rep.class_count, p);
  }
  // subgroup sizes themselves, reported when they fit in 64 bits
  auto sized = [](const std::map<long long, int>& f) -> long long {
    long long out = 1;
    for (auto [p, e] : f)
      for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(out, p, &out)) return -1;
      }
    return out;
  };
  rep.coboundary_count = sized(coboundary_image);
  long long zc = -1;
  {
    // |Z| = N^vars / |im(constraints)| via exponents, if it fits
    std::map<long long, long long> ze;
    for (auto [p, e] : modulus_factors) ze[p] = static_cast<long long>(e) * vars;
    for (auto [p, e] : constraint_image) ze[p] -= e;
    zc = 1;
    for (auto [p, e] : ze)
      for (long long i = 0; i < e && zc > 0; ++i)
        if (__builtin_mul_overflow(zc, p, &zc)) zc = -1;
  }
  rep.cocycle_count = zc;

  auto forms = enumerate_quadratic_forms(a);
  rep.form_count = static_cast<long long>(forms.size());
  rep.surjective = true;
  for (const auto& q : forms)
    if (!abelian_cocycle_for_form(q, n_mod)) rep.surjective = false;
  rep.bijective = rep.surjective && rep.class_count == rep.form_count;
  return rep;
}

std::optional<AbelianThreeCocycle> abelian_cocycle_for_form(const QuadraticForm& q,
                                                            long long modulus) {
  const auto& a = q.group();
  long long n = a.order();
  AbelianCocycleSystem sys(a);
  long long vars = sys.vars_tau + sys.vars_b;
  IntMat mat = sys.mat;
  std::vector<long long> rhs(mat.size(), 0);
  // pin the diagonal b(x,x) to the form's exponents
  for (long long x = 0; x < n; ++x) {
    std::vector<long long> row(static_cast<std::size_t>(vars), 0);
    row[static_cast<std::size_t>(sys.vars_tau + x * n + x)] = 1;
    mat.push_back(std::move(row));
    rhs.push_back(q.table()[static_cast<std::size_t>(x)].embed(modulus));
  }
  auto sol = solve_mod(mat, rhs, modulus);
  if (!sol) return std::nullopt;
  AbelianThreeCocycle out;
  out.group = a;
  out.tau = Cochain(a, 3, modulus,
                    std::vector<long long>(sol->begin(), sol->begin() + sys.vars_tau));
  out.b.assign(sol->begin() + sys.vars_tau, sol->end());
  return out;
}

TorsorReport coefficient_torsor_report(const MetricGroup& m, const FiniteAbelianGroup& g_sub,
                                       CohomologyCaps caps) {
  TorsorReport rep;
  long long order = m.group().order();
  long long l = 0;
  while ((l + 1) * (l + 1) <= order) ++l;
  if (l * l != order)
    fail(ErrorKind::NotSquareOrder,
         "metric group order " + std::to_string(order) + " is not a square");
  rep.l = l;
  rep.coefficient_modulus = l * l * l * l;

  auto h4 = cohomology(g_sub, 4, CoefficientSpec::mu(rep.coefficient_modulus), caps);
  rep.h4_factors = h4.invariant_factors;
  auto h3 = cohomology(g_sub, 3, CoefficientSpec::scalars(), caps);
  rep.h3_factors = h3.invariant_factors;
  rep.torsor_size = h3.order();
  return rep;
}

}  // namespace mgt
