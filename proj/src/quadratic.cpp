#include "mgt/quadratic.hpp"

#include <algorithm>
#include <set>

namespace mgt {

Bicharacter::Bicharacter(FiniteAbelianGroup group, std::vector<RootOfUnity> diag,
                         std::vector<std::vector<RootOfUnity>> cross)
    : group_(std::move(group)), diag_(std::move(diag)), cross_(std::move(cross)) {
  std::size_t k = group_.rank();
  if (diag_.size() != k || cross_.size() != k)
    fail(ErrorKind::ShapeMismatch, "bicharacter gram data has wrong shape");
  for (std::size_t i = 0; i < k; ++i) {
    if (cross_[i].size() != k) fail(ErrorKind::ShapeMismatch, "bicharacter gram data ragged");
    // order constraints: <e_i,e_j> lives in mu_gcd(n_i,n_j)
    for (std::size_t j = 0; j < k; ++j) {
      long long g = std::gcd(group_.orders()[i], group_.orders()[j]);
      RootOfUnity v = (i == j) ? diag_[i] : gram(i, j);
      if (!v.pow(g).is_one())
        fail(ErrorKind::InvalidForm, "bicharacter gram entry has wrong order at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

RootOfUnity Bicharacter::gram(std::size_t i, std::size_t j) const {
  if (i == j) return diag_[i];
  return i < j ? cross_[i][j] : cross_[j][i];
}

RootOfUnity Bicharacter::pair(const std::vector<long long>& a,
                              const std::vector<long long>& b) const {
  std::size_t k = group_.rank();
  RootOfUnity out;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      out *= gram(i, j).pow(a[i] * b[j]);
    }
  }
  return out;
}

RootOfUnity Bicharacter::pair(const Element& a, const Element& b) const {
  if (a.group() != group_ || b.group() != group_)
    fail(ErrorKind::ParentMismatch, "bicharacter applied to foreign elements");
  return pair(a.coords(), b.coords());
}

bool Bicharacter::is_nondegenerate() const {
  // a -> (<a, e_j>)_j determines the character <a, .>; injectivity suffices.
  long long n = group_.order();
  long long e = group_.exponent();
  std::set<std::vector<long long>> rows;
  std::size_t k = group_.rank();
  for (long long idx = 0; idx < n; ++idx) {
    auto a = group_.coords_of(idx);
    std::vector<long long> row(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<long long> gen(k, 0);
      gen[j] = 1 % group_.orders()[j];
      row[j] = pair(a, gen).embed(e);
    }
    rows.insert(std::move(row));
  }
  return rows.size() == static_cast<std::size_t>(n);
}

QuadraticForm::QuadraticForm(FiniteAbelianGroup group, std::vector<RootOfUnity> table)
    : group_(std::move(group)), table_(std::move(table)) {
  if (table_.size() != static_cast<std::size_t>(group_.order()))
    fail(ErrorKind::ShapeMismatch, "form table size does not match group order");
  validate();
}

RootOfUnity QuadraticForm::value(const std::vector<long long>& coords) const {
  return table_[static_cast<std::size_t>(group_.index_of(coords))];
}

RootOfUnity QuadraticForm::value(const Element& a) const {
  if (a.group() != group_) fail(ErrorKind::ParentMismatch, "form applied to foreign element");
  return table_[static_cast<std::size_t>(a.index())];
}

bool QuadraticForm::is_trivial() const {
  return std::all_of(table_.begin(), table_.end(),
                     [](const RootOfUnity& v) { return v.is_one(); });
}

// Validation via the generator reconstruction: with v_i = q(e_i),
// c_i = q(2 e_i)/q(e_i)^2 and t_ij = q(e_i+e_j)/(q(e_i)q(e_j)), q is a
// quadratic form iff
//   q(0) = 1,  q(a) = q(-a),
//   c_i^{n_i} = 1,  v_i^{n_i} c_i^{n_i(n_i-1)/2} = 1,  t_ij^{gcd(n_i,n_j)} = 1,
//   q(x) = prod_i v_i^{x_i} c_i^{x_i(x_i-1)/2} * prod_{i<j} t_ij^{x_i x_j}.
// Under these the polarization is the bicharacter with gram data (c_i, t_ij),
// biadditive and symmetric by construction; conversely each constraint is
// forced by the axioms on the listed witnesses.
void QuadraticForm::validate() const {
  std::size_t k = group_.rank();
  long long n = group_.order();
  if (!table_[0].is_one()) fail(ErrorKind::InvalidForm, "q(0) != 1");
  for (long long idx = 0; idx < n; ++idx) {
    auto a = group_.coords_of(idx);
    auto na = group_.neg(a);
    if (table_[static_cast<std::size_t>(idx)] !=
        table_[static_cast<std::size_t>(group_.index_of(na))])
      fail(ErrorKind::InvalidForm, "q(a) != q(-a) at element index " + std::to_string(idx));
  }

  std::vector<RootOfUnity> v(k), c(k);
  std::vector<std::vector<RootOfUnity>> t(k, std::vector<RootOfUnity>(k));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long long> e(k, 0), e2(k, 0);
    e[i] = 1 % group_.orders()[i];
    e2[i] = 2 % group_.orders()[i];
    v[i] = value(e);
    c[i] = value(e2) / (v[i] * v[i]);
    long long ni = group_.orders()[i];
    if (!c[i].pow(ni).is_one())
      fail(ErrorKind::InvalidForm,
           "self-pairing order violation at generator " + std::to_string(i));
    if (!(v[i].pow(ni) * c[i].pow(ni * (ni - 1) / 2)).is_one())
      fail(ErrorKind::InvalidForm,
           "cyclic constraint violation at generator " + std::to_string(i));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<long long> eij(k, 0);
      eij[i] = 1 % group_.orders()[i];
      eij[j] = 1 % group_.orders()[j];
      t[i][j] = value(eij) / (v[i] * v[j]);
      long long g = std::gcd(group_.orders()[i], group_.orders()[j]);
      if (!t[i][j].pow(g).is_one())
        fail(ErrorKind::InvalidForm, "cross-pairing order violation at witness pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
    }

  for (long long idx = 0; idx < n; ++idx) {
    auto x = group_.coords_of(idx);
    RootOfUnity expect;
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      expect *= v[i].pow(x[i]) * c[i].pow(x[i] * (x[i] - 1) / 2);
      for (std::size_t j = i + 1; j < k; ++j)
        if (x[j] != 0) expect *= t[i][j].pow(x[i] * x[j]);
    }
    if (expect != table_[static_cast<std::size_t>(idx)])
      fail(ErrorKind::InvalidForm,
           "polarization not biadditive; witness element index " + std::to_string(idx));
  }
}

Bicharacter QuadraticForm::polarize() const {
  std::size_t k = group_.rank();
  std::vector<RootOfUnity> diag(k);
  std::vector<std::vector<RootOfUnity>> cross(k, std::vector<RootOfUnity>(k));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long long> e(k, 0), e2(k, 0);
    e[i] = 1 % group_.orders()[i];
    e2[i] = 2 % group_.orders()[i];
    RootOfUnity vi = value(e);
    diag[i] = value(e2) / (vi * vi);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<long long> eij(k, 0), ei(k, 0), ej(k, 0);
      eij[i] = ei[i] = 1 % group_.orders()[i];
      eij[j] = ej[j] = 1 % group_.orders()[j];
      cross[i][j] = value(eij) / (value(ei) * value(ej));
    }
  return Bicharacter(group_, std::move(diag), std::move(cross));
}

bool QuadraticForm::is_nondegenerate() const { return polarize().is_nondegenerate(); }

MetricGroup::MetricGroup(QuadraticForm q) : q_(std::move(q)) {
  if (!q_.is_nondegenerate())
    fail(ErrorKind::InvalidForm, "form is degenerate; not a metric group");
}

QuadraticForm trivial_form(const FiniteAbelianGroup& a) {
  return QuadraticForm(a, std::vector<RootOfUnity>(static_cast<std::size_t>(a.order())));
}

QuadraticForm QuadraticForm::from_generator_data(
    const FiniteAbelianGroup& group, const std::vector<RootOfUnity>& gen_values,
    const std::vector<RootOfUnity>& self_pairings,
    const std::vector<std::vector<RootOfUnity>>& cross) {
  std::size_t k = group.rank();
  long long n = group.order();
  std::vector<RootOfUnity> table(static_cast<std::size_t>(n));
  for (long long idx = 0; idx < n; ++idx) {
    auto x = group.coords_of(idx);
    RootOfUnity q;
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      q *= gen_values[i].pow(x[i]) * self_pairings[i].pow(x[i] * (x[i] - 1) / 2);
      for (std::size_t j = i + 1; j < k; ++j)
        if (x[j] != 0) q *= cross[i][j].pow(x[i] * x[j]);
    }
    table[static_cast<std::size_t>(idx)] = q;
  }
  return QuadraticForm(group, std::move(table));
}

MetricGroup evaluation_form(const FiniteAbelianGroup& l) {
  FiniteAbelianGroup a = l.direct_sum(l);  // the dual has the same orders
  std::size_t k = l.rank();
  std::vector<RootOfUnity> v(2 * k), c(2 * k);
  std::vector<std::vector<RootOfUnity>> t(2 * k, std::vector<RootOfUnity>(2 * k));
  for (std::size_t i = 0; i < k; ++i) t[i][k + i] = RootOfUnity(l.orders()[i], 1);
  return MetricGroup(QuadraticForm::from_generator_data(a, v, c, t));
}

MetricGroup split_form(long long n, long long p) {
  if (p == 2) fail(ErrorKind::EvenPrime, "split form needs an odd prime");
  if (p < 2) fail(ErrorKind::ParseError, "split form needs an odd prime");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(ErrorKind::ParseError, std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorKind::ParseError, "split form needs n >= 1");
  return evaluation_form(
      FiniteAbelianGroup(std::vector<long long>(static_cast<std::size_t>(n), p)));
}

std::vector<QuadraticForm> enumerate_quadratic_forms(const FiniteAbelianGroup& a,
                                                     bool nondegenerate_only,
                                                     long long order_cap) {
  if (a.order() > order_cap)
    fail(ErrorKind::CapExceeded, "form enumeration beyond group-order cap");
  std::size_t k = a.rank();

  // Free parameters: per odd factor the self-pairing c in mu_n (the
  // generator value is then forced to c^{-(n-1)/2}); per even factor the
  // generator value v in mu_2n (self-pairing is then v^2); per pair i<j the
  // cross pairing in mu_gcd.  This hits every form exactly once.
  struct Param {
    int kind;  // 0 odd-c, 1 even-v, 2 cross
    std::size_t i, j;
    long long radix;
  };
  std::vector<Param> params;
  for (std::size_t i = 0; i < k; ++i) {
    long long n = a.orders()[i];
    if (n % 2 == 1)
      params.push_back({0, i, i, n});
    else
      params.push_back({1, i, i, 2 * n});
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      params.push_back({2, i, j, std::gcd(a.orders()[i], a.orders()[j])});

  long long total = 1;
  for (const auto& p : params) {
    if (__builtin_mul_overflow(total, p.radix, &total) || total > (1LL << 24))
      fail(ErrorKind::CapExceeded, "form enumeration candidate count beyond cap");
  }

  std::vector<QuadraticForm> out;
  std::vector<long long> digit(params.size(), 0);
  while (true) {
    std::vector<RootOfUnity> v(k), c(k);
    std::vector<std::vector<RootOfUnity>> cross(k, std::vector<RootOfUnity>(k));
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
      const auto& p = params[pi];
      long long e = digit[pi];
      if (p.kind == 0) {
        long long n = a.orders()[p.i];
        c[p.i] = RootOfUnity(n, e);
        v[p.i] = c[p.i].pow(-(n - 1) / 2);
      } else if (p.kind == 1) {
        long long n = a.orders()[p.i];
        v[p.i] = RootOfUnity(2 * n, e);
        c[p.i] = v[p.i].pow(2);
      } else {
        cross[p.i][p.j] = RootOfUnity(p.radix, e);
      }
    }
    QuadraticForm q = QuadraticForm::from_generator_data(a, v, c, cross);
    if (!nondegenerate_only || q.is_nondegenerate()) out.push_back(std::move(q));

    std::size_t pos = params.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < params[pos].radix) {
        done = false;
        break;
      }
      digit[pos] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace mgt
