#include "mgt/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mgt {

namespace {

// closure of S (sorted index set, already a subgroup) and one extra element
std::vector<long long> extend_subgroup(const FiniteAbelianGroup& g,
                                       const std::vector<long long>& s, long long x_idx) {
  std::set<long long> have(s.begin(), s.end());
  auto x = g.coords_of(x_idx);
  std::vector<long long> cur = x;
  while (!have.count(g.index_of(cur))) {
    // add the coset S + cur
    for (long long si : s) have.insert(g.index_of(g.add(g.coords_of(si), cur)));
    cur = g.add(cur, x);
  }
  return {have.begin(), have.end()};
}

long long subgroup_element_order(const FiniteAbelianGroup& g, long long idx) {
  return g.element_order(g.coords_of(idx));
}

}  // namespace

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<long long> element_indices)
    : parent_(std::move(parent)), elements_(std::move(element_indices)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  std::set<long long> have(elements_.begin(), elements_.end());
  if (!have.count(0)) fail(ErrorKind::InvalidForm, "subgroup must contain 0");
  for (long long i : elements_)
    for (long long j : elements_) {
      long long s = parent_.index_of(parent_.add(parent_.coords_of(i), parent_.coords_of(j)));
      if (!have.count(s)) fail(ErrorKind::InvalidForm, "element set not closed under addition");
    }
  if (parent_.order() % static_cast<long long>(elements_.size()) != 0)
    fail(ErrorKind::InvalidForm, "subgroup order does not divide group order");

  // minimal-cardinality generating list: lower bound from p-ranks, then DFS
  long long h = static_cast<long long>(elements_.size());
  if (h == 1) return;
  std::size_t lower = 1;
  {
    long long rest = h;
    for (long long p = 2; p * p <= rest || rest > 1; ++p) {
      if (p * p > rest) p = rest;  // final prime
      if (rest % p != 0) continue;
      while (rest % p == 0) rest /= p;
      // rank_p = log_p |H / pH|
      std::set<long long> ph;
      for (long long i : elements_)
        ph.insert(parent_.index_of(parent_.scalar_mul(p, parent_.coords_of(i))));
      long long quot = h / static_cast<long long>(ph.size());
      std::size_t rank = 0;
      while (quot > 1) {
        quot /= p;
        ++rank;
      }
      lower = std::max(lower, rank);
    }
  }

  long long max_ord = 1;
  for (long long e : elements_) max_ord = std::max(max_ord, subgroup_element_order(parent_, e));

  for (std::size_t want = lower; want <= elements_.size(); ++want) {
    std::vector<long long> chosen;
    std::vector<long long> span = {0};
    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
      if (span.size() == elements_.size()) return true;
      if (depth == want) return false;
      for (long long cand : elements_) {
        if (cand == 0) continue;
        if (std::binary_search(span.begin(), span.end(), cand)) continue;
        auto bigger = extend_subgroup(parent_, span, cand);
        // growth bound: remaining slots must be able to reach |H|
        long long reach = static_cast<long long>(bigger.size());
        for (std::size_t s = depth + 1; s < want; ++s) reach = reach * max_ord;
        if (reach < h) continue;
        auto saved_span = span;
        span = bigger;
        chosen.push_back(cand);
        if (dfs(depth + 1)) return true;
        chosen.pop_back();
        span = std::move(saved_span);
      }
      return false;
    };
    if (dfs(0)) {
      for (long long c : chosen) generators_.push_back(parent_.coords_of(c));
      return;
    }
  }
  fail(ErrorKind::NoSolution, "generator search failed");  // unreachable
}

bool Subgroup::contains_index(long long idx) const {
  return std::binary_search(elements_.begin(), elements_.end(), idx);
}

Subgroup::Basis Subgroup::basis() const {
  Basis out;
  if (elements_.size() == 1) return out;
  // split into p-parts and decompose each as a direct sum of cyclic p-groups
  long long h = static_cast<long long>(elements_.size());
  std::vector<long long> primes;
  long long m = h;
  for (long long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);

  for (long long p : primes) {
    // p-part: elements of p-power order
    std::vector<long long> part;
    for (long long idx : elements_) {
      long long o = subgroup_element_order(parent_, idx);
      while (o % p == 0) o /= p;
      if (o == 1) part.push_back(idx);
    }
    // peel off cyclic summands by DFS with exact span growth; candidates in
    // descending order so the factors come out largest first
    std::vector<long long> by_order = part;
    std::sort(by_order.begin(), by_order.end(), [&](long long x, long long y) {
      long long ox = subgroup_element_order(parent_, x), oy = subgroup_element_order(parent_, y);
      if (ox != oy) return ox > oy;
      return x < y;
    });
    std::vector<long long> span = {0};
    std::vector<std::pair<std::vector<long long>, long long>> basis_p;
    std::function<bool()> peel = [&]() -> bool {
      if (span.size() == part.size()) return true;
      for (long long idx : by_order) {
        if (idx == 0) continue;
        if (std::binary_search(span.begin(), span.end(), idx)) continue;
        long long want = subgroup_element_order(parent_, idx);
        auto bigger = extend_subgroup(parent_, span, idx);
        if (static_cast<long long>(bigger.size()) != static_cast<long long>(span.size()) * want)
          continue;  // not independent of the current span
        auto saved = span;
        span = bigger;
        basis_p.push_back({parent_.coords_of(idx), want});
        if (peel()) return true;
        basis_p.pop_back();
        span = std::move(saved);
      }
      return false;
    };
    if (!peel()) fail(ErrorKind::NoSolution, "cyclic decomposition search failed");
    for (auto& [coords, ord] : basis_p) {
      out.elements.push_back(coords);
      out.orders.push_back(ord);
    }
  }
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& a, long long order_cap) {
  if (a.order() > order_cap)
    fail(ErrorKind::CapExceeded, "subgroup enumeration beyond group-order cap");
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  std::vector<long long> zero = {0};
  seen.insert(zero);
  queue.push_back(zero);
  for (std::size_t at = 0; at < queue.size(); ++at) {
    auto s = queue[at];
    for (long long x = 1; x < a.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      auto t = extend_subgroup(a, s, x);
      if (seen.insert(t).second) queue.push_back(std::move(t));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(a, s);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isotropic(const Subgroup& l, const QuadraticForm& q) {
  if (l.parent() != q.group())
    fail(ErrorKind::ParentMismatch, "subgroup and form live on different groups");
  for (long long idx : l.element_indices())
    if (!q.table()[static_cast<std::size_t>(idx)].is_one()) return false;
  return true;
}

bool is_lagrangian(const Subgroup& l, const MetricGroup& m) {
  if (l.parent() != m.group())
    fail(ErrorKind::ParentMismatch, "subgroup and metric group mismatch");
  return is_isotropic(l, m.form()) && l.order() * l.order() == m.group().order();
}

bool Polarization::verify() const {
  auto ev = evaluation_form(l_abstract);
  const auto& dom = ev.group();
  if (iso.source() != dom || iso.target() != metric.group()) return false;
  if (!is_isomorphism(iso, dom.order())) return false;
  for (const auto& x : enumerate(dom))
    if (metric.form().value(iso.apply(x)) != ev.form().value(x)) return false;
  // the L summand lands in the chosen Lagrangian
  std::size_t r = l_abstract.rank();
  for (const auto& x : enumerate(dom)) {
    bool in_l_part = true;
    for (std::size_t j = r; j < 2 * r; ++j)
      if (x.coords()[j] != 0) in_l_part = false;
    if (in_l_part && !lagrangian.contains_index(iso.apply(x).index())) return false;
  }
  return true;
}

namespace {

// Backtracking for generator images: find coords z_i in `target` with
// prescribed orders, values and pairings.  Returns the first assignment in
// index order, or nullopt.
struct ImageSearch {
  const MetricGroup* m = nullptr;
  std::vector<long long> want_order;                   // order of generator i must divide this
  std::vector<RootOfUnity> want_value;                 // q(z_i)
  std::vector<std::vector<RootOfUnity>> want_pairing;  // <z_i, z_j> for i <= j
  std::vector<std::vector<long long>> fixed;           // pre-assigned leading images

  std::optional<std::vector<std::vector<long long>>> run() const {
    const auto& a = m->group();
    auto bic = m->form().polarize();
    std::size_t total = want_order.size();
    std::vector<std::vector<long long>> z(fixed);
    // candidate pools per slot
    std::vector<std::vector<long long>> pool(total);
    for (std::size_t i = fixed.size(); i < total; ++i) {
      for (long long idx = 0; idx < a.order(); ++idx) {
        auto c = a.coords_of(idx);
        if (a.element_order(c) == 0 || want_order[i] % a.element_order(c) != 0) continue;
        if (m->form().value(c) != want_value[i]) continue;
        if (bic.pair(c, c) != want_pairing[i][i]) continue;
        pool[i].push_back(idx);
      }
    }
    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
      if (depth == total) return true;
      for (long long idx : pool[depth]) {
        auto c = a.coords_of(idx);
        bool ok = true;
        for (std::size_t j = 0; j < depth && ok; ++j) {
          auto expect = (j <= depth) ? want_pairing[j][depth] : want_pairing[depth][j];
          if (bic.pair(z[j], c) != expect) ok = false;
        }
        if (!ok) continue;
        z.push_back(c);
        if (dfs(depth + 1)) return true;
        z.pop_back();
      }
      return false;
    };
    if (dfs(fixed.size())) return z;
    return std::nullopt;
  }
};

}  // namespace

std::vector<Polarization> find_polarizations(const MetricGroup& m, long long order_cap) {
  std::vector<Polarization> out;
  const auto& a = m.group();
  for (const auto& l : enumerate_subgroups(a, order_cap)) {
    if (!is_lagrangian(l, m)) continue;
    auto basis = l.basis();
    std::size_t r = basis.orders.size();
    FiniteAbelianGroup l_ab(basis.orders);
    FiniteAbelianGroup dom = l_ab.direct_sum(l_ab);

    // constraints for the dual-part images y_j: order o_j, q(y_j) = 1,
    // <y_i, y_j> = 1, <b_i, y_j> = primitive delta_ij; the L part is fixed
    // to the subgroup basis and its constraints hold since L is isotropic.
    ImageSearch search;
    search.m = &m;
    std::size_t total = 2 * r;
    search.want_order.resize(total);
    search.want_value.assign(total, RootOfUnity::one());
    search.want_pairing.assign(total, std::vector<RootOfUnity>(total, RootOfUnity::one()));
    for (std::size_t i = 0; i < r; ++i) {
      search.want_order[i] = basis.orders[i];
      search.want_order[r + i] = basis.orders[i];
      search.want_pairing[i][r + i] = RootOfUnity(basis.orders[i], 1);
    }
    search.fixed = basis.elements;
    auto z = search.run();
    if (!z) continue;

    std::size_t k = a.rank();
    std::vector<std::vector<long long>> mat(k, std::vector<long long>(total, 0));
    for (std::size_t col = 0; col < total; ++col)
      for (std::size_t row = 0; row < k; ++row) mat[row][col] = (*z)[col][row];
    Polarization pol{m, l, l_ab, Homomorphism(dom, a, mat)};
    if (!pol.verify())
      fail(ErrorKind::VerificationFailure, "polarization witness failed pullback check");
    out.push_back(std::move(pol));
  }
  return out;
}

std::optional<Homomorphism> find_isometry(const MetricGroup& from, const MetricGroup& to) {
  const auto& a1 = from.group();
  if (a1.order() != to.group().order()) return std::nullopt;
  auto b1 = from.form().polarize();
  std::size_t k1 = a1.rank();

  ImageSearch search;
  search.m = &to;
  search.want_order.resize(k1);
  search.want_value.resize(k1);
  search.want_pairing.assign(k1, std::vector<RootOfUnity>(k1));
  for (std::size_t i = 0; i < k1; ++i) {
    std::vector<long long> e(k1, 0);
    e[i] = 1 % a1.orders()[i];
    search.want_order[i] = a1.orders()[i];
    search.want_value[i] = from.form().value(e);
    for (std::size_t j = 0; j < k1; ++j) {
      std::vector<long long> ej(k1, 0);
      ej[j] = 1 % a1.orders()[j];
      search.want_pairing[i][j] = b1.pair(e, ej);
    }
  }
  auto z = search.run();
  if (!z) return std::nullopt;
  std::size_t k2 = to.group().rank();
  std::vector<std::vector<long long>> mat(k2, std::vector<long long>(k1, 0));
  for (std::size_t col = 0; col < k1; ++col)
    for (std::size_t row = 0; row < k2; ++row) mat[row][col] = (*z)[col][row];
  Homomorphism f(a1, to.group(), mat);
  if (!is_isomorphism(f, a1.order())) return std::nullopt;
  for (const auto& x : enumerate(a1))
    if (to.form().value(f.apply(x)) != from.form().value(x)) return std::nullopt;
  return f;
}

}  // namespace mgt
