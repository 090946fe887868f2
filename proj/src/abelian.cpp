#include "mgt/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mgt {

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& s) {
  std::vector<long long> orders;
  std::string token;
  std::stringstream ss(s);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) fail(ErrorKind::ParseError, "empty factor in group spec '" + s + "'");
    std::size_t pos = 0;
    long long n = 0;
    try {
      n = std::stoll(token, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad group spec '" + s + "'");
    }
    if (pos != token.size() || n < 1)
      fail(ErrorKind::ParseError, "bad group spec '" + s + "'");
    orders.push_back(n);
  }
  return FiniteAbelianGroup(orders);
}

std::string FiniteAbelianGroup::str() const {
  if (orders_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(orders_[i]);
  }
  return out;
}

long long FiniteAbelianGroup::index_of(const std::vector<long long>& coords) const {
  if (coords.size() != orders_.size())
    fail(ErrorKind::ShapeMismatch, "coordinate length does not match group rank");
  long long idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    long long c = coords[i] % orders_[i];
    if (c < 0) c += orders_[i];
    idx = idx * orders_[i] + c;
  }
  return idx;
}

std::vector<long long> FiniteAbelianGroup::coords_of(long long index) const {
  std::vector<long long> c(orders_.size(), 0);
  for (std::size_t i = orders_.size(); i-- > 0;) {
    c[i] = index % orders_[i];
    index /= orders_[i];
  }
  return c;
}

std::vector<long long> FiniteAbelianGroup::add(const std::vector<long long>& a,
                                               const std::vector<long long>& b) const {
  std::vector<long long> c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
  return c;
}

std::vector<long long> FiniteAbelianGroup::neg(const std::vector<long long>& a) const {
  std::vector<long long> c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (orders_[i] - a[i]) % orders_[i];
  return c;
}

std::vector<long long> FiniteAbelianGroup::scalar_mul(long long k,
                                                      const std::vector<long long>& a) const {
  std::vector<long long> c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    long long v = (a[i] % orders_[i]) * (k % orders_[i]) % orders_[i];
    if (v < 0) v += orders_[i];
    c[i] = v;
  }
  return c;
}

long long FiniteAbelianGroup::element_order(const std::vector<long long>& a) const {
  long long ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    long long n = orders_[i];
    long long o = n / std::gcd(a[i] % n, n);
    ord = std::lcm(ord, o);
  }
  return ord;
}

FiniteAbelianGroup FiniteAbelianGroup::direct_sum(const FiniteAbelianGroup& other) const {
  std::vector<long long> orders = orders_;
  orders.insert(orders.end(), other.orders_.begin(), other.orders_.end());
  return FiniteAbelianGroup(orders);
}

Element::Element(FiniteAbelianGroup group, std::vector<long long> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.orders().size())
    fail(ErrorKind::ShapeMismatch, "coordinate length does not match group rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] %= group_.orders()[i];
    if (coords_[i] < 0) coords_[i] += group_.orders()[i];
  }
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c == 0; });
}

Element operator+(const Element& a, const Element& b) {
  if (a.group_ != b.group_) fail(ErrorKind::ParentMismatch, "adding elements of different groups");
  return Element(a.group_, a.group_.add(a.coords_, b.coords_));
}

Element operator-(const Element& a) { return Element(a.group_, a.group_.neg(a.coords_)); }

std::string Element::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

std::vector<Element> enumerate(const FiniteAbelianGroup& g) {
  long long n = g.order();
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.emplace_back(g, g.coords_of(i));
  return out;
}

Homomorphism::Homomorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                           std::vector<std::vector<long long>> matrix)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
  if (m_.size() != target_.orders().size())
    fail(ErrorKind::ShapeMismatch, "homomorphism matrix has wrong row count");
  for (auto& row : m_) {
    if (row.size() != source_.orders().size())
      fail(ErrorKind::ShapeMismatch, "homomorphism matrix has wrong column count");
  }
  for (std::size_t j = 0; j < m_.size(); ++j) {
    long long mj = target_.orders()[j];
    for (auto& v : m_[j]) {
      v %= mj;
      if (v < 0) v += mj;
    }
  }
}

Homomorphism Homomorphism::identity(const FiniteAbelianGroup& g) {
  std::size_t k = g.orders().size();
  std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1 % g.orders()[i];
  return Homomorphism(g, g, m);
}

Homomorphism Homomorphism::zero(const FiniteAbelianGroup& source,
                                const FiniteAbelianGroup& target) {
  std::vector<std::vector<long long>> m(target.orders().size(),
                                        std::vector<long long>(source.orders().size(), 0));
  return Homomorphism(source, target, m);
}

bool Homomorphism::well_defined() const {
  for (std::size_t j = 0; j < m_.size(); ++j) {
    long long mj = target_.orders()[j];
    for (std::size_t i = 0; i < m_[j].size(); ++i) {
      long long ni = source_.orders()[i];
      if ((m_[j][i] % mj) * (ni % mj) % mj != 0) return false;
    }
  }
  return true;
}

std::vector<long long> Homomorphism::apply_coords(const std::vector<long long>& coords) const {
  std::vector<long long> out(target_.orders().size(), 0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    long long mj = target_.orders()[j];
    long long acc = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      acc = (acc + m_[j][i] * (coords[i] % mj)) % mj;
    out[j] = acc;
  }
  return out;
}

Element Homomorphism::apply(const Element& x) const {
  if (x.group() != source_) fail(ErrorKind::ParentMismatch, "element not in homomorphism source");
  return Element(target_, apply_coords(x.coords()));
}

std::string Homomorphism::str() const {
  std::string out = "[";
  for (std::size_t j = 0; j < m_.size(); ++j) {
    if (j) out += ";";
    for (std::size_t i = 0; i < m_[j].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(m_[j][i]);
    }
  }
  return out + "]";
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  if (g.target() != f.source())
    fail(ErrorKind::ShapeMismatch, "composition shape mismatch");
  const auto& a = f.matrix();
  const auto& b = g.matrix();
  std::size_t rows = a.size(), mid = b.size(), cols = mid ? b[0].size() : g.source().rank();
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
  for (std::size_t j = 0; j < rows; ++j) {
    long long mj = f.target().orders()[j];
    for (std::size_t i = 0; i < cols; ++i) {
      long long acc = 0;
      for (std::size_t t = 0; t < mid; ++t) acc = (acc + a[j][t] % mj * (b[t][i] % mj)) % mj;
      m[j][i] = acc;
    }
  }
  return Homomorphism(g.source(), f.target(), m);
}

bool is_isomorphism(const Homomorphism& f, long long cap) {
  if (f.source().order() != f.target().order()) return false;
  long long n = f.source().order();
  if (n > cap) fail(ErrorKind::CapExceeded, "isomorphism check beyond cap");
  if (!f.well_defined()) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (long long i = 0; i < n; ++i) {
    long long j = f.target().index_of(f.apply_coords(f.source().coords_of(i)));
    if (seen[static_cast<std::size_t>(j)]) return false;
    seen[static_cast<std::size_t>(j)] = 1;
  }
  return true;
}

RootOfUnity DualGroup::pair(const std::vector<long long>& chi,
                            const std::vector<long long>& a) const {
  long long e = base.exponent();
  long long acc = 0;
  const auto& orders = base.orders();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    long long c = chi[i] % orders[i];
    long long x = a[i] % orders[i];
    acc = (acc + c * x % e * (e / orders[i])) % e;
  }
  return RootOfUnity(e, acc);
}

DualGroup dual(const FiniteAbelianGroup& a) { return DualGroup{a, a}; }

long long endomorphism_candidate_count(const FiniteAbelianGroup& src,
                                       const FiniteAbelianGroup& dst) {
  long long count = 1;
  for (long long mj : dst.orders())
    for (long long ni : src.orders()) {
      long long g = std::gcd(ni, mj);
      if (__builtin_mul_overflow(count, g, &count)) return -1;  // overflow marker
    }
  return count;
}

void for_each_homomorphism(
    const FiniteAbelianGroup& src, const FiniteAbelianGroup& dst,
    const std::function<bool(const std::vector<std::vector<long long>>&)>& visit) {
  std::size_t rows = dst.rank(), cols = src.rank();
  // Entry (j,i) ranges over multiples of m_j / gcd(n_i, m_j): exactly the
  // values making the map well defined on the i-th cyclic factor.
  std::vector<long long> radix(rows * cols, 1), step(rows * cols, 0);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t i = 0; i < cols; ++i) {
      long long g = std::gcd(src.orders()[i], dst.orders()[j]);
      radix[j * cols + i] = g;
      step[j * cols + i] = dst.orders()[j] / g;
    }
  std::vector<long long> digit(rows * cols, 0);
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
  while (true) {
    for (std::size_t j = 0; j < rows; ++j)
      for (std::size_t i = 0; i < cols; ++i)
        m[j][i] = digit[j * cols + i] * step[j * cols + i];
    if (!visit(m)) return;
    std::size_t pos = rows * cols;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < radix[pos]) break;
      digit[pos] = 0;
      if (pos == 0) return;
    }
    if (rows * cols == 0) return;  // trivial shape: single empty matrix
  }
}

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAbelianGroup& src,
                                                  const FiniteAbelianGroup& dst,
                                                  long long scan_cap) {
  long long count = endomorphism_candidate_count(src, dst);
  if (count < 0 || count > scan_cap)
    fail(ErrorKind::CapExceeded, "homomorphism enumeration beyond scan cap");
  std::vector<Homomorphism> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_homomorphism(src, dst, [&](const std::vector<std::vector<long long>>& m) {
    out.emplace_back(src, dst, m);
    return true;
  });
  return out;
}

std::vector<Homomorphism> enumerate_automorphisms(const FiniteAbelianGroup& a,
                                                  long long order_cap, long long scan_cap) {
  if (a.order() > order_cap)
    fail(ErrorKind::CapExceeded, "automorphism enumeration beyond group-order cap");
  long long count = endomorphism_candidate_count(a, a);
  if (count < 0 || count > scan_cap)
    fail(ErrorKind::CapExceeded, "automorphism enumeration beyond scan cap");
  long long n = a.order();
  std::vector<Homomorphism> out;
  std::vector<char> seen;
  for_each_homomorphism(a, a, [&](const std::vector<std::vector<long long>>& m) {
    Homomorphism f(a, a, m);
    seen.assign(static_cast<std::size_t>(n), 0);
    bool bij = true;
    for (long long i = 0; i < n && bij; ++i) {
      long long j = a.index_of(f.apply_coords(a.coords_of(i)));
      if (seen[static_cast<std::size_t>(j)]) bij = false;
      seen[static_cast<std::size_t>(j)] = 1;
    }
    if (bij) out.push_back(std::move(f));
    return true;
  });
  return out;
}

namespace {

// Multiset of cyclic prime-power factors for every abelian group of order n.
std::vector<std::vector<long long>> abelian_groups_of_order(long long n) {
  // factor n
  std::vector<std::pair<long long, int>> factors;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      factors.push_back({p, e});
    }
  }
  if (m > 1) factors.push_back({m, 1});

  std::vector<std::vector<long long>> result = {{}};
  for (auto [p, e] : factors) {
    // partitions of e -> cyclic factors p^part
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
      if (rem == 0) {
        parts.push_back(cur);
        return;
      }
      for (int k = std::min(rem, maxp); k >= 1; --k) {
        cur.push_back(k);
        rec(rem - k, k);
        cur.pop_back();
      }
    };
    rec(e, e);
    std::vector<std::vector<long long>> next;
    for (const auto& base : result)
      for (const auto& part : parts) {
        auto g = base;
        for (int k : part) {
          long long pk = 1;
          for (int t = 0; t < k; ++t) pk *= p;
          g.push_back(pk);
        }
        next.push_back(g);
      }
    result = std::move(next);
  }
  for (auto& g : result) std::sort(g.begin(), g.end());
  return result;
}

}  // namespace

std::vector<FiniteAbelianGroup> all_abelian_groups(long long max_order, bool include_trivial) {
  std::vector<FiniteAbelianGroup> out;
  if (include_trivial) out.push_back(FiniteAbelianGroup::trivial());
  for (long long n = 2; n <= max_order; ++n)
    for (const auto& orders : abelian_groups_of_order(n)) out.push_back(FiniteAbelianGroup(orders));
  return out;
}

}  // namespace mgt
