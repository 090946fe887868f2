#include "mgt/cochain.hpp"

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

}  // namespace

long long tuple_to_flat(const std::vector<long long>& tuple, long long base) {
  long long flat = 0;
  for (long long t : tuple) flat = flat * base + t;
  return flat;
}

std::vector<long long> flat_to_tuple(long long flat, long long base, int len) {
  std::vector<long long> tuple(static_cast<std::size_t>(len), 0);
  for (int i = len; i-- > 0;) {
    tuple[static_cast<std::size_t>(i)] = flat % base;
    flat /= base;
  }
  return tuple;
}

Cochain::Cochain(FiniteAbelianGroup group, int degree, long long modulus)
    : group_(std::move(group)), degree_(degree), modulus_(modulus) {
  if (degree < 0) fail(ErrorKind::ParseError, "cochain degree must be >= 0");
  if (modulus <= 0) fail(ErrorKind::ParseError, "cochain modulus must be positive");
  table_.assign(static_cast<std::size_t>(pow_ll(group_.order(), degree)), 0);
}

Cochain::Cochain(FiniteAbelianGroup group, int degree, long long modulus,
                 std::vector<long long> table)
    : Cochain(std::move(group), degree, modulus) {
  if (table.size() != table_.size())
    fail(ErrorKind::ShapeMismatch, "cochain table has wrong size");
  for (auto& v : table) v = mod_reduce(v, modulus_);
  table_ = std::move(table);
}

long long Cochain::at(const std::vector<long long>& idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    fail(ErrorKind::ShapeMismatch, "cochain argument count mismatch");
  return table_[static_cast<std::size_t>(tuple_to_flat(idx, group_.order()))];
}

void Cochain::set(const std::vector<long long>& idx, long long value) {
  if (static_cast<int>(idx.size()) != degree_)
    fail(ErrorKind::ShapeMismatch, "cochain argument count mismatch");
  table_[static_cast<std::size_t>(tuple_to_flat(idx, group_.order()))] =
      mod_reduce(value, modulus_);
}

bool Cochain::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](long long v) { return v == 0; });
}

bool Cochain::is_normalized() const {
  long long n = group_.order();
  for (std::size_t flat = 0; flat < table_.size(); ++flat) {
    if (table_[flat] == 0) continue;
    auto tuple = flat_to_tuple(static_cast<long long>(flat), n, degree_);
    if (std::any_of(tuple.begin(), tuple.end(), [](long long t) { return t == 0; }))
      return false;
  }
  return true;
}

Cochain Cochain::embedded(long long bigger) const {
  if (bigger % modulus_ != 0)
    fail(ErrorKind::NotDivisible, "cochain modulus does not divide target modulus");
  Cochain out(group_, degree_, bigger);
  long long scale = bigger / modulus_;
  for (std::size_t i = 0; i < table_.size(); ++i) out.table_[i] = table_[i] * scale;
  return out;
}

Cochain Cochain::operator+(const Cochain& other) const {
  if (!(group_ == other.group_) || degree_ != other.degree_ || modulus_ != other.modulus_)
    fail(ErrorKind::ShapeMismatch, "cochain addition shape mismatch");
  Cochain out(group_, degree_, modulus_);
  for (std::size_t i = 0; i < table_.size(); ++i)
    out.table_[i] = mod_reduce(table_[i] + other.table_[i], modulus_);
  return out;
}

Cochain Cochain::operator-(const Cochain& other) const {
  if (!(group_ == other.group_) || degree_ != other.degree_ || modulus_ != other.modulus_)
    fail(ErrorKind::ShapeMismatch, "cochain subtraction shape mismatch");
  Cochain out(group_, degree_, modulus_);
  for (std::size_t i = 0; i < table_.size(); ++i)
    out.table_[i] = mod_reduce(table_[i] - other.table_[i], modulus_);
  return out;
}

Cochain Cochain::scaled(long long k) const {
  Cochain out(group_, degree_, modulus_);
  long long km = mod_reduce(k, modulus_);
  for (std::size_t i = 0; i < table_.size(); ++i)
    out.table_[i] = mod_reduce(table_[i] * km, modulus_);
  return out;
}

std::string Cochain::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(table_[i]);
  }
  return s + "]";
}

Cochain differential(const Cochain& c) {
  const auto& g = c.group();
  long long n = g.order();
  int deg = c.degree();
  Cochain out(g, deg + 1, c.modulus());

  std::vector<long long> add(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      add[static_cast<std::size_t>(i * n + j)] =
          g.index_of(g.add(g.coords_of(i), g.coords_of(j)));

  std::size_t rows = out.table().size();
  std::vector<long long> tuple;
  std::vector<long long> sub(static_cast<std::size_t>(deg), 0);
  for (std::size_t flat = 0; flat < rows; ++flat) {
    tuple = flat_to_tuple(static_cast<long long>(flat), n, deg + 1);
    long long acc = 0;
    for (int i = 0; i < deg; ++i)
      sub[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(i) + 1];
    acc += c.at(sub);
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
      acc += sign * c.at(sub);
      sign = -sign;
    }
    for (int t = 0; t < deg; ++t)
      sub[static_cast<std::size_t>(t)] = tuple[static_cast<std::size_t>(t)];
    acc += sign * c.at(sub);
    out.table()[flat] = mod_reduce(acc, c.modulus());
  }
  return out;
}

bool is_cocycle(const Cochain& c) { return differential(c).is_zero(); }

std::pair<Cochain, Cochain> normalize_cocycle(const Cochain& c) {
  if (!is_cocycle(c)) fail(ErrorKind::InvalidCocycle, "normalization input is not a cocycle");
  const auto& g = c.group();
  long long n = g.order();
  int deg = c.degree();
  if (deg == 0 || c.is_normalized())
    return {c, Cochain(g, std::max(0, deg - 1), c.modulus())};

  // want sigma with (c - d sigma) zero on every tuple containing the identity
  long long cols_n = 1;
  for (int i = 0; i < deg - 1; ++i) cols_n *= n;
  std::vector<long long> bad_rows;
  for (long long flat = 0; flat < static_cast<long long>(c.table().size()); ++flat) {
    auto tuple = flat_to_tuple(flat, n, deg);
    if (std::any_of(tuple.begin(), tuple.end(), [](long long t) { return t == 0; }))
      bad_rows.push_back(flat);
  }
  IntMat mat(bad_rows.size(), std::vector<long long>(static_cast<std::size_t>(cols_n), 0));
  std::vector<long long> rhs(bad_rows.size(), 0);
  for (long long col = 0; col < cols_n; ++col) {
    Cochain basis(g, deg - 1, c.modulus());
    basis.table()[static_cast<std::size_t>(col)] = 1;
    Cochain db = differential(basis);
    for (std::size_t r = 0; r < bad_rows.size(); ++r)
      mat[r][static_cast<std::size_t>(col)] = db.table()[static_cast<std::size_t>(bad_rows[r])];
  }
  for (std::size_t r = 0; r < bad_rows.size(); ++r)
    rhs[r] = c.table()[static_cast<std::size_t>(bad_rows[r])];
  auto sol = solve_mod(mat, rhs, c.modulus());
  if (!sol) fail(ErrorKind::NoSolution, "cocycle admits no normalized representative");
  Cochain sigma(g, deg - 1, c.modulus(), *sol);
  Cochain normalized = c - differential(sigma);
  return {normalized, sigma};
}

}  // namespace mgt
