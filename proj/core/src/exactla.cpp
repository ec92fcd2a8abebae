#include "locind/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace locind {

std::string to_string(const ExactScalar& x) { return x.get_str(); }

ExactScalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto check_int = [](const std::string& part) {
    std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!check_int(s)) throw std::invalid_argument("malformed rational: " + s);
    return ExactScalar(mpz_class(s[0] == '+' ? s.substr(1) : s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + s);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  ExactScalar q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.emplace(Key{i, i}, 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<ExactScalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.entries_.emplace(Key{i, j}, rows[i][j]);
  }
  return m;
}

void SparseMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
}

void SparseMatrix::add(std::size_t r, std::size_t c, const ExactScalar& value) {
  check_index(r, c);
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace(Key{r, c}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void SparseMatrix::set(std::size_t r, std::size_t c, const ExactScalar& value) {
  check_index(r, c);
  if (value == 0)
    entries_.erase(Key{r, c});
  else
    entries_[Key{r, c}] = value;
}

ExactScalar SparseMatrix::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  auto it = entries_.find(Key{r, c});
  return it == entries_.end() ? ExactScalar(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [k, v] : entries_) t.entries_.emplace(Key{k.second, k.first}, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes do not compose");
  // Group rhs by row for the inner loop.
  std::vector<std::vector<std::pair<std::size_t, const ExactScalar*>>> rhs_rows(rhs.rows_);
  for (const auto& [k, v] : rhs.entries_) rhs_rows[k.first].emplace_back(k.second, &v);
  SparseMatrix out(rows_, rhs.cols_);
  for (const auto& [k, v] : entries_)
    for (const auto& [col, w] : rhs_rows[k.second]) out.add(k.first, col, v * *w);
  return out;
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix out = *this;
  for (auto& [k, v] : out.entries_) v = -v;
  return out;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vector out(rows_, 0);
  for (const auto& [k, x] : entries_) out[k.first] += x * v[k.second];
  return out;
}

std::vector<std::vector<ExactScalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<ExactScalar>> d(rows_, std::vector<ExactScalar>(cols_, 0));
  for (const auto& [k, v] : entries_) d[k.first][k.second] = v;
  return d;
}

// ---------------------------------------------------------------------------

namespace {

using Row = std::map<std::size_t, ExactScalar>;

// Row echelon form: pivot column -> row whose leading entry (at that column)
// is 1. Pivot rows are reduced against earlier pivots only.
struct Echelon {
  std::map<std::size_t, Row> pivots;

  // Reduces `row` against the pivots; returns true if it added a new pivot.
  bool insert(Row row) {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const ExactScalar coef = it->second;
      for (const auto& [c, v] : p->second) {
        auto [e, inserted] = row.try_emplace(c, -coef * v);
        if (!inserted) {
          e->second -= coef * v;
          if (e->second == 0) row.erase(e);
        }
      }
      it = row.upper_bound(col);
    }
    if (row.empty()) return false;
    const ExactScalar lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    pivots.emplace(row.begin()->first, std::move(row));
    return true;
  }

  // Fully reduces every pivot row against later pivots (RREF).
  void reduce() {
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Row& row = it->second;
      const std::size_t lead = it->first;
      auto e = row.upper_bound(lead);
      while (e != row.end()) {
        auto p = pivots.find(e->first);
        if (p == pivots.end()) {
          ++e;
          continue;
        }
        const std::size_t col = e->first;
        const ExactScalar coef = e->second;
        for (const auto& [c, v] : p->second) {
          auto [x, inserted] = row.try_emplace(c, -coef * v);
          if (!inserted) {
            x->second -= coef * v;
            if (x->second == 0) row.erase(x);
          }
        }
        e = row.upper_bound(col);
      }
    }
  }
};

Echelon echelon_of(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows());
  for (const auto& [k, v] : m.entries()) rows[k.first].emplace(k.second, v);
  Echelon e;
  for (auto& r : rows)
    if (!r.empty()) e.insert(std::move(r));
  return e;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) { return echelon_of(m).pivots.size(); }

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  Echelon e = echelon_of(m);
  e.reduce();
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (e.pivots.count(free)) continue;
    Vector x(m.cols(), 0);
    x[free] = 1;
    for (const auto& [pc, row] : e.pivots) {
      auto it = row.find(free);
      if (it != row.end()) x[pc] = -it->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t homology_dim(const SparseMatrix& d_out, const SparseMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("homology_dim: d_out and d_in do not compose");
  if (!(d_out * d_in).is_zero())
    throw CompositionNonzero("homology_dim: d_out * d_in != 0");
  return d_out.cols() - rank(d_out) - rank(d_in);
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  // Augmented echelon form; the system is inconsistent iff the rhs column
  // becomes a pivot.
  const std::size_t rhs_col = m.cols();
  std::vector<Row> rows(m.rows());
  for (const auto& [k, v] : m.entries()) rows[k.first].emplace(k.second, v);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) rows[i].emplace(rhs_col, b[i]);
  Echelon e;
  for (auto& r : rows)
    if (!r.empty()) e.insert(std::move(r));
  if (e.pivots.count(rhs_col)) return std::nullopt;
  e.reduce();
  Vector x(m.cols(), 0);
  for (const auto& [pc, row] : e.pivots) {
    auto it = row.find(rhs_col);
    if (it != row.end()) x[pc] = it->second;
  }
  return x;
}

SparseMatrix inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (rank(m) != n) throw std::domain_error("inverse of a singular matrix");
  SparseMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n, 0);
    e[j] = 1;
    auto x = solve(m, e);
    if (!x) throw std::domain_error("inverse of a singular matrix");
    for (std::size_t i = 0; i < n; ++i) inv.set(i, j, (*x)[i]);
  }
  return inv;
}

// ---------------------------------------------------------------------------

namespace {

void axpy(SparseRow& y, const ExactScalar& a, const SparseRow& x) {
  for (const auto& [c, v] : x) {
    auto [e, inserted] = y.try_emplace(c, a * v);
    if (!inserted) {
      e->second += a * v;
      if (e->second == 0) y.erase(e);
    }
  }
}

}  // namespace

std::pair<SparseRow, SparseRow> RowReducer::reduce(SparseRow row) const {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  SparseRow tag;
  auto it = row.begin();
  while (it != row.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const ExactScalar coef = it->second;
    axpy(row, -coef, p->second.row);
    axpy(tag, coef, p->second.tag);
    it = row.upper_bound(col);
  }
  return {std::move(row), std::move(tag)};
}

bool RowReducer::insert(SparseRow row, SparseRow tag) {
  auto [rem, sub] = reduce(std::move(row));
  if (rem.empty()) return false;
  // tag of the remainder = tag - (tags already subtracted)
  axpy(tag, -1, sub);
  const ExactScalar lead = rem.begin()->second;
  for (auto& [c, v] : rem) v /= lead;
  for (auto& [c, v] : tag) v /= lead;
  const std::size_t col = rem.begin()->first;
  pivots_.emplace(col, Pivot{std::move(rem), std::move(tag)});
  return true;
}

}  // namespace locind
