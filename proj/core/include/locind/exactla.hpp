#ifndef LOCIND_EXACTLA_HPP
#define LOCIND_EXACTLA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace locind {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using ExactScalar = mpq_class;
using Vector = std::vector<ExactScalar>;

std::string to_string(const ExactScalar& x);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or a
/// zero denominator.
ExactScalar parse_scalar(std::string_view text);

class CompositionNonzero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse matrix over Q. Zero entries are never stored.
class SparseMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<ExactScalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  /// Adds `value` to entry (r, c); the entry is erased if it becomes zero.
  void add(std::size_t r, std::size_t c, const ExactScalar& value);
  void set(std::size_t r, std::size_t c, const ExactScalar& value);
  ExactScalar get(std::size_t r, std::size_t c) const;

  const std::map<Key, ExactScalar>& entries() const { return entries_; }

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator-() const;
  Vector apply(const Vector& v) const;
  std::vector<std::vector<ExactScalar>> to_dense() const;

  bool operator==(const SparseMatrix& other) const = default;

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, ExactScalar> entries_;
};

std::size_t rank(const SparseMatrix& m);

/// Q-basis of the null space, one vector per free column (cols - rank vectors).
std::vector<Vector> kernel_basis(const SparseMatrix& m);

/// dim ker(d_out) - rank(d_in). Throws CompositionNonzero when d_out * d_in != 0
/// and std::invalid_argument when the shapes do not compose.
std::size_t homology_dim(const SparseMatrix& d_out, const SparseMatrix& d_in);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b);

/// Inverse of a square matrix; throws std::domain_error when singular.
SparseMatrix inverse(const SparseMatrix& m);

/// Sparse row over Q: column -> nonzero entry.
using SparseRow = std::map<std::size_t, ExactScalar>;

/// Incremental row echelon form. Every row carries a tag (a sparse vector
/// in a separate coordinate space) that follows it through the elimination,
/// so reduce() reports which combination of tags was subtracted.
class RowReducer {
 public:
  /// Reduces the row; adds it as a new pivot row when a remainder is left.
  bool insert(SparseRow row, SparseRow tag = {});
  /// Remainder of `row` modulo the span, and the accumulated tag of what was
  /// subtracted (row = remainder + combination of inserted rows).
  std::pair<SparseRow, SparseRow> reduce(SparseRow row) const;
  bool in_span(const SparseRow& row) const { return reduce(row).first.empty(); }
  std::size_t rank() const { return pivots_.size(); }

 private:
  struct Pivot {
    SparseRow row;
    SparseRow tag;
  };
  std::map<std::size_t, Pivot> pivots_;
};

}  // namespace locind

#endif  // LOCIND_EXACTLA_HPP
