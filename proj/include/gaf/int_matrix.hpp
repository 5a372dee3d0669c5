#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gaf {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> entries_;
};

struct SNFResult {
  /// Nontrivial invariant factors (>= 2), each dividing the next.
  std::vector<std::int64_t> invariant_factors;
  /// Columns minus the number of nonzero diagonal entries.
  std::size_t free_rank = 0;
  /// Number of nonzero diagonal entries, i.e. the rank over the rationals.
  std::size_t rank = 0;

  friend bool operator==(const SNFResult&, const SNFResult&) = default;
};

/// Exact Smith normal form by unimodular row and column operations, pivoting
/// on the entry of smallest absolute value. Throws std::overflow_error if an
/// intermediate entry leaves the int64 range.
SNFResult smith_normal_form(IntMatrix m);

}  // namespace gaf
