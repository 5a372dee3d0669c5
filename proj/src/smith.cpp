#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gaf/int_matrix.hpp"

namespace gaf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
  return r;
}

std::int64_t magnitude(std::int64_t x) {
  if (x == INT64_MIN) throw std::overflow_error("integer overflow in Smith normal form");
  return x < 0 ? -x : x;
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q, std::size_t from) {
  for (std::size_t c = from; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q, std::size_t from) {
  for (std::size_t r = from; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(q, m(r, src)));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Moves the smallest nonzero |entry| of the trailing block to (t, t).
bool place_pivot(IntMatrix& m, std::size_t t) {
  std::size_t br = 0, bc = 0;
  std::int64_t best = 0;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c)
      if (m(r, c) != 0 && (best == 0 || magnitude(m(r, c)) < best)) {
        best = magnitude(m(r, c));
        br = r;
        bc = c;
      }
  if (best == 0) return false;
  swap_rows(m, t, br);
  swap_cols(m, t, bc);
  return true;
}

}  // namespace

SNFResult smith_normal_form(IntMatrix m) {
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::vector<std::int64_t> diagonal;
  for (std::size_t t = 0; t < steps; ++t) {
    if (!place_pivot(m, t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        row_axpy(m, r, t, m(r, t) / m(t, t), t);
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        col_axpy(m, c, t, m(t, c) / m(t, t), t);
        if (m(t, c) != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(m, t);
        continue;
      }
      // Row and column are clear; the pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t r = t + 1; r < m.rows() && divides; ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (m(r, c) % m(t, t) != 0) {
            row_axpy(m, t, r, -1, t);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diagonal.push_back(magnitude(m(t, t)));
  }

  // gcd/lcm normalization, so the chain holds whatever the elimination order.
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      const std::int64_t g = std::gcd(diagonal[i], diagonal[j]);
      const std::int64_t l = checked_mul(diagonal[i] / g, diagonal[j]);
      diagonal[i] = g;
      diagonal[j] = l;
    }

  SNFResult result;
  result.rank = diagonal.size();
  result.free_rank = m.cols() - diagonal.size();
  for (auto d : diagonal)
    if (d >= 2) result.invariant_factors.push_back(d);
  return result;
}

}  // namespace gaf
