#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lspace {

// Bit i set <=> index i belongs to the set. Used for subsets of chord,
// vertex or coordinate indices (all bounded by 64).
using IndexSet = std::uint64_t;

inline constexpr int kMaxMatrixOrder = 64;

// Symmetric n x n matrix over F2 whose diagonal carries the framings.
// Row i is stored as a bit mask; bit j is entry (i, j). Indices are 0-based.
class FramedGraphMatrix {
 public:
  FramedGraphMatrix() = default;
  explicit FramedGraphMatrix(int n);

  // Throws PreconditionError when the rows do not form a symmetric matrix.
  static FramedGraphMatrix from_rows(int n, std::vector<std::uint64_t> rows);

  int order() const noexcept { return n_; }
  bool at(int i, int j) const { return ((rows_[i] >> j) & 1U) != 0; }
  std::uint64_t row(int i) const { return rows_[i]; }
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

  // Sets (i, j) and (j, i).
  void set(int i, int j, bool value);
  void toggle(int i, int j);

  bool framing(int i) const { return at(i, i); }

  // Principal submatrix on the (sorted) indices of the set.
  FramedGraphMatrix principal(IndexSet subset) const;

  // Block-diagonal sum; indices of `other` are shifted by order().
  FramedGraphMatrix direct_sum(const FramedGraphMatrix& other) const;

  // Exchange the labels a and b (simultaneous row and column swap).
  FramedGraphMatrix swap_labels(int a, int b) const;

  int rank() const;

  // One line per row, digits without separators.
  std::string to_string() const;

  bool operator==(const FramedGraphMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline IndexSet full_set(int n) {
  return n >= 64 ? ~IndexSet{0} : (IndexSet{1} << n) - 1;
}

}  // namespace lspace
