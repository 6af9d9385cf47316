#include "lspace/framed_matrix.hpp"

#include <bit>
#include <string>
#include <utility>

#include "lspace/errors.hpp"

namespace lspace {

FramedGraphMatrix::FramedGraphMatrix(int n) : n_(n), rows_(n, 0) {
  if (n < 0 || n > kMaxMatrixOrder) {
    throw PreconditionError("matrix order " + std::to_string(n) + " outside [0, 64]");
  }
}

FramedGraphMatrix FramedGraphMatrix::from_rows(int n, std::vector<std::uint64_t> rows) {
  FramedGraphMatrix m(n);
  if (static_cast<int>(rows.size()) != n) throw PreconditionError("row count mismatch");
  const IndexSet mask = full_set(n);
  for (int i = 0; i < n; ++i) {
    if ((rows[i] & ~mask) != 0) throw PreconditionError("row has bits beyond column n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((((rows[i] >> j) ^ (rows[j] >> i)) & 1U) != 0) {
        throw PreconditionError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
      }
    }
  }
  m.rows_ = std::move(rows);
  return m;
}

void FramedGraphMatrix::set(int i, int j, bool value) {
  const std::uint64_t bj = std::uint64_t{1} << j;
  const std::uint64_t bi = std::uint64_t{1} << i;
  rows_[i] = value ? (rows_[i] | bj) : (rows_[i] & ~bj);
  rows_[j] = value ? (rows_[j] | bi) : (rows_[j] & ~bi);
}

void FramedGraphMatrix::toggle(int i, int j) { set(i, j, !at(i, j)); }

FramedGraphMatrix FramedGraphMatrix::principal(IndexSet subset) const {
  subset &= full_set(n_);
  std::vector<int> keep;
  for (int i = 0; i < n_; ++i) {
    if ((subset >> i) & 1U) keep.push_back(i);
  }
  const int k = static_cast<int>(keep.size());
  FramedGraphMatrix out(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (at(keep[a], keep[b])) out.rows_[a] |= std::uint64_t{1} << b;
    }
  }
  return out;
}

FramedGraphMatrix FramedGraphMatrix::direct_sum(const FramedGraphMatrix& other) const {
  FramedGraphMatrix out(n_ + other.n_);
  for (int i = 0; i < n_; ++i) out.rows_[i] = rows_[i];
  for (int i = 0; i < other.n_; ++i) out.rows_[n_ + i] = other.rows_[i] << n_;
  return out;
}

FramedGraphMatrix FramedGraphMatrix::swap_labels(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw PreconditionError("label out of range");
  FramedGraphMatrix out(n_);
  auto img = [&](int i) { return i == a ? b : (i == b ? a : i); };
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j)) out.rows_[img(i)] |= std::uint64_t{1} << img(j);
    }
  }
  return out;
}

int FramedGraphMatrix::rank() const {
  // XOR basis keyed by highest set bit.
  std::uint64_t basis[64] = {};
  int rank = 0;
  for (std::uint64_t v : rows_) {
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        ++rank;
        break;
      }
      v ^= basis[top];
    }
  }
  return rank;
}

std::string FramedGraphMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) s.push_back(at(i, j) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

}  // namespace lspace
