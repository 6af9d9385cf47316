#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace lspace {

// Sparse integer row: (column, value) pairs with distinct columns.
using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

inline constexpr std::uint32_t kPrimeA = 1000000007U;
inline constexpr std::uint32_t kPrimeB = 998244353U;

// Rank of the row set reduced modulo the prime p.
std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::size_t cols, std::uint32_t p);

// Rank modulo kPrimeA and kPrimeB, computed concurrently. Throws
// ConsistencyError when the two disagree.
std::size_t two_prime_rank(const std::vector<SparseRow>& rows, std::size_t cols);

}  // namespace lspace
