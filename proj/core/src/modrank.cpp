#include "lspace/modrank.hpp"

#include <future>
#include <string>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e != 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::size_t cols, std::uint32_t p) {
  const std::uint64_t mod = p;
  // basis[c] holds a row with pivot c, normalized to 1 there.
  std::vector<std::vector<std::uint64_t>> basis(cols);
  std::size_t rank = 0;
  std::vector<std::uint64_t> v(cols);
  for (const SparseRow& row : rows) {
    if (rank == cols) break;
    std::fill(v.begin(), v.end(), 0);
    for (const auto& [c, x] : row) {
      const std::int64_t r = x % static_cast<std::int64_t>(mod);
      v[c] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(mod) : r);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (v[c] == 0) continue;
      if (basis[c].empty()) {
        const std::uint64_t inv = pow_mod(v[c], mod - 2, mod);
        for (std::size_t t = c; t < cols; ++t) v[t] = v[t] * inv % mod;
        basis[c] = v;
        ++rank;
        break;
      }
      const std::uint64_t f = v[c];
      const auto& b = basis[c];
      for (std::size_t t = c; t < cols; ++t) {
        if (b[t] != 0) v[t] = (v[t] + (mod - f) * b[t]) % mod;
      }
    }
  }
  return rank;
}

std::size_t two_prime_rank(const std::vector<SparseRow>& rows, std::size_t cols) {
  auto a = std::async(std::launch::async, [&] { return rank_mod_p(rows, cols, kPrimeA); });
  const std::size_t b = rank_mod_p(rows, cols, kPrimeB);
  const std::size_t ra = a.get();
  if (ra != b) {
    throw ConsistencyError("rank disagreement between primes: " + std::to_string(ra) + " vs " +
                           std::to_string(b));
  }
  return ra;
}

}  // namespace lspace
