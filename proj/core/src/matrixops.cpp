#include "lspace/matrixops.hpp"

#include <bit>
#include <string>
#include <vector>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

void check_subset(const FramedGraphMatrix& m, IndexSet j) {
  if ((j & ~full_set(m.order())) != 0) {
    throw PreconditionError("subset mentions an index beyond " + std::to_string(m.order()));
  }
}

void check_index(const FramedGraphMatrix& m, int a) {
  if (a < 0 || a >= m.order()) {
    throw PreconditionError("vertex " + std::to_string(a + 1) + " out of range");
  }
}

std::vector<int> members(IndexSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

}  // namespace

bool cohn_lempel(const FramedGraphMatrix& m, IndexSet j) {
  check_subset(m, j);
  const FramedGraphMatrix h = m.principal(j);
  return h.rank() == h.order();
}

std::vector<std::uint64_t> invert_f2(std::vector<std::uint64_t> rows, int n) {
  std::vector<std::uint64_t> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = std::uint64_t{1} << i;
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && !((rows[p] >> col) & 1U)) ++p;
    if (p == n) throw PreconditionError("matrix is singular over F2");
    std::swap(rows[p], rows[col]);
    std::swap(inv[p], inv[col]);
    for (int r = 0; r < n; ++r) {
      if (r != col && ((rows[r] >> col) & 1U)) {
        rows[r] ^= rows[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

FramedGraphMatrix partial_dual_matrix(const FramedGraphMatrix& m, IndexSet j) {
  check_subset(m, j);
  const int n = m.order();
  const std::vector<int> js = members(j);
  const std::vector<int> is = members(full_set(n) & ~j);
  const int k = static_cast<int>(js.size());

  std::vector<std::uint64_t> h(k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (m.at(js[a], js[b])) h[a] |= std::uint64_t{1} << b;
    }
  }
  std::vector<std::uint64_t> hinv;
  try {
    hinv = invert_f2(h, k);
  } catch (const PreconditionError&) {
    throw PreconditionError("principal minor on the dual set is singular (Cohn-Lempel fails)");
  }

  // Row r of B H^-1 in J-local coordinates, for r in I.
  auto times_hinv = [&](std::uint64_t local) {
    std::uint64_t out = 0;
    for (int a = 0; a < k; ++a) {
      if ((local >> a) & 1U) out ^= hinv[a];
    }
    return out;
  };
  auto local_j = [&](int r) {
    std::uint64_t out = 0;
    for (int a = 0; a < k; ++a) {
      if (m.at(r, js[a])) out |= std::uint64_t{1} << a;
    }
    return out;
  };

  std::vector<std::uint64_t> out(n, 0);
  auto put = [&](int r, int c) { out[r] ^= std::uint64_t{1} << c; };
  std::vector<std::uint64_t> bh(n, 0);
  for (int r : is) bh[r] = times_hinv(local_j(r));
  for (int r : is) {
    for (int c : is) {
      const bool a = m.at(r, c);
      const bool corr = (std::popcount(bh[r] & local_j(c)) & 1) != 0;
      if (a != corr) put(r, c);
    }
    for (int b = 0; b < k; ++b) {
      if ((bh[r] >> b) & 1U) {
        put(r, js[b]);
        put(js[b], r);
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if ((hinv[a] >> b) & 1U) put(js[a], js[b]);
    }
  }
  try {
    return FramedGraphMatrix::from_rows(n, std::move(out));
  } catch (const PreconditionError& e) {
    throw ConsistencyError(std::string("partial dual matrix: ") + e.what());
  }
}

FramedGraphMatrix local_complement(const FramedGraphMatrix& m, int a) {
  check_index(m, a);
  if (!m.framing(a)) {
    throw PreconditionError("local complementation needs an odd vertex, " + std::to_string(a + 1) +
                            " is even");
  }
  return partial_dual_matrix(m, IndexSet{1} << a);
}

FramedGraphMatrix pivot_formula(const FramedGraphMatrix& m, int a, int b) {
  check_index(m, a);
  check_index(m, b);
  if (a == b) throw PreconditionError("pivot needs two distinct vertices");
  if (m.framing(a) || m.framing(b)) throw PreconditionError("pivot needs two even vertices");
  if (!m.at(a, b)) throw PreconditionError("pivot needs adjacent vertices");
  return partial_dual_matrix(m, (IndexSet{1} << a) | (IndexSet{1} << b));
}

FramedGraphMatrix pivot(const FramedGraphMatrix& m, int a, int b) {
  return pivot_formula(m, a, b).swap_labels(a, b);
}

BivariatePolynomial interlace_polynomial(const FramedGraphMatrix& m, int bound) {
  const int n = m.order();
  if (n > bound) {
    throw PreconditionError("interlace polynomial of order " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(bound));
  }
  // count[s][r]: subsets of size s whose principal submatrix has rank r.
  std::vector<std::vector<std::uint64_t>> count(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    std::uint64_t basis[64] = {};
    int rank = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      std::uint64_t v = m.row(std::countr_zero(rest)) & s;
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
    ++count[std::popcount(s)][rank];
  }

  std::vector<std::vector<std::int64_t>> binom(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
  }
  BivariatePolynomial q;
  for (int s = 0; s <= n; ++s) {
    for (int r = 0; r <= s; ++r) {
      const auto c = static_cast<std::int64_t>(count[s][r]);
      if (c == 0) continue;
      const int k = s - r;
      // (x-1)^r (y-1)^k
      for (int a = 0; a <= r; ++a) {
        for (int b = 0; b <= k; ++b) {
          const std::int64_t sign = ((r - a) + (k - b)) % 2 == 0 ? 1 : -1;
          q.add_term(sign * c * binom[r][a] * binom[k][b], a, b);
        }
      }
    }
  }
  return q;
}

Lagrangian graph_to_lspace(const FramedGraphMatrix& m) {
  const int n = m.order();
  if (n > kMaxGrade) throw PreconditionError("matrix too large for a Lagrangian");
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = (std::uint64_t{1} << i) | (m.row(i) << n);
  return Lagrangian::from_rows(n, rows);
}

}  // namespace lspace
