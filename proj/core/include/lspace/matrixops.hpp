#pragma once

// Matrix calculus on framed graphs over F2. Indices are 0-based; subsets
// are IndexSet bit masks.

#include "lspace/f2sympl.hpp"
#include "lspace/framed_matrix.hpp"
#include "lspace/polynomial.hpp"

namespace lspace {

inline constexpr int kDefaultInterlaceBound = 20;

// True iff the principal submatrix on J is invertible over F2.
bool cohn_lempel(const FramedGraphMatrix& m, IndexSet j);

// Inverse of a square F2 matrix given by rows; throws PreconditionError
// when singular.
std::vector<std::uint64_t> invert_f2(std::vector<std::uint64_t> rows, int n);

// Matrix of the partial dual at J: blocks A + B H^-1 B^T, B H^-1, H^-1 B^T,
// H^-1 with H the J x J block. Throws PreconditionError if H is singular.
FramedGraphMatrix partial_dual_matrix(const FramedGraphMatrix& m, IndexSet j);

// Requires framing(a) = 1.
FramedGraphMatrix local_complement(const FramedGraphMatrix& m, int a);

// Requires a, b even and adjacent. The dual at {a, b} followed by the
// exchange of labels a and b.
FramedGraphMatrix pivot(const FramedGraphMatrix& m, int a, int b);

// The same dual without the label exchange.
FramedGraphMatrix pivot_formula(const FramedGraphMatrix& m, int a, int b);

// Sum over vertex subsets S of (x-1)^rank(M[S]) (y-1)^nullity(M[S]).
BivariatePolynomial interlace_polynomial(const FramedGraphMatrix& m,
                                         int bound = kDefaultInterlaceBound);

// Row span of (Id | M).
Lagrangian graph_to_lspace(const FramedGraphMatrix& m);

}  // namespace lspace
