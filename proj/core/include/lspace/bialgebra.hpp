#pragma once

// The graded bialgebra spanned by S_n-orbits of Lagrangians, its
// four-elements and the dimensions of the quotient by their ideal.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lspace/f2sympl.hpp"

namespace lspace {

inline constexpr int kDefaultCanonicalBound = 8;

// An orbit under simultaneous permutation of the e- and f-coordinates,
// held by its minimal representative. Default value: the grade-0 unit.
class OrbitClass {
 public:
  OrbitClass() = default;

  int grade() const noexcept { return rep_.grade(); }
  const Lagrangian& representative() const noexcept { return rep_; }

  // Basis rows of the representative separated by spaces.
  std::string to_string() const;

  bool operator==(const OrbitClass&) const = default;
  auto operator<=>(const OrbitClass&) const = default;

 private:
  friend OrbitClass canonicalize(const Lagrangian& l, int bound);
  explicit OrbitClass(Lagrangian rep) : rep_(std::move(rep)) {}

  Lagrangian rep_;
};

// Minimum of the echelon row lists over all index permutations compatible
// with a sorted per-index invariant. Throws PreconditionError above `bound`.
OrbitClass canonicalize(const Lagrangian& l, int bound = kDefaultCanonicalBound);

OrbitClass product(const OrbitClass& x, const OrbitClass& y);

using TensorSum = std::map<std::pair<OrbitClass, OrbitClass>, std::int64_t>;

// Sum over all index subsets I of [L|_I] (x) [L|_{complement}].
TensorSum coproduct(const OrbitClass& x);

// Integer combination of orbit classes of one grade.
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(int grade) : grade_(grade) {}

  int grade() const noexcept { return grade_; }
  const std::map<OrbitClass, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const OrbitClass& c, std::int64_t coeff);
  LinComb& operator+=(const LinComb& other);
  bool operator==(const LinComb&) const = default;

  // Multiplies every class by y.
  friend LinComb operator*(const LinComb& a, const OrbitClass& y);

  std::string to_string() const;

 private:
  int grade_ = 0;
  std::map<OrbitClass, std::int64_t> terms_;
};

// [L] - [v1 L] - [v2 L] + [v1 v2 L] with the moves at (i, j), 0-based.
LinComb four_element(const Lagrangian& l, int i, int j);

// Sorted orbit classes of grade n. Enumeration is split over `threads`
// workers; the result does not depend on the thread count.
std::vector<OrbitClass> orbit_classes(int n, int threads = 1,
                                      int bound = kDefaultEnumerationBound);

std::uint64_t grade_dimension(int n, int threads = 1);

// (1/n!) sum over permutations of the number of fixed Lagrangians.
std::uint64_t burnside_orbit_count(int n, int threads = 1, int bound = kDefaultEnumerationBound);

struct GradeReport {
  int grade = 0;
  std::uint64_t lagrangians = 0;
  std::uint64_t orbits = 0;
  std::uint64_t burnside = 0;
  std::uint64_t relation_rows = 0;
  std::uint64_t relation_rank = 0;
  std::uint64_t dim_k = 0;
};

// Relation rows of grade n: every four-element of grade n, and the
// products of four-elements of grade k (2 <= k < n) with the classes of
// grade n - k. Each row is indexed against `basis` (the sorted classes).
std::vector<LinComb> relation_generators(int n, int threads = 1);

GradeReport grade_report(int n, int threads = 1);

inline std::uint64_t dim_K(int n, int threads = 1) { return grade_report(n, threads).dim_k; }

// Rank contributed in the quotient by the L-spaces of `samples` random
// ribbon graphs with n edges: rank(relations + realized) - rank(relations).
struct RealizedReport {
  int grade = 0;
  std::uint64_t distinct_classes = 0;
  std::uint64_t realized_rank = 0;
  std::uint64_t dim_k = 0;
};

RealizedReport realized_report(int n, int samples, std::uint64_t seed, int threads = 1);

}  // namespace lspace
