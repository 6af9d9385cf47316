#pragma once

// Linear algebra in the standard symplectic space V = F2^{2n} with basis
// e_0..e_{n-1}, f_0..f_{n-1} and form (e_i, f_j) = delta_ij.
//
// Vectors are packed into one 64-bit word: coordinate e_i is bit i and
// f_i is bit n + i, which bounds the grade by 32. All indices are 0-based.

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lspace/framed_matrix.hpp"

namespace lspace {

inline constexpr int kMaxGrade = 32;
inline constexpr int kDefaultEnumerationBound = 6;

class SympVector {
 public:
  SympVector() = default;
  SympVector(int n, std::uint64_t bits);

  static SympVector e(int n, int i);
  static SympVector f(int n, int i);

  int grade() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::uint64_t e_part() const noexcept;
  std::uint64_t f_part() const noexcept { return bits_ >> n_; }
  bool is_zero() const noexcept { return bits_ == 0; }

  SympVector& operator+=(const SympVector& other);
  friend SympVector operator+(SympVector a, const SympVector& b) { return a += b; }
  bool operator==(const SympVector&) const = default;

  // e-block digits, '|', f-block digits; index 0 first.
  std::string to_string() const;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

// Symplectic pairing. Throws PreconditionError on grade mismatch.
int form(const SympVector& u, const SympVector& v);

// Pairing of two raw packed vectors of grade n.
inline int form_bits(int n, std::uint64_t u, std::uint64_t v) {
  const std::uint64_t lo = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return std::popcount(((u & lo) & (v >> n)) ^ ((v & lo) & (u >> n))) & 1;
}

// A subspace of V stored by its reduced row-echelon basis. Pivot of a row
// is its lowest set bit (e_0 is the leftmost column); rows are sorted by
// pivot and every pivot column is clear in all other rows. Equal
// subspaces have identical row lists.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int n) : n_(n) {}

  static Subspace span(int n, std::span<const SympVector> vectors);
  static Subspace span_bits(int n, std::span<const std::uint64_t> vectors);

  int grade() const noexcept { return n_; }
  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }
  std::vector<SympVector> basis() const;

  bool contains(std::uint64_t v) const;
  bool is_isotropic() const;

  std::string to_string() const;

  bool operator==(const Subspace&) const = default;
  auto operator<=>(const Subspace&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

bool is_lagrangian(const Subspace& s);

// An n-dimensional isotropic subspace of F2^{2n}.
class Lagrangian {
 public:
  // The zero space of grade 0 (unit of the direct sum).
  Lagrangian() = default;

  // Throws PreconditionError unless `s` is Lagrangian.
  explicit Lagrangian(Subspace s);

  static Lagrangian from_rows(int n, std::span<const std::uint64_t> rows);

  int grade() const noexcept { return inner_.grade(); }
  const Subspace& subspace() const noexcept { return inner_; }
  const std::vector<std::uint64_t>& rows() const noexcept { return inner_.rows(); }

  std::string to_string() const { return inner_.to_string(); }

  bool operator==(const Lagrangian&) const = default;
  auto operator<=>(const Lagrangian&) const = default;

 private:
  Subspace inner_;
};

// Linear map of V given by the images of the 2n basis vectors.
class Symplectomorphism {
 public:
  static Symplectomorphism identity(int n);

  // Throws PreconditionError if the images do not preserve the form.
  static Symplectomorphism from_images(int n, std::vector<std::uint64_t> images);

  int grade() const noexcept { return n_; }
  std::uint64_t image_bits(std::uint64_t v) const;
  SympVector operator()(const SympVector& v) const;

  // (a * b)(v) = a(b(v)).
  friend Symplectomorphism operator*(const Symplectomorphism& a, const Symplectomorphism& b);
  bool operator==(const Symplectomorphism&) const = default;

  bool preserves_form() const;

 private:
  Symplectomorphism(int n, std::vector<std::uint64_t> images)
      : n_(n), images_(std::move(images)) {}

  int n_ = 0;
  std::vector<std::uint64_t> images_;
};

// Swaps e_i and f_i.
Symplectomorphism mu_map(int n, int i);
// e_i -> e_i + f_j, e_j -> e_j + f_i.
Symplectomorphism v1_map(int n, int i, int j);
// mu_i v1_ij mu_i: f_i -> f_i + f_j, e_j -> e_j + e_i. i is the fixed index.
Symplectomorphism v2_map(int n, int i, int j);

Lagrangian apply(const Symplectomorphism& t, const Lagrangian& l);

Lagrangian direct_sum(const Lagrangian& a, const Lagrangian& b);

// Symplectic reduction onto the indices in `subset`: intersect with
// span{e_i : i in subset} + span{all f}, drop the f_j outside the subset and
// renumber the surviving indices in increasing order.
Lagrangian reduce(const Lagrangian& l, IndexSet subset);

// Simultaneous permutation of the e and f coordinates: index i goes to perm[i].
Lagrangian permute(const Lagrangian& l, std::span<const int> perm);

bool is_transverse_to_F(const Lagrangian& l);

// The unique symmetric A with l = rowspan(Id | A). Throws
// PreconditionError if l meets span{f}.
FramedGraphMatrix to_matrix(const Lagrangian& l);

// prod_{i=1}^{n} (2^i + 1).
std::uint64_t lagrangian_count(int n);

// Visits every Lagrangian of grade n exactly once in a fixed order.
// Throws PreconditionError when n exceeds `bound`.
void for_each_lagrangian(int n, const std::function<void(const Lagrangian&)>& visit,
                         int bound = kDefaultEnumerationBound);
std::vector<Lagrangian> enumerate_lagrangians(int n, int bound = kDefaultEnumerationBound);

}  // namespace lspace
