#include "lspace/f2sympl.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_grade(int n) {
  if (n < 0 || n > kMaxGrade) {
    throw PreconditionError("grade " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxGrade) + "]");
  }
}

void check_index(int n, int i, const char* what) {
  if (i < 0 || i >= n) {
    throw PreconditionError(std::string(what) + " index " + std::to_string(i) +
                            " out of range for grade " + std::to_string(n));
  }
}

// Reduced row-echelon insertion. `rows` is kept reduced and sorted by pivot.
void insert_reduced(std::vector<std::uint64_t>& rows, std::uint64_t v) {
  for (std::uint64_t r : rows) {
    if ((v >> std::countr_zero(r)) & 1U) v ^= r;
  }
  if (v == 0) return;
  const int pivot = std::countr_zero(v);
  for (std::uint64_t& r : rows) {
    if ((r >> pivot) & 1U) r ^= v;
  }
  auto pos = std::find_if(rows.begin(), rows.end(),
                          [&](std::uint64_t r) { return std::countr_zero(r) > pivot; });
  rows.insert(pos, v);
}

std::string row_string(int n, std::uint64_t bits) {
  std::string s;
  s.reserve(2 * n + 1);
  for (int i = 0; i < n; ++i) s.push_back(((bits >> i) & 1U) ? '1' : '0');
  s.push_back('|');
  for (int i = 0; i < n; ++i) s.push_back(((bits >> (n + i)) & 1U) ? '1' : '0');
  return s;
}

}  // namespace

// ---------------------------------------------------------------- SympVector

SympVector::SympVector(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  check_grade(n);
  if ((bits & ~low_mask(2 * n)) != 0) {
    throw PreconditionError("vector has bits beyond coordinate 2n");
  }
}

SympVector SympVector::e(int n, int i) {
  check_index(n, i, "e");
  return {n, std::uint64_t{1} << i};
}

SympVector SympVector::f(int n, int i) {
  check_index(n, i, "f");
  return {n, std::uint64_t{1} << (n + i)};
}

std::uint64_t SympVector::e_part() const noexcept { return bits_ & low_mask(n_); }

SympVector& SympVector::operator+=(const SympVector& other) {
  if (other.n_ != n_) throw PreconditionError("grade mismatch in vector sum");
  bits_ ^= other.bits_;
  return *this;
}

std::string SympVector::to_string() const { return row_string(n_, bits_); }

int form(const SympVector& u, const SympVector& v) {
  if (u.grade() != v.grade()) {
    throw PreconditionError("grade mismatch: " + std::to_string(u.grade()) + " vs " +
                            std::to_string(v.grade()));
  }
  return form_bits(u.grade(), u.bits(), v.bits());
}

// ------------------------------------------------------------------ Subspace

Subspace Subspace::span(int n, std::span<const SympVector> vectors) {
  check_grade(n);
  Subspace s(n);
  for (const SympVector& v : vectors) {
    if (v.grade() != n) throw PreconditionError("grade mismatch in span");
    insert_reduced(s.rows_, v.bits());
  }
  return s;
}

Subspace Subspace::span_bits(int n, std::span<const std::uint64_t> vectors) {
  check_grade(n);
  Subspace s(n);
  const std::uint64_t mask = low_mask(2 * n);
  for (std::uint64_t v : vectors) {
    if ((v & ~mask) != 0) throw PreconditionError("vector has bits beyond coordinate 2n");
    insert_reduced(s.rows_, v);
  }
  return s;
}

std::vector<SympVector> Subspace::basis() const {
  std::vector<SympVector> out;
  out.reserve(rows_.size());
  for (std::uint64_t r : rows_) out.emplace_back(n_, r);
  return out;
}

bool Subspace::contains(std::uint64_t v) const {
  for (std::uint64_t r : rows_) {
    if ((v >> std::countr_zero(r)) & 1U) v ^= r;
  }
  return v == 0;
}

bool Subspace::is_isotropic() const {
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for (std::size_t b = a + 1; b < rows_.size(); ++b) {
      if (form_bits(n_, rows_[a], rows_[b]) != 0) return false;
    }
  }
  return true;
}

std::string Subspace::to_string() const {
  std::string s;
  for (std::uint64_t r : rows_) {
    s += row_string(n_, r);
    s.push_back('\n');
  }
  return s;
}

bool is_lagrangian(const Subspace& s) { return s.dim() == s.grade() && s.is_isotropic(); }

// ---------------------------------------------------------------- Lagrangian

Lagrangian::Lagrangian(Subspace s) : inner_(std::move(s)) {
  if (!is_lagrangian(inner_)) {
    throw PreconditionError("subspace of dimension " + std::to_string(inner_.dim()) +
                            " in grade " + std::to_string(inner_.grade()) +
                            " is not Lagrangian");
  }
}

Lagrangian Lagrangian::from_rows(int n, std::span<const std::uint64_t> rows) {
  return Lagrangian(Subspace::span_bits(n, rows));
}

// --------------------------------------------------------- Symplectomorphism

Symplectomorphism Symplectomorphism::identity(int n) {
  check_grade(n);
  std::vector<std::uint64_t> images(2 * n);
  for (int c = 0; c < 2 * n; ++c) images[c] = std::uint64_t{1} << c;
  return {n, std::move(images)};
}

Symplectomorphism Symplectomorphism::from_images(int n, std::vector<std::uint64_t> images) {
  check_grade(n);
  if (static_cast<int>(images.size()) != 2 * n) {
    throw PreconditionError("symplectomorphism needs 2n basis images");
  }
  Symplectomorphism t(n, std::move(images));
  if (!t.preserves_form()) throw PreconditionError("map does not preserve the symplectic form");
  return t;
}

std::uint64_t Symplectomorphism::image_bits(std::uint64_t v) const {
  std::uint64_t out = 0;
  while (v != 0) {
    out ^= images_[std::countr_zero(v)];
    v &= v - 1;
  }
  return out;
}

SympVector Symplectomorphism::operator()(const SympVector& v) const {
  if (v.grade() != n_) throw PreconditionError("grade mismatch in map application");
  return {n_, image_bits(v.bits())};
}

Symplectomorphism operator*(const Symplectomorphism& a, const Symplectomorphism& b) {
  if (a.n_ != b.n_) throw PreconditionError("grade mismatch in composition");
  std::vector<std::uint64_t> images(b.images_.size());
  for (std::size_t c = 0; c < images.size(); ++c) images[c] = a.image_bits(b.images_[c]);
  return {a.n_, std::move(images)};
}

bool Symplectomorphism::preserves_form() const {
  for (int a = 0; a < 2 * n_; ++a) {
    for (int b = a; b < 2 * n_; ++b) {
      const int before = form_bits(n_, std::uint64_t{1} << a, std::uint64_t{1} << b);
      if (form_bits(n_, images_[a], images_[b]) != before) return false;
    }
  }
  return true;
}

Symplectomorphism mu_map(int n, int i) {
  check_grade(n);
  check_index(n, i, "mu");
  std::vector<std::uint64_t> images(2 * n);
  for (int c = 0; c < 2 * n; ++c) images[c] = std::uint64_t{1} << c;
  std::swap(images[i], images[n + i]);
  return Symplectomorphism::from_images(n, std::move(images));
}

namespace {

void check_pair(int n, int i, int j) {
  check_grade(n);
  check_index(n, i, "move");
  check_index(n, j, "move");
  if (i == j) throw PreconditionError("move needs two distinct indices");
}

}  // namespace

Symplectomorphism v1_map(int n, int i, int j) {
  check_pair(n, i, j);
  std::vector<std::uint64_t> images(2 * n);
  for (int c = 0; c < 2 * n; ++c) images[c] = std::uint64_t{1} << c;
  images[i] |= std::uint64_t{1} << (n + j);
  images[j] |= std::uint64_t{1} << (n + i);
  return Symplectomorphism::from_images(n, std::move(images));
}

Symplectomorphism v2_map(int n, int i, int j) {
  check_pair(n, i, j);
  std::vector<std::uint64_t> images(2 * n);
  for (int c = 0; c < 2 * n; ++c) images[c] = std::uint64_t{1} << c;
  images[n + i] |= std::uint64_t{1} << (n + j);
  images[j] |= std::uint64_t{1} << i;
  return Symplectomorphism::from_images(n, std::move(images));
}

Lagrangian apply(const Symplectomorphism& t, const Lagrangian& l) {
  if (t.grade() != l.grade()) {
    throw PreconditionError("grade mismatch: map " + std::to_string(t.grade()) +
                            ", space " + std::to_string(l.grade()));
  }
  std::vector<std::uint64_t> images;
  images.reserve(l.rows().size());
  for (std::uint64_t r : l.rows()) images.push_back(t.image_bits(r));
  return Lagrangian::from_rows(l.grade(), images);
}

// ----------------------------------------------------------- constructions

Lagrangian direct_sum(const Lagrangian& a, const Lagrangian& b) {
  const int m = a.grade();
  const int k = b.grade();
  const int n = m + k;
  check_grade(n);
  std::vector<std::uint64_t> rows;
  rows.reserve(n);
  for (std::uint64_t r : a.rows()) {
    rows.push_back((r & low_mask(m)) | ((r >> m) << n));
  }
  for (std::uint64_t r : b.rows()) {
    rows.push_back(((r & low_mask(k)) << m) | ((r >> k) << (n + m)));
  }
  return Lagrangian::from_rows(n, rows);
}

Lagrangian reduce(const Lagrangian& l, IndexSet subset) {
  const int n = l.grade();
  subset &= low_mask(n);
  const std::uint64_t drop_e = low_mask(n) & ~subset;

  // Rows whose e-part outside the subset can be eliminated span L ∩ W_I.
  std::vector<std::uint64_t> pivots;
  std::vector<std::uint64_t> kernel;
  for (std::uint64_t r : l.rows()) {
    for (std::uint64_t p : pivots) {
      if ((r >> std::countr_zero(p & drop_e)) & 1U) r ^= p;
    }
    if ((r & drop_e) == 0) {
      kernel.push_back(r);
    } else {
      const int pivot = std::countr_zero(r & drop_e);
      for (std::uint64_t& p : pivots) {
        if ((p >> pivot) & 1U) p ^= r;
      }
      pivots.push_back(r);
    }
  }

  std::vector<int> keep;
  for (int i = 0; i < n; ++i) {
    if ((subset >> i) & 1U) keep.push_back(i);
  }
  const int k = static_cast<int>(keep.size());
  std::vector<std::uint64_t> projected;
  projected.reserve(kernel.size());
  for (std::uint64_t r : kernel) {
    std::uint64_t out = 0;
    for (int t = 0; t < k; ++t) {
      out |= ((r >> keep[t]) & 1U) << t;
      out |= ((r >> (n + keep[t])) & 1U) << (k + t);
    }
    projected.push_back(out);
  }
  Subspace s = Subspace::span_bits(k, projected);
  if (!is_lagrangian(s)) {
    throw ConsistencyError("symplectic reduction produced a non-Lagrangian subspace");
  }
  return Lagrangian(std::move(s));
}

Lagrangian permute(const Lagrangian& l, std::span<const int> perm) {
  const int n = l.grade();
  if (static_cast<int>(perm.size()) != n) throw PreconditionError("permutation size mismatch");
  std::vector<std::uint64_t> rows;
  rows.reserve(n);
  for (std::uint64_t r : l.rows()) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
      out |= ((r >> i) & 1U) << perm[i];
      out |= ((r >> (n + i)) & 1U) << (n + perm[i]);
    }
    rows.push_back(out);
  }
  return Lagrangian::from_rows(n, rows);
}

bool is_transverse_to_F(const Lagrangian& l) {
  // Reduced echelon form: transversality means every pivot lies in the e-block.
  for (std::uint64_t r : l.rows()) {
    if (std::countr_zero(r) >= l.grade()) return false;
  }
  return true;
}

FramedGraphMatrix to_matrix(const Lagrangian& l) {
  if (!is_transverse_to_F(l)) {
    throw PreconditionError("Lagrangian meets the f-block; no (Id | A) basis");
  }
  const int n = l.grade();
  std::vector<std::uint64_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = l.rows()[i] >> n;
  return FramedGraphMatrix::from_rows(n, std::move(rows));
}

// -------------------------------------------------------------- enumeration

std::uint64_t lagrangian_count(int n) {
  std::uint64_t total = 1;
  for (int i = 1; i <= n; ++i) total *= (std::uint64_t{1} << i) + 1;
  return total;
}

void for_each_lagrangian(int n, const std::function<void(const Lagrangian&)>& visit,
                         int bound) {
  if (n < 0) throw PreconditionError("negative grade");
  if (n > bound) {
    throw PreconditionError("enumeration of grade " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(bound));
  }
  check_grade(n);

  // Every Lagrangian L is determined by U = (e-projection of L) and a
  // symmetric bilinear form on U:
  //   L = { u + f(B u) + f(w) : u in U, w in U^perp }.
  // Each pair (U, B) is visited once, so no deduplication is needed.
  std::vector<std::uint64_t> rows;
  for (int r = 0; r <= n; ++r) {
    // Pivot sets of size r, in increasing bit-mask order.
    for (std::uint64_t pivots = 0; pivots < (std::uint64_t{1} << n); ++pivots) {
      if (std::popcount(pivots) != r) continue;
      std::vector<int> pivot_cols;
      for (int c = 0; c < n; ++c) {
        if ((pivots >> c) & 1U) pivot_cols.push_back(c);
      }
      // Free positions of row a: non-pivot columns to the right of its pivot.
      std::vector<std::pair<int, int>> free_slots;
      for (int a = 0; a < r; ++a) {
        for (int c = pivot_cols[a] + 1; c < n; ++c) {
          if (!((pivots >> c) & 1U)) free_slots.emplace_back(a, c);
        }
      }
      const int sym_bits = r * (r + 1) / 2;
      const std::uint64_t free_count = std::uint64_t{1} << free_slots.size();
      for (std::uint64_t fill = 0; fill < free_count; ++fill) {
        std::vector<std::uint64_t> basis_u(r);
        for (int a = 0; a < r; ++a) basis_u[a] = std::uint64_t{1} << pivot_cols[a];
        for (std::size_t s = 0; s < free_slots.size(); ++s) {
          if ((fill >> s) & 1U) basis_u[free_slots[s].first] |= std::uint64_t{1} << free_slots[s].second;
        }
        // Basis of the orthogonal complement of U (standard dot product).
        std::vector<std::uint64_t> perp;
        for (int q = 0; q < n; ++q) {
          if ((pivots >> q) & 1U) continue;
          std::uint64_t w = std::uint64_t{1} << q;
          for (int a = 0; a < r; ++a) {
            if ((basis_u[a] >> q) & 1U) w |= std::uint64_t{1} << pivot_cols[a];
          }
          perp.push_back(w);
        }
        for (std::uint64_t form_bitsel = 0; form_bitsel < (std::uint64_t{1} << sym_bits);
             ++form_bitsel) {
          rows.clear();
          int bit = 0;
          std::vector<std::uint64_t> y(r, 0);
          for (int a = 0; a < r; ++a) {
            for (int b = a; b < r; ++b, ++bit) {
              if ((form_bitsel >> bit) & 1U) {
                y[a] |= std::uint64_t{1} << pivot_cols[b];
                y[b] |= std::uint64_t{1} << pivot_cols[a];
              }
            }
          }
          for (int a = 0; a < r; ++a) rows.push_back(basis_u[a] | (y[a] << n));
          for (std::uint64_t w : perp) rows.push_back(w << n);
          visit(Lagrangian::from_rows(n, rows));
        }
      }
    }
  }
}

std::vector<Lagrangian> enumerate_lagrangians(int n, int bound) {
  std::vector<Lagrangian> out;
  if (n >= 0 && n <= bound && n <= kMaxGrade) out.reserve(lagrangian_count(n));
  for_each_lagrangian(n, [&](const Lagrangian& l) { out.push_back(l); }, bound);
  return out;
}

}  // namespace lspace
