#include "lspace/bialgebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "lspace/errors.hpp"
#include "lspace/homomap.hpp"
#include "lspace/modrank.hpp"
#include "lspace/random.hpp"
#include "lspace/ribbon.hpp"

namespace lspace {

namespace {

// Runs fn(worker, begin, end) on contiguous shards of [0, count).
template <class Fn>
void parallel_shards(std::size_t count, int threads, Fn fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)),
                                                     std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

std::uint64_t pair_code(const Lagrangian& r) {
  std::uint64_t code = 0;
  for (std::uint64_t row : r.rows()) code = (code << 8) | row;
  return code;
}

std::vector<std::vector<std::uint64_t>> index_invariants(const Lagrangian& l) {
  const int n = l.grade();
  std::vector<std::vector<std::uint64_t>> inv(n);
  for (int i = 0; i < n; ++i) inv[i].push_back(reduce(l, IndexSet{1} << i).rows().front());
  const int swap[2] = {1, 0};
  std::vector<std::vector<std::uint64_t>> pairs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Lagrangian r = reduce(l, (IndexSet{1} << i) | (IndexSet{1} << j));
      pairs[i].push_back(pair_code(r));
      pairs[j].push_back(pair_code(permute(r, swap)));
    }
  }
  for (int i = 0; i < n; ++i) {
    std::sort(pairs[i].begin(), pairs[i].end());
    inv[i].insert(inv[i].end(), pairs[i].begin(), pairs[i].end());
  }
  return inv;
}

struct CanonicalSearch {
  const Lagrangian& source;
  std::vector<int> sorted;       // indices ordered by invariant
  std::vector<int> block_end;    // block_end[k]: end of the block holding position k
  std::vector<int> block_begin;
  std::vector<int> perm;
  std::vector<char> used;
  Lagrangian best;
  bool have_best = false;

  void run(int position) {
    const int n = source.grade();
    if (position == n) {
      Lagrangian candidate = permute(source, perm);
      if (!have_best || candidate.rows() < best.rows()) {
        best = std::move(candidate);
        have_best = true;
      }
      return;
    }
    for (int s = block_begin[position]; s < block_end[position]; ++s) {
      if (used[s]) continue;
      used[s] = 1;
      perm[sorted[s]] = position;
      run(position + 1);
      used[s] = 0;
    }
  }
};

}  // namespace

std::string OrbitClass::to_string() const {
  std::string s = "[";
  for (std::uint64_t r : rep_.rows()) {
    if (s.size() > 1) s += ' ';
    s += SympVector(grade(), r).to_string();
  }
  return s + "]";
}

OrbitClass canonicalize(const Lagrangian& l, int bound) {
  const int n = l.grade();
  if (n > bound) {
    throw PreconditionError("canonicalization of grade " + std::to_string(n) +
                            " exceeds the bound " + std::to_string(bound));
  }
  if (n <= 1) return OrbitClass(l);
  const auto inv = index_invariants(l);
  CanonicalSearch search{l, {}, {}, {}, std::vector<int>(n, 0), std::vector<char>(n, 0), {}, false};
  search.sorted.resize(n);
  std::iota(search.sorted.begin(), search.sorted.end(), 0);
  std::stable_sort(search.sorted.begin(), search.sorted.end(),
                   [&](int a, int b) { return inv[a] < inv[b]; });
  search.block_begin.resize(n);
  search.block_end.resize(n);
  for (int k = 0; k < n;) {
    int end = k + 1;
    while (end < n && inv[search.sorted[end]] == inv[search.sorted[k]]) ++end;
    for (int t = k; t < end; ++t) {
      search.block_begin[t] = k;
      search.block_end[t] = end;
    }
    k = end;
  }
  search.run(0);
  return OrbitClass(std::move(search.best));
}

OrbitClass product(const OrbitClass& x, const OrbitClass& y) {
  return canonicalize(direct_sum(x.representative(), y.representative()),
                      std::max(kDefaultCanonicalBound, x.grade() + y.grade()));
}

TensorSum coproduct(const OrbitClass& x) {
  const int n = x.grade();
  const Lagrangian& l = x.representative();
  TensorSum out;
  const IndexSet all = full_set(n);
  for (IndexSet s = 0; s <= all; ++s) {
    ++out[{canonicalize(reduce(l, s)), canonicalize(reduce(l, all & ~s))}];
    if (s == all) break;
  }
  return out;
}

void LinComb::add(const OrbitClass& c, std::int64_t coeff) {
  if (c.grade() != grade_) {
    throw PreconditionError("class of grade " + std::to_string(c.grade()) +
                            " added to a combination of grade " + std::to_string(grade_));
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [c, k] : other.terms_) add(c, k);
  return *this;
}

LinComb operator*(const LinComb& a, const OrbitClass& y) {
  LinComb out(a.grade() + y.grade());
  for (const auto& [c, k] : a.terms()) out.add(product(c, y), k);
  return out;
}

std::string LinComb::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [c, k] : terms_) {
    const std::int64_t mag = k < 0 ? -k : k;
    if (s.empty()) {
      if (k < 0) s += "-";
    } else {
      s += k < 0 ? " - " : " + ";
    }
    if (mag != 1) s += std::to_string(mag) + " ";
    s += c.to_string();
  }
  return s;
}

LinComb four_element(const Lagrangian& l, int i, int j) {
  const int n = l.grade();
  const Symplectomorphism t1 = v1_map(n, i, j);
  const Symplectomorphism t2 = v2_map(n, i, j);
  LinComb out(n);
  out.add(canonicalize(l), 1);
  out.add(canonicalize(apply(t1, l)), -1);
  out.add(canonicalize(apply(t2, l)), -1);
  out.add(canonicalize(apply(t1 * t2, l)), 1);
  return out;
}

std::vector<OrbitClass> orbit_classes(int n, int threads, int bound) {
  const std::vector<Lagrangian> all = enumerate_lagrangians(n, bound);
  std::vector<std::set<OrbitClass>> found(std::max(threads, 1));
  parallel_shards(all.size(), threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) found[w].insert(canonicalize(all[k]));
  });
  std::set<OrbitClass> merged;
  for (auto& part : found) merged.merge(part);
  return {merged.begin(), merged.end()};
}

std::uint64_t grade_dimension(int n, int threads) { return orbit_classes(n, threads).size(); }

std::uint64_t burnside_orbit_count(int n, int threads, int bound) {
  const std::vector<Lagrangian> all = enumerate_lagrangians(n, bound);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::uint64_t> fixed(std::max(threads, 1), 0);
  parallel_shards(all.size(), threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      for (const auto& perm : perms) {
        if (permute(all[k], perm) == all[k]) ++fixed[w];
      }
    }
  });
  const std::uint64_t total = std::accumulate(fixed.begin(), fixed.end(), std::uint64_t{0});
  if (total % perms.size() != 0) {
    throw ConsistencyError("fixed-point total " + std::to_string(total) +
                           " not divisible by the group order");
  }
  return total / perms.size();
}

namespace {

std::vector<LinComb> four_elements_of_grade(const std::vector<OrbitClass>& classes, int k,
                                            int threads) {
  std::vector<std::set<std::map<OrbitClass, std::int64_t>>> found(std::max(threads, 1));
  parallel_shards(classes.size(), threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          LinComb f = four_element(classes[c].representative(), i, j);
          if (!f.is_zero()) found[w].insert(f.terms());
        }
      }
    }
  });
  std::set<std::map<OrbitClass, std::int64_t>> merged;
  for (auto& part : found) merged.merge(part);
  std::vector<LinComb> out;
  for (const auto& terms : merged) {
    LinComb f(k);
    for (const auto& [c, x] : terms) f.add(c, x);
    out.push_back(std::move(f));
  }
  return out;
}

SparseRow to_row(const LinComb& f, const std::vector<OrbitClass>& basis) {
  SparseRow row;
  for (const auto& [c, x] : f.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), c);
    if (it == basis.end() || !(*it == c)) {
      throw ConsistencyError("class " + c.to_string() + " missing from the enumerated basis");
    }
    row.emplace_back(static_cast<std::size_t>(it - basis.begin()), x);
  }
  return row;
}

}  // namespace

std::vector<LinComb> relation_generators(int n, int threads) {
  std::vector<std::vector<OrbitClass>> classes(n + 1);
  for (int k = 0; k <= n; ++k) classes[k] = orbit_classes(k, threads);
  std::set<std::map<OrbitClass, std::int64_t>> rows;
  for (int k = 2; k <= n; ++k) {
    const std::vector<LinComb> fes = four_elements_of_grade(classes[k], k, threads);
    for (const LinComb& f : fes) {
      for (const OrbitClass& b : classes[n - k]) {
        LinComb g = f * b;
        if (!g.is_zero()) rows.insert(g.terms());
      }
    }
  }
  std::vector<LinComb> out;
  for (const auto& terms : rows) {
    LinComb g(n);
    for (const auto& [c, x] : terms) g.add(c, x);
    out.push_back(std::move(g));
  }
  return out;
}

GradeReport grade_report(int n, int threads) {
  GradeReport r;
  r.grade = n;
  r.lagrangians = lagrangian_count(n);
  const std::vector<OrbitClass> basis = orbit_classes(n, threads);
  r.orbits = basis.size();
  r.burnside = burnside_orbit_count(n, threads);
  if (r.orbits != r.burnside) {
    throw ConsistencyError("orbit count " + std::to_string(r.orbits) + " differs from Burnside " +
                           std::to_string(r.burnside) + " in grade " + std::to_string(n));
  }
  const std::vector<LinComb> gens = relation_generators(n, threads);
  std::vector<SparseRow> rows;
  rows.reserve(gens.size());
  for (const LinComb& g : gens) rows.push_back(to_row(g, basis));
  r.relation_rows = rows.size();
  r.relation_rank = two_prime_rank(rows, basis.size());
  r.dim_k = r.orbits - r.relation_rank;
  return r;
}

RealizedReport realized_report(int n, int samples, std::uint64_t seed, int threads) {
  const std::vector<OrbitClass> basis = orbit_classes(n, threads);
  std::vector<SparseRow> rows;
  for (const LinComb& g : relation_generators(n, threads)) rows.push_back(to_row(g, basis));
  const std::size_t base = two_prime_rank(rows, basis.size());

  Rng rng(seed);
  std::set<OrbitClass> realized;
  for (int s = 0; s < samples; ++s) realized.insert(canonicalize(lspace_of(random_ribbon_graph(rng, n))));
  for (const OrbitClass& c : realized) {
    LinComb single(n);
    single.add(c, 1);
    rows.push_back(to_row(single, basis));
  }
  RealizedReport r;
  r.grade = n;
  r.distinct_classes = realized.size();
  r.realized_rank = two_prime_rank(rows, basis.size()) - base;
  r.dim_k = basis.size() - base;
  return r;
}

}  // namespace lspace
