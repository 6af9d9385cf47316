// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs all criteria at their full sizes and time limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "../unit/oracles.hpp"
#include "lspace/bialgebra.hpp"
#include "lspace/errors.hpp"
#include "lspace/homomap.hpp"
#include "lspace/matrixops.hpp"
#include "lspace/modrank.hpp"
#include "lspace/random.hpp"
#include "lspace/ribbon.hpp"

using namespace lspace;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

std::vector<int> as_list(IndexSet s, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if ((s >> i) & 1U) out.push_back(i);
  }
  return out;
}

struct Site {
  Arc arc;
  Corner fixed;
};

std::vector<Site> sites(const RibbonGraph& g, bool v1, bool v2) {
  std::vector<Site> out;
  for (const Arc& a : g.arcs()) {
    if (v1 && g.attach(a.lo) == a.hi) continue;
    for (Corner f : {a.lo, a.hi}) {
      const int al[1] = {edge_of(f)};
      if (v2 && partial_dual(g, al).attach(a.lo) == a.hi) continue;
      out.push_back({a, f});
    }
  }
  return out;
}

FramedGraphMatrix random_matrix(Rng& rng, int n) {
  FramedGraphMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m.set(i, j, rng.coin());
  }
  return m;
}

// ------------------------------------------------------------------ 1
Outcome lspaces_are_lagrangian() {
  Outcome o;
  Rng rng(1001);
  for (int t = 0; t < 10000; ++t) {
    const int n = rng.uniform_int(1, 8);
    const Lagrangian l = lspace_of(random_ribbon_graph(rng, n));
    if (l.subspace().dim() != n || !l.subspace().is_isotropic()) o.fail("case " + std::to_string(t));
  }
  o.detail = o.ok ? "10000 graphs, n <= 8" : o.detail;
  return o;
}

// ------------------------------------------------------------------ 2
Outcome chord_diagrams() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& word : oracle::chord_words(n)) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        RotationSystem rs{n, {word}, std::vector<bool>(n)};
        for (int e = 0; e < n; ++e) rs.twisted[e] = ((mask >> e) & 1) != 0;
        const FramedGraphMatrix a = oracle::chord_matrix(rs);
        std::vector<std::uint64_t> rows;
        for (int i = 0; i < n; ++i) rows.push_back((std::uint64_t{1} << i) | (a.row(i) << n));
        ++count;
        if (lspace_of(from_rotation(rs)).rows() != oracle::echelon(n, rows)) {
          o.fail("mismatch at n=" + std::to_string(n));
        }
      }
    }
  }
  if (count != 2 + 12 + 120 + 1680 + 30240) o.fail("wrong diagram count");
  if (o.ok) o.detail = std::to_string(count) + " framed diagrams";
  return o;
}

// ------------------------------------------------------------------ 3
Outcome commuting_squares() {
  Outcome o;
  Rng rng(1003);
  int done[3] = {0, 0, 0};
  for (int t = 0; t < 10000; ++t) {
    const int kind = static_cast<int>(rng.below(3));
    for (;;) {
      const int n = rng.uniform_int(1, 8);
      const RibbonGraph g = random_ribbon_graph(rng, n);
      const Lagrangian l = lspace_of(g);
      if (kind == 0) {
        const int e = rng.uniform_int(0, n - 1);
        const int es[1] = {e};
        if (lspace_of(partial_dual(g, es)) != apply(mu_map(n, e), l)) o.fail("mu square");
        break;
      }
      const auto s = sites(g, kind == 1, kind == 2);
      if (s.empty()) continue;
      const Site site = s[rng.below(s.size())];
      const auto [i, j] = arc_edges(g, site.arc);
      if (kind == 1) {
        const Lagrangian want = i == j ? l : apply(v1_map(n, i, j), l);
        if (lspace_of(vassiliev1(g, site.arc).graph) != want) o.fail("v1 square");
      } else {
        const int alpha = edge_of(site.fixed);
        const int beta = alpha == i ? j : i;
        const Lagrangian want = alpha == beta ? l : apply(v2_map(n, alpha, beta), l);
        if (lspace_of(vassiliev2(g, site.arc, site.fixed).graph) != want) o.fail("v2 square");
      }
      break;
    }
    ++done[kind];
  }
  // The unmirrored map f_i -> f_i + e_j, f_j -> f_j + e_i must fail on (1 2 1 2).
  std::vector<std::uint64_t> images{0b0001, 0b0010, 0b0110, 0b1001};
  const auto printed = Symplectomorphism::from_images(2, images);
  const RibbonGraph crossed = chord_diagram(std::vector<int>{0, 1, 0, 1});
  const Arc middle = Arc::of(corner_of(1, 1), corner_of(0, 2));
  const Lagrangian after = lspace_of(vassiliev1(crossed, middle).graph);
  if (apply(printed, lspace_of(crossed)) == after) o.fail("unmirrored map satisfies the square");
  if (apply(v1_map(2, 0, 1), lspace_of(crossed)) != after) o.fail("witness square fails");
  if (o.ok) {
    o.detail = "mu " + std::to_string(done[0]) + ", v1 " + std::to_string(done[1]) + ", v2 " +
               std::to_string(done[2]) + "; unmirrored map rejected on (1 2 1 2)";
  }
  return o;
}

// ------------------------------------------------------------------ 4
Outcome conjugacy() {
  Outcome o;
  // Hand-traced slide of chord 2 over twisted chord 1 in (1 2 1 2):
  // the result is two disjoint twisted chords, chord 2 read backwards.
  const RibbonGraph g = chord_diagram(std::vector<int>{0, 1, 0, 1}, std::vector<int>{0});
  const Arc middle = Arc::of(corner_of(1, 1), corner_of(0, 2));
  const RibbonGraph moved = vassiliev2(g, middle, corner_of(0, 2)).graph;
  const RibbonGraph expected = RibbonGraph::from_matchings(
      2, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 0, 1, 7, 6, 5, 4}, {4, 2, 1, 6, 0, 7, 3, 5});
  if (!(moved == expected)) o.fail("hand-traced example differs");
  if (intersection_matrix(moved).to_string() != "10\n01\n") o.fail("matrix is not diag(1,1)");
  const int e0[1] = {0};
  if (!(moved == partial_dual(vassiliev1(partial_dual(g, e0), middle).graph, e0))) {
    o.fail("labelled conjugacy");
  }
  Rng rng(1004);
  int checked = 0;
  while (checked < 1000) {
    const int n = rng.uniform_int(2, 8);
    const RibbonGraph h = random_ribbon_graph(rng, n);
    const auto s = sites(h, false, true);
    if (s.empty()) continue;
    const Site site = s[rng.below(s.size())];
    const int al[1] = {edge_of(site.fixed)};
    const Lagrangian lhs = lspace_of(vassiliev2(h, site.arc, site.fixed).graph);
    const Lagrangian via = apply(mu_map(n, al[0]),
                                 lspace_of(vassiliev1(partial_dual(h, al), site.arc).graph));
    const Lagrangian rhs = lspace_of(partial_dual(vassiliev1(partial_dual(h, al), site.arc).graph, al));
    if (lhs != rhs || lhs != via) o.fail("L-space conjugacy");
    ++checked;
  }
  if (o.ok) o.detail = "hand example + 1000 random L-space checks";
  return o;
}

// ------------------------------------------------------------------ 5
Outcome dual_group() {
  Outcome o;
  Rng rng(1005);
  for (int t = 0; t < 1000; ++t) {
    const int n = rng.uniform_int(1, 8);
    const RibbonGraph g = random_ribbon_graph(rng, n);
    const IndexSet a = rng.next() & full_set(n);
    const IndexSet b = rng.next() & full_set(n);
    const auto la = as_list(a, n), lb = as_list(b, n), lab = as_list(a ^ b, n);
    if (!(partial_dual(partial_dual(g, la), la) == g)) o.fail("not involutive");
    if (!(partial_dual(partial_dual(g, la), lb) == partial_dual(partial_dual(g, lb), la))) {
      o.fail("not commuting");
    }
    if (!(partial_dual(partial_dual(g, lb), la) == partial_dual(g, lab))) o.fail("not a group action");
  }
  if (o.ok) o.detail = "1000 graphs";
  return o;
}

// ------------------------------------------------------------------ 6
Outcome v2_topology() {
  Outcome o;
  Rng rng(1006);
  int applied = 0;
  while (applied < 1000) {
    const RibbonGraph g = random_ribbon_graph(rng, rng.uniform_int(2, 8));
    const auto s = sites(g, false, true);
    if (s.empty()) continue;
    const Site site = s[rng.below(s.size())];
    const RibbonGraph h = vassiliev2(g, site.arc, site.fixed).graph;
    if (vertex_count(h) != vertex_count(g) || boundary_count(h) != boundary_count(g) ||
        euler_characteristic(h) != euler_characteristic(g) || is_orientable(h) != is_orientable(g)) {
      o.fail("surface changed");
    }
    ++applied;
  }
  if (o.ok) o.detail = "1000 applications";
  return o;
}

// ------------------------------------------------------------------ 7
Outcome reduction() {
  Outcome o;
  int spaces = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const Lagrangian& l : enumerate_lagrangians(n)) {
      ++spaces;
      for (IndexSet outer = 0; outer <= full_set(n); ++outer) {
        const Lagrangian mid = reduce(l, outer);
        if (!is_lagrangian(mid.subspace())) o.fail("not Lagrangian");
        for (IndexSet inner = outer;; inner = (inner - 1) & outer) {
          IndexSet pos = 0;
          int k = 0;
          for (int i = 0; i < n; ++i) {
            if ((outer >> i) & 1U) {
              if ((inner >> i) & 1U) pos |= IndexSet{1} << k;
              ++k;
            }
          }
          if (reduce(mid, pos) != reduce(l, inner)) o.fail("nested restriction");
          if (inner == 0) break;
        }
      }
    }
  }
  if (spaces != 153) o.fail("expected 153 spaces, saw " + std::to_string(spaces));
  if (o.ok) o.detail = "153 spaces, all subsets";
  return o;
}

// ------------------------------------------------------------------ 8
using Triple = std::map<std::tuple<OrbitClass, OrbitClass, OrbitClass>, std::int64_t>;

bool coassociative(const OrbitClass& x) {
  Triple left, right, direct;
  for (const auto& [p, c] : coproduct(x)) {
    for (const auto& [q, d] : coproduct(p.first)) left[{q.first, q.second, p.second}] += c * d;
    for (const auto& [q, d] : coproduct(p.second)) right[{p.first, q.first, q.second}] += c * d;
  }
  const int n = x.grade();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    IndexSet s[3] = {0, 0, 0};
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) s[c % 3] |= IndexSet{1} << i;
    const Lagrangian& l = x.representative();
    ++direct[{canonicalize(reduce(l, s[0])), canonicalize(reduce(l, s[1])),
              canonicalize(reduce(l, s[2]))}];
  }
  return left == right && left == direct;
}

bool compatible(const OrbitClass& x, const OrbitClass& y) {
  TensorSum rhs;
  for (const auto& [p, c] : coproduct(x)) {
    for (const auto& [q, d] : coproduct(y)) {
      rhs[{product(p.first, q.first), product(p.second, q.second)}] += c * d;
    }
  }
  return coproduct(product(x, y)) == rhs;
}

Outcome bialgebra_axioms() {
  Outcome o;
  std::vector<OrbitClass> small;
  for (int n = 0; n <= 2; ++n) {
    for (const auto& c : orbit_classes(n)) small.push_back(c);
  }
  for (const auto& x : small) {
    if (!coassociative(x)) o.fail("coassociativity at " + x.to_string());
    for (const auto& y : small) {
      if (!compatible(x, y)) o.fail("compatibility at " + x.to_string() + ", " + y.to_string());
    }
  }
  const auto three = orbit_classes(3);
  Rng rng(1008);
  for (int t = 0; t < 1000; ++t) {
    const OrbitClass& x = three[rng.below(three.size())];
    const OrbitClass& y = small[rng.below(small.size())];
    if (!coassociative(x)) o.fail("coassociativity at " + x.to_string());
    if (!compatible(x, y)) o.fail("compatibility at " + x.to_string());
  }
  if (o.ok) o.detail = std::to_string(small.size()) + " classes of grade <= 2, 1000 random grade-3";
  return o;
}

// ------------------------------------------------------------------ 9
Outcome enumeration_counts() {
  Outcome o;
  const std::uint64_t expected[] = {3, 15, 135, 2295, 75735};
  std::string summary;
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<std::uint64_t>> seen;
    for_each_lagrangian(n, [&](const Lagrangian& l) { seen.insert(l.rows()); });
    if (seen.size() != expected[n - 1]) o.fail("|LGr(" + std::to_string(n) + ")| wrong");
    const std::size_t orbits = orbit_classes(n, 4).size();
    const std::uint64_t burnside = burnside_orbit_count(n, 4);
    if (orbits != burnside) o.fail("orbit count differs from Burnside at n=" + std::to_string(n));
    summary += (summary.empty() ? "" : ", ") + std::to_string(seen.size()) + "/" +
               std::to_string(orbits);
  }
  if (o.ok) o.detail = "|LGr|/orbits " + summary;
  return o;
}

// ------------------------------------------------------------------ 10
std::uint64_t rank_with_permuted_representatives(int n, std::uint64_t seed) {
  Rng rng(seed);
  const auto basis = orbit_classes(n);
  std::vector<SparseRow> rows;
  for (int k = 2; k <= n; ++k) {
    for (const OrbitClass& c : orbit_classes(k)) {
      std::vector<int> p(k);
      std::iota(p.begin(), p.end(), 0);
      rng.shuffle(std::span<int>(p));
      const Lagrangian rep = permute(c.representative(), p);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          const LinComb f = four_element(rep, i, j);
          for (const OrbitClass& b : orbit_classes(n - k)) {
            const LinComb g = f * b;
            SparseRow row;
            for (const auto& [cls, x] : g.terms()) {
              const auto it = std::lower_bound(basis.begin(), basis.end(), cls);
              row.emplace_back(static_cast<std::size_t>(it - basis.begin()), x);
            }
            if (!row.empty()) rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return two_prime_rank(rows, basis.size());
}

Outcome dim_k_pipeline() {
  Outcome o;
  if (dim_K(1) != 3) o.fail("dim K_1 != 3");
  std::string summary = "dim K_1..4 = 3";
  for (int n = 2; n <= 4; ++n) {
    const GradeReport a = grade_report(n, 1);
    const GradeReport b = grade_report(n, 4);
    if (a.dim_k != b.dim_k || a.relation_rank != b.relation_rank) o.fail("not reproducible");
    if (rank_with_permuted_representatives(n, 1010 + n) != a.relation_rank) {
      o.fail("rank depends on representatives at n=" + std::to_string(n));
    }
    summary += ", " + std::to_string(a.dim_k);
  }
  if (o.ok) o.detail = summary;
  return o;
}

// ------------------------------------------------------------------ 11
Outcome cohn_lempel_criterion() {
  Outcome o;
  std::size_t cases = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& word : oracle::chord_words(n)) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        RotationSystem rs{n, {word}, std::vector<bool>(n)};
        for (int e = 0; e < n; ++e) rs.twisted[e] = ((mask >> e) & 1) != 0;
        const RibbonGraph g = from_rotation(rs);
        const FramedGraphMatrix m = intersection_matrix(g);
        for (IndexSet j = 0; j <= full_set(n); ++j) {
          ++cases;
          const RibbonGraph d = partial_dual(g, as_list(j, n));
          const bool one = vertex_count(d) == 1;
          if (cohn_lempel(m, j) != one) o.fail("criterion");
          if (one && !(partial_dual_matrix(m, j) == intersection_matrix(d))) o.fail("dual matrix");
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (diagram, J) pairs";
  return o;
}

// ------------------------------------------------------------------ 12
Outcome matrix_correspondences() {
  Outcome o;
  const int n = 4;
  int lc = 0, pv = 0;
  for (std::uint64_t code = 0; code < (1U << 10); ++code) {
    FramedGraphMatrix m(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j, ++bit) m.set(i, j, ((code >> bit) & 1U) != 0);
    }
    for (int a = 0; a < n; ++a) {
      if (m.framing(a)) {
        ++lc;
        const FramedGraphMatrix got = local_complement(m, a);
        if (!(got == partial_dual_matrix(m, IndexSet{1} << a))) o.fail("local complement");
        FramedGraphMatrix expect = m;
        for (int i = 0; i < n; ++i) {
          for (int k = i; k < n; ++k) {
            if (i != a && k != a && m.at(i, a) && m.at(k, a)) expect.toggle(i, k);
          }
        }
        if (!(got == expect)) o.fail("local complement rank-one form");
      }
      for (int b = a + 1; b < n; ++b) {
        if (m.framing(a) || m.framing(b) || !m.at(a, b)) continue;
        ++pv;
        const IndexSet ab = (IndexSet{1} << a) | (IndexSet{1} << b);
        const FramedGraphMatrix p = pivot(m, a, b);
        if (!(p == partial_dual_matrix(m, ab).swap_labels(a, b))) o.fail("pivot");
        Lagrangian l = apply(mu_map(n, b), apply(mu_map(n, a), graph_to_lspace(m)));
        if (to_matrix(l).swap_labels(a, b) != p) o.fail("pivot via L-space");
      }
    }
  }
  auto poly = [](std::vector<std::uint64_t> rows) {
    const int k = static_cast<int>(rows.size());
    return interlace_polynomial(FramedGraphMatrix::from_rows(k, std::move(rows))).to_string();
  };
  if (poly({}) != "1" || poly({0}) != "y" || poly({1}) != "x" || poly({2, 1}) != "x^2 - 2x + 2y") {
    o.fail("interlace examples");
  }
  Rng rng(1012);
  for (int t = 0; t < 1000; ++t) {
    const FramedGraphMatrix a = random_matrix(rng, rng.uniform_int(0, 6));
    const FramedGraphMatrix b = random_matrix(rng, rng.uniform_int(0, 6));
    if (interlace_polynomial(a.direct_sum(b)) != interlace_polynomial(a) * interlace_polynomial(b)) {
      o.fail("multiplicativity");
    }
  }
  if (o.ok) {
    o.detail = std::to_string(lc) + " local complements, " + std::to_string(pv) +
               " pivots, interlace examples, 1000 products";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "L-spaces are Lagrangian", 10, lspaces_are_lagrangian},
      {2, "chord-diagram consistency", 60, chord_diagrams},
      {3, "commuting squares", 30, commuting_squares},
      {4, "conjugacy", 0, conjugacy},
      {5, "partial-dual group action", 0, dual_group},
      {6, "topological invariance of v2", 0, v2_topology},
      {7, "symplectic reduction", 5, reduction},
      {8, "bialgebra axioms", 0, bialgebra_axioms},
      {9, "enumeration counts", 120, enumeration_counts},
      {10, "dim K pipeline", 300, dim_k_pipeline},
      {11, "Cohn-Lempel", 60, cohn_lempel_criterion},
      {12, "local complement, pivot, interlace", 0, matrix_correspondences},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds));
    }
    if (!o.ok) ++failures;
    std::printf("%s  %2d. %-36s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
