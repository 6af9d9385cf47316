#include <doctest.h>

#include <algorithm>

#include "lspace/errors.hpp"
#include "lspace/homomap.hpp"
#include "lspace/ribbon.hpp"
#include "oracles.hpp"

using namespace lspace;

namespace {

RotationSystem rot(int n, std::vector<std::vector<int>> words, std::vector<int> twisted = {}) {
  RotationSystem rs{n, std::move(words), std::vector<bool>(n, false)};
  for (int t : twisted) rs.twisted[t] = true;
  return rs;
}

RibbonGraph chord(std::vector<int> word, std::vector<int> twisted = {}) {
  return chord_diagram(word, twisted);
}

Arc arc_between(const RibbonGraph& g, Corner a, Corner b) {
  const Arc x = Arc::of(a, b);
  REQUIRE(g.is_arc(x));
  return x;
}

}  // namespace

TEST_CASE("surface counts of small graphs") {
  const RibbonGraph annulus = chord({0, 0});
  CHECK(vertex_count(annulus) == 1);
  CHECK(boundary_count(annulus) == 2);
  CHECK(euler_characteristic(annulus) == 0);
  CHECK(is_orientable(annulus));

  const RibbonGraph moebius = chord({0, 0}, {0});
  CHECK(boundary_count(moebius) == 1);
  CHECK_FALSE(is_orientable(moebius));

  const RibbonGraph torus = chord({0, 1, 0, 1});
  CHECK(vertex_count(torus) == 1);
  CHECK(boundary_count(torus) == 1);
  CHECK(euler_characteristic(torus) == -1);
  CHECK(is_orientable(torus));

  const RibbonGraph dumbbell = from_rotation(rot(1, {{0}, {0}}));
  CHECK(vertex_count(dumbbell) == 2);
  CHECK(boundary_count(dumbbell) == 1);
  CHECK(euler_characteristic(dumbbell) == 1);
  CHECK(is_orientable(dumbbell));
}

TEST_CASE("rotation systems are validated") {
  CHECK_THROWS_AS(from_rotation(rot(2, {{0, 1, 0}})), PreconditionError);
  CHECK_THROWS_AS(from_rotation(rot(1, {{0, 0}, {}})), PreconditionError);
  CHECK_THROWS_AS(from_rotation(rot(1, {{0, 0, 0}})), PreconditionError);
  CHECK_THROWS_AS(chord({0, 1, 1}), PreconditionError);
}

TEST_CASE("counts agree with face tracing and flip search") {
  Rng rng(21);
  for (int t = 0; t < 2000; ++t) {
    const RotationSystem rs = random_rotation(rng, rng.uniform_int(1, 7));
    const RibbonGraph g = from_rotation(rs);
    CHECK(vertex_count(g) == static_cast<int>(rs.vertices.size()));
    CHECK(boundary_count(g) == oracle::boundary_count(rs));
    CHECK(is_orientable(g) == oracle::is_orientable(rs));
  }
}

TEST_CASE("circles come in pairs of involution orbits") {
  Rng rng(22);
  for (int t = 0; t < 300; ++t) {
    const RibbonGraph g = random_ribbon_graph(rng, rng.uniform_int(1, 7));
    for (const auto* m : {&g.attach_matching(), &g.side_matching()}) {
      // cycles of the permutation arcs o m
      std::vector<char> seen(g.corner_count(), 0);
      int cycles = 0;
      for (Corner c = 0; c < g.corner_count(); ++c) {
        if (seen[c]) continue;
        ++cycles;
        for (Corner x = c; !seen[x]; x = g.arc_partner((*m)[x])) seen[x] = 1;
      }
      CHECK(cycles % 2 == 0);
    }
    CHECK(2 * vertex_count(g) > 0);
  }
}

TEST_CASE("partial duals") {
  const RibbonGraph annulus = chord({0, 0});
  const int e0[1] = {0};
  const RibbonGraph d = partial_dual(annulus, e0);
  CHECK(vertex_count(d) == 2);
  CHECK(to_rotation(d) == rot(1, {{0}, {0}}));
  CHECK(partial_dual(d, e0) == annulus);

  const RibbonGraph moebius = chord({0, 0}, {0});
  const RibbonGraph dm = partial_dual(moebius, e0);
  CHECK(vertex_count(dm) == 1);
  CHECK(lspace_of(dm) == lspace_of(moebius));
}

TEST_CASE("partial duals form an elementary abelian group action") {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform_int(1, 7);
    const RibbonGraph g = random_ribbon_graph(rng, n);
    std::vector<int> a, b, sym;
    for (int e = 0; e < n; ++e) {
      const bool x = rng.coin(), y = rng.coin();
      if (x) a.push_back(e);
      if (y) b.push_back(e);
      if (x != y) sym.push_back(e);
    }
    CHECK(partial_dual(partial_dual(g, b), a) == partial_dual(g, sym));
    CHECK(partial_dual(partial_dual(g, a), b) == partial_dual(partial_dual(g, b), a));
    CHECK(partial_dual(partial_dual(g, a), a) == g);
    CHECK(euler_characteristic(g) == vertex_count(g) - n);
  }
}

TEST_CASE("first move on chord diagrams") {
  // (1 2 1 2): corners 0.1 and 1.0? The middle occurrences are 2 (first) and 1 (second).
  const RibbonGraph crossed = chord({0, 1, 0, 1});
  // arc between first occurrence of 2 (corner 1.1) and second occurrence of 1 (corner 0.2)
  const Arc middle = arc_between(crossed, corner_of(1, 1), corner_of(0, 2));
  const MoveResult r = vassiliev1(crossed, middle);
  CHECK(r.graph == chord({0, 0, 1, 1}));
  CHECK(vassiliev1(r.graph, r.image).graph == crossed);

  const RibbonGraph parallel = chord({0, 0, 1, 1});
  const Arc join = arc_between(parallel, corner_of(0, 3), corner_of(1, 0));
  CHECK(vassiliev1(parallel, join).graph == chord({0, 1, 0, 1}));
}

TEST_CASE("second move on the twisted crossing") {
  const RibbonGraph g = chord({0, 1, 0, 1}, {0});
  const Arc middle = arc_between(g, corner_of(1, 1), corner_of(0, 2));
  const MoveResult r = vassiliev2(g, middle, middle.lo < 4 ? middle.lo : middle.hi);
  CHECK(vertex_count(r.graph) == 1);
  CHECK(intersection_matrix(r.graph).to_string() == "10\n01\n");
  const int e0[1] = {0};
  CHECK(r.graph == partial_dual(vassiliev1(partial_dual(g, e0), middle).graph, e0));
}

TEST_CASE("moves reject invalid input") {
  const RibbonGraph g = chord({0, 1, 0, 1});
  CHECK_THROWS_AS(vassiliev1(g, Arc{0, 1}), PreconditionError);
  const RibbonGraph dumbbell = from_rotation(rot(1, {{0}, {0}}));
  const Arc closing = dumbbell.arcs().front();
  CHECK_THROWS_AS(vassiliev1(dumbbell, closing), PreconditionError);
  const Arc a = g.arcs().front();
  CHECK_THROWS_AS(vassiliev2(g, a, a.lo + 1 == a.hi ? a.lo + 2 : a.lo + 1), PreconditionError);
}

TEST_CASE("moves are involutions, commute, and v1 keeps degrees") {
  Rng rng(24);
  int tested = 0;
  for (int t = 0; t < 3000; ++t) {
    const RibbonGraph g = random_ribbon_graph(rng, rng.uniform_int(1, 7));
    const auto arcs = g.arcs();
    const Arc a = arcs[rng.below(arcs.size())];
    const Corner fixed = rng.coin() ? a.lo : a.hi;
    const int alpha[1] = {edge_of(fixed)};
    if (g.attach(a.lo) == a.hi || partial_dual(g, alpha).attach(a.lo) == a.hi) continue;
    ++tested;
    const MoveResult r1 = vassiliev1(g, a);
    const MoveResult r2 = vassiliev2(g, a, fixed);
    CHECK(vassiliev1(r1.graph, r1.image).graph == g);
    const Corner back = edge_of(r2.image.lo) == alpha[0] ? r2.image.lo : r2.image.hi;
    CHECK(vassiliev2(r2.graph, r2.image, back).graph == g);
    const Corner f1 = edge_of(r1.image.lo) == alpha[0] ? r1.image.lo : r1.image.hi;
    CHECK(vassiliev2(r1.graph, r1.image, f1).graph == vassiliev1(r2.graph, r2.image).graph);
    CHECK(vertex_degrees(r1.graph) == vertex_degrees(g));
    CHECK(r1.graph.edge_count() == g.edge_count());
    CHECK(vertex_count(r2.graph) == vertex_count(g));
    CHECK(boundary_count(r2.graph) == boundary_count(g));
    CHECK(is_orientable(r2.graph) == is_orientable(g));
  }
  CHECK(tested > 1000);
}

TEST_CASE("serialization reproduces parsed graphs") {
  Rng rng(25);
  for (int t = 0; t < 2000; ++t) {
    const RotationSystem rs = random_rotation(rng, rng.uniform_int(1, 8));
    const RibbonGraph g = from_rotation(rs);
    CHECK(from_rotation(to_rotation(g)) == g);
  }
}

TEST_CASE("serialization of moved graphs keeps the surface") {
  Rng rng(26);
  for (int t = 0; t < 1000; ++t) {
    const RibbonGraph g = random_ribbon_graph(rng, rng.uniform_int(1, 6));
    std::vector<int> sub;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (rng.coin()) sub.push_back(e);
    }
    const RibbonGraph d = partial_dual(g, sub);
    const RibbonGraph back = from_rotation(to_rotation(d));
    CHECK(vertex_count(back) == vertex_count(d));
    CHECK(boundary_count(back) == boundary_count(d));
    CHECK(is_orientable(back) == is_orientable(d));
    CHECK(lspace_of(back) == lspace_of(d));
  }
}

TEST_CASE("vertex flips change nothing observable") {
  Rng rng(27);
  for (int t = 0; t < 1000; ++t) {
    RotationSystem rs = random_rotation(rng, rng.uniform_int(1, 7));
    const RibbonGraph g = from_rotation(rs);
    const std::size_t v = rng.below(rs.vertices.size());
    std::vector<int> hits(rs.edges, 0);
    for (int e : rs.vertices[v]) ++hits[e];
    std::reverse(rs.vertices[v].begin(), rs.vertices[v].end());
    for (int e = 0; e < rs.edges; ++e) {
      if (hits[e] == 1) rs.twisted[e] = !rs.twisted[e];
    }
    const RibbonGraph h = from_rotation(rs);
    CHECK(vertex_count(h) == vertex_count(g));
    CHECK(boundary_count(h) == boundary_count(g));
    CHECK(is_orientable(h) == is_orientable(g));
    CHECK(lspace_of(h) == lspace_of(g));
  }
}

TEST_CASE("components") {
  const RibbonGraph g = from_rotation(rot(3, {{0, 0}, {1, 2, 1, 2}}));
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1, 2});
}
