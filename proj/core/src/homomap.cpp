#include "lspace/homomap.hpp"

#include <bit>
#include <queue>
#include <string>

#include "lspace/errors.hpp"

namespace lspace {

TransitionClass classify_transition(const RibbonGraph& g, Corner a, Corner b) {
  if (a == b || edge_of(a) != edge_of(b)) {
    throw PreconditionError("transition needs two distinct corners of one edge");
  }
  if (g.attach(a) == b) return TransitionClass::kAttachPair;
  if (g.side(a) == b) return TransitionClass::kSidePair;
  return TransitionClass::kDiagonalPair;
}

SympVector transition_value(const RibbonGraph& g, Corner a, Corner b) {
  const int n = g.edge_count();
  const int e = edge_of(a);
  switch (classify_transition(g, a, b)) {
    case TransitionClass::kAttachPair:
      return SympVector::f(n, e);
    case TransitionClass::kSidePair:
      return SympVector::e(n, e);
    case TransitionClass::kDiagonalPair:
      break;
  }
  return SympVector::e(n, e) + SympVector::f(n, e);
}

namespace {

void check_size(const RibbonGraph& g) {
  if (g.edge_count() > kMaxGrade) {
    throw PreconditionError("L-space supports at most " + std::to_string(kMaxGrade) +
                            " edges, got " + std::to_string(g.edge_count()));
  }
}

// Corners covered at each edge, as 4-bit masks.
std::uint64_t image_of_masks(const RibbonGraph& g, const std::vector<std::uint8_t>& masks) {
  const int n = g.edge_count();
  std::uint64_t out = 0;
  for (int e = 0; e < n; ++e) {
    const std::uint8_t m = masks[e];
    const int covered = std::popcount(static_cast<unsigned>(m));
    if (covered == 0 || covered == 4) continue;
    if (covered != 2) throw ConsistencyError("cycle covers an odd number of corners");
    const Corner a = corner_of(e, std::countr_zero(static_cast<unsigned>(m)));
    const Corner b = corner_of(e, 31 - std::countl_zero(static_cast<unsigned>(m)));
    out ^= transition_value(g, a, b).bits();
  }
  return out;
}

void toggle(std::vector<std::uint8_t>& masks, Arc a) {
  masks[edge_of(a.lo)] ^= static_cast<std::uint8_t>(1U << slot_of(a.lo));
  masks[edge_of(a.hi)] ^= static_cast<std::uint8_t>(1U << slot_of(a.hi));
}

}  // namespace

SympVector cycle_image(const RibbonGraph& g, std::span<const Arc> cycle) {
  check_size(g);
  std::vector<std::uint8_t> masks(g.edge_count(), 0);
  for (const Arc& a : cycle) toggle(masks, a);
  return {g.edge_count(), image_of_masks(g, masks)};
}

std::vector<std::vector<Arc>> fundamental_cycles(const RibbonGraph& g) {
  const int n = g.edge_count();
  const std::vector<Arc> arcs = g.arcs();
  std::vector<std::vector<int>> incident(n);
  for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
    incident[edge_of(arcs[k].lo)].push_back(k);
    if (edge_of(arcs[k].hi) != edge_of(arcs[k].lo)) incident[edge_of(arcs[k].hi)].push_back(k);
  }
  std::vector<int> parent_arc(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<char> in_tree(arcs.size(), 0);
  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    depth[root] = 0;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (int k : incident[u]) {
        const int a = edge_of(arcs[k].lo);
        const int b = edge_of(arcs[k].hi);
        const int v = a == u ? b : a;
        if (depth[v] != -1) continue;
        depth[v] = depth[u] + 1;
        parent_arc[v] = k;
        in_tree[k] = 1;
        todo.push(v);
      }
    }
  }
  auto parent = [&](int v) {
    const Arc& a = arcs[parent_arc[v]];
    return edge_of(a.lo) == v ? edge_of(a.hi) : edge_of(a.lo);
  };
  std::vector<std::vector<Arc>> cycles;
  for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
    if (in_tree[k]) continue;
    std::vector<Arc> cycle{arcs[k]};
    int u = edge_of(arcs[k].lo);
    int v = edge_of(arcs[k].hi);
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      cycle.push_back(arcs[parent_arc[u]]);
      u = parent(u);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Lagrangian lspace_of(const RibbonGraph& g) {
  check_size(g);
  const int n = g.edge_count();
  std::vector<std::uint64_t> images;
  for (const auto& cycle : fundamental_cycles(g)) {
    std::vector<std::uint8_t> masks(n, 0);
    for (const Arc& a : cycle) toggle(masks, a);
    images.push_back(image_of_masks(g, masks));
  }
  Subspace s = Subspace::span_bits(n, images);
  if (!is_lagrangian(s)) {
    throw ConsistencyError("L-space of dimension " + std::to_string(s.dim()) + " for " +
                           std::to_string(n) + " edges is not Lagrangian");
  }
  return Lagrangian(std::move(s));
}

FramedGraphMatrix intersection_matrix_from_word(const RibbonGraph& g) {
  const auto circles = vertex_circles(g);
  const int n = g.edge_count();
  if (circles.size() != 1 && n > 0) {
    throw PreconditionError("intersection matrix needs a one-vertex graph, got " +
                            std::to_string(circles.size()) + " vertices");
  }
  FramedGraphMatrix m(n);
  if (n == 0) return m;
  const auto& segs = circles.front().segments;
  std::vector<int> first(n, -1), second(n, -1);
  for (int t = 0; t < static_cast<int>(segs.size()); ++t) {
    const int e = edge_of(segs[t].tail);
    (first[e] == -1 ? first[e] : second[e]) = t;
  }
  for (int i = 0; i < n; ++i) {
    const Segment p = segs[first[i]];
    const Segment q = segs[second[i]];
    m.set(i, i, g.side(p.head) != q.tail);
    for (int j = i + 1; j < n; ++j) {
      const bool j1_inside = first[i] < first[j] && first[j] < second[i];
      const bool j2_inside = first[i] < second[j] && second[j] < second[i];
      m.set(i, j, j1_inside != j2_inside);
    }
  }
  return m;
}

FramedGraphMatrix intersection_matrix(const RibbonGraph& g) {
  FramedGraphMatrix by_word = intersection_matrix_from_word(g);
  FramedGraphMatrix by_homology = to_matrix(lspace_of(g));
  if (!(by_word == by_homology)) {
    throw ConsistencyError("intersection matrix from the vertex word differs from the L-space");
  }
  return by_word;
}

}  // namespace lspace
