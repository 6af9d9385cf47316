#include "lspace/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "lspace/errors.hpp"

namespace lspace {

std::string corner_name(Corner c) {
  return std::to_string(edge_of(c) + 1) + "." + std::to_string(slot_of(c));
}

Corner Circle::lowest() const {
  Corner best = segments.front().tail;
  for (const Segment& s : segments) best = std::min({best, s.tail, s.head});
  return best;
}

namespace {

bool is_matching_within_edges(const std::vector<Corner>& m) {
  for (std::size_t c = 0; c < m.size(); ++c) {
    const Corner p = m[c];
    if (p < 0 || static_cast<std::size_t>(p) >= m.size()) return false;
    if (p == static_cast<Corner>(c) || m[p] != static_cast<Corner>(c)) return false;
    if (edge_of(p) != edge_of(static_cast<Corner>(c))) return false;
  }
  return true;
}

std::vector<Circle> trace_circles(const RibbonGraph& g, const std::vector<Corner>& pairing) {
  const int corners = g.corner_count();
  std::vector<char> seen(corners, 0);
  std::vector<Circle> out;
  for (Corner start = 0; start < corners; ++start) {
    if (seen[start]) continue;
    Circle circle;
    Corner tail = start;
    do {
      const Corner head = pairing[tail];
      seen[tail] = seen[head] = 1;
      circle.segments.push_back({tail, head});
      tail = g.arc_partner(head);
    } while (tail != start);
    out.push_back(std::move(circle));
  }
  return out;
}

// Position of each corner inside the traced circles.
struct CornerPlace {
  int circle = -1;
  int segment = -1;
};

std::vector<CornerPlace> locate(const std::vector<Circle>& circles, int corners) {
  std::vector<CornerPlace> where(corners);
  for (int ci = 0; ci < static_cast<int>(circles.size()); ++ci) {
    const auto& segs = circles[ci].segments;
    for (int si = 0; si < static_cast<int>(segs.size()); ++si) {
      where[segs[si].tail] = {ci, si};
      where[segs[si].head] = {ci, si};
    }
  }
  return where;
}

Circle reversed(const Circle& c) {
  Circle out;
  out.segments.reserve(c.segments.size());
  for (auto it = c.segments.rbegin(); it != c.segments.rend(); ++it) {
    out.segments.push_back({it->head, it->tail});
  }
  return out;
}

// 0 when the ribbon joining segments p and q is untwisted relative to their
// traversal directions.
int twist_parity(const RibbonGraph& g, Segment p, Segment q) {
  return g.side(p.head) == q.tail ? 0 : 1;
}

}  // namespace

// --------------------------------------------------------------- RibbonGraph

RibbonGraph RibbonGraph::from_matchings(int edges, std::vector<Corner> attach,
                                        std::vector<Corner> side, std::vector<Corner> arcs) {
  if (edges < 0) throw PreconditionError("negative edge count");
  const std::size_t corners = 4 * static_cast<std::size_t>(edges);
  if (attach.size() != corners || side.size() != corners || arcs.size() != corners) {
    throw PreconditionError("matching sizes must equal 4 * edges");
  }
  if (!is_matching_within_edges(attach)) {
    throw PreconditionError("attach is not a perfect matching on each edge's corners");
  }
  if (!is_matching_within_edges(side)) {
    throw PreconditionError("side is not a perfect matching on each edge's corners");
  }
  for (std::size_t c = 0; c < corners; ++c) {
    if (attach[c] == side[c]) {
      throw PreconditionError("attach and side coincide on edge " +
                              std::to_string(edge_of(static_cast<Corner>(c)) + 1));
    }
  }
  for (std::size_t c = 0; c < corners; ++c) {
    const Corner p = arcs[c];
    if (p < 0 || static_cast<std::size_t>(p) >= corners || p == static_cast<Corner>(c) ||
        arcs[p] != static_cast<Corner>(c)) {
      throw PreconditionError("arcs is not a fixed-point-free involution");
    }
  }
  RibbonGraph g;
  g.n_ = edges;
  g.attach_ = std::move(attach);
  g.side_ = std::move(side);
  g.arcs_ = std::move(arcs);
  return g;
}

Corner RibbonGraph::diagonal(Corner c) const {
  const Corner base = corner_of(edge_of(c), 0);
  for (Corner d = base; d < base + 4; ++d) {
    if (d != c && d != attach_[c] && d != side_[c]) return d;
  }
  throw ConsistencyError("corner has no diagonal partner");
}

std::vector<Arc> RibbonGraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(2 * n_);
  for (Corner c = 0; c < corner_count(); ++c) {
    if (c < arcs_[c]) out.push_back({c, arcs_[c]});
  }
  return out;
}

// ------------------------------------------------------------- construction

RibbonGraph from_rotation(const RotationSystem& rs) {
  const int n = rs.edges;
  if (n < 0) throw PreconditionError("negative edge count");
  if (static_cast<int>(rs.twisted.size()) != n) {
    throw PreconditionError("twist vector must have one entry per edge");
  }
  std::vector<int> seen(n, 0);
  for (const auto& word : rs.vertices) {
    if (word.empty()) throw PreconditionError("isolated vertex without edges");
    for (int label : word) {
      if (label < 0 || label >= n) {
        throw PreconditionError("edge label " + std::to_string(label + 1) + " out of range");
      }
      ++seen[label];
    }
  }
  for (int e = 0; e < n; ++e) {
    if (seen[e] != 2) {
      throw PreconditionError("edge " + std::to_string(e + 1) + " occurs " +
                              std::to_string(seen[e]) + " times, expected 2");
    }
  }

  const int corners = 4 * n;
  std::vector<Corner> attach(corners), side(corners), arcs(corners);
  for (int e = 0; e < n; ++e) {
    const Corner c0 = corner_of(e, 0);
    attach[c0] = c0 + 1;
    attach[c0 + 1] = c0;
    attach[c0 + 2] = c0 + 3;
    attach[c0 + 3] = c0 + 2;
    if (rs.twisted[e]) {
      side[c0] = c0 + 2;
      side[c0 + 2] = c0;
      side[c0 + 1] = c0 + 3;
      side[c0 + 3] = c0 + 1;
    } else {
      side[c0] = c0 + 3;
      side[c0 + 3] = c0;
      side[c0 + 1] = c0 + 2;
      side[c0 + 2] = c0 + 1;
    }
  }

  std::fill(seen.begin(), seen.end(), 0);
  for (const auto& word : rs.vertices) {
    std::vector<Segment> segs;
    segs.reserve(word.size());
    for (int label : word) {
      const int k = seen[label]++ * 2;
      segs.push_back({corner_of(label, k), corner_of(label, k + 1)});
    }
    for (std::size_t t = 0; t < segs.size(); ++t) {
      const Corner a = segs[t].head;
      const Corner b = segs[(t + 1) % segs.size()].tail;
      arcs[a] = b;
      arcs[b] = a;
    }
  }
  return RibbonGraph::from_matchings(n, std::move(attach), std::move(side), std::move(arcs));
}

RibbonGraph chord_diagram(std::span<const int> word, std::span<const int> twisted) {
  RotationSystem rs;
  int n = 0;
  for (int label : word) {
    if (label < 0) throw PreconditionError("negative chord label");
    n = std::max(n, label + 1);
  }
  rs.edges = n;
  rs.twisted.assign(n, false);
  for (int t : twisted) {
    if (t < 0 || t >= n) throw PreconditionError("twisted chord label out of range");
    rs.twisted[t] = true;
  }
  if (!word.empty()) rs.vertices.emplace_back(word.begin(), word.end());
  return from_rotation(rs);
}

// ------------------------------------------------------------------ topology

std::vector<Circle> vertex_circles(const RibbonGraph& g) {
  return trace_circles(g, g.attach_matching());
}

std::vector<Circle> boundary_circles(const RibbonGraph& g) {
  return trace_circles(g, g.side_matching());
}

int vertex_count(const RibbonGraph& g) { return static_cast<int>(vertex_circles(g).size()); }

int boundary_count(const RibbonGraph& g) {
  return static_cast<int>(boundary_circles(g).size());
}

int euler_characteristic(const RibbonGraph& g) { return vertex_count(g) - g.edge_count(); }

bool is_orientable(const RibbonGraph& g) {
  const auto circles = vertex_circles(g);
  const auto where = locate(circles, g.corner_count());
  // flip[c] says whether circle c is read against its traced direction.
  std::vector<int> flip(circles.size(), -1);
  for (std::size_t root = 0; root < circles.size(); ++root) {
    if (flip[root] != -1) continue;
    flip[root] = 0;
    std::queue<int> todo;
    todo.push(static_cast<int>(root));
    while (!todo.empty()) {
      const int ci = todo.front();
      todo.pop();
      for (const Segment& p : circles[ci].segments) {
        const Corner other = g.side(p.head);
        const CornerPlace q_at = where[other];
        const Segment q = circles[q_at.circle].segments[q_at.segment];
        // Parity of the ribbon relative to both traced directions.
        const int parity = twist_parity(g, p, q);
        const int want = flip[ci] ^ parity;
        if (flip[q_at.circle] == -1) {
          flip[q_at.circle] = want;
          todo.push(q_at.circle);
        } else if (flip[q_at.circle] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> vertex_degrees(const RibbonGraph& g) {
  std::vector<int> out;
  for (const Circle& c : vertex_circles(g)) out.push_back(static_cast<int>(c.segments.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> components(const RibbonGraph& g) {
  const int n = g.edge_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : g.arcs()) {
    const int u = find(edge_of(a.lo));
    const int v = find(edge_of(a.hi));
    if (u != v) parent[std::max(u, v)] = std::min(u, v);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> index(n, -1);
  for (int e = 0; e < n; ++e) {
    const int r = find(e);
    if (index[r] == -1) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(e);
  }
  return out;
}

// ------------------------------------------------------- duals and moves

RibbonGraph partial_dual(const RibbonGraph& g, std::span<const int> edges) {
  std::vector<char> chosen(g.edge_count(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) {
      throw PreconditionError("edge " + std::to_string(e + 1) + " out of range");
    }
    chosen[e] = 1;
  }
  std::vector<Corner> attach = g.attach_matching();
  std::vector<Corner> side = g.side_matching();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!chosen[e]) continue;
    for (int k = 0; k < 4; ++k) std::swap(attach[corner_of(e, k)], side[corner_of(e, k)]);
  }
  return RibbonGraph::from_matchings(g.edge_count(), std::move(attach), std::move(side),
                                     g.arc_matching());
}

std::pair<int, int> arc_edges(const RibbonGraph& g, Arc a) {
  if (!g.is_arc(a)) throw PreconditionError("not an arc of the graph");
  return {edge_of(a.lo), edge_of(a.hi)};
}

MoveResult vassiliev1(const RibbonGraph& g, Arc a) {
  if (!g.is_arc(a)) {
    throw PreconditionError("(" + corner_name(a.lo) + ", " + corner_name(a.hi) +
                            ") is not an arc of the graph");
  }
  if (g.attach(a.lo) == a.hi) {
    throw PreconditionError("arc " + corner_name(a.lo) + "-" + corner_name(a.hi) +
                            " closes a single segment; there is no pair of segments to swap");
  }
  // Reading the circle: x ~ s1a [S1] s1b ~a~ s2a [S2] s2b ~ y.
  const Corner s1b = a.lo;
  const Corner s1a = g.attach(s1b);
  const Corner s2a = a.hi;
  const Corner s2b = g.attach(s2a);
  const Corner x = g.arc_partner(s1a);
  const Corner y = g.arc_partner(s2b);
  const Arc image = Arc::of(s2b, s1a);
  if (x == s2b) {
    // Two segments alone on a circle: swapping them is a rotation of the disk.
    return {g, image};
  }
  std::vector<Corner> arcs = g.arc_matching();
  auto join = [&](Corner p, Corner q) {
    arcs[p] = q;
    arcs[q] = p;
  };
  join(x, s2a);
  join(s2b, s1a);
  join(s1b, y);
  return {RibbonGraph::from_matchings(g.edge_count(), g.attach_matching(), g.side_matching(),
                                      std::move(arcs)),
          image};
}

MoveResult vassiliev2(const RibbonGraph& g, Arc a, Corner fixed) {
  if (!g.is_arc(a)) throw PreconditionError("not an arc of the graph");
  if (!a.has(fixed)) {
    throw PreconditionError("fixed corner " + corner_name(fixed) + " is not an end of the arc");
  }
  const int alpha[] = {edge_of(fixed)};
  const RibbonGraph dual = partial_dual(g, alpha);
  MoveResult inner = vassiliev1(dual, a);
  return {partial_dual(inner.graph, alpha), inner.image};
}

// ------------------------------------------------------------- serialization

namespace {

// True when every attachment segment is {4e, 4e+1} or {4e+2, 4e+3}.
bool has_standard_segments(const RibbonGraph& g) {
  for (Corner c = 0; c < g.corner_count(); ++c) {
    if (g.attach(c) != (c ^ 1)) return false;
  }
  return true;
}

// Rotations of each circle and an order of circles so that, reading the
// words, every edge meets its slot-0 segment before its slot-2 segment.
// Returns false when no such arrangement exists.
bool arrange_for_labels(const RibbonGraph& g, std::vector<Circle>& circles) {
  const int count = static_cast<int>(circles.size());
  const auto home = locate(circles, g.corner_count());
  for (int ci = 0; ci < count; ++ci) {
    Circle& circle = circles[ci];
    const int k = static_cast<int>(circle.segments.size());
    int lowest_at = 0;
    for (int s = 0; s < k; ++s) {
      if (circle.segments[s].tail < circle.segments[lowest_at].tail) lowest_at = s;
    }
    bool placed = false;
    for (int shift = 0; shift < k && !placed; ++shift) {
      const int start = (lowest_at + shift) % k;
      std::vector<char> met_first(g.edge_count(), 0);
      bool ok = true;
      for (int t = 0; t < k && ok; ++t) {
        const Segment s = circle.segments[(start + t) % k];
        const int e = edge_of(s.tail);
        if (slot_of(s.tail) < 2) {
          met_first[e] = 1;
        } else if (!met_first[e] && home[corner_of(e, 0)].circle == ci) {
          ok = false;
        }
      }
      if (ok) {
        std::rotate(circle.segments.begin(), circle.segments.begin() + start,
                    circle.segments.end());
        placed = true;
      }
    }
    if (!placed) return false;
  }

  // Circle containing slot 0 of an edge precedes the one containing slot 2.
  const auto where = locate(circles, g.corner_count());
  std::vector<std::vector<int>> after(count);
  std::vector<int> indegree(count, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int from = where[corner_of(e, 0)].circle;
    const int to = where[corner_of(e, 2)].circle;
    if (from != to) {
      after[from].push_back(to);
      ++indegree[to];
    }
  }
  std::priority_queue<std::pair<Corner, int>, std::vector<std::pair<Corner, int>>,
                      std::greater<>>
      ready;
  for (int c = 0; c < count; ++c) {
    if (indegree[c] == 0) ready.push({circles[c].lowest(), c});
  }
  std::vector<Circle> ordered;
  while (!ready.empty()) {
    const int c = ready.top().second;
    ready.pop();
    ordered.push_back(circles[c]);
    for (int d : after[c]) {
      if (--indegree[d] == 0) ready.push({circles[d].lowest(), d});
    }
  }
  if (static_cast<int>(ordered.size()) != count) return false;
  circles = std::move(ordered);
  return true;
}

void start_at_lowest(std::vector<Circle>& circles) {
  for (Circle& circle : circles) {
    auto it = std::min_element(circle.segments.begin(), circle.segments.end(),
                               [](const Segment& a, const Segment& b) {
                                 return std::min(a.tail, a.head) < std::min(b.tail, b.head);
                               });
    std::rotate(circle.segments.begin(), it, circle.segments.end());
  }
  std::sort(circles.begin(), circles.end(),
            [](const Circle& a, const Circle& b) { return a.lowest() < b.lowest(); });
}

}  // namespace

RotationSystem to_rotation(const RibbonGraph& g) {
  std::vector<Circle> circles = vertex_circles(g);

  // Directions: segments read from even to odd slot when that is consistent.
  bool label_form = has_standard_segments(g);
  if (label_form) {
    for (Circle& circle : circles) {
      const bool forward = slot_of(circle.segments.front().tail) % 2 == 0;
      for (const Segment& s : circle.segments) {
        if ((slot_of(s.tail) % 2 == 0) != forward) label_form = false;
      }
      if (!forward) circle = reversed(circle);
    }
  }
  if (!label_form) {
    circles = vertex_circles(g);
    const auto where = locate(circles, g.corner_count());
    std::vector<int> flip(circles.size(), -1);
    for (std::size_t root = 0; root < circles.size(); ++root) {
      if (flip[root] != -1) continue;
      flip[root] = 0;
      std::queue<int> todo;
      todo.push(static_cast<int>(root));
      while (!todo.empty()) {
        const int ci = todo.front();
        todo.pop();
        for (const Segment& p : circles[ci].segments) {
          const CornerPlace q_at = where[g.side(p.head)];
          if (flip[q_at.circle] != -1) continue;
          const Segment q = circles[q_at.circle].segments[q_at.segment];
          flip[q_at.circle] = flip[ci] ^ twist_parity(g, p, q);
          todo.push(q_at.circle);
        }
      }
    }
    for (std::size_t c = 0; c < circles.size(); ++c) {
      if (flip[c] == 1) circles[c] = reversed(circles[c]);
    }
  }

  if (!label_form || !arrange_for_labels(g, circles)) start_at_lowest(circles);

  RotationSystem rs;
  rs.edges = g.edge_count();
  rs.twisted.assign(g.edge_count(), false);
  std::vector<int> first(g.edge_count(), -1);
  std::vector<Segment> first_seg(g.edge_count());
  for (const Circle& circle : circles) {
    std::vector<int> word;
    for (const Segment& s : circle.segments) {
      const int e = edge_of(s.tail);
      word.push_back(e);
      if (first[e] == -1) {
        first[e] = 1;
        first_seg[e] = s;
      } else {
        rs.twisted[e] = twist_parity(g, first_seg[e], s) != 0;
      }
    }
    rs.vertices.push_back(std::move(word));
  }
  return rs;
}

// ------------------------------------------------------------------ random

RotationSystem random_rotation(Rng& rng, int edges) {
  RotationSystem rs;
  rs.edges = edges;
  rs.twisted.resize(edges);
  for (int e = 0; e < edges; ++e) rs.twisted[e] = rng.coin();
  if (edges == 0) return rs;

  std::vector<int> slots;
  for (int e = 0; e < edges; ++e) {
    slots.push_back(e);
    slots.push_back(e);
  }
  rng.shuffle(std::span<int>(slots));

  const int total = 2 * edges;
  const int vertex_target = rng.uniform_int(1, std::min(total, edges + 1));
  std::vector<int> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  rng.shuffle(std::span<int>(cuts));
  cuts.resize(vertex_target - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(total);
  int from = 0;
  for (int cut : cuts) {
    rs.vertices.emplace_back(slots.begin() + from, slots.begin() + cut);
    from = cut;
  }
  return rs;
}

RibbonGraph random_ribbon_graph(Rng& rng, int edges) {
  return from_rotation(random_rotation(rng, edges));
}

}  // namespace lspace
