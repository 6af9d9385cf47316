#pragma once

// Ribbon graphs in the corner model.
//
// Edge e (0-based) owns four corner points 4e+0 .. 4e+3, the corners of its
// rectangle. Three perfect matchings describe the surface:
//   attach  pairs the corners of each segment where the edge meets a vertex,
//   side    pairs the corners joined by a long side of the ribbon,
//   arcs    pairs corners joined by a piece of vertex boundary between two
//           consecutive attachment segments.
// Vertex circles are the cycles of attach and arcs; boundary components are
// the cycles of side and arcs. Taking a partial dual swaps attach and side.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lspace/random.hpp"

namespace lspace {

using Corner = int;

constexpr Corner corner_of(int edge, int k) { return 4 * edge + k; }
constexpr int edge_of(Corner c) { return c / 4; }
constexpr int slot_of(Corner c) { return c % 4; }

// "e.k" with a 1-based edge label.
std::string corner_name(Corner c);

// An arc of vertex boundary, stored with lo < hi.
struct Arc {
  Corner lo = 0;
  Corner hi = 0;

  static Arc of(Corner a, Corner b) { return a < b ? Arc{a, b} : Arc{b, a}; }
  bool has(Corner c) const { return c == lo || c == hi; }
  Corner other(Corner c) const { return c == lo ? hi : lo; }
  auto operator<=>(const Arc&) const = default;
};

// Cyclic vertex words over 0-based edge labels plus a twist bit per edge.
struct RotationSystem {
  int edges = 0;
  std::vector<std::vector<int>> vertices;
  std::vector<bool> twisted;

  bool operator==(const RotationSystem&) const = default;
};

// A segment traversed from tail to head.
struct Segment {
  Corner tail = 0;
  Corner head = 0;
};

// One vertex circle (or boundary circle) in traversal order.
struct Circle {
  std::vector<Segment> segments;
  Corner lowest() const;
};

class RibbonGraph {
 public:
  RibbonGraph() = default;

  // Validates the matchings; throws PreconditionError on violation.
  static RibbonGraph from_matchings(int edges, std::vector<Corner> attach,
                                    std::vector<Corner> side, std::vector<Corner> arcs);

  int edge_count() const noexcept { return n_; }
  int corner_count() const noexcept { return 4 * n_; }

  Corner attach(Corner c) const { return attach_[c]; }
  Corner side(Corner c) const { return side_[c]; }
  Corner arc_partner(Corner c) const { return arcs_[c]; }

  // The pairing on e's corners that is neither attach nor side.
  Corner diagonal(Corner c) const;

  // All arcs, sorted by their lower corner.
  std::vector<Arc> arcs() const;
  bool is_arc(Arc a) const { return a.lo >= 0 && a.hi < corner_count() && arcs_[a.lo] == a.hi; }

  const std::vector<Corner>& attach_matching() const noexcept { return attach_; }
  const std::vector<Corner>& side_matching() const noexcept { return side_; }
  const std::vector<Corner>& arc_matching() const noexcept { return arcs_; }

  bool operator==(const RibbonGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Corner> attach_;
  std::vector<Corner> side_;
  std::vector<Corner> arcs_;
};

// Throws PreconditionError when a label does not occur exactly twice or a
// vertex word is empty.
RibbonGraph from_rotation(const RotationSystem& rs);

// One-vertex graph; `twisted` lists 0-based chord labels.
RibbonGraph chord_diagram(std::span<const int> word, std::span<const int> twisted = {});

inline bool equals(const RibbonGraph& g, const RibbonGraph& h) { return g == h; }

std::vector<Circle> vertex_circles(const RibbonGraph& g);
std::vector<Circle> boundary_circles(const RibbonGraph& g);

int vertex_count(const RibbonGraph& g);
int boundary_count(const RibbonGraph& g);
int euler_characteristic(const RibbonGraph& g);
bool is_orientable(const RibbonGraph& g);

// Sorted vertex degrees (number of attachment segments per vertex).
std::vector<int> vertex_degrees(const RibbonGraph& g);

// Edge sets of the connected components, each sorted; components ordered by
// their lowest edge.
std::vector<std::vector<int>> components(const RibbonGraph& g);

RibbonGraph partial_dual(const RibbonGraph& g, std::span<const int> edges);

// Result of a Vassiliev move together with the arc separating the two
// transposed segments afterwards; applying the same move at `image` undoes it.
struct MoveResult {
  RibbonGraph graph;
  Arc image;
};

// The two edges whose segments meet along arc `a` (the edge of a.lo first).
std::pair<int, int> arc_edges(const RibbonGraph& g, Arc a);

// First move: transposes the two attachment segments adjacent across `a`.
MoveResult vassiliev1(const RibbonGraph& g, Arc a);

// Second move with the edge of corner `fixed` (an endpoint of `a`) as the
// fixed edge: partial dual at that edge, first move, partial dual again.
MoveResult vassiliev2(const RibbonGraph& g, Arc a, Corner fixed);

// Rotation words reading the vertex circles. Graphs built by from_rotation
// come back with identical corner labels whenever the words allow it;
// other graphs are written with circle directions chosen to untwist a
// spanning forest.
RotationSystem to_rotation(const RibbonGraph& g);

// Random rotation system: 2n occurrences shuffled and cut into a random
// number of nonempty vertex words, independent twist bits.
RotationSystem random_rotation(Rng& rng, int edges);
RibbonGraph random_ribbon_graph(Rng& rng, int edges);

}  // namespace lspace
