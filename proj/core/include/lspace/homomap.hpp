#pragma once

// The L-space of a ribbon graph: the image of the map from the first
// homology of the punctured surface to F2^{2n}, computed on the 4-valent
// graph whose vertices are the edges of G and whose edges are the arcs.

#include "lspace/f2sympl.hpp"
#include "lspace/framed_matrix.hpp"
#include "lspace/ribbon.hpp"

namespace lspace {

// How a cycle passing through two corners of one edge crosses that edge.
enum class TransitionClass {
  kAttachPair,    // contributes f_e
  kSidePair,      // contributes e_e
  kDiagonalPair,  // contributes e_e + f_e
};

TransitionClass classify_transition(const RibbonGraph& g, Corner a, Corner b);

// Contribution of the transition a -> b at edge(a) in grade g.edge_count().
SympVector transition_value(const RibbonGraph& g, Corner a, Corner b);

// Image of a cycle given as the set of arcs it uses.
SympVector cycle_image(const RibbonGraph& g, std::span<const Arc> cycle);

// Arc sets of a fundamental cycle basis: spanning forest grown from the
// lowest edge of each component, arcs explored in label order.
std::vector<std::vector<Arc>> fundamental_cycles(const RibbonGraph& g);

// L(G). Always Lagrangian of grade edge_count(); throws ConsistencyError
// otherwise and PreconditionError beyond kMaxGrade edges.
Lagrangian lspace_of(const RibbonGraph& g);

// Framed intersection matrix of a one-vertex graph read off the vertex
// word: interleaving chords are adjacent, twisted chords have framing 1.
FramedGraphMatrix intersection_matrix_from_word(const RibbonGraph& g);

// Both the word route and to_matrix(lspace_of(g)); throws ConsistencyError if
// they differ and PreconditionError when g has more than one vertex.
FramedGraphMatrix intersection_matrix(const RibbonGraph& g);

}  // namespace lspace
