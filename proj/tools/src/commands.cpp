#include "cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "cli/io.hpp"
#include "lspace/bialgebra.hpp"
#include "lspace/errors.hpp"
#include "lspace/homomap.hpp"
#include "lspace/matrixops.hpp"
#include "lspace/ribbon.hpp"

namespace lspace::cli {

namespace {

RibbonGraph load(const std::string& path) { return from_rotation(read_ribbon_file(path)); }

Arc arc_by_id(const RibbonGraph& g, int id) {
  const auto arcs = g.arcs();
  if (id < 1 || id > static_cast<int>(arcs.size())) {
    throw PreconditionError("arc id " + std::to_string(id) + " outside 1.." +
                            std::to_string(arcs.size()));
  }
  return arcs[id - 1];
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

void cmd_info(const std::string& path, std::ostream& out) {
  const RibbonGraph g = load(path);
  out << "edges " << g.edge_count() << "\n";
  out << "vertices " << vertex_count(g) << ", boundary " << boundary_count(g) << ", chi "
      << euler_characteristic(g) << ", " << (is_orientable(g) ? "orientable" : "non-orientable")
      << "\n";
  out << "components " << components(g).size() << "\n";
  out << "arcs\n";
  const auto arcs = g.arcs();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    out << "  " << k + 1 << "  " << corner_name(arcs[k].lo) << " " << corner_name(arcs[k].hi)
        << "  edges " << edge_of(arcs[k].lo) + 1 << " " << edge_of(arcs[k].hi) + 1 << "\n";
  }
}

void cmd_lspace(const std::string& path, std::ostream& out) {
  out << format_lspace(lspace_of(load(path)));
}

void cmd_dual(const std::string& path, const std::vector<int>& edges, std::ostream& out) {
  const RibbonGraph g = load(path);
  std::vector<int> zero_based;
  for (int e : edges) {
    if (e < 1 || e > g.edge_count()) {
      throw PreconditionError("edge " + std::to_string(e) + " outside 1.." +
                              std::to_string(g.edge_count()));
    }
    zero_based.push_back(e - 1);
  }
  out << format_ribbon(partial_dual(g, zero_based));
}

void cmd_vmove(const std::string& path, const std::string& kind, int arc, int fixed,
               std::ostream& out) {
  const RibbonGraph g = load(path);
  const Arc a = arc_by_id(g, arc);
  MoveResult r;
  if (kind == "v1") {
    r = vassiliev1(g, a);
  } else if (kind == "v2") {
    if (fixed != 1 && fixed != 2) throw PreconditionError("--fixed must be 1 or 2");
    r = vassiliev2(g, a, fixed == 1 ? a.lo : a.hi);
  } else {
    throw PreconditionError("unknown move '" + kind + "', expected v1 or v2");
  }
  const RotationSystem rs = to_rotation(r.graph);
  out << format_ribbon(rs);
  // The id is only meaningful when the file reproduces the corner labels.
  if (from_rotation(rs) == r.graph) {
    const auto arcs = r.graph.arcs();
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (arcs[k] == r.image) out << "# image arc " << k + 1 << "\n";
    }
  }
}

void cmd_intmatrix(const std::string& path, std::ostream& out) {
  out << intersection_matrix(load(path)).to_string();
}

void cmd_interlace(const std::string& path, std::ostream& out) {
  out << interlace_polynomial(read_graph_file(path)).to_string() << "\n";
}

void cmd_lgr(int n, bool orbits, int threads, std::ostream& out) {
  std::uint64_t count = 0;
  for_each_lagrangian(n, [&](const Lagrangian&) { ++count; });
  if (count != lagrangian_count(n)) {
    throw ConsistencyError("enumerated " + std::to_string(count) + " Lagrangians, expected " +
                           std::to_string(lagrangian_count(n)));
  }
  out << count << "\n";
  if (orbits) {
    out << "orbits " << orbit_classes(n, threads).size() << "\n";
    out << "burnside " << burnside_orbit_count(n, threads) << "\n";
  }
}

void cmd_dims(int max_grade, int threads, int realized_samples, std::uint64_t seed,
              std::ostream& out) {
  if (max_grade < 0) throw PreconditionError("negative grade");
  out << "grade" << pad("lgr", 8) << pad("orbits", 8) << pad("burnside", 10) << pad("rows", 8)
      << pad("rank", 8) << pad("dimK", 8) << "\n";
  for (int n = 0; n <= max_grade; ++n) {
    const GradeReport r = grade_report(n, threads);
    out << pad(std::to_string(n), 5) << pad(std::to_string(r.lagrangians), 8)
        << pad(std::to_string(r.orbits), 8) << pad(std::to_string(r.burnside), 10)
        << pad(std::to_string(r.relation_rows), 8) << pad(std::to_string(r.relation_rank), 8)
        << pad(std::to_string(r.dim_k), 8) << "\n";
  }
  if (realized_samples > 0) {
    out << "realized (" << realized_samples << " samples, seed " << seed << ")\n";
    for (int n = 1; n <= max_grade; ++n) {
      const RealizedReport r = realized_report(n, realized_samples, seed, threads);
      out << "  grade " << n << ": " << r.distinct_classes << " classes, rank " << r.realized_rank
          << " of " << r.dim_k << "\n";
    }
  }
}

// ------------------------------------------------------------------- check

namespace {

struct Case {
  RotationSystem rs;
  RibbonGraph g;
  std::string params;
};

using Verdict = std::optional<std::string>;

struct Suite {
  std::string name;
  std::function<Verdict(Case&, Rng&)> run;  // nullopt: skipped
  int ran = 0;
};

struct MoveSite {
  Arc arc;
  Corner fixed;
};

// Arc and fixed end pairs where the requested moves are defined: v1 needs
// two distinct segments across the arc in G, v2 the same in mu_alpha(G).
std::vector<MoveSite> move_sites(const RibbonGraph& g, bool need_v1, bool need_v2) {
  std::vector<MoveSite> out;
  for (const Arc& a : g.arcs()) {
    if (need_v1 && g.attach(a.lo) == a.hi) continue;
    for (Corner fixed : {a.lo, a.hi}) {
      if (need_v2) {
        const int alpha[1] = {edge_of(fixed)};
        if (partial_dual(g, alpha).attach(a.lo) == a.hi) continue;
      }
      out.push_back({a, fixed});
      if (!need_v2) break;
    }
  }
  return out;
}

int arc_id(const RibbonGraph& g, Arc a) {
  const auto arcs = g.arcs();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (arcs[k] == a) return static_cast<int>(k) + 1;
  }
  return 0;
}

const Verdict kPass = std::string();

std::vector<Suite> make_suites() {
  std::vector<Suite> s;
  s.push_back({"lagrangian", [](Case& c, Rng&) -> Verdict {
                 const Lagrangian l = lspace_of(c.g);
                 if (l.grade() != c.g.edge_count() || !is_lagrangian(l.subspace())) {
                   return std::string("L-space is not Lagrangian");
                 }
                 return kPass;
               }});
  s.push_back({"roundtrip", [](Case& c, Rng&) -> Verdict {
                 const RotationSystem back = parse_ribbon_text(format_ribbon(c.g));
                 if (!(from_rotation(back) == c.g)) return std::string("parse(serialize(G)) != G");
                 return kPass;
               }});
  s.push_back({"dual-square", [](Case& c, Rng& rng) -> Verdict {
                 const int n = c.g.edge_count();
                 const int e = rng.uniform_int(0, n - 1);
                 c.params = "dual edge " + std::to_string(e + 1);
                 const int es[1] = {e};
                 if (lspace_of(partial_dual(c.g, es)) != apply(mu_map(n, e), lspace_of(c.g))) {
                   return std::string("L(mu_e G) != M_e L(G)");
                 }
                 return kPass;
               }});
  s.push_back({"dual-group", [](Case& c, Rng& rng) -> Verdict {
                 const int n = c.g.edge_count();
                 std::vector<int> a, b, d;
                 for (int e = 0; e < n; ++e) {
                   const bool x = rng.coin();
                   const bool y = rng.coin();
                   if (x) a.push_back(e);
                   if (y) b.push_back(e);
                   if (x != y) d.push_back(e);
                 }
                 c.params = "dual sets drawn per edge";
                 if (!(partial_dual(partial_dual(c.g, b), a) == partial_dual(c.g, d))) {
                   return std::string("mu_A mu_B != mu_{A xor B}");
                 }
                 if (!(partial_dual(partial_dual(c.g, a), a) == c.g)) {
                   return std::string("mu_A is not an involution");
                 }
                 return kPass;
               }});
  auto with_site = [](bool v1, bool v2, std::function<Verdict(Case&, Arc, Corner)> body) {
    return [=](Case& c, Rng& rng) -> Verdict {
      const auto sites = move_sites(c.g, v1, v2);
      if (sites.empty()) return std::nullopt;
      const MoveSite m = sites[rng.below(sites.size())];
      c.params = "arc " + std::to_string(arc_id(c.g, m.arc)) + " (" + corner_name(m.arc.lo) +
                 " " + corner_name(m.arc.hi) + ")";
      if (v2) c.params += m.fixed == m.arc.lo ? " fixed 1" : " fixed 2";
      return body(c, m.arc, m.fixed);
    };
  };
  s.push_back({"v1-square", with_site(true, false, [](Case& c, Arc a, Corner) -> Verdict {
                 const auto [i, j] = arc_edges(c.g, a);
                 const MoveResult r = vassiliev1(c.g, a);
                 const Lagrangian l = lspace_of(c.g);
                 const Lagrangian expected =
                     i == j ? l : apply(v1_map(c.g.edge_count(), i, j), l);
                 if (lspace_of(r.graph) != expected) return std::string("L(v1 G) != V1 L(G)");
                 if (vertex_degrees(r.graph) != vertex_degrees(c.g)) {
                   return std::string("v1 changed the vertex degrees");
                 }
                 if (!(vassiliev1(r.graph, r.image).graph == c.g)) {
                   return std::string("v1 is not an involution");
                 }
                 return kPass;
               })});
  s.push_back({"v2-square", with_site(false, true, [](Case& c, Arc a, Corner fixed) -> Verdict {
                 const auto [i, j] = arc_edges(c.g, a);
                 const int alpha = edge_of(fixed);
                 const int beta = alpha == i ? j : i;
                 const MoveResult r = vassiliev2(c.g, a, fixed);
                 const Lagrangian l = lspace_of(c.g);
                 const Lagrangian expected =
                     alpha == beta ? l : apply(v2_map(c.g.edge_count(), alpha, beta), l);
                 if (lspace_of(r.graph) != expected) return std::string("L(v2 G) != V2 L(G)");
                 const Corner back = edge_of(r.image.lo) == alpha ? r.image.lo : r.image.hi;
                 if (!(vassiliev2(r.graph, r.image, back).graph == c.g)) {
                   return std::string("v2 is not an involution");
                 }
                 return kPass;
               })});
  s.push_back({"v2-topology", with_site(false, true, [](Case& c, Arc a, Corner fixed) -> Verdict {
                 const RibbonGraph h = vassiliev2(c.g, a, fixed).graph;
                 if (vertex_count(h) != vertex_count(c.g) ||
                     boundary_count(h) != boundary_count(c.g) ||
                     euler_characteristic(h) != euler_characteristic(c.g) ||
                     is_orientable(h) != is_orientable(c.g)) {
                   return std::string("v2 changed the surface");
                 }
                 return kPass;
               })});
  s.push_back({"moves-commute", with_site(true, true, [](Case& c, Arc a, Corner fixed) -> Verdict {
                 const int alpha = edge_of(fixed);
                 const MoveResult r1 = vassiliev1(c.g, a);
                 const MoveResult r2 = vassiliev2(c.g, a, fixed);
                 const Corner f1 = edge_of(r1.image.lo) == alpha ? r1.image.lo : r1.image.hi;
                 const RibbonGraph x = vassiliev2(r1.graph, r1.image, f1).graph;
                 const RibbonGraph y = vassiliev1(r2.graph, r2.image).graph;
                 if (!(x == y)) return std::string("v1 v2 != v2 v1");
                 return kPass;
               })});
  s.push_back({"one-vertex", [](Case& c, Rng&) -> Verdict {
                 const int vertices = vertex_count(c.g);
                 const bool one_each = vertices == static_cast<int>(components(c.g).size());
                 if (one_each != is_transverse_to_F(lspace_of(c.g))) {
                   return std::string("one vertex per component and transversality disagree");
                 }
                 if (vertices == 1) (void)intersection_matrix(c.g);
                 return kPass;
               }});
  s.push_back({"vertex-flip", [](Case& c, Rng& rng) -> Verdict {
                 RotationSystem flipped = c.rs;
                 const int v = static_cast<int>(rng.below(flipped.vertices.size()));
                 c.params = "flip vertex " + std::to_string(v + 1);
                 auto& word = flipped.vertices[v];
                 std::vector<int> hits(flipped.edges, 0);
                 for (int e : word) ++hits[e];
                 std::reverse(word.begin(), word.end());
                 for (int e = 0; e < flipped.edges; ++e) {
                   if (hits[e] == 1) flipped.twisted[e] = !flipped.twisted[e];
                 }
                 const RibbonGraph h = from_rotation(flipped);
                 if (vertex_count(h) != vertex_count(c.g) ||
                     boundary_count(h) != boundary_count(c.g) ||
                     is_orientable(h) != is_orientable(c.g) || lspace_of(h) != lspace_of(c.g)) {
                   return std::string("flipping a vertex changed an invariant");
                 }
                 return kPass;
               }});
  return s;
}

}  // namespace

int cmd_check(const CheckOptions& options, std::ostream& out) {
  if (options.count < 0) throw PreconditionError("negative case count");
  if (options.max_edges < 1 || options.max_edges > kMaxGrade) {
    throw PreconditionError("edge bound must lie in 1.." + std::to_string(kMaxGrade));
  }
  out << "check seed " << options.seed << ", " << options.count << " cases, up to "
      << options.max_edges << " edges\n";
  std::vector<Suite> suites = make_suites();
  Rng rng(options.seed);
  for (int k = 0; k < options.count; ++k) {
    const int n = rng.uniform_int(1, options.max_edges);
    Case c;
    c.rs = random_rotation(rng, n);
    c.g = from_rotation(c.rs);
    for (Suite& suite : suites) {
      c.params.clear();
      Verdict v;
      try {
        v = suite.run(c, rng);
      } catch (const Error& e) {
        v = std::string(e.what());
      }
      if (!v) continue;
      ++suite.ran;
      if (!v->empty()) {
        out << "FAIL " << suite.name << " at case " << k + 1 << ": " << *v << "\n";
        out << "reproducer:\n" << format_ribbon(c.rs);
        if (!c.params.empty()) out << "# " << c.params << "\n";
        return 4;
      }
    }
  }
  for (const Suite& suite : suites) {
    out << pad(suite.name, 14) << "  " << suite.ran << " ok\n";
  }
  out << "all checks passed\n";
  return 0;
}

}  // namespace lspace::cli
