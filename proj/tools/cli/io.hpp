#pragma once

// Text formats. Labels in files are 1-based.
//
//   ribbon                 graph
//   edges 2                vertices 3
//   twist 1                frame 2
//   vertex 1 2 1 2         edge 1 2
//
// '#' starts a comment. Errors raise ParseError with the line number.

#include <iosfwd>
#include <string>

#include "lspace/f2sympl.hpp"
#include "lspace/framed_matrix.hpp"
#include "lspace/ribbon.hpp"

namespace lspace::cli {

RotationSystem parse_ribbon(std::istream& in);
RotationSystem parse_ribbon_text(const std::string& text);
FramedGraphMatrix parse_graph(std::istream& in);
FramedGraphMatrix parse_graph_text(const std::string& text);

std::string format_ribbon(const RotationSystem& rs);
std::string format_ribbon(const RibbonGraph& g);
std::string format_graph(const FramedGraphMatrix& m);

// "lspace n=<n>" followed by one row per basis vector.
std::string format_lspace(const Lagrangian& l);

RotationSystem read_ribbon_file(const std::string& path);
FramedGraphMatrix read_graph_file(const std::string& path);

}  // namespace lspace::cli
