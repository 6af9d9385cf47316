#include "cli/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "lspace/errors.hpp"

namespace lspace::cli {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

int to_int(const Line& line, const std::string& word) {
  int value = 0;
  const char* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line.number, "expected an integer, got '" + word + "'");
  }
  return value;
}

int to_label(const Line& line, const std::string& word, int n) {
  const int v = to_int(line, word);
  if (v < 1 || v > n) {
    throw ParseError(line.number, "label " + word + " outside 1.." + std::to_string(n));
  }
  return v - 1;
}

int read_count(const std::vector<Line>& lines, std::size_t at, const char* keyword, int limit) {
  if (at >= lines.size() || lines[at].words[0] != keyword || lines[at].words.size() != 2) {
    const int where = at < lines.size() ? lines[at].number : (lines.empty() ? 0 : lines.back().number);
    throw ParseError(where, std::string("expected '") + keyword + " <count>'");
  }
  const int n = to_int(lines[at], lines[at].words[1]);
  if (n < 0 || n > limit) {
    throw ParseError(lines[at].number, std::string(keyword) + " count must lie in 0.." +
                                           std::to_string(limit));
  }
  return n;
}

void expect_header(const std::vector<Line>& lines, const char* header) {
  if (lines.empty()) throw ParseError(0, std::string("empty input, expected '") + header + "'");
  if (lines[0].words.size() != 1 || lines[0].words[0] != header) {
    throw ParseError(lines[0].number, std::string("expected header '") + header + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

RotationSystem parse_ribbon(std::istream& in) {
  const auto lines = tokenize(in);
  expect_header(lines, "ribbon");
  RotationSystem rs;
  rs.edges = read_count(lines, 1, "edges", kMaxGrade);
  rs.twisted.assign(rs.edges, false);
  std::vector<int> seen(rs.edges, 0);
  std::vector<int> last_line(rs.edges, 0);
  bool had_twist = false;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& key = line.words[0];
    if (key == "twist") {
      if (had_twist) throw ParseError(line.number, "second 'twist' line");
      if (!rs.vertices.empty()) throw ParseError(line.number, "'twist' must precede the vertices");
      had_twist = true;
      for (std::size_t w = 1; w < line.words.size(); ++w) {
        const int e = to_label(line, line.words[w], rs.edges);
        if (rs.twisted[e]) throw ParseError(line.number, "edge " + line.words[w] + " twisted twice");
        rs.twisted[e] = true;
      }
    } else if (key == "vertex") {
      if (line.words.size() == 1) throw ParseError(line.number, "isolated vertex without edges");
      std::vector<int> word;
      for (std::size_t w = 1; w < line.words.size(); ++w) {
        const int e = to_label(line, line.words[w], rs.edges);
        if (++seen[e] > 2) {
          throw ParseError(line.number, "label " + line.words[w] + " occurs more than twice");
        }
        last_line[e] = line.number;
        word.push_back(e);
      }
      rs.vertices.push_back(std::move(word));
    } else {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
  }
  for (int e = 0; e < rs.edges; ++e) {
    if (seen[e] != 2) {
      throw ParseError(seen[e] == 0 ? lines.back().number : last_line[e],
                       "label " + std::to_string(e + 1) + " occurs " + std::to_string(seen[e]) +
                           " time(s), expected 2");
    }
  }
  return rs;
}

RotationSystem parse_ribbon_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ribbon(in);
}

FramedGraphMatrix parse_graph(std::istream& in) {
  const auto lines = tokenize(in);
  expect_header(lines, "graph");
  const int n = read_count(lines, 1, "vertices", kMaxMatrixOrder);
  FramedGraphMatrix m(n);
  std::set<std::pair<int, int>> edges;
  bool had_frame = false;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& key = line.words[0];
    if (key == "frame") {
      if (had_frame) throw ParseError(line.number, "second 'frame' line");
      had_frame = true;
      for (std::size_t w = 1; w < line.words.size(); ++w) {
        const int v = to_label(line, line.words[w], n);
        if (m.framing(v)) throw ParseError(line.number, "vertex " + line.words[w] + " framed twice");
        m.set(v, v, true);
      }
    } else if (key == "edge") {
      if (line.words.size() != 3) throw ParseError(line.number, "expected 'edge <i> <j>'");
      const int a = to_label(line, line.words[1], n);
      const int b = to_label(line, line.words[2], n);
      if (a == b) throw ParseError(line.number, "edge endpoints must differ");
      if (!edges.insert({std::min(a, b), std::max(a, b)}).second) {
        throw ParseError(line.number, "repeated edge");
      }
      m.set(a, b, true);
    } else {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
  }
  return m;
}

FramedGraphMatrix parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_ribbon(const RotationSystem& rs) {
  std::string out = "ribbon\nedges " + std::to_string(rs.edges) + "\n";
  std::string twist;
  for (int e = 0; e < rs.edges; ++e) {
    if (rs.twisted[e]) twist += " " + std::to_string(e + 1);
  }
  if (!twist.empty()) out += "twist" + twist + "\n";
  for (const auto& word : rs.vertices) {
    out += "vertex";
    for (int e : word) out += " " + std::to_string(e + 1);
    out += "\n";
  }
  return out;
}

std::string format_ribbon(const RibbonGraph& g) { return format_ribbon(to_rotation(g)); }

std::string format_graph(const FramedGraphMatrix& m) {
  const int n = m.order();
  std::string out = "graph\nvertices " + std::to_string(n) + "\n";
  std::string frame;
  for (int i = 0; i < n; ++i) {
    if (m.framing(i)) frame += " " + std::to_string(i + 1);
  }
  if (!frame.empty()) out += "frame" + frame + "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j)) out += "edge " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    }
  }
  return out;
}

std::string format_lspace(const Lagrangian& l) {
  return "lspace n=" + std::to_string(l.grade()) + "\n" + l.to_string();
}

RotationSystem read_ribbon_file(const std::string& path) { return parse_ribbon_text(read_file(path)); }

FramedGraphMatrix read_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }

}  // namespace lspace::cli
