#include <CLI11.hpp>

#include <iostream>

#include "cli/commands.hpp"
#include "lspace/errors.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitConsistency = 4;

}  // namespace

int main(int argc, char** argv) {
  using namespace lspace::cli;
  CLI::App app{"L-spaces of ribbon graphs and the Lagrangian bialgebra"};
  app.require_subcommand(1);

  std::string path;
  auto* info = app.add_subcommand("info", "counts and arc table of a ribbon file");
  info->add_option("file", path, "ribbon file")->required();

  auto* lsp = app.add_subcommand("lspace", "L-space basis in reduced echelon form");
  lsp->add_option("file", path, "ribbon file")->required();

  std::vector<int> edges;
  auto* dual = app.add_subcommand("dual", "partial dual at a set of edges");
  dual->add_option("file", path, "ribbon file")->required();
  dual->add_option("edges", edges, "1-based edge labels");

  std::string kind;
  int arc = 0;
  int fixed = 1;
  auto* vmove = app.add_subcommand("vmove", "Vassiliev move at an arc");
  vmove->add_option("file", path, "ribbon file")->required();
  vmove->add_option("kind", kind, "v1 or v2")->required()->check(CLI::IsMember({"v1", "v2"}));
  vmove->add_option("arc", arc, "arc id from 'info'")->required();
  vmove->add_option("--fixed", fixed, "end of the arc on the fixed edge (v2)")
      ->check(CLI::IsMember({1, 2}));

  auto* intm = app.add_subcommand("intmatrix", "framed intersection matrix of a chord diagram");
  intm->add_option("file", path, "ribbon file")->required();

  auto* inter = app.add_subcommand("interlace", "interlace polynomial of a framed graph");
  inter->add_option("file", path, "graph file")->required();

  int grade = 0;
  bool orbits = false;
  int threads = 1;
  auto* lgr = app.add_subcommand("lgr", "count Lagrangians of a grade");
  lgr->add_option("n", grade, "grade")->required();
  lgr->add_flag("--orbits", orbits, "also count S_n-orbits two ways");
  lgr->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  int max_grade = 4;
  int realized = 0;
  std::uint64_t seed = 1;
  auto* dims = app.add_subcommand("dims", "dimensions of the four-term quotient");
  dims->add_option("--max", max_grade, "largest grade");
  dims->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  dims->add_option("--realized", realized, "sample this many ribbon graphs per grade");
  dims->add_option("--seed", seed, "seed for --realized");

  CheckOptions check_options;
  auto* check = app.add_subcommand("check", "seeded random invariant checks");
  check->add_option("--seed", check_options.seed, "seed");
  check->add_option("--count", check_options.count, "number of random graphs");
  check->add_option("--max-edges", check_options.max_edges, "largest edge count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*info) cmd_info(path, std::cout);
    if (*lsp) cmd_lspace(path, std::cout);
    if (*dual) cmd_dual(path, edges, std::cout);
    if (*vmove) cmd_vmove(path, kind, arc, fixed, std::cout);
    if (*intm) cmd_intmatrix(path, std::cout);
    if (*inter) cmd_interlace(path, std::cout);
    if (*lgr) cmd_lgr(grade, orbits, threads, std::cout);
    if (*dims) cmd_dims(max_grade, threads, realized, seed, std::cout);
    if (*check) return cmd_check(check_options, std::cout);
  } catch (const lspace::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lspace::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const lspace::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
  return 0;
}
