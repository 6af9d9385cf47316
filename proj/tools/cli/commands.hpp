#pragma once

// Command implementations behind the lspace executable. Each writes its
// report to `out` and throws lspace::Error subclasses on failure.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lspace::cli {

void cmd_info(const std::string& path, std::ostream& out);
void cmd_lspace(const std::string& path, std::ostream& out);
void cmd_dual(const std::string& path, const std::vector<int>& edges, std::ostream& out);
// kind is "v1" or "v2"; arc is a 1-based id from cmd_info; fixed is 1 or 2.
void cmd_vmove(const std::string& path, const std::string& kind, int arc, int fixed,
               std::ostream& out);
void cmd_intmatrix(const std::string& path, std::ostream& out);
void cmd_interlace(const std::string& path, std::ostream& out);
void cmd_lgr(int n, bool orbits, int threads, std::ostream& out);
void cmd_dims(int max_grade, int threads, int realized_samples, std::uint64_t seed,
              std::ostream& out);

struct CheckOptions {
  std::uint64_t seed = 1;
  int count = 200;
  int max_edges = 6;
};

// Returns 0 when every invariant holds, 4 after printing a reproducer.
int cmd_check(const CheckOptions& options, std::ostream& out);

}  // namespace lspace::cli
