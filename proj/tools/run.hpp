#pragma once

#include <cstddef>
#include <string>

namespace tilecoh::cli {

/// Parsed command line. `depth` is the deepest collar level N; the cap of
/// 8 guards the (2n+1)^2 window blow-up in 2D and is lifted only by
/// --unsafe-depth. `width`/`height` apply to the language command only.
struct RunConfig {
  std::string command;
  std::string definition_path;
  std::size_t depth = 4;
  bool unsafe_depth = false;
  std::size_t stab_window = 3;
  bool include_k0 = false;
  std::size_t width = 0;
  std::size_t height = 1;
  std::string out_path;  // empty: stdout
  std::string dot_path;  // complex only; "-": stdout
  bool pretty = false;   // human text instead of JSON
};

/// Execute one command and write its report. Returns the process exit
/// code: 0 success, 2 input or configuration error (diagnostics on
/// stderr), 3 closure or stabilization failure (partial report written;
/// an unclassified tower counts as stabilization failure).
int run(const RunConfig& config);

}  // namespace tilecoh::cli
