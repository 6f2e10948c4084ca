#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resobdd {

struct PlaCube {
  std::string inputs;   ///< over {0,1,-}; '2' is normalised to '-'
  std::string outputs;  ///< over {0,1,-,~}
  std::size_t line = 0;
};

/// Two-level cover in Berkeley PLA format. Output column j contributes a
/// cube to the ON-set when it reads '1' and to the DC-set on '-' or '~'.
struct PlaFile {
  std::uint32_t num_inputs = 0;
  std::uint32_t num_outputs = 0;
  std::optional<std::size_t> declared_cubes;
  std::vector<PlaCube> cubes;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<std::string> warnings;

  [[nodiscard]] std::vector<std::string> on_set(std::size_t output) const;
  [[nodiscard]] std::vector<std::string> dc_set(std::size_t output) const;
};

/// Throws ParseError (with a line number) on width mismatches, bad
/// characters, cubes before .i/.o, or a .p count that disagrees with the
/// number of cube lines. Unknown directives only add a warning.
[[nodiscard]] PlaFile parse_pla(std::string_view text);
/// Reads a file and parses it. Throws UsageError if it cannot be read.
[[nodiscard]] PlaFile load_pla(const std::string& path);

}  // namespace resobdd
