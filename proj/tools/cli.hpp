#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rsma::cli {

/// Parses "start:step:stop" (inclusive) or a comma-separated list of SNR
/// values in dB. Throws std::invalid_argument on malformed input.
std::vector<double> parse_snr_list(std::string_view spec);

/// Runs the simulator with `args` (program name excluded). CSV goes to
/// --out or `out` when --out is "-"; diagnostics go to `err`.
/// Returns the process exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsma::cli
