#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsma/channel.hpp"

namespace rsma {

enum class SweepScheme { kRsmaProposed, kRsmaOracle, kSdmaZf, kSdmaMrt };

inline constexpr std::array<SweepScheme, 4> kAllSweepSchemes = {
    SweepScheme::kRsmaProposed, SweepScheme::kRsmaOracle, SweepScheme::kSdmaZf,
    SweepScheme::kSdmaMrt};

std::string_view to_string(SweepScheme scheme);
std::optional<SweepScheme> parse_sweep_scheme(std::string_view name);

/// One CSV row. snr_db is 10 log10(min_k v_k P).
struct SweepRecord {
  double snr_db = 0.0;
  SweepScheme scheme = SweepScheme::kRsmaProposed;
  double min_rate = 0.0;
  double t = 1.0;
  double beta = 0.0;
  std::optional<int> n_hat;
  std::optional<std::array<double, 4>> r;
  int trials = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "snr_db,scheme,min_rate,t,beta,n_hat,r1,r2,r3,r4,trials,seed";

/// Transmit power that puts the weakest user at `snr_db`.
double power_for_snr(double snr_db, std::span<const double> large_scale);

/// Called once per finished record, in output order.
using RecordSink = std::function<void(const SweepRecord&)>;

/// For every SNR point (in the given order) and every requested scheme (in
/// kAllSweepSchemes order): sets P from the SNR, runs the scheme and emits
/// a record. The large-scale vector of `base` is held fixed across points.
///
/// rsma-proposed reports the Monte Carlo max-min rate at the closed-form
/// (t, beta) with the four bound-predicted r_mm values alongside;
/// rsma-oracle reports the best Monte Carlo max-min rate over the search
/// grid. Records already emitted reach the sink even if a later point throws.
std::vector<SweepRecord> run_sweep(const SystemConfig& base, std::span<const double> snr_db,
                                   std::span<const SweepScheme> schemes,
                                   const RecordSink& sink = {});

/// Shortest %g rendering with 17 significant digits, so values survive a
/// write/read round trip exactly.
std::string format_number(double value);

std::string format_csv_row(const SweepRecord& record);
void write_csv(std::ostream& out, std::span<const SweepRecord> records);

/// Parses a sweep CSV. Throws std::runtime_error on a header mismatch or a
/// malformed row.
std::vector<SweepRecord> read_csv(std::istream& in);

}  // namespace rsma
