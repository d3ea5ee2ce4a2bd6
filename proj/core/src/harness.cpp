#include "rsma/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rsma/allocator.hpp"
#include "rsma/oracle.hpp"
#include "rsma/precoding.hpp"
#include "rsma/rates.hpp"

namespace rsma {

std::string_view to_string(SweepScheme scheme) {
  switch (scheme) {
    case SweepScheme::kRsmaProposed:
      return "rsma-proposed";
    case SweepScheme::kRsmaOracle:
      return "rsma-oracle";
    case SweepScheme::kSdmaZf:
      return "sdma-zf";
    case SweepScheme::kSdmaMrt:
      return "sdma-mrt";
  }
  return "unknown";
}

std::optional<SweepScheme> parse_sweep_scheme(std::string_view name) {
  for (SweepScheme s : kAllSweepSchemes) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

double power_for_snr(double snr_db, std::span<const double> large_scale) {
  if (large_scale.empty()) throw std::invalid_argument("power_for_snr: no users");
  const double v_min = *std::min_element(large_scale.begin(), large_scale.end());
  return std::pow(10.0, snr_db / 10.0) / v_min;
}

namespace {

SweepRecord run_point(const SystemConfig& config, double snr_db, SweepScheme scheme) {
  SweepRecord rec;
  rec.snr_db = snr_db;
  rec.scheme = scheme;
  rec.trials = config.trials;
  rec.seed = config.seed;

  switch (scheme) {
    case SweepScheme::kRsmaProposed: {
      const UserGroups groups = default_groups(config);
      const AllocationDecision d = select(config, groups);
      rec.t = d.chosen.t;
      rec.beta = d.chosen.beta;
      rec.n_hat = d.n_hat();
      rec.r = std::array<double, 4>{d.all[0].r_mm, d.all[1].r_mm, d.all[2].r_mm, d.all[3].r_mm};
      if (d.chosen.scheme == Scheme::kZfRsma) {
        rec.min_rate = min_rate_rsma_zf(ergodic_rates_zf(config, groups, d.chosen.t), d.chosen.beta, groups);
      } else {
        rec.min_rate = min_rate_rsma_mrt(ergodic_rates_mrt(config, d.chosen.t), config.n_users);
      }
      break;
    }
    case SweepScheme::kRsmaOracle: {
      const UserGroups groups = default_groups(config);
      const OracleResult best =
          exhaustive_search_monte_carlo(config, groups, build_grid(config.n_users));
      rec.t = best.t;
      rec.beta = best.beta;
      rec.min_rate = best.value;
      break;
    }
    case SweepScheme::kSdmaZf:
      rec.min_rate = sdma_zf_grouped(config);
      break;
    case SweepScheme::kSdmaMrt:
      rec.min_rate = sdma_mrt(config);
      break;
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SystemConfig& base, std::span<const double> snr_db,
                                   std::span<const SweepScheme> schemes, const RecordSink& sink) {
  if (snr_db.empty()) throw std::invalid_argument("run_sweep: empty SNR list");
  base.validate();

  std::vector<SweepRecord> records;
  for (double snr : snr_db) {
    SystemConfig config = base;
    config.power = power_for_snr(snr, config.large_scale);
    for (SweepScheme scheme : kAllSweepSchemes) {
      if (std::find(schemes.begin(), schemes.end(), scheme) == schemes.end()) continue;
      records.push_back(run_point(config, snr, scheme));
      if (sink) sink(records.back());
    }
  }
  return records;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_csv_row(const SweepRecord& rec) {
  std::string row;
  auto field = [&row](std::string_view s) {
    if (!row.empty()) row += ',';
    row += s;
  };
  row = format_number(rec.snr_db);
  field(to_string(rec.scheme));
  field(format_number(rec.min_rate));
  field(format_number(rec.t));
  field(format_number(rec.beta));
  field(rec.n_hat ? std::to_string(*rec.n_hat) : "");
  for (std::size_t i = 0; i < 4; ++i) field(rec.r ? format_number((*rec.r)[i]) : "");
  field(std::to_string(rec.trials));
  field(std::to_string(rec.seed));
  return row;
}

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kCsvHeader << '\n';
  for (const SweepRecord& rec : records) out << format_csv_row(rec) << '\n';
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("csv: malformed number '" + s + "'");
  return v;
}

}  // namespace

std::vector<SweepRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("csv: header does not match the sweep schema");
  }
  std::vector<SweepRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 12) {
      throw std::runtime_error("csv: line " + std::to_string(line_no) + " has " +
                               std::to_string(f.size()) + " fields, expected 12");
    }
    try {
      SweepRecord rec;
      rec.snr_db = to_double(f[0]);
      const auto scheme = parse_sweep_scheme(f[1]);
      if (!scheme) throw std::runtime_error("csv: unknown scheme '" + f[1] + "'");
      rec.scheme = *scheme;
      rec.min_rate = to_double(f[2]);
      rec.t = to_double(f[3]);
      rec.beta = to_double(f[4]);
      if (!f[5].empty()) rec.n_hat = std::stoi(f[5]);
      if (!f[6].empty()) {
        std::array<double, 4> r{};
        for (std::size_t i = 0; i < 4; ++i) r[i] = to_double(f[6 + i]);
        rec.r = r;
      }
      rec.trials = std::stoi(f[10]);
      rec.seed = std::stoull(f[11]);
      records.push_back(rec);
    } catch (const std::logic_error& e) {
      throw std::runtime_error("csv: line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace rsma
