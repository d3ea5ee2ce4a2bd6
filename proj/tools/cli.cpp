#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "rsma/allocator.hpp"
#include "rsma/channel.hpp"
#include "rsma/harness.hpp"
#include "rsma/oracle.hpp"
#include "rsma/precoding.hpp"

namespace rsma::cli {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in{std::string(s)};
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double parse_double(const std::string& s, std::string_view what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("invalid " + std::string(what) + " value '" + s + "'");
}

std::vector<double> parse_large_scale(const std::string& spec, int n_users, std::uint64_t seed) {
  if (spec == "random") return draw_large_scale(n_users, seed);
  std::vector<double> v;
  for (const auto& item : split(spec, ',')) v.push_back(parse_double(item, "--vk"));
  if (static_cast<int>(v.size()) != n_users) {
    throw std::invalid_argument("--vk lists " + std::to_string(v.size()) + " values for " +
                                std::to_string(n_users) + " users");
  }
  return v;
}

std::vector<SweepScheme> parse_schemes(const std::string& spec, bool with_oracle) {
  std::vector<SweepScheme> schemes;
  if (spec == "all") {
    schemes.assign(kAllSweepSchemes.begin(), kAllSweepSchemes.end());
  } else {
    for (const auto& name : split(spec, ',')) {
      const auto scheme = parse_sweep_scheme(name);
      if (!scheme) throw std::invalid_argument("unknown scheme '" + name + "'");
      schemes.push_back(*scheme);
    }
  }
  if (with_oracle && std::find(schemes.begin(), schemes.end(), SweepScheme::kRsmaOracle) == schemes.end()) {
    schemes.push_back(SweepScheme::kRsmaOracle);
  }
  return schemes;
}

nlohmann::json allocation_record(const SystemConfig& config, double snr_db, bool with_oracle) {
  const UserGroups groups = default_groups(config);
  const AllocationDecision d = select(config, groups);
  nlohmann::json j;
  j["snr_db"] = snr_db;
  j["n_antennas"] = config.n_antennas;
  j["n_users"] = config.n_users;
  j["power"] = config.power;
  j["n_hat"] = d.n_hat();
  j["scheme"] = std::string(to_string(d.chosen.scheme));
  j["t"] = d.chosen.t;
  j["beta"] = d.chosen.beta;
  for (std::size_t i = 0; i < d.all.size(); ++i) {
    j["r" + std::to_string(i + 1)] = d.all[i].r_mm;
    j["t" + std::to_string(i + 1)] = d.all[i].t;
  }
  j["large_scale"] = config.large_scale;
  j["seed"] = config.seed;
  if (with_oracle) {
    const OracleResult best = exhaustive_search(config, groups);
    j["oracle"] = {{"scheme", std::string(to_string(best.scheme))},
                   {"t", best.t},
                   {"beta", best.beta},
                   {"value", best.value}};
  }
  return j;
}

}  // namespace

std::vector<double> parse_snr_list(std::string_view spec) {
  std::vector<double> values;
  if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw std::invalid_argument("--snr range must be start:step:stop");
    const double start = parse_double(parts[0], "--snr");
    const double step = parse_double(parts[1], "--snr");
    const double stop = parse_double(parts[2], "--snr");
    if (!(step > 0.0) || stop < start) throw std::invalid_argument("--snr range needs step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
  } else {
    for (const auto& item : split(spec, ',')) values.push_back(parse_double(item, "--snr"));
  }
  if (values.empty()) throw std::invalid_argument("--snr lists no values");
  return values;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rate-splitting downlink simulator: closed-form max-min allocation, "
               "exhaustive search and SDMA benchmarks"};
  app.set_config("--config", "", "Key-value file mirroring the flags; command-line flags win");

  int antennas = 0;
  int users = 0;
  std::string snr_spec = "0:5:40";
  int trials = 100;
  std::uint64_t seed = 0;
  std::string schemes_spec = "all";
  std::string out_path = "-";
  bool allocate_only = false;
  bool with_oracle = false;
  std::string vk_spec = "random";

  app.add_option("--antennas", antennas, "Transmit antennas N")->required();
  app.add_option("--users", users, "Users K (must exceed N)")->required();
  app.add_option("--snr", snr_spec, "SNR points in dB: start:step:stop or a comma list")
      ->capture_default_str();
  app.add_option("--trials", trials, "Channel realizations per Monte Carlo estimate")
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for channels and large-scale fading")->capture_default_str();
  app.add_option("--schemes", schemes_spec,
                 "Comma list of rsma-proposed,rsma-oracle,sdma-zf,sdma-mrt, or all")
      ->capture_default_str();
  app.add_option("--out", out_path, "CSV output path, - for stdout")->capture_default_str();
  app.add_flag("--allocate-only", allocate_only,
               "Print the closed-form allocation as JSON lines and skip Monte Carlo");
  app.add_flag("--oracle", with_oracle, "Include the exhaustive grid search");
  app.add_option("--vk", vk_spec, "Large-scale coefficients: comma list or random")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (users <= antennas) {
      throw std::invalid_argument("overloaded regime requires K > N (got N=" + std::to_string(antennas) +
                                  ", K=" + std::to_string(users) + ")");
    }
    SystemConfig config;
    config.n_antennas = antennas;
    config.n_users = users;
    config.trials = trials;
    config.seed = seed;
    config.large_scale = parse_large_scale(vk_spec, users, seed);
    config.power = 1.0;
    config.validate();
    const std::vector<double> snr = parse_snr_list(snr_spec);

    std::ofstream file;
    std::ostream* sink_stream = &out;
    if (out_path != "-") {
      file.open(out_path, std::ios::out | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot open output path '" + out_path + "'");
      sink_stream = &file;
    }

    if (allocate_only) {
      for (double s : snr) {
        SystemConfig point = config;
        point.power = power_for_snr(s, point.large_scale);
        *sink_stream << allocation_record(point, s, with_oracle).dump() << '\n';
      }
      sink_stream->flush();
      return 0;
    }

    const auto schemes = parse_schemes(schemes_spec, with_oracle);
    *sink_stream << kCsvHeader << '\n';
    run_sweep(config, snr, schemes, [&](const SweepRecord& rec) {
      *sink_stream << format_csv_row(rec) << '\n';
      sink_stream->flush();
      err << "snr=" << rec.snr_db << " dB  " << to_string(rec.scheme) << "  min_rate=" << rec.min_rate
          << '\n';
    });
    if (!*sink_stream) throw std::runtime_error("failed writing output");
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rsma::cli
