#pragma once

// Run configuration shared by the CLI subcommands. Fully serializable to
// and from JSON; every run embeds its config in the output for
// reproducibility. Complex numbers serialize as "re,im" strings and doubles
// print in shortest round-trip form.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sigma3 {

inline constexpr const char* kSchemaTag = "sigma3/v1";

std::string format_double(double x);                  // shortest round-trip
std::string format_complex(std::complex<double> z);   // "re,im"
std::complex<double> parse_complex(const std::string& s);

struct RunConfig {
  std::string subcommand;  // verify | flow | series | symmetrize | sample

  // shared knobs
  std::uint64_t rng_seed = 1;
  int order = 12;
  int trials = 100;
  double tol = 1e-9;
  std::string out_path;          // empty: stdout
  std::string format = "json";   // flow output: json | csv

  // verify
  std::string suite = "all";     // symbolic | numeric | series | all

  // flow
  std::string system = "I";      // I | II
  std::vector<std::complex<double>> y_params;  // y4.. (4 for flow, 6 for sample)
  std::optional<std::array<std::complex<double>, 4>> init_state;
  std::optional<std::array<std::complex<double>, 4>> curve_points;  // X1,Y1,X2,Y2
  std::string preset;            // example2 | example3 | empty
  std::complex<double> t_end{0.0, 0.0};
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.05;

  // series
  std::string seed_kind = "p0";  // p0 | p5 | q

  // sample
  int count = 10;

  // symmetrize
  std::string expr;

  bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::ordered_json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

}  // namespace sigma3
