#include "sigma3/runconfig.hpp"

#include <charconv>
#include <stdexcept>

namespace sigma3 {

std::string format_double(double x) {
  std::array<char, 64> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), ptr);
}

std::string format_complex(std::complex<double> z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

std::complex<double> parse_complex(const std::string& s) {
  auto comma = s.find(',');
  auto parse_part = [&](const std::string& part) {
    double v = 0.0;
    auto first = part.data();
    auto last = part.data() + part.size();
    while (first != last && *first == ' ') ++first;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
      throw std::invalid_argument("parse_complex: bad number '" + part + "'");
    return v;
  };
  if (comma == std::string::npos) return {parse_part(s), 0.0};
  return {parse_part(s.substr(0, comma)), parse_part(s.substr(comma + 1))};
}

namespace {

nlohmann::ordered_json complex_list(const std::vector<std::complex<double>>& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& z : v) arr.push_back(format_complex(z));
  return arr;
}

template <size_t N>
nlohmann::ordered_json complex_array(const std::array<std::complex<double>, N>& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& z : v) arr.push_back(format_complex(z));
  return arr;
}

}  // namespace

void to_json(nlohmann::ordered_json& j, const RunConfig& c) {
  j = nlohmann::ordered_json{};
  j["schema"] = kSchemaTag;
  j["subcommand"] = c.subcommand;
  j["rng_seed"] = c.rng_seed;
  j["order"] = c.order;
  j["trials"] = c.trials;
  j["tol"] = c.tol;
  j["out_path"] = c.out_path;
  j["format"] = c.format;
  j["suite"] = c.suite;
  j["system"] = c.system;
  j["y_params"] = complex_list(c.y_params);
  if (c.init_state) j["init_state"] = complex_array(*c.init_state);
  if (c.curve_points) j["curve_points"] = complex_array(*c.curve_points);
  j["preset"] = c.preset;
  j["t_end"] = format_complex(c.t_end);
  j["rel_tol"] = c.rel_tol;
  j["abs_tol"] = c.abs_tol;
  j["max_step"] = c.max_step;
  j["seed_kind"] = c.seed_kind;
  j["count"] = c.count;
  j["expr"] = c.expr;
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  c = RunConfig{};
  c.subcommand = j.at("subcommand").get<std::string>();
  c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  c.order = j.at("order").get<int>();
  c.trials = j.at("trials").get<int>();
  c.tol = j.at("tol").get<double>();
  c.out_path = j.at("out_path").get<std::string>();
  c.format = j.at("format").get<std::string>();
  c.suite = j.at("suite").get<std::string>();
  c.system = j.at("system").get<std::string>();
  c.y_params.clear();
  for (const auto& s : j.at("y_params")) c.y_params.push_back(parse_complex(s.get<std::string>()));
  if (j.contains("init_state")) {
    std::array<std::complex<double>, 4> a;
    for (size_t i = 0; i < 4; ++i) a[i] = parse_complex(j.at("init_state")[i].get<std::string>());
    c.init_state = a;
  }
  if (j.contains("curve_points")) {
    std::array<std::complex<double>, 4> a;
    for (size_t i = 0; i < 4; ++i) a[i] = parse_complex(j.at("curve_points")[i].get<std::string>());
    c.curve_points = a;
  }
  c.preset = j.at("preset").get<std::string>();
  c.t_end = parse_complex(j.at("t_end").get<std::string>());
  c.rel_tol = j.at("rel_tol").get<double>();
  c.abs_tol = j.at("abs_tol").get<double>();
  c.max_step = j.at("max_step").get<double>();
  c.seed_kind = j.at("seed_kind").get<std::string>();
  c.count = j.at("count").get<int>();
  c.expr = j.at("expr").get<std::string>();
}

}  // namespace sigma3
