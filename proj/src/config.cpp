#include "qlat/config.hpp"

#include <cstdlib>

#include <json.hpp>

#include "qlat/error.hpp"
#include "qlat/json_io.hpp"

namespace qlat {

Config load_config_from(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  nlohmann::json j = io::load_json_file(path);
  if (!j.is_object()) throw ParseError(path + ": config must be a JSON object");

  if (j.contains("default_fuel")) {
    if (!j["default_fuel"].is_number_unsigned() ||
        j["default_fuel"].get<std::uint64_t>() == 0)
      throw ParseError("default_fuel must be a positive integer");
    cfg.default_fuel = j["default_fuel"].get<std::uint64_t>();
  }
  if (j.contains("default_precision")) {
    if (!j["default_precision"].is_string())
      throw ParseError("default_precision must be a rational string");
    cfg.default_precision = Rational::parse(j["default_precision"].get<std::string>());
    if (cfg.default_precision.sign() <= 0)
      throw ParseError("default_precision must be positive");
  }
  if (j.contains("output_format")) {
    std::string f = j["output_format"].get<std::string>();
    if (f != "text" && f != "json")
      throw ParseError("output_format must be 'text' or 'json'");
    cfg.output_format = f;
  }
  if (j.contains("threads")) {
    if (!j["threads"].is_number_unsigned()) throw ParseError("threads must be unsigned");
    cfg.threads = j["threads"].get<unsigned>();
  }
  if (j.contains("orbit_cap")) {
    if (!j["orbit_cap"].is_number_unsigned() || j["orbit_cap"].get<std::uint64_t>() == 0)
      throw ParseError("orbit_cap must be a positive integer");
    cfg.orbit_cap = j["orbit_cap"].get<unsigned long>();
  }
  if (j.contains("max_poly_degree")) {
    if (!j["max_poly_degree"].is_number_unsigned() ||
        j["max_poly_degree"].get<std::uint64_t>() == 0)
      throw ParseError("max_poly_degree must be a positive integer");
    cfg.max_poly_degree = j["max_poly_degree"].get<unsigned long>();
  }
  return cfg;
}

Config load_config() {
  const char* p = std::getenv("QLATTICE_CONFIG");
  return load_config_from(p ? std::string(p) : std::string());
}

} // namespace qlat
