#ifndef QLAT_CONFIG_HPP
#define QLAT_CONFIG_HPP

#include <cstdint>
#include <string>

#include "qlat/rational.hpp"

namespace qlat {

/* Tool-wide defaults, overridable by a JSON file named in the
   QLATTICE_CONFIG environment variable and again by command-line flags.
   File shape (all fields optional):
     {"default_fuel": 12, "default_precision": "1/1024",
      "output_format": "text" | "json", "threads": 0,
      "orbit_cap": 48, "max_poly_degree": 4000}            */
struct Config {
  std::uint64_t default_fuel = 12;
  Rational default_precision{1, 1024};
  std::string output_format = "text";  // "text" or "json"
  unsigned threads = 0;                // 0 = library default
  unsigned long orbit_cap = 48;
  unsigned long max_poly_degree = 4000;
};

/* Baseline config, merged with the QLATTICE_CONFIG file when the variable
   is set and nonempty.  ParseError on unreadable or invalid files. */
Config load_config();

/* Same merge from an explicit path (empty path = defaults only). */
Config load_config_from(const std::string& path);

} // namespace qlat

#endif
