#include "gravibounce/constants.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "gravibounce/errors.hpp"

namespace gravibounce {

namespace {

void require_positive(double value, const char* key) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ConfigError(std::string("constant '") + key + "' must be finite and strictly positive",
                      0, key);
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

PhysicalConstants::PhysicalConstants(double hbar, double c, double G, double m, double g)
    : hbar_(hbar), c_(c), G_(G), m_(m), g_(g) {
  require_positive(hbar, "hbar");
  require_positive(c, "c");
  require_positive(G, "G");
  require_positive(m, "m");
  require_positive(g, "g");
  m_planck_ = std::sqrt(hbar_ * c_ / G_);
  if (!(m_ < m_planck_)) {
    throw ConfigError("particle mass 'm' must be below the Planck mass", 0, "m");
  }
}

PhysicalConstants default_constants() {
  return PhysicalConstants(1.054571817e-34, 2.99792458e8, 6.67430e-11, 1.67492750e-27, 9.81);
}

PhysicalConstants parse_constants(std::istream& in) {
  const PhysicalConstants defaults = default_constants();
  double hbar = defaults.hbar();
  double c = defaults.c();
  double G = defaults.G();
  double m = defaults.m();
  double g = defaults.g();

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no,
                        "");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string text(trim(line.substr(eq + 1)));

    double* slot = nullptr;
    if (key == "hbar") slot = &hbar;
    else if (key == "c") slot = &c;
    else if (key == "G") slot = &G;
    else if (key == "m") slot = &m;
    else if (key == "g") slot = &g;
    else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'",
                        line_no, key);
    }

    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || errno != 0 || end != text.c_str() + text.size()) {
      throw ConfigError("line " + std::to_string(line_no) + ": cannot parse value for '" + key +
                            "'",
                        line_no, key);
    }
    if (!std::isfinite(value) || value <= 0.0) {
      throw ConfigError("line " + std::to_string(line_no) + ": constant '" + key +
                            "' must be finite and strictly positive",
                        line_no, key);
    }
    *slot = value;
  }
  return PhysicalConstants(hbar, c, G, m, g);
}

PhysicalConstants load_constants(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open constants file '" + path.string() + "'", 0, "");
  }
  return parse_constants(in);
}

std::string serialize_constants(const PhysicalConstants& constants) {
  std::ostringstream out;
  const auto put = [&out](const char* key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out << key << " = " << buf << '\n';
  };
  put("hbar", constants.hbar());
  put("c", constants.c());
  put("G", constants.G());
  put("m", constants.m());
  put("g", constants.g());
  return out.str();
}

}  // namespace gravibounce
