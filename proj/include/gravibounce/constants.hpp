#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace gravibounce {

/// SI physical inputs of the bouncer problem. The Planck mass is derived
/// from hbar, c and G on every construction and cannot be set directly.
class PhysicalConstants {
 public:
  /// Throws ConfigError naming the first non-positive or non-finite field.
  PhysicalConstants(double hbar, double c, double G, double m, double g);

  double hbar() const noexcept { return hbar_; }  // J s
  double c() const noexcept { return c_; }        // m / s
  double G() const noexcept { return G_; }        // m^3 kg^-1 s^-2
  double m() const noexcept { return m_; }        // kg
  double g() const noexcept { return g_; }        // m / s^2
  double m_planck() const noexcept { return m_planck_; }  // sqrt(hbar c / G), kg

  PhysicalConstants with_hbar(double v) const { return {v, c_, G_, m_, g_}; }
  PhysicalConstants with_c(double v) const { return {hbar_, v, G_, m_, g_}; }
  PhysicalConstants with_G(double v) const { return {hbar_, c_, v, m_, g_}; }
  PhysicalConstants with_m(double v) const { return {hbar_, c_, G_, v, g_}; }
  PhysicalConstants with_g(double v) const { return {hbar_, c_, G_, m_, v}; }

  friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;

 private:
  double hbar_;
  double c_;
  double G_;
  double m_;
  double g_;
  double m_planck_;
};

/// CODATA 2018 values, neutron mass, and g = 9.81 m/s^2.
PhysicalConstants default_constants();

/// Parses `key = value` lines (keys hbar, c, G, m, g; `#` comments).
/// Keys not present keep their default value.
PhysicalConstants parse_constants(std::istream& in);
PhysicalConstants load_constants(const std::filesystem::path& path);

/// Writes every key with round-trip precision; parse_constants reads it back
/// bit-for-bit.
std::string serialize_constants(const PhysicalConstants& constants);

}  // namespace gravibounce
