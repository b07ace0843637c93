#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gravibounce/constants.hpp"

namespace gravibounce::report {

/// monostate marks an absent value (empty CSV field, JSON null).
using Cell = std::variant<std::monostate, std::int64_t, double, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

/// One joule in picoelectronvolts.
inline constexpr double kJoulePerPeV = 1.602176634e-31;

inline constexpr std::size_t kMaxCount = 10000;
inline constexpr std::size_t kMaxQmatrix = 200;
inline constexpr std::size_t kMaxRates = 1000;

/// Columns n,lambda,lambda_bs,bs_rel_error with bs_rel_error = |bs - lambda| / lambda.
Table zeros_table(std::size_t count);
Table levels_table(std::size_t count, const PhysicalConstants& constants);
/// Upper triangle including the diagonal; diagonal rows carry quadrature only.
Table qmatrix_table(std::size_t max_n);
/// Every downward pair k > n with k <= max_n, gamma from the reduced formula.
Table rates_table(std::size_t max_n, const PhysicalConstants& constants, double threshold);
Table lifetimes_table(std::size_t max_n, const PhysicalConstants& constants, double threshold);

/// Builds the table for a command name (zeros, levels, qmatrix, rates,
/// lifetimes). Throws DomainError for an unknown name or an out-of-range size.
Table build(std::string_view command, std::size_t size, const PhysicalConstants& constants,
            double threshold);

/// Machine output uses 12 significant digits in scientific notation; pretty
/// output rounds to 3 significant digits. CSV has a header row and LF endings;
/// JSON is an array of objects keyed by column name.
std::string render(const Table& table, Format format, bool pretty = false);

}  // namespace gravibounce::report
