#include "gravibounce/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <cstdio>
#include <string>

#include "gravibounce/airy.hpp"
#include "gravibounce/bouncer.hpp"
#include "gravibounce/emission.hpp"
#include "gravibounce/errors.hpp"
#include "gravibounce/quadrupole.hpp"

namespace gravibounce::report {

namespace {

std::int64_t idx(std::size_t i) { return static_cast<std::int64_t>(i); }

void check_size(std::string_view what, std::size_t size, std::size_t max) {
  if (size < 1 || size > max) {
    throw DomainError(std::string(what) + " must lie in [1, " + std::to_string(max) + "]");
  }
}

std::string format_number(double v, bool pretty) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pretty ? "%.3g" : "%.11e", v);
  return buf;
}

std::string format_cell(const Cell& cell, Format format, bool pretty) {
  struct Visitor {
    Format format;
    bool pretty;
    std::string operator()(std::monostate) const { return format == Format::json ? "null" : ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const {
      if (!std::isfinite(v)) return format == Format::json ? "null" : "";
      return format_number(v, pretty);
    }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{format, pretty}, cell);
}

}  // namespace

Table zeros_table(std::size_t count) {
  check_size("count", count, kMaxCount);
  Table t{{"n", "lambda", "lambda_bs", "bs_rel_error"}, {}};
  const auto& zeros = airy::shared_zero_table();
  for (std::size_t n = 1; n <= count; ++n) {
    const double lambda = zeros.lambda(n);
    const double bs = airy::bs_zero(n);
    t.rows.push_back({idx(n), lambda, bs, std::fabs(bs - lambda) / lambda});
  }
  return t;
}

Table levels_table(std::size_t count, const PhysicalConstants& constants) {
  check_size("count", count, kMaxCount);
  Table t{{"n", "lambda", "energy_J", "energy_peV", "norm_const_per_sqrt_m"}, {}};
  const BouncerScales s = scales(constants);
  for (std::size_t n = 1; n <= count; ++n) {
    const EigenState st = eigenstate(n, s);
    t.rows.push_back({idx(n), st.lambda, st.energy, st.energy / kJoulePerPeV, st.norm_const});
  }
  return t;
}

Table qmatrix_table(std::size_t max_n) {
  check_size("max", max_n, kMaxQmatrix);
  Table t{{"k", "n", "elem_closed", "elem_quadrature", "rel_diff"}, {}};
  // Reduced units: independent of the physical constants.
  const BouncerScales unit{1.0, 1.0};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 1; k <= max_n; ++k) {
    for (std::size_t n = k; n <= max_n; ++n) pairs.emplace_back(k, n);
  }
  t.rows.resize(pairs.size());

  // Rows are independent; workers fill disjoint slots, so output order is fixed.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const auto [k, n] = pairs[i];
      try {
        const double quad = element_quadrature(k, n, unit, 1.0).dimensionless;
        if (k == n) {
          t.rows[i] = {idx(k), idx(n), std::monostate{}, quad, std::monostate{}};
          continue;
        }
        const double closed = element_closed(k, n, unit, 1.0).dimensionless;
        t.rows[i] = {idx(k), idx(n), closed, quad, std::fabs(closed - quad) / std::fabs(closed)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = pairs.size();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), pairs.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return t;
}

Table rates_table(std::size_t max_n, const PhysicalConstants& constants, double threshold) {
  check_size("max", max_n, kMaxRates);
  Table t{{"k", "n", "omega_rad_per_s", "gamma_per_s", "quadrupole_ratio", "valid"}, {}};
  const BouncerScales s = scales(constants);
  for (std::size_t k = 2; k <= max_n; ++k) {
    for (std::size_t n = 1; n < k; ++n) {
      const TransitionRate r = transition(k, n, s, constants, threshold);
      t.rows.push_back({idx(k), idx(n), r.omega, r.gamma, r.quadrupole_ratio, r.valid});
    }
  }
  return t;
}

Table lifetimes_table(std::size_t max_n, const PhysicalConstants& constants, double threshold) {
  check_size("max", max_n, kMaxCount);
  Table t{{"n", "total_gamma_per_s", "dominant_final_state"}, {}};
  const BouncerScales s = scales(constants);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Lifetime life = lifetime(n, s, constants, threshold);
    Cell dominant = std::monostate{};
    if (!life.partials.empty()) dominant = idx(life.dominant_final_state());
    t.rows.push_back({idx(n), life.total_rate, dominant});
  }
  return t;
}

Table build(std::string_view command, std::size_t size, const PhysicalConstants& constants,
            double threshold) {
  if (command == "zeros") return zeros_table(size);
  if (command == "levels") return levels_table(size, constants);
  if (command == "qmatrix") return qmatrix_table(size);
  if (command == "rates") return rates_table(size, constants, threshold);
  if (command == "lifetimes") return lifetimes_table(size, constants, threshold);
  throw DomainError("unknown command '" + std::string(command) + "'");
}

std::string render(const Table& table, Format format, bool pretty) {
  std::string out;
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i) out += ',';
      out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += format_cell(row[i], format, pretty);
      }
      out += '\n';
    }
    return out;
  }

  out += '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += r ? ",\n  {" : "\n  {";
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ", ";
      out += '"' + table.columns[i] + "\": " + format_cell(row[i], format, pretty);
    }
    out += '}';
  }
  out += table.rows.empty() ? "]\n" : "\n]\n";
  return out;
}

}  // namespace gravibounce::report
