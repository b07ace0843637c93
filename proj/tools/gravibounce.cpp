// gravibounce: level, matrix-element, rate and lifetime tables for the
// gravitational quantum bouncer.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gravibounce/constants.hpp"
#include "gravibounce/emission.hpp"
#include "gravibounce/errors.hpp"
#include "gravibounce/report.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum bouncer eigenstates and spontaneous graviton emission rates"};
  app.require_subcommand(1);

  std::size_t size = 10;
  std::string format = "csv";
  std::string constants_path;
  double threshold = gravibounce::kDefaultValidityThreshold;
  bool pretty = false;

  app.add_option("--count,--max", size, "Number of states (zeros, levels) or largest index");
  app.add_option("--format", format, "Output encoding")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--constants", constants_path,
                 "Constants override file (falls back to $GRAVIBOUNCE_CONSTANTS)");
  app.add_option("--threshold", threshold, "Quadrupole-validity bound on omega z_k / c");
  app.add_flag("--pretty", pretty, "Round values to 3 significant digits");

  for (const char* name : {"zeros", "levels", "qmatrix", "rates", "lifetimes"}) {
    app.add_subcommand(name)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (constants_path.empty()) {
      if (const char* env = std::getenv("GRAVIBOUNCE_CONSTANTS"); env && *env) {
        constants_path = env;
      }
    }
    const gravibounce::PhysicalConstants constants =
        constants_path.empty() ? gravibounce::default_constants()
                               : gravibounce::load_constants(constants_path);
    const auto table = gravibounce::report::build(command, size, constants, threshold);
    std::cout << gravibounce::report::render(
        table, format == "json" ? gravibounce::report::Format::json
                                : gravibounce::report::Format::csv,
        pretty);
  } catch (const gravibounce::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const gravibounce::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return EXIT_SUCCESS;
}
