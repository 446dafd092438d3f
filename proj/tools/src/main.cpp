#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "bosonic/errors.hpp"
#include "commands.hpp"

namespace {

using bosonic::cli::Json;

std::string read_input(const std::string& path) {
  if (path.empty()) {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw bosonic::cli::InputError("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const Json& report) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw bosonic::cli::InputError("cannot open output file " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = bosonic::cli;
  CLI::App app{"Kernel calculus for bosonic Fock space: check maps, build (anti)metaplectic kernels"};
  app.require_subcommand(1);

  cli::Options options;
  std::string input_path;
  std::string output_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", options.dim, "Dimension d of the one-particle space");
    sub->add_option("--trunc", options.trunc, "Truncation degree N (kernels are built at 2N)");
    sub->add_option("--tol", options.tol, "Verification tolerance (default 1e-10)");
    sub->add_option("--seed", options.seed, "Random seed");
    sub->add_option("--output", output_path, "Report file (default stdout)");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input_path, "Map description JSON (default stdin)");
  };

  CLI::App* check = app.add_subcommand("check", "Verify the map and report Z_g");
  CLI::App* kernel = app.add_subcommand("kernel", "Build the kernel table and verify intertwining");
  CLI::App* element = app.add_subcommand("element", "Coherent matrix element: closed form vs truncated pairing");
  CLI::App* selftest = app.add_subcommand("selftest", "Run the invariant suite on seeded random inputs");
  for (CLI::App* sub : {check, kernel, element, selftest}) add_common(sub);
  for (CLI::App* sub : {check, kernel, element}) add_input(sub);
  selftest->add_flag("--force-failure", options.force_failure, "Negative control: perturb Z symmetry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }
  try {
    cli::Outcome outcome;
    if (selftest->parsed()) {
      outcome = cli::cmd_selftest(options);
    } else {
      const Json input = cli::parse_text(read_input(input_path));
      if (check->parsed()) outcome = cli::cmd_check(input, options);
      if (kernel->parsed()) outcome = cli::cmd_kernel(input, options);
      if (element->parsed()) outcome = cli::cmd_element(input, options);
    }
    write_output(output_path, outcome.report);
    return outcome.exit_code;
  } catch (const cli::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const bosonic::DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const bosonic::TruncationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kVerificationFailure;
  }
}
