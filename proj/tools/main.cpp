// hopfgalois: Hopf-Galois structure discovery and analysis on separable
// field extensions via regular subgroups of Sym(G/G').
//
// Exit codes: 0 success, 2 expected-result check failed, 3 input error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hg/errors.hpp"
#include "hg/report.hpp"

namespace {

int emit(const hg::CommandResult& result, const std::string& format) {
  if (format == "json")
    std::cout << result.json.dump(2) << "\n";
  else
    std::cout << result.text;
  if (!result.ok) {
    std::cerr << "check failed: " << result.first_failure << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois structures via regular subgroups normalized by lambda(G)"};
  app.require_subcommand(1);

  std::string format_paper = "text", format_discover = "text", format_ham = "text";
  std::string group_gens, subgroup_gens;

  auto* paper = app.add_subcommand(
      "paper-example", "run the bundled degree-8 quartic example and verify the expected results");
  paper->add_option("--format", format_paper, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* discover =
      app.add_subcommand("discover", "discover Hopf-Galois structures for a pair (G, G')");
  discover
      ->add_option("--group", group_gens,
                   "generators of G, semicolon-separated cycle strings, e.g. \"(1,2,3,4);(1,2)\"")
      ->required();
  discover->add_option("--subgroup", subgroup_gens, "generators of G', same format")->required();
  discover->add_option("--format", format_discover, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* ham = app.add_subcommand(
      "hamiltonian", "compare the lambda and rho structures of the quaternion group Q8");
  ham->add_option("--format", format_ham, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (paper->parsed()) return emit(hg::run_paper_example(), format_paper);
    if (discover->parsed()) return emit(hg::run_discover(group_gens, subgroup_gens), format_discover);
    if (ham->parsed()) return emit(hg::run_hamiltonian(), format_ham);
  } catch (const hg::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const hg::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const hg::SizeLimitError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
