#ifndef HG_REPORT_HPP
#define HG_REPORT_HPP

#include <string>

#include "json.hpp"

namespace hg {

/// Outcome of one CLI command. The JSON document is the authoritative
/// report; the text rendering carries the same data in table form.
struct CommandResult {
  nlohmann::ordered_json json;
  std::string text;
  bool ok = true;
  std::string first_failure;
};

/// Runs the bundled degree-8 quartic example end to end (discovery,
/// Galois correspondence, G-isomorphism search, Hopf-action comparison)
/// and checks every result against the published values.
CommandResult run_paper_example();

/// Runs the discovery pipeline on user-supplied generators. Generators are
/// semicolon-separated cycle strings; the degree is the largest point
/// mentioned. The index [G:G'] must be at most 8.
CommandResult run_discover(const std::string& group_gens, const std::string& subgroup_gens);

/// Compares the lambda and rho structures of the quaternion group and
/// checks the expected coincidence of their correspondence images.
CommandResult run_hamiltonian();

}  // namespace hg

#endif
