#pragma once

#include <map>
#include <string>
#include <vector>

#include "socialchoice/profile.hpp"

namespace socialchoice {

// Canonical ballot texts of the reference profiles used across the test
// suites: P1-P5 exercise the rule-specific regressions, E1a/E1b separate the
// two dominance relations, E2 exhibits the positional restriction
// inconsistency, E3 carries distinct majority and positional orders.
const std::map<std::string, std::string>& fixture_texts();

Profile fixture(const std::string& name);

// Writes <name>.ballots for every fixture into `directory` (created if
// needed); returns the sorted list of file paths written.
std::vector<std::string> emit_fixtures(const std::string& directory);

}  // namespace socialchoice
