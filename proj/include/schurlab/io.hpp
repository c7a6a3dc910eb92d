#pragma once

#include <string>

#include <json.hpp>

#include "schurlab/autocorr.hpp"
#include "schurlab/codes.hpp"
#include "schurlab/constructions.hpp"
#include "schurlab/perm_group.hpp"
#include "schurlab/schur_ring.hpp"
#include "schurlab/word.hpp"

namespace schurlab {

using json = nlohmann::json;

json word_to_json(const Word& w);
Word word_from_json(const json& j);

/// Orbits as lists of '+'/'-' strings, sorted by (size, representative).
json partition_to_json(const SPartition& part);

json algebra_to_json(const GroupAlgebraElement& e);

json code_to_json(const CodeSet& c);
CodeSet code_from_json(const json& j);

json code_check_to_json(const CodeSet& c, const CodeCheckResult& r);

json lattice_to_json(const DivisorLattice& lat);
std::string lattice_to_dot(const DivisorLattice& lat);

json theorem_report_to_json(const TheoremReport& report, std::uint64_t seed);

json search_report_to_json(int n, const std::vector<TwoLevelClass>& classes,
                           std::uint64_t seed);
std::string search_report_to_csv(int n, const std::vector<TwoLevelClass>& classes);

}  // namespace schurlab
