#pragma once

#include <json.hpp>

#include "finsum/constructors.hpp"
#include "finsum/criteria.hpp"
#include "finsum/fs_core.hpp"
#include "finsum/search.hpp"

// JSON wire formats. BigInt crosses the boundary as a decimal string, rational
// witnesses as "p/q"; counts and indices stay plain JSON integers.
namespace finsum::io {

using nlohmann::json;

json spec_to_json(const FsSpec& spec);
FsSpec spec_from_json(const json& j);

json system_to_json(const LinearSystem& sys);
// Accepts either the {"rows","cols","entries"} object or a bare array of rows
// (entries as numbers or decimal strings).
LinearSystem system_from_json(const json& j);

json cover_to_json(const SubsetCover& cover);
SubsetCover cover_from_json(const json& j);

json blocks_to_json(const BlockOrdering& ordering);

json solution_to_json(const SolutionVector& sol);
json epsilon_matrix_to_json(const EpsilonMatrix& em);

json word_to_json(const ParametricWord& word);
ParametricWord word_from_json(const json& j, int k);

json ground_to_json(const GroundSet& ground);
GroundSet ground_from_json(const json& j);

json target_to_json(const Target& target);
Target target_from_json(const json& j);

json witness_to_json(const MonoWitness& witness);
json verdict_to_json(const Verdict& verdict);
json number_result_to_json(const NumberResult& result, int cap);

}  // namespace finsum::io
