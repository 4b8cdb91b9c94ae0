/**
 * Fan documents: the JSON exchange format, the builtin fan library, and a
 * seeded generator of random complete 2D fans for property tests.
 *
 * A document is an object with exactly the keys "rank", "rays", "max_cones"
 * and an optional "name". Faces are always generated from the maximal
 * cones; documents carrying explicit face lists are rejected.
 */

#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/polyhedral.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

struct FanDocument {
    std::string name;  // optional, may be empty
    Index rank = 0;
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<int>> max_cones;
};

/// Strict schema check; throws ParseError on any deviation (unknown keys,
/// duplicate or zero rays, bad indices, unused rays).
FanDocument parse_fan_document(const Json& j);

FanDocument parse_fan_document_text(const std::string& text);

Json to_json(const FanDocument& doc);

/// Build and validate; throws ValidationError when the fan is invalid or
/// not complete.
Fan build_fan(const FanDocument& doc);

/// Build without the validity requirement, returning the report alongside.
std::pair<Fan, FanValidation> build_fan_unchecked(const FanDocument& doc);

/// Canonical document for a fan: rays in fan order, maximal cones as sorted
/// ray index lists.
FanDocument fan_to_document(const Fan& fan, const std::string& name = "");

/// Builtins: p1, p2, p3, p1xp1, wp112, hirzebruch:a with integer a >= 0.
FanDocument builtin_fan(const std::string& name);

const std::vector<std::string>& builtin_names();

/// Random complete fan in rank 2: distinct primitive rays sorted by angle
/// (exact integer comparisons), resampled until consecutive gaps stay below
/// a half turn. Deterministic for a given generator state.
Fan random_complete_fan_2d(std::mt19937_64& rng, int num_rays);

/// Random per-cone orientation signs.
std::vector<int> random_orientations(std::mt19937_64& rng, const Fan& fan);

}  // namespace toric
