#pragma once

// JSON schemas consumed and produced by the CLI:
//   distribution: {"space": {"labels": [...], "gamma": [...]}, "density": [...]}
//   joint:        {"space_x": {...}, "space_y": {...}, "F": [[...]]}
//   channel:      {"input_space": {...}, "output_space": {...}, "rows": [[...]]}
// Channel rows are densities w.r.t. the output gamma.

#include <string>

#include <json.hpp>

#include "renyi/spaces.hpp"

namespace renyi::io {

using json = nlohmann::json;

MeasuredAlphabet alphabet_from_json(const json& j);
Distribution distribution_from_json(const json& j);
JointDistribution joint_from_json(const json& j);
Channel channel_from_json(const json& j);

json to_json(const MeasuredAlphabet& a);
json to_json(const Distribution& d);
json to_json(const JointDistribution& j);
json to_json(const Channel& c);

/// Parses a file that may hold any of the three object kinds.
enum class ObjectKind { Distribution, Joint, Channel };
ObjectKind detect_kind(const json& j);

json load_json_file(const std::string& path);

}  // namespace renyi::io
