#include "renyi/json_io.hpp"

#include <fstream>

#include "renyi/errors.hpp"

namespace renyi::io {

namespace {

std::vector<double> doubles_from(const json& j, const char* what) {
  if (!j.is_array()) throw validation_error(std::string(what) + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw validation_error(std::string(what) + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> matrix_from(const json& j, const char* what) {
  if (!j.is_array()) throw validation_error(std::string(what) + ": expected an array of rows");
  std::vector<std::vector<double>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(doubles_from(row, what));
  return out;
}

}  // namespace

MeasuredAlphabet alphabet_from_json(const json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("gamma"))
    throw validation_error("space: expected {\"labels\": [...], \"gamma\": [...]}");
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) {
    if (!l.is_string()) throw validation_error("space: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return MeasuredAlphabet(std::move(labels), doubles_from(j.at("gamma"), "space.gamma"));
}

Distribution distribution_from_json(const json& j) {
  if (!j.contains("space") || !j.contains("density"))
    throw validation_error("distribution: expected {\"space\": ..., \"density\": [...]}");
  return Distribution(alphabet_from_json(j.at("space")), doubles_from(j.at("density"), "density"));
}

JointDistribution joint_from_json(const json& j) {
  if (!j.contains("space_x") || !j.contains("space_y") || !j.contains("F"))
    throw validation_error("joint: expected {\"space_x\": ..., \"space_y\": ..., \"F\": [[...]]}");
  return JointDistribution(alphabet_from_json(j.at("space_x")), alphabet_from_json(j.at("space_y")),
                           matrix_from(j.at("F"), "F"));
}

Channel channel_from_json(const json& j) {
  if (!j.contains("input_space") || !j.contains("output_space") || !j.contains("rows"))
    throw validation_error(
        "channel: expected {\"input_space\": ..., \"output_space\": ..., \"rows\": [[...]]}");
  return Channel::from_row_densities(alphabet_from_json(j.at("input_space")),
                                     alphabet_from_json(j.at("output_space")),
                                     matrix_from(j.at("rows"), "rows"));
}

json to_json(const MeasuredAlphabet& a) {
  return json{{"labels", a.labels()}, {"gamma", a.gamma()}};
}

json to_json(const Distribution& d) {
  return json{{"space", to_json(d.space())}, {"density", d.density()}};
}

json to_json(const JointDistribution& j) {
  std::vector<std::vector<double>> F(static_cast<size_t>(j.nx()));
  for (int i = 0; i < j.nx(); ++i) {
    F[static_cast<size_t>(i)].resize(static_cast<size_t>(j.ny()));
    for (int y = 0; y < j.ny(); ++y) F[static_cast<size_t>(i)][static_cast<size_t>(y)] = j.f(i, y);
  }
  return json{{"space_x", to_json(j.space_x())}, {"space_y", to_json(j.space_y())}, {"F", F}};
}

json to_json(const Channel& c) {
  std::vector<std::vector<double>> rows(static_cast<size_t>(c.num_inputs()));
  for (int i = 0; i < c.num_inputs(); ++i) rows[static_cast<size_t>(i)] = c.row(i).density();
  return json{{"input_space", to_json(c.input_space())},
              {"output_space", to_json(c.output_space())},
              {"rows", rows}};
}

ObjectKind detect_kind(const json& j) {
  if (j.contains("rows") && j.contains("input_space")) return ObjectKind::Channel;
  if (j.contains("F") && j.contains("space_x")) return ObjectKind::Joint;
  if (j.contains("density") && j.contains("space")) return ObjectKind::Distribution;
  throw validation_error("input JSON matches none of the distribution/joint/channel schemas");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw validation_error("JSON parse error in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace renyi::io
