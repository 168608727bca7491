#include "renyi/spaces.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

namespace renyi {

namespace {

void check_density_values(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (std::isnan(x)) throw validation_error(std::string(what) + ": NaN density");
    if (x < 0.0) throw validation_error(std::string(what) + ": negative density");
    if (std::isinf(x)) throw validation_error(std::string(what) + ": infinite density");
  }
}

}  // namespace

MeasuredAlphabet::MeasuredAlphabet(std::vector<std::string> labels, std::vector<double> gamma)
    : labels_(std::move(labels)), gamma_(std::move(gamma)) {
  if (labels_.empty()) throw validation_error("alphabet: needs at least one point");
  if (labels_.size() != gamma_.size())
    throw structural_error("alphabet: labels and gamma lengths differ");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw validation_error("alphabet: duplicate label '" + l + "'");
  }
  for (double g : gamma_) {
    if (!(g > 0.0) || !std::isfinite(g))
      throw validation_error("alphabet: reference weights must be strictly positive and finite");
  }
}

MeasuredAlphabet MeasuredAlphabet::counting(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return MeasuredAlphabet(std::move(labels), std::vector<double>(static_cast<size_t>(n), 1.0));
}

double MeasuredAlphabet::total_mass() const {
  double s = 0.0;
  for (double g : gamma_) s += g;
  return s;
}

MeasuredAlphabet product_alphabet(const MeasuredAlphabet& x, const MeasuredAlphabet& y) {
  std::vector<std::string> labels;
  std::vector<double> gamma;
  labels.reserve(static_cast<size_t>(x.size()) * static_cast<size_t>(y.size()));
  gamma.reserve(labels.capacity());
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) {
      labels.push_back(x.label(i) + "|" + y.label(j));
      gamma.push_back(x.gamma(i) * y.gamma(j));
    }
  }
  return MeasuredAlphabet(std::move(labels), std::move(gamma));
}

Distribution::Distribution(MeasuredAlphabet space, std::vector<double> density)
    : space_(std::move(space)), density_(std::move(density)) {
  if (static_cast<int>(density_.size()) != space_.size())
    throw structural_error("distribution: density length does not match alphabet");
  check_density_values(density_, "distribution");
  double total = 0.0;
  bool has_support = false;
  for (int i = 0; i < space_.size(); ++i) {
    total += density_[static_cast<size_t>(i)] * space_.gamma(i);
    has_support = has_support || density_[static_cast<size_t>(i)] > 0.0;
  }
  if (!has_support) throw validation_error("distribution: empty support");
  if (std::abs(total - 1.0) > kNormalizationTol)
    throw validation_error("distribution: density integrates to " + std::to_string(total) +
                           ", not 1 (inputs are not renormalized)");
}

Distribution Distribution::from_masses(const MeasuredAlphabet& space,
                                       const std::vector<double>& masses) {
  if (static_cast<int>(masses.size()) != space.size())
    throw structural_error("distribution: mass length does not match alphabet");
  std::vector<double> density(masses.size());
  for (int i = 0; i < space.size(); ++i)
    density[static_cast<size_t>(i)] = masses[static_cast<size_t>(i)] / space.gamma(i);
  return Distribution(space, std::move(density));
}

Distribution Distribution::uniform(const MeasuredAlphabet& space) {
  double c = 1.0 / space.total_mass();
  return Distribution(space, std::vector<double>(static_cast<size_t>(space.size()), c));
}

Distribution Distribution::point_mass(const MeasuredAlphabet& space, int i) {
  std::vector<double> density(static_cast<size_t>(space.size()), 0.0);
  density[static_cast<size_t>(i)] = 1.0 / space.gamma(i);
  return Distribution(space, std::move(density));
}

std::vector<double> Distribution::masses() const {
  std::vector<double> m(density_.size());
  for (int i = 0; i < size(); ++i) m[static_cast<size_t>(i)] = mass(i);
  return m;
}

std::vector<int> Distribution::support() const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i)
    if (density_[static_cast<size_t>(i)] > 0.0) s.push_back(i);
  return s;
}

JointDistribution::JointDistribution(MeasuredAlphabet space_x, MeasuredAlphabet space_y,
                                     std::vector<std::vector<double>> density)
    : sx_(std::move(space_x)), sy_(std::move(space_y)) {
  if (static_cast<int>(density.size()) != sx_.size())
    throw structural_error("joint: row count does not match space_x");
  F_.reserve(static_cast<size_t>(sx_.size()) * static_cast<size_t>(sy_.size()));
  for (const auto& row : density) {
    if (static_cast<int>(row.size()) != sy_.size())
      throw structural_error("joint: row length does not match space_y");
    check_density_values(row, "joint");
    F_.insert(F_.end(), row.begin(), row.end());
  }
  double total = 0.0;
  bool has_support = false;
  for (int i = 0; i < nx(); ++i) {
    for (int j = 0; j < ny(); ++j) {
      total += f(i, j) * sx_.gamma(i) * sy_.gamma(j);
      has_support = has_support || f(i, j) > 0.0;
    }
  }
  if (!has_support) throw validation_error("joint: empty support");
  if (std::abs(total - 1.0) > kNormalizationTol)
    throw validation_error("joint: density integrates to " + std::to_string(total) + ", not 1");
}

JointDistribution JointDistribution::from_masses(const MeasuredAlphabet& space_x,
                                                 const MeasuredAlphabet& space_y,
                                                 const std::vector<std::vector<double>>& masses) {
  std::vector<std::vector<double>> density(masses.size());
  for (size_t i = 0; i < masses.size(); ++i) {
    density[i].resize(masses[i].size());
    for (size_t j = 0; j < masses[i].size(); ++j)
      density[i][j] = masses[i][j] / (space_x.gamma(static_cast<int>(i)) *
                                      space_y.gamma(static_cast<int>(j)));
  }
  return JointDistribution(space_x, space_y, std::move(density));
}

JointDistribution JointDistribution::product(const Distribution& x, const Distribution& y) {
  std::vector<std::vector<double>> density(static_cast<size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    density[static_cast<size_t>(i)].resize(static_cast<size_t>(y.size()));
    for (int j = 0; j < y.size(); ++j)
      density[static_cast<size_t>(i)][static_cast<size_t>(j)] = x.density(i) * y.density(j);
  }
  return JointDistribution(x.space(), y.space(), std::move(density));
}

Distribution JointDistribution::marginal_x() const {
  std::vector<double> fx(static_cast<size_t>(nx()), 0.0);
  for (int i = 0; i < nx(); ++i)
    for (int j = 0; j < ny(); ++j) fx[static_cast<size_t>(i)] += f(i, j) * sy_.gamma(j);
  return Distribution(sx_, std::move(fx));
}

Distribution JointDistribution::marginal_y() const {
  std::vector<double> fy(static_cast<size_t>(ny()), 0.0);
  for (int j = 0; j < ny(); ++j)
    for (int i = 0; i < nx(); ++i) fy[static_cast<size_t>(j)] += f(i, j) * sx_.gamma(i);
  return Distribution(sy_, std::move(fy));
}

Distribution JointDistribution::flatten() const {
  return Distribution(product_alphabet(sx_, sy_), F_);
}

Channel::Channel(MeasuredAlphabet input_space, std::vector<Distribution> rows)
    : in_(std::move(input_space)), rows_(std::move(rows)) {
  if (rows_.empty()) throw structural_error("channel: needs at least one row");
  if (static_cast<int>(rows_.size()) != in_.size())
    throw structural_error("channel: row count does not match input space");
  for (const auto& r : rows_) {
    if (r.space() != rows_.front().space())
      throw structural_error("channel: rows live on different output spaces");
  }
}

Channel Channel::from_row_densities(const MeasuredAlphabet& input_space,
                                    const MeasuredAlphabet& output_space,
                                    const std::vector<std::vector<double>>& rows) {
  std::vector<Distribution> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.emplace_back(output_space, row);
  return Channel(input_space, std::move(r));
}

Channel Channel::binary_symmetric(double crossover) {
  if (!(crossover >= 0.0) || !(crossover <= 1.0))
    throw validation_error("binary_symmetric: crossover must lie in [0,1]");
  auto in = MeasuredAlphabet::counting(2, "in");
  auto out = MeasuredAlphabet::counting(2, "out");
  return from_row_densities(in, out,
                            {{1.0 - crossover, crossover}, {crossover, 1.0 - crossover}});
}

JointDistribution make_joint_from_input_and_channel(const Distribution& input,
                                                    const Channel& channel) {
  if (input.space() != channel.input_space())
    throw structural_error("make_joint: input distribution does not live on the channel input space");
  std::vector<std::vector<double>> density(static_cast<size_t>(input.size()));
  for (int i = 0; i < input.size(); ++i) {
    density[static_cast<size_t>(i)].resize(static_cast<size_t>(channel.num_outputs()));
    for (int j = 0; j < channel.num_outputs(); ++j)
      density[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          input.density(i) * channel.row(i).density(j);
  }
  return JointDistribution(input.space(), channel.output_space(), std::move(density));
}

Distribution conditional_slice(const JointDistribution& joint, int y_index) {
  if (y_index < 0 || y_index >= joint.ny())
    throw structural_error("conditional_slice: y index out of range");
  double g = 0.0;
  for (int i = 0; i < joint.nx(); ++i) g += joint.f(i, y_index) * joint.space_x().gamma(i);
  if (!(g > 0.0))
    throw out_of_support_error("conditional_slice: marginal density vanishes at y=" +
                               std::to_string(y_index));
  std::vector<double> density(static_cast<size_t>(joint.nx()));
  for (int i = 0; i < joint.nx(); ++i) density[static_cast<size_t>(i)] = joint.f(i, y_index) / g;
  return Distribution(joint.space_x(), std::move(density));
}

Distribution conditional_slice_y_given_x(const JointDistribution& joint, int x_index) {
  return conditional_slice(swap(joint), x_index);
}

JointDistribution swap(const JointDistribution& joint) {
  std::vector<std::vector<double>> density(static_cast<size_t>(joint.ny()));
  for (int j = 0; j < joint.ny(); ++j) {
    density[static_cast<size_t>(j)].resize(static_cast<size_t>(joint.nx()));
    for (int i = 0; i < joint.nx(); ++i) density[static_cast<size_t>(j)][static_cast<size_t>(i)] = joint.f(i, j);
  }
  return JointDistribution(joint.space_y(), joint.space_x(), std::move(density));
}

InputAndChannel decompose_joint(const JointDistribution& joint) {
  Distribution fx = joint.marginal_x();
  std::vector<int> supp = fx.support();
  std::vector<std::string> labels;
  std::vector<double> gamma;
  for (int i : supp) {
    labels.push_back(joint.space_x().label(i));
    gamma.push_back(joint.space_x().gamma(i));
  }
  MeasuredAlphabet restricted(std::move(labels), std::move(gamma));
  std::vector<double> density;
  density.reserve(supp.size());
  for (int i : supp) density.push_back(fx.density(i));
  Distribution input(restricted, std::move(density));

  std::vector<std::vector<double>> rows;
  rows.reserve(supp.size());
  for (int i : supp) {
    std::vector<double> row(static_cast<size_t>(joint.ny()));
    for (int j = 0; j < joint.ny(); ++j) row[static_cast<size_t>(j)] = joint.f(i, j) / fx.density(i);
    rows.push_back(std::move(row));
  }
  Channel ch = Channel::from_row_densities(restricted, joint.space_y(), rows);
  return {std::move(input), std::move(ch)};
}

Channel compose(const Channel& first, const Channel& second) {
  if (first.output_space() != second.input_space())
    throw structural_error("compose: inner spaces do not match");
  std::vector<std::vector<double>> rows(static_cast<size_t>(first.num_inputs()));
  for (int x = 0; x < first.num_inputs(); ++x) {
    std::vector<double> out(static_cast<size_t>(second.num_outputs()), 0.0);
    for (int y = 0; y < first.num_outputs(); ++y) {
      double w = first.row(x).mass(y);
      if (w == 0.0) continue;
      for (int z = 0; z < second.num_outputs(); ++z)
        out[static_cast<size_t>(z)] += w * second.row(y).density(z);
    }
    rows[static_cast<size_t>(x)] = std::move(out);
  }
  return Channel::from_row_densities(first.input_space(), second.output_space(), rows);
}

}  // namespace renyi
