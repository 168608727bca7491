#pragma once

// Finite measured alphabets and the probability objects living on them.
// Probabilities are stored as densities with respect to the alphabet's
// reference weights; point masses are density * weight.

#include <string>
#include <vector>

#include "renyi/errors.hpp"

namespace renyi {

/// Tolerance used when validating probability normalization on construction.
inline constexpr double kNormalizationTol = 1e-12;

/// A finite point set with strictly positive reference weights. Total mass
/// need not (and often does not) equal 1.
class MeasuredAlphabet {
 public:
  MeasuredAlphabet(std::vector<std::string> labels, std::vector<double> gamma);

  /// Labels "0".."n-1" with unit weights.
  static MeasuredAlphabet counting(int n, const std::string& prefix = "");

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<double>& gamma() const { return gamma_; }
  double gamma(int i) const { return gamma_[static_cast<size_t>(i)]; }
  double total_mass() const;

  friend bool operator==(const MeasuredAlphabet& a, const MeasuredAlphabet& b) {
    return a.labels_ == b.labels_ && a.gamma_ == b.gamma_;
  }
  friend bool operator!=(const MeasuredAlphabet& a, const MeasuredAlphabet& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
  std::vector<double> gamma_;
};

/// Product alphabet with labels "a|b" and weights gamma_x[i]*gamma_y[j],
/// laid out row-major in the first factor.
MeasuredAlphabet product_alphabet(const MeasuredAlphabet& x, const MeasuredAlphabet& y);

/// A probability measure on a MeasuredAlphabet, stored as a density f with
/// sum_i f[i] * gamma[i] = 1 (validated to kNormalizationTol, never silently
/// renormalized).
class Distribution {
 public:
  Distribution(MeasuredAlphabet space, std::vector<double> density);

  /// Builds from point masses (masses[i] = f[i]*gamma[i]).
  static Distribution from_masses(const MeasuredAlphabet& space, const std::vector<double>& masses);
  static Distribution uniform(const MeasuredAlphabet& space);
  static Distribution point_mass(const MeasuredAlphabet& space, int i);

  const MeasuredAlphabet& space() const { return space_; }
  int size() const { return space_.size(); }
  const std::vector<double>& density() const { return density_; }
  double density(int i) const { return density_[static_cast<size_t>(i)]; }
  double mass(int i) const { return density_[static_cast<size_t>(i)] * space_.gamma(i); }
  std::vector<double> masses() const;

  /// Indices with strictly positive density.
  std::vector<int> support() const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.space_ == b.space_ && a.density_ == b.density_;
  }

 private:
  MeasuredAlphabet space_;
  std::vector<double> density_;
};

/// A probability measure on a product alphabet, stored as the density matrix
/// F[i][j] with respect to gamma_x (x) gamma_y.
class JointDistribution {
 public:
  JointDistribution(MeasuredAlphabet space_x, MeasuredAlphabet space_y,
                    std::vector<std::vector<double>> density);

  static JointDistribution from_masses(const MeasuredAlphabet& space_x,
                                       const MeasuredAlphabet& space_y,
                                       const std::vector<std::vector<double>>& masses);
  static JointDistribution product(const Distribution& x, const Distribution& y);

  const MeasuredAlphabet& space_x() const { return sx_; }
  const MeasuredAlphabet& space_y() const { return sy_; }
  int nx() const { return sx_.size(); }
  int ny() const { return sy_.size(); }
  double f(int i, int j) const { return F_[static_cast<size_t>(i * ny() + j)]; }
  double mass(int i, int j) const { return f(i, j) * sx_.gamma(i) * sy_.gamma(j); }

  Distribution marginal_x() const;
  Distribution marginal_y() const;

  /// Flattens to a Distribution on product_alphabet(space_x, space_y).
  Distribution flatten() const;

  friend bool operator==(const JointDistribution& a, const JointDistribution& b) {
    return a.sx_ == b.sx_ && a.sy_ == b.sy_ && a.F_ == b.F_;
  }

 private:
  MeasuredAlphabet sx_, sy_;
  std::vector<double> F_;  // row-major nx*ny
};

/// A probability kernel: one output Distribution per input letter.
class Channel {
 public:
  Channel(MeasuredAlphabet input_space, std::vector<Distribution> rows);

  /// Rows given as densities on a shared output space.
  static Channel from_row_densities(const MeasuredAlphabet& input_space,
                                    const MeasuredAlphabet& output_space,
                                    const std::vector<std::vector<double>>& rows);
  /// Binary symmetric channel with crossover p on counting alphabets.
  static Channel binary_symmetric(double crossover);

  const MeasuredAlphabet& input_space() const { return in_; }
  const MeasuredAlphabet& output_space() const { return rows_.front().space(); }
  int num_inputs() const { return in_.size(); }
  int num_outputs() const { return output_space().size(); }
  const Distribution& row(int i) const { return rows_[static_cast<size_t>(i)]; }

 private:
  MeasuredAlphabet in_;
  std::vector<Distribution> rows_;
};

/// F[i][j] = input.density[i] * rows[i].density[j]; the joint of (X, Y) when
/// X ~ input is fed through the channel.
JointDistribution make_joint_from_input_and_channel(const Distribution& input, const Channel& channel);

/// Conditional distribution of X given Y = y_index; requires positive
/// marginal mass at y_index.
Distribution conditional_slice(const JointDistribution& joint, int y_index);

/// Conditional distribution of Y given X = x_index.
Distribution conditional_slice_y_given_x(const JointDistribution& joint, int x_index);

/// Transposed density with the two spaces exchanged. swap(swap(j)) == j.
JointDistribution swap(const JointDistribution& joint);

/// The kernel x -> P_{Y|X=x} of a joint, defined on the restriction of
/// space_x to supp(P_X). Returns the restricted input distribution too.
struct InputAndChannel {
  Distribution input;
  Channel channel;
};
InputAndChannel decompose_joint(const JointDistribution& joint);

/// Composition of kernels: (x -> Y) then (y -> Z) gives x -> Z.
Channel compose(const Channel& first, const Channel& second);

}  // namespace renyi
