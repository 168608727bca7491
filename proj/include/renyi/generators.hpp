#pragma once

// Seed-deterministic random instances for the property suites and oracles.
// Uses mt19937_64 with hand-rolled uniform/Dirichlet draws so instance
// streams are reproducible bit-for-bit for a given seed.

#include <cstdint>
#include <random>
#include <vector>

#include "renyi/spaces.hpp"

namespace renyi::gen {

using Rng = std::mt19937_64;

/// Uniform in [0,1) from the top 53 bits.
double uniform01(Rng& rng);
double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive bounds

/// Dirichlet(concentration,...,concentration) sample of the given size.
std::vector<double> dirichlet(Rng& rng, int size, double concentration = 1.0);

struct JointOptions {
  bool counting_refs = false;     // unit reference weights instead of random ones
  double concentration = 1.0;     // Dirichlet concentration for the masses
  double sparsity = 0.0;          // probability of zeroing each cell (support edge cases)
  double min_density = 0.0;       // rejection-sample until min positive density >= this
};

MeasuredAlphabet random_alphabet(Rng& rng, int n, bool counting = false);
Distribution random_distribution(Rng& rng, const MeasuredAlphabet& space,
                                 double concentration = 1.0, double sparsity = 0.0);
JointDistribution random_joint(Rng& rng, int nx, int ny, const JointOptions& opts = {});
Channel random_channel(Rng& rng, int n_in, int n_out, bool counting = false,
                       double concentration = 1.0);

/// Concentrated full-support joint on counting references, used by the
/// order-limit suites where near-degenerate densities would inflate the
/// finite-alpha gap beyond the stated tolerances.
JointDistribution well_conditioned_joint(Rng& rng, int nx, int ny);

/// A random Markov chain X -> Y -> Z; returns the (X,Y) joint and the
/// composed (X,Z) joint.
struct MarkovChainJoints {
  JointDistribution xy;
  JointDistribution xz;
};
MarkovChainJoints random_markov_chain(Rng& rng, int nx, int ny, int nz);

/// A random joint on S x (T1 x T2) together with its (X, Z) marginal,
/// for the three-variable monotonicity checks.
struct ThreeVariableJoints {
  JointDistribution x_yz;  // on S x product(T1, T2)
  JointDistribution x_z;   // on S x T2
};
ThreeVariableJoints random_three_variable_joint(Rng& rng, int nx, int ny, int nz);

}  // namespace renyi::gen
