#include "renyi/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace renyi::gen {

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<double> dirichlet(Rng& rng, int size, double concentration) {
  // Gamma(k) draws via the Marsaglia-Tsang method for k >= 1 and the boost
  // trick for k < 1; exponentials when k == 1.
  auto gamma_draw = [&](double k) {
    if (k == 1.0) {
      double u = uniform01(rng);
      while (u <= 0.0) u = uniform01(rng);
      return -std::log(u);
    }
    double boost = 1.0;
    double kk = k;
    if (kk < 1.0) {
      double u = uniform01(rng);
      while (u <= 0.0) u = uniform01(rng);
      boost = std::pow(u, 1.0 / kk);
      kk += 1.0;
    }
    double d = kk - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        // Box-Muller normal draw.
        double u1 = uniform01(rng);
        double u2 = uniform01(rng);
        while (u1 <= 0.0) u1 = uniform01(rng);
        x = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      double u = uniform01(rng);
      if (u < 1.0 - 0.0331 * x * x * x * x) return boost * d * v;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return boost * d * v;
    }
  };
  std::vector<double> out(static_cast<size_t>(size));
  double total = 0.0;
  for (auto& x : out) {
    x = gamma_draw(concentration);
    total += x;
  }
  for (auto& x : out) x /= total;
  return out;
}

MeasuredAlphabet random_alphabet(Rng& rng, int n, bool counting) {
  if (counting) return MeasuredAlphabet::counting(n);
  std::vector<std::string> labels;
  std::vector<double> gamma;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    gamma.push_back(uniform(rng, 0.25, 4.0));
  }
  return MeasuredAlphabet(std::move(labels), std::move(gamma));
}

Distribution random_distribution(Rng& rng, const MeasuredAlphabet& space, double concentration,
                                 double sparsity) {
  for (;;) {
    std::vector<double> masses = dirichlet(rng, space.size(), concentration);
    if (sparsity > 0.0) {
      double total = 0.0;
      for (auto& m : masses) {
        if (uniform01(rng) < sparsity) m = 0.0;
        total += m;
      }
      if (total <= 0.0) continue;
      for (auto& m : masses) m /= total;
    }
    return Distribution::from_masses(space, masses);
  }
}

JointDistribution random_joint(Rng& rng, int nx, int ny, const JointOptions& opts) {
  MeasuredAlphabet sx = random_alphabet(rng, nx, opts.counting_refs);
  MeasuredAlphabet sy = random_alphabet(rng, ny, opts.counting_refs);
  for (;;) {
    std::vector<double> masses = dirichlet(rng, nx * ny, opts.concentration);
    if (opts.sparsity > 0.0) {
      double total = 0.0;
      for (auto& m : masses) {
        if (uniform01(rng) < opts.sparsity) m = 0.0;
        total += m;
      }
      if (total <= 0.0) continue;
      for (auto& m : masses) m /= total;
    }
    std::vector<std::vector<double>> mat(static_cast<size_t>(nx));
    for (int i = 0; i < nx; ++i) {
      mat[static_cast<size_t>(i)].assign(masses.begin() + i * ny, masses.begin() + (i + 1) * ny);
    }
    JointDistribution j = JointDistribution::from_masses(sx, sy, mat);
    if (opts.min_density > 0.0) {
      double dmin = std::numeric_limits<double>::infinity();
      for (int i = 0; i < nx; ++i)
        for (int jj = 0; jj < ny; ++jj)
          if (j.f(i, jj) > 0.0) dmin = std::min(dmin, j.f(i, jj));
      if (dmin < opts.min_density) continue;
    }
    return j;
  }
}

Channel random_channel(Rng& rng, int n_in, int n_out, bool counting, double concentration) {
  MeasuredAlphabet in = random_alphabet(rng, n_in, counting);
  MeasuredAlphabet out = random_alphabet(rng, n_out, counting);
  std::vector<std::vector<double>> rows(static_cast<size_t>(n_in));
  for (int i = 0; i < n_in; ++i) {
    std::vector<double> masses = dirichlet(rng, n_out, concentration);
    std::vector<double> dens(static_cast<size_t>(n_out));
    for (int j = 0; j < n_out; ++j) dens[static_cast<size_t>(j)] = masses[static_cast<size_t>(j)] / out.gamma(j);
    rows[static_cast<size_t>(i)] = std::move(dens);
  }
  return Channel::from_row_densities(in, out, rows);
}

JointDistribution well_conditioned_joint(Rng& rng, int nx, int ny) {
  JointOptions opts;
  opts.counting_refs = true;
  opts.concentration = 5.0;
  opts.min_density = 0.05;
  return random_joint(rng, nx, ny, opts);
}

MarkovChainJoints random_markov_chain(Rng& rng, int nx, int ny, int nz) {
  MeasuredAlphabet sx = random_alphabet(rng, nx);
  Distribution px = random_distribution(rng, sx);
  Channel w1 = random_channel(rng, nx, ny);
  // Rebuild w1 on sx so spaces line up.
  std::vector<std::vector<double>> rows1(static_cast<size_t>(nx));
  for (int i = 0; i < nx; ++i) rows1[static_cast<size_t>(i)] = w1.row(i).density();
  Channel w1x = Channel::from_row_densities(sx, w1.output_space(), rows1);
  Channel w2 = random_channel(rng, ny, nz);
  std::vector<std::vector<double>> rows2(static_cast<size_t>(ny));
  for (int y = 0; y < ny; ++y) rows2[static_cast<size_t>(y)] = w2.row(y).density();
  Channel w2y = Channel::from_row_densities(w1x.output_space(), w2.output_space(), rows2);

  MarkovChainJoints out{make_joint_from_input_and_channel(px, w1x),
                        make_joint_from_input_and_channel(px, compose(w1x, w2y))};
  return out;
}

ThreeVariableJoints random_three_variable_joint(Rng& rng, int nx, int ny, int nz) {
  MeasuredAlphabet sx = random_alphabet(rng, nx);
  MeasuredAlphabet sy = random_alphabet(rng, ny);
  MeasuredAlphabet sz = random_alphabet(rng, nz);
  MeasuredAlphabet syz = product_alphabet(sy, sz);

  std::vector<double> masses = dirichlet(rng, nx * ny * nz);
  std::vector<std::vector<double>> mat(static_cast<size_t>(nx));
  for (int i = 0; i < nx; ++i)
    mat[static_cast<size_t>(i)].assign(masses.begin() + i * ny * nz,
                                       masses.begin() + (i + 1) * ny * nz);
  JointDistribution x_yz = JointDistribution::from_masses(sx, syz, mat);

  // (X, Z) marginal: integrate Y out with its reference weights.
  std::vector<std::vector<double>> xz(static_cast<size_t>(nx));
  for (int i = 0; i < nx; ++i) {
    xz[static_cast<size_t>(i)].assign(static_cast<size_t>(nz), 0.0);
    for (int y = 0; y < ny; ++y)
      for (int z = 0; z < nz; ++z)
        xz[static_cast<size_t>(i)][static_cast<size_t>(z)] +=
            x_yz.f(i, y * nz + z) * sy.gamma(y);
  }
  JointDistribution x_z(sx, sz, std::move(xz));
  return {std::move(x_yz), std::move(x_z)};
}

}  // namespace renyi::gen
