#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "renyi/entropy.hpp"
#include "renyi/generators.hpp"
#include "renyi/oracle.hpp"

using namespace renyi;

namespace {

const std::vector<Order> kOrderGrid = {Order::zero(),        Order::finite(0.25),
                                       Order::finite(0.5),   Order::finite(0.9),
                                       Order::one(),         Order::finite(1.5),
                                       Order::finite(2.0),   Order::finite(4.0),
                                       Order::infinity()};

}  // namespace

TEST_CASE("uniform entropy is log n at every order") {
  for (int n : {2, 3, 5}) {
    Distribution u = Distribution::uniform(MeasuredAlphabet::counting(n));
    for (const Order& a : kOrderGrid) {
      CHECK(renyi_entropy(u, a) == doctest::Approx(std::log(n)).epsilon(1e-13));
    }
  }
}

TEST_CASE("hand values for (3/4, 1/4)") {
  auto counting = MeasuredAlphabet::counting(2);
  Distribution p(counting, {0.75, 0.25});
  CHECK(renyi_entropy(p, Order::finite(2.0)) == doctest::Approx(std::log(8.0 / 5.0)).epsilon(1e-14));
  CHECK(renyi_entropy(p, Order::infinity()) == doctest::Approx(-std::log(0.75)).epsilon(1e-14));
  CHECK(renyi_entropy(p, Order::zero()) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  // Same masses under gamma = (2,2): the value shifts, exhibiting the
  // reference dependence.
  MeasuredAlphabet doubled({"0", "1"}, {2.0, 2.0});
  Distribution q(doubled, {3.0 / 8.0, 1.0 / 8.0});
  CHECK(renyi_entropy(q, Order::finite(2.0)) == doctest::Approx(std::log(16.0 / 5.0)).epsilon(1e-14));
}

TEST_CASE("renyi probability") {
  auto counting = MeasuredAlphabet::counting(4);
  Distribution u = Distribution::uniform(counting);
  CHECK(renyi_probability(u, Order::finite(2.0)) == doctest::Approx(0.25).epsilon(1e-13));
  Distribution point = Distribution::point_mass(MeasuredAlphabet::counting(3), 1);
  CHECK(renyi_probability(point, Order::finite(2.0)) == doctest::Approx(1.0).epsilon(1e-13));
  Distribution p(MeasuredAlphabet::counting(2), {0.75, 0.25});
  CHECK(renyi_probability(p, Order::finite(2.0)) == doctest::Approx(5.0 / 8.0).epsilon(1e-13));
  CHECK(renyi_probability(p, Order::zero()) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("entropy is nonincreasing in the order") {
  gen::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto space = gen::random_alphabet(rng, gen::uniform_int(rng, 2, 4));
    Distribution d = gen::random_distribution(rng, space, 1.0, t % 3 == 0 ? 0.3 : 0.0);
    double prev = renyi_entropy(d, kOrderGrid.front());
    for (size_t i = 1; i < kOrderGrid.size(); ++i) {
      double h = renyi_entropy(d, kOrderGrid[i]);
      CHECK(h <= prev + 1e-10);
      prev = h;
    }
  }
}

TEST_CASE("conditional entropy: product joint equals marginal entropy") {
  gen::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    auto sx = gen::random_alphabet(rng, 3);
    auto sy = gen::random_alphabet(rng, 2);
    Distribution fx = gen::random_distribution(rng, sx);
    Distribution fy = gen::random_distribution(rng, sy);
    JointDistribution j = JointDistribution::product(fx, fy);
    for (const Order& a : kOrderGrid) {
      CHECK(conditional_renyi_entropy(j, a) == doctest::Approx(renyi_entropy(fx, a)).epsilon(1e-11));
      CHECK(average_conditional_renyi_entropy(j, a) ==
            doctest::Approx(renyi_entropy(fx, a)).epsilon(1e-11));
    }
  }
}

TEST_CASE("diagonal uniform joint has zero conditional entropy") {
  auto sx = MeasuredAlphabet::counting(2, "x");
  auto sy = MeasuredAlphabet::counting(2, "y");
  JointDistribution diag(sx, sy, {{0.5, 0.0}, {0.0, 0.5}});
  for (const Order& a : kOrderGrid) {
    CHECK(conditional_renyi_entropy(diag, a) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(average_conditional_renyi_entropy(diag, a) == doctest::Approx(0.0).epsilon(1e-13));
  }
}

TEST_CASE("BSC joint: Shannon conditional entropy and averaged slices") {
  auto sx = MeasuredAlphabet::counting(2, "x");
  auto sy = MeasuredAlphabet::counting(2, "y");
  JointDistribution j(sx, sy, {{0.45, 0.05}, {0.05, 0.45}});

  // h_1(X|Y) = sum_y g(y) H(X | Y=y); both slices are (0.9, 0.1).
  double hb = -(0.9 * std::log(0.9) + 0.1 * std::log(0.1));
  CHECK(conditional_renyi_entropy(j, Order::one()) == doctest::Approx(hb).epsilon(1e-13));

  // Averaged order-2 slice entropy: both slices give -log(0.82).
  CHECK(average_conditional_renyi_entropy(j, Order::finite(2.0)) ==
        doctest::Approx(-std::log(0.82)).epsilon(1e-13));

  // Order-infinity conditional entropy agrees with a large-order probe.
  double h_inf = conditional_renyi_entropy(j, Order::infinity());
  double h_1000 = conditional_renyi_entropy(j, Order::finite(1000.0));
  CHECK(h_inf == doctest::Approx(-std::log(0.9)).epsilon(1e-12));
  CHECK(std::abs(h_inf - h_1000) < 1e-3);
}

TEST_CASE("conditioning reduces entropy; equality iff independent") {
  gen::Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    JointDistribution j = gen::random_joint(rng, 3, 3, {.sparsity = t % 4 == 0 ? 0.25 : 0.0});
    Distribution fx = j.marginal_x();
    for (const Order& a : kOrderGrid) {
      CHECK(conditional_renyi_entropy(j, a) <= renyi_entropy(fx, a) + 1e-10);
    }
  }
  // Strict gap for the diagonal joint.
  auto sx = MeasuredAlphabet::counting(2, "x");
  auto sy = MeasuredAlphabet::counting(2, "y");
  JointDistribution diag(sx, sy, {{0.5, 0.0}, {0.0, 0.5}});
  CHECK(renyi_entropy(diag.marginal_x(), Order::finite(2.0)) -
            conditional_renyi_entropy(diag, Order::finite(2.0)) >
        0.1);
}

TEST_CASE("conditional entropy is nonincreasing in the order") {
  gen::Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    JointDistribution j =
        gen::random_joint(rng, gen::uniform_int(rng, 2, 4), gen::uniform_int(rng, 2, 4),
                          {.sparsity = t % 5 == 0 ? 0.3 : 0.0});
    double prev = conditional_renyi_entropy(j, kOrderGrid.front());
    for (size_t i = 1; i < kOrderGrid.size(); ++i) {
      double h = conditional_renyi_entropy(j, kOrderGrid[i]);
      CHECK(h <= prev + 1e-10);
      prev = h;
    }
  }
}

TEST_CASE("Jensen ordering of averaged vs Arimoto conditional entropy") {
  gen::Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    JointDistribution j = gen::random_joint(rng, 3, 3);
    for (double a : {1.5, 2.0, 4.0})
      CHECK(conditional_renyi_entropy(j, Order::finite(a)) <=
            average_conditional_renyi_entropy(j, Order::finite(a)) + 1e-10);
    for (double a : {0.25, 0.5, 0.9})
      CHECK(average_conditional_renyi_entropy(j, Order::finite(a)) <=
            conditional_renyi_entropy(j, Order::finite(a)) + 1e-10);
  }
}

TEST_CASE("three-variable monotonicity and Markov chains") {
  gen::Rng rng(21);
  for (int t = 0; t < 25; ++t) {
    gen::ThreeVariableJoints tv = gen::random_three_variable_joint(rng, 3, 2, 2);
    for (const Order& a : kOrderGrid)
      CHECK(conditional_renyi_entropy(tv.x_yz, a) <=
            conditional_renyi_entropy(tv.x_z, a) + 1e-10);
  }
  for (int t = 0; t < 25; ++t) {
    gen::MarkovChainJoints mc = gen::random_markov_chain(rng, 3, 2, 3);
    for (const Order& a : kOrderGrid)
      CHECK(conditional_renyi_entropy(mc.xy, a) <= conditional_renyi_entropy(mc.xz, a) + 1e-10);
  }
}

TEST_CASE("concavity of entropy for orders below one") {
  gen::Rng rng(25);
  for (int t = 0; t < 40; ++t) {
    auto space = gen::random_alphabet(rng, 3);
    int k = gen::uniform_int(rng, 2, 4);
    std::vector<Distribution> parts;
    for (int i = 0; i < k; ++i) parts.push_back(gen::random_distribution(rng, space));
    std::vector<double> weights = gen::dirichlet(rng, k);
    std::vector<double> mix(3, 0.0);
    for (int i = 0; i < k; ++i)
      for (int x = 0; x < 3; ++x) mix[static_cast<size_t>(x)] += weights[static_cast<size_t>(i)] * parts[static_cast<size_t>(i)].density(x);
    Distribution mixture(space, mix);
    for (double a : {0.25, 0.5, 0.9, 1.0}) {
      Order o = a == 1.0 ? Order::one() : Order::finite(a);
      double lhs = renyi_entropy(mixture, o);
      double rhs = 0.0;
      for (int i = 0; i < k; ++i) rhs += weights[static_cast<size_t>(i)] * renyi_entropy(parts[static_cast<size_t>(i)], o);
      CHECK(lhs >= rhs - 1e-10);
    }
  }
}

TEST_CASE("chain rule inequality and its equality witness") {
  gen::Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    JointDistribution j = gen::random_joint(rng, 3, 3, {.sparsity = t % 3 == 0 ? 0.3 : 0.0});
    double h0y = renyi_entropy(j.marginal_y(), Order::zero());
    for (const Order& a : {Order::finite(0.5), Order::one(), Order::finite(2.0), Order::finite(4.0)}) {
      double joint_h = renyi_entropy(j.flatten(), a);
      double cond_h = conditional_renyi_entropy(j, a);
      CHECK(joint_h <= cond_h + h0y + 1e-10);
    }
  }

  // Equality: X independent of Y, Y uniform (constant density) on its support.
  MeasuredAlphabet sy({"u", "v", "w"}, {1.0, 1.0, 2.0});
  Distribution fy(sy, {0.25, 0.25, 0.25});  // constant density, full support
  MeasuredAlphabet sx = MeasuredAlphabet::counting(2, "x");
  Distribution fx(sx, {0.7, 0.3});
  JointDistribution j = JointDistribution::product(fx, fy);
  for (const Order& a : {Order::finite(0.5), Order::finite(2.0)}) {
    double joint_h = renyi_entropy(j.flatten(), a);
    double rhs = conditional_renyi_entropy(j, a) + renyi_entropy(fy, Order::zero());
    CHECK(joint_h == doctest::Approx(rhs).epsilon(1e-11));
  }

  // Partial support: density constant on {u, v} only.
  Distribution fy_partial(sy, {0.5, 0.5, 0.0});
  JointDistribution jp = JointDistribution::product(fx, fy_partial);
  double a2_joint = renyi_entropy(jp.flatten(), Order::finite(2.0));
  double a2_rhs = conditional_renyi_entropy(jp, Order::finite(2.0)) +
                  renyi_entropy(fy_partial, Order::zero());
  CHECK(a2_joint == doctest::Approx(a2_rhs).epsilon(1e-11));
}

TEST_CASE("reference sensitivity bound") {
  gen::Rng rng(33);

  SUBCASE("identical weights give M = 1 and equality") {
    JointDistribution j = gen::random_joint(rng, 2, 2);
    SensitivityBound b = reference_sensitivity_check(j, j.space_x().gamma(), j.space_y().gamma(),
                                                     Order::finite(2.0));
    CHECK(b.log_m == doctest::Approx(0.0));
    CHECK(b.lhs == doctest::Approx(b.rhs).epsilon(1e-12));
  }

  SUBCASE("halving the reference weights shifts by log 2") {
    JointDistribution j = gen::random_joint(rng, 2, 2, {.counting_refs = true});
    std::vector<double> half_x(2, 0.5), half_y(2, 0.5);
    SensitivityBound b = reference_sensitivity_check(j, half_x, half_y, Order::finite(2.0));
    CHECK(b.log_m == doctest::Approx(std::log(2.0)));
    CHECK(b.lhs >= b.rhs - 1e-10);
  }

  SUBCASE("random rescalings satisfy the bound at several orders") {
    for (int t = 0; t < 30; ++t) {
      JointDistribution j = gen::random_joint(rng, 3, 3);
      std::vector<double> mx, my;
      for (int i = 0; i < 3; ++i) mx.push_back(gen::uniform(rng, 0.2, 3.0));
      for (int i = 0; i < 3; ++i) my.push_back(gen::uniform(rng, 0.2, 3.0));
      for (double a : {0.5, 1.0, 2.0, 4.0}) {
        Order o = a == 1.0 ? Order::one() : Order::finite(a);
        SensitivityBound b = reference_sensitivity_check(j, mx, my, o);
        CHECK(b.lhs >= b.rhs - 1e-10);
      }
    }
  }

  SUBCASE("zero weights are rejected") {
    JointDistribution j = gen::random_joint(rng, 2, 2);
    CHECK_THROWS_AS(
        reference_sensitivity_check(j, {0.0, 1.0}, {1.0, 1.0}, Order::finite(2.0)),
        validation_error);
  }
}

TEST_CASE("order limits via the prober") {
  auto sx = MeasuredAlphabet::counting(2, "x");
  auto sy = MeasuredAlphabet::counting(2, "y");
  JointDistribution bsc(sx, sy, {{0.45, 0.05}, {0.05, 0.45}});

  SUBCASE("alpha -> 1 from both sides") {
    auto from_above = [&](double a) { return conditional_renyi_entropy(bsc, Order::finite(a)); };
    double shannon = conditional_renyi_entropy(bsc, Order::one());
    oracle::LimitReport above = oracle::limit_prober(from_above, Order::one(), shannon);
    CHECK(above.terminal_gap <= 1e-3);
    CHECK(above.monotone_toward_limit);
    auto from_below = [&](double a) {
      return conditional_renyi_entropy(bsc, Order::finite(2.0 - a));
    };
    oracle::LimitReport below = oracle::limit_prober(from_below, Order::one(), shannon);
    CHECK(below.terminal_gap <= 1e-3);
  }

  SUBCASE("alpha -> 0 approaches the ess-sup form from below") {
    gen::Rng rng(37);
    for (int t = 0; t < 10; ++t) {
      JointDistribution j = gen::well_conditioned_joint(rng, gen::uniform_int(rng, 2, 3),
                                                        gen::uniform_int(rng, 2, 3));
      double h0 = conditional_renyi_entropy(j, Order::zero());
      auto fn = [&](double a) { return conditional_renyi_entropy(j, Order::finite(a)); };
      oracle::LimitReport rep = oracle::limit_prober(fn, Order::zero(), h0);
      CHECK(rep.terminal_gap <= 1e-3);
      CHECK(rep.monotone_toward_limit);
      for (double v : rep.values) CHECK(v <= h0 + 1e-12);
    }
  }

  SUBCASE("uniform distribution shows a constant profile") {
    Distribution u = Distribution::uniform(MeasuredAlphabet::counting(4));
    auto fn = [&](double a) { return renyi_entropy(u, Order::finite(a)); };
    oracle::LimitReport rep = oracle::limit_prober(fn, Order::zero(), std::log(4.0));
    CHECK(rep.terminal_gap <= 1e-12);
  }
}
