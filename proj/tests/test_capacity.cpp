#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "renyi/capacity.hpp"
#include "renyi/divergence.hpp"
#include "renyi/generators.hpp"
#include "renyi/oracle.hpp"

using namespace renyi;

namespace {

Channel identity2() {
  return Channel::from_row_densities(MeasuredAlphabet::counting(2, "in"),
                                     MeasuredAlphabet::counting(2, "out"),
                                     {{1.0, 0.0}, {0.0, 1.0}});
}

Channel constant_2x3() {
  return Channel::from_row_densities(MeasuredAlphabet::counting(2, "in"),
                                     MeasuredAlphabet::counting(3, "out"),
                                     {{0.5, 0.3, 0.2}, {0.5, 0.3, 0.2}});
}

double max_row_divergence(const Channel& ch, const Distribution& q, Order o) {
  double m = -1e300;
  for (int x = 0; x < ch.num_inputs(); ++x)
    m = std::max(m, renyi_divergence(ch.row(x), q, o));
  return m;
}

}  // namespace

TEST_CASE("radius anchors") {
  SolverConfig cfg;

  SUBCASE("identical rows have radius zero with center at the row") {
    Channel c = constant_2x3();
    for (double a : {0.5, 1.0, 2.0}) {
      Order o = a == 1.0 ? Order::one() : Order::finite(a);
      CapacityResult r = renyi_radius(c, o, cfg);
      CHECK(r.value == doctest::Approx(0.0).epsilon(1e-9));
      CHECK(r.center->density(0) == doctest::Approx(0.5).epsilon(1e-4));
    }
  }

  SUBCASE("BSC(1/4) at order 2 has radius log(5/4) with uniform center") {
    CapacityResult r = renyi_radius(Channel::binary_symmetric(0.25), Order::finite(2.0), cfg);
    CHECK(r.value == doctest::Approx(std::log(1.25)).epsilon(1e-5));
    CHECK(r.center->density(0) == doctest::Approx(0.5).epsilon(1e-3));
  }

  SUBCASE("identity channel has radius log 2 at every order") {
    Channel id = identity2();
    for (double a : {0.5, 1.0, 2.0, 4.0}) {
      Order o = a == 1.0 ? Order::one() : Order::finite(a);
      CapacityResult r = renyi_radius(id, o, cfg);
      CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-5));
    }
    CapacityResult rinf = renyi_radius(id, Order::infinity(), cfg);
    CHECK(rinf.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }

  SUBCASE("order zero is rejected") {
    CHECK_THROWS_AS(renyi_radius(identity2(), Order::zero(), SolverConfig{}), unsupported_order_error);
  }
}

TEST_CASE("radius center optimality and perturbation stability") {
  gen::Rng rng(31);
  SolverConfig cfg;
  for (int t = 0; t < 6; ++t) {
    Channel c = gen::random_channel(rng, 3, 3);
    for (double a : {1.0, 2.0}) {
      Order o = a == 1.0 ? Order::one() : Order::finite(a);
      CapacityResult r = renyi_radius(c, o, cfg);
      double base = max_row_divergence(c, *r.center, o);
      CHECK(base <= r.value + 1e-9);
      // Random projected perturbations never improve the max noticeably.
      std::vector<double> q = r.center->masses();
      for (int s = 0; s < 20; ++s) {
        std::vector<double> qq = q;
        for (double& v : qq) v = std::max(0.0, v + gen::uniform(rng, -1e-3, 1e-3));
        double tot = 0.0;
        for (double v : qq) tot += v;
        if (tot <= 0.0) continue;
        for (double& v : qq) v /= tot;
        Distribution qd = Distribution::from_masses(c.output_space(), qq);
        CHECK(max_row_divergence(c, qd, o) >= base - 1e-6);
      }
    }
  }
}

TEST_CASE("radius is nondecreasing in the order") {
  gen::Rng rng(32);
  SolverConfig cfg;
  for (int t = 0; t < 5; ++t) {
    Channel c = gen::random_channel(rng, 3, 2);
    double prev = -1e300;
    for (double a : {0.5, 0.9, 1.0, 1.5, 2.0, 4.0}) {
      Order o = a == 1.0 ? Order::one() : Order::finite(a);
      double v = renyi_radius(c, o, cfg).value;
      CHECK(v >= prev - 1e-8);
      prev = v;
    }
    CHECK(renyi_radius(c, Order::infinity(), cfg).value >= prev - 1e-8);
  }
}

TEST_CASE("capacity anchors") {
  SolverConfig cfg;

  SUBCASE("constant channel has zero capacity under every functional") {
    Channel c = constant_2x3();
    for (auto f : {CapacityFunctional::SibsonXY, CapacityFunctional::SibsonYX,
                   CapacityFunctional::AugustinXY, CapacityFunctional::AugustinYX,
                   CapacityFunctional::LapidothPfister}) {
      CHECK(capacity(c, f, Order::finite(2.0), cfg).value == doctest::Approx(0.0).epsilon(1e-8));
    }
  }

  SUBCASE("identity channel: I capacity log 2 at uniform input, gap vs radius small") {
    CapacityResult r = capacity(identity2(), CapacityFunctional::SibsonXY, Order::finite(2.0), cfg);
    CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-6));
    CHECK(r.argmax_input.density(0) == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(r.certificate_gap <= 1e-4);
  }

  SUBCASE("BSC(1/4) J capacity matches the radius at order 2") {
    Channel c = Channel::binary_symmetric(0.25);
    CapacityResult j = capacity(c, CapacityFunctional::LapidothPfister, Order::finite(2.0), cfg);
    CHECK(j.value == doctest::Approx(std::log(1.25)).epsilon(1e-4));
  }

  SUBCASE("order infinity allowed for I only") {
    Channel c = Channel::binary_symmetric(0.25);
    CapacityResult r = capacity(c, CapacityFunctional::SibsonXY, Order::infinity(), cfg);
    CHECK(r.value == doctest::Approx(std::log(1.5)).epsilon(1e-9));  // log(0.75+0.75)
    CHECK_THROWS_AS(capacity(c, CapacityFunctional::LapidothPfister, Order::infinity(), cfg),
                    unsupported_order_error);
  }
}

TEST_CASE("weak duality: I(P, W) <= radius for every sampled input") {
  gen::Rng rng(33);
  SolverConfig cfg;
  for (int t = 0; t < 5; ++t) {
    Channel c = gen::random_channel(rng, 3, 3);
    for (double a : {1.0, 2.0, 4.0}) {
      Order o = a == 1.0 ? Order::one() : Order::finite(a);
      double s = renyi_radius(c, o, cfg).value;
      for (int k = 0; k < 20; ++k) {
        Distribution p = Distribution::from_masses(c.input_space(), gen::dirichlet(rng, 3));
        double i = sibson_mi(make_joint_from_input_and_channel(p, c), o).value;
        CHECK(i <= s + 1e-8);
      }
      CapacityResult ci = capacity(c, CapacityFunctional::SibsonXY, o, cfg);
      CHECK(ci.value <= s + 1e-6);
    }
  }
}

TEST_CASE("capacity equality web at alpha >= 1") {
  SolverConfig cfg;

  SUBCASE("symmetric channel: everything coincides") {
    CapacityEqualitiesReport rep =
        capacity_equalities_check(Channel::binary_symmetric(0.25), Order::finite(2.0), cfg);
    CHECK(rep.conclusive);
    CHECK(rep.chain_holds);
    CHECK(rep.max_middle_spread <= 1e-4);
    CHECK(rep.c_i_xy == doctest::Approx(std::log(1.25)).epsilon(1e-4));
    CHECK(rep.c_k_yx <= rep.radius + 1e-4);
    CHECK(rep.c_i_yx >= rep.radius - 1e-4);
  }

  SUBCASE("random 3x3 channels at orders 1 and 2") {
    gen::Rng rng(34);
    for (int t = 0; t < 3; ++t) {
      Channel c = gen::random_channel(rng, 3, 3);
      for (double a : {1.0, 2.0}) {
        Order o = a == 1.0 ? Order::one() : Order::finite(a);
        CapacityEqualitiesReport rep = capacity_equalities_check(c, o, cfg);
        CHECK(rep.chain_holds);
        CHECK(rep.max_middle_spread <= 1e-4);
      }
    }
  }

  SUBCASE("alpha below one is refused") {
    CHECK_THROWS_AS(capacity_equalities_check(identity2(), Order::finite(0.8), SolverConfig{}),
                    unsupported_order_error);
  }
}

TEST_CASE("alpha = 1: all capacities collapse to the Shannon capacity") {
  gen::Rng rng(35);
  SolverConfig cfg;
  for (int t = 0; t < 3; ++t) {
    Channel c = gen::random_channel(rng, 3, 3);
    double shannon = oracle::shannon_capacity_blahut_arimoto(c, 1e-12);
    CapacityEqualitiesReport rep = capacity_equalities_check(c, Order::one(), cfg);
    CHECK(rep.c_i_xy == doctest::Approx(shannon).epsilon(1e-5));
    CHECK(rep.c_j == doctest::Approx(shannon).epsilon(1e-5));
    CHECK(rep.c_k_xy == doctest::Approx(shannon).epsilon(1e-5));
    CHECK(rep.radius == doctest::Approx(shannon).epsilon(1e-5));
  }
}

TEST_CASE("lapidoth-pfister capacity equals the radius for alpha in [1/2, 1)") {
  SolverConfig cfg;

  SUBCASE("identity channel at order 0.5") {
    LpRadiusReport rep = lp_capacity_radius_check(identity2(), Order::finite(0.5), cfg);
    CHECK(rep.holds);
    CHECK(rep.c_j == doctest::Approx(std::log(2.0)).epsilon(1e-4));
    CHECK(rep.radius == doctest::Approx(std::log(2.0)).epsilon(1e-4));
    CHECK(rep.inner_reduction_slack <= 1e-9);
  }

  SUBCASE("BSC(1/4) at order 0.7") {
    LpRadiusReport rep =
        lp_capacity_radius_check(Channel::binary_symmetric(0.25), Order::finite(0.7), cfg);
    CHECK(rep.holds);
    CHECK(rep.gap <= 1e-4);
  }

  SUBCASE("constant channel: both sides vanish") {
    LpRadiusReport rep = lp_capacity_radius_check(constant_2x3(), Order::finite(0.9), cfg);
    CHECK(rep.c_j == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(rep.radius == doctest::Approx(0.0).epsilon(1e-6));
  }

  SUBCASE("random 2x3 channels across the allowed orders") {
    gen::Rng rng(36);
    for (int t = 0; t < 3; ++t) {
      Channel c = gen::random_channel(rng, 2, 3);
      for (double a : {0.5, 0.7, 0.9}) {
        LpRadiusReport rep = lp_capacity_radius_check(c, Order::finite(a), cfg);
        CHECK(rep.gap <= 1e-4);
      }
    }
  }

  SUBCASE("orders outside [1/2, 1) are refused") {
    CHECK_THROWS_AS(lp_capacity_radius_check(identity2(), Order::finite(0.4), SolverConfig{}),
                    unsupported_order_error);
    CHECK_THROWS_AS(lp_capacity_radius_check(identity2(), Order::finite(1.5), SolverConfig{}),
                    unsupported_order_error);
  }
}

TEST_CASE("two-input capacities agree with the 1-D sweep oracle") {
  gen::Rng rng(37);
  SolverConfig cfg;
  SolverConfig inner = cfg;
  for (int t = 0; t < 2; ++t) {
    Channel c = gen::random_channel(rng, 2, 3);
    for (double a : {0.7, 2.0}) {
      Order o = Order::finite(a);
      for (auto f : {CapacityFunctional::SibsonXY, CapacityFunctional::AugustinXY,
                     CapacityFunctional::LapidothPfister}) {
        CapacityResult solver = capacity(c, f, o, cfg);
        oracle::GridMaxResult sweep = oracle::grid_maximize_capacity(c, f, o, 1e-4, inner);
        CHECK(solver.value == doctest::Approx(sweep.value).epsilon(1e-4));
      }
    }
  }
}
