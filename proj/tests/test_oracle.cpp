#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "renyi/generators.hpp"
#include "renyi/oracle.hpp"

using namespace renyi;
using namespace renyi::oracle;

TEST_CASE("simplex grid enumeration") {
  SUBCASE("counts follow the stars-and-bars formula") {
    CHECK(SimplexGrid(2, 0.01).point_count() == 101);
    CHECK(SimplexGrid(3, 0.1).point_count() == 66);
    CHECK(SimplexGrid(4, 0.25).point_count() == 35);
  }

  SUBCASE("every point sums to one essentially exactly") {
    SimplexGrid grid(3, 0.05);
    std::uint64_t seen = 0;
    grid.for_each([&](const std::vector<double>& p) {
      ++seen;
      double s = 0.0;
      for (double v : p) {
        CHECK(v >= 0.0);
        s += v;
      }
      CHECK(std::abs(s - 1.0) <= 1e-15);
    });
    CHECK(seen == grid.point_count());
  }

  SUBCASE("guard refuses oversized enumerations with a size estimate") {
    gen::Rng rng(1);
    JointDistribution j = gen::random_joint(rng, 4, 4);
    try {
      grid_minimize_divergence(MiObjective::LapidothPfister, j, Order::finite(2.0), 1e-4);
      FAIL("guard did not trigger");
    } catch (const validation_error& e) {
      CHECK(std::string(e.what()).find("points") != std::string::npos);
    }
  }
}

TEST_CASE("refining the step never worsens the found optimum") {
  gen::Rng rng(2);
  for (int t = 0; t < 5; ++t) {
    JointDistribution j = gen::random_joint(rng, 2, 3);
    for (double a : {0.7, 2.0}) {
      Order o = Order::finite(a);
      for (auto obj : {MiObjective::Sibson, MiObjective::Augustin}) {
        double coarse = grid_minimize_divergence(obj, j, o, 1e-2).value;
        double fine = grid_minimize_divergence(obj, j, o, 1e-3).value;
        CHECK(fine <= coarse + 1e-12);
      }
      double coarse = grid_minimize_divergence(MiObjective::LapidothPfister, j, o, 2e-2).value;
      double fine = grid_minimize_divergence(MiObjective::LapidothPfister, j, o, 1e-2).value;
      CHECK(fine <= coarse + 1e-12);
    }
  }
}

TEST_CASE("lp oracle on a product joint finds (almost) zero near the marginals") {
  gen::Rng rng(3);
  Distribution fx = gen::random_distribution(rng, gen::random_alphabet(rng, 2));
  Distribution fy = gen::random_distribution(rng, gen::random_alphabet(rng, 2));
  JointDistribution j = JointDistribution::product(fx, fy);
  GridMinResult r = grid_minimize_divergence(MiObjective::LapidothPfister, j, Order::finite(2.0), 1e-2);
  CHECK(r.value <= 1e-3);
  CHECK(std::abs(r.argmin_mu[0] - fx.mass(0)) <= 1e-2 + 1e-12);
  CHECK(std::abs(r.argmin_nu[0] - fy.mass(0)) <= 1e-2 + 1e-12);
}

TEST_CASE("capacity sweeps") {
  SolverConfig inner;

  SUBCASE("constant channel maximizes to zero") {
    Channel c = Channel::from_row_densities(MeasuredAlphabet::counting(2, "in"),
                                            MeasuredAlphabet::counting(2, "out"),
                                            {{0.6, 0.4}, {0.6, 0.4}});
    GridMaxResult r = grid_maximize_capacity(c, CapacityFunctional::SibsonXY, Order::finite(2.0),
                                             1e-3, inner);
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-9));
  }

  SUBCASE("identity channel peaks at the uniform input") {
    Channel id = Channel::from_row_densities(MeasuredAlphabet::counting(2, "in"),
                                             MeasuredAlphabet::counting(2, "out"),
                                             {{1.0, 0.0}, {0.0, 1.0}});
    GridMaxResult r = grid_maximize_capacity(id, CapacityFunctional::SibsonXY, Order::finite(2.0),
                                             1e-3, inner);
    CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-6));
    CHECK(r.argmax[0] == doctest::Approx(0.5).epsilon(1e-3));
  }
}

TEST_CASE("limit prober reports direction and terminal gap") {
  auto constant = [](double) { return 1.5; };
  LimitReport rep = limit_prober(constant, Order::zero(), 1.5);
  CHECK(rep.terminal_gap == doctest::Approx(0.0));
  CHECK(rep.monotone_toward_limit);

  auto drift = [](double a) { return 2.0 + a; };  // approaches 2 from above as a -> 0
  LimitReport rep2 = limit_prober(drift, Order::zero(), 2.0);
  CHECK(rep2.monotone_toward_limit);
  CHECK(rep2.terminal_gap == doctest::Approx(1e-3));

  auto wobble = [](double a) { return 2.0 + (a == 1e-2 ? -1.0 : 1.0) * a; };
  CHECK_FALSE(limit_prober(wobble, Order::zero(), 2.0).monotone_toward_limit);

  CHECK_THROWS_AS(limit_prober(constant, Order::finite(2.0), 0.0), unsupported_order_error);
}

TEST_CASE("blahut-arimoto reference values") {
  Channel id = Channel::from_row_densities(MeasuredAlphabet::counting(2, "in"),
                                           MeasuredAlphabet::counting(2, "out"),
                                           {{1.0, 0.0}, {0.0, 1.0}});
  CHECK(shannon_capacity_blahut_arimoto(id) == doctest::Approx(std::log(2.0)).epsilon(1e-9));

  // BSC(p) capacity is log 2 - H_b(p).
  double p = 0.25;
  double hb = -(p * std::log(p) + (1 - p) * std::log(1 - p));
  CHECK(shannon_capacity_blahut_arimoto(Channel::binary_symmetric(p)) ==
        doctest::Approx(std::log(2.0) - hb).epsilon(1e-9));
}
