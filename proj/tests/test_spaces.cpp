#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "renyi/generators.hpp"
#include "renyi/spaces.hpp"

using namespace renyi;

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(MeasuredAlphabet({}, {}), validation_error);
  CHECK_THROWS_AS(MeasuredAlphabet({"a", "a"}, {1.0, 1.0}), validation_error);
  CHECK_THROWS_AS(MeasuredAlphabet({"a", "b"}, {1.0}), structural_error);
  CHECK_THROWS_AS(MeasuredAlphabet({"a"}, {0.0}), validation_error);
  CHECK_THROWS_AS(MeasuredAlphabet({"a"}, {-1.0}), validation_error);
  CHECK_THROWS_AS(MeasuredAlphabet({"a"}, {std::nan("")}), validation_error);
  CHECK_THROWS_AS(MeasuredAlphabet({"a"}, {std::numeric_limits<double>::infinity()}),
                  validation_error);
  MeasuredAlphabet a = MeasuredAlphabet::counting(3);
  CHECK(a.size() == 3);
  CHECK(a.total_mass() == doctest::Approx(3.0));
}

TEST_CASE("distribution validation rejects bad densities") {
  auto space = MeasuredAlphabet::counting(2);
  CHECK_THROWS_AS(Distribution(space, {0.5, 0.5 + 1e-9}), validation_error);  // off normalization
  CHECK_THROWS_AS(Distribution(space, {-0.1, 1.1}), validation_error);
  CHECK_THROWS_AS(Distribution(space, {std::nan(""), 1.0}), validation_error);
  CHECK_THROWS_AS(Distribution(space, {0.0, 0.0}), validation_error);  // empty support
  CHECK_NOTHROW(Distribution(space, {0.25, 0.75}));

  // Densities are w.r.t. gamma: same masses, different weights.
  MeasuredAlphabet weighted({"a", "b"}, {2.0, 2.0});
  Distribution d(weighted, {3.0 / 8.0, 1.0 / 8.0});
  CHECK(d.mass(0) == doctest::Approx(0.75));
  CHECK(d.mass(1) == doctest::Approx(0.25));
}

TEST_CASE("joint from input and channel: BSC example") {
  auto input_space = MeasuredAlphabet::counting(2, "in");
  Distribution input(input_space, {0.75, 0.25});
  Channel bsc = Channel::binary_symmetric(0.1);
  JointDistribution j = make_joint_from_input_and_channel(input, bsc);
  CHECK(j.f(0, 0) == doctest::Approx(0.675).epsilon(1e-14));
  CHECK(j.f(0, 1) == doctest::Approx(0.075).epsilon(1e-14));
  CHECK(j.f(1, 0) == doctest::Approx(0.025).epsilon(1e-14));
  CHECK(j.f(1, 1) == doctest::Approx(0.225).epsilon(1e-14));

  // Marginal recovers the input.
  Distribution mx = j.marginal_x();
  CHECK(mx.density(0) == doctest::Approx(0.75).epsilon(1e-13));
  CHECK(mx.density(1) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("make_joint rejects space mismatch") {
  auto other = MeasuredAlphabet::counting(2, "other");
  Distribution input(other, {0.5, 0.5});
  Channel bsc = Channel::binary_symmetric(0.1);
  CHECK_THROWS_AS(make_joint_from_input_and_channel(input, bsc), structural_error);
}

TEST_CASE("identity channel with uniform input") {
  auto space = MeasuredAlphabet::counting(2, "s");
  Channel id = Channel::from_row_densities(space, MeasuredAlphabet::counting(2, "t"),
                                           {{1.0, 0.0}, {0.0, 1.0}});
  JointDistribution j = make_joint_from_input_and_channel(Distribution::uniform(space), id);
  CHECK(j.f(0, 0) == doctest::Approx(0.5));
  CHECK(j.f(0, 1) == 0.0);
  Distribution my = j.marginal_y();
  CHECK(my.density(0) == doctest::Approx(0.5));
}

TEST_CASE("conditional slices") {
  auto sx = MeasuredAlphabet::counting(2, "x");
  auto sy = MeasuredAlphabet::counting(2, "y");

  SUBCASE("product joint returns the X marginal") {
    Distribution fx(sx, {0.3, 0.7}), fy(sy, {0.6, 0.4});
    JointDistribution j = JointDistribution::product(fx, fy);
    for (int y = 0; y < 2; ++y) {
      Distribution s = conditional_slice(j, y);
      CHECK(s.density(0) == doctest::Approx(0.3).epsilon(1e-14));
      CHECK(s.density(1) == doctest::Approx(0.7).epsilon(1e-14));
    }
  }

  SUBCASE("diagonal joint gives point masses") {
    JointDistribution j(sx, sy, {{0.5, 0.0}, {0.0, 0.5}});
    Distribution s0 = conditional_slice(j, 0);
    CHECK(s0.density(0) == doctest::Approx(1.0));
    CHECK(s0.density(1) == 0.0);
  }

  SUBCASE("BSC joint, y=0") {
    Distribution input(sx, {0.75, 0.25});
    JointDistribution j(sx, sy, {{0.675, 0.075}, {0.025, 0.225}});
    Distribution s = conditional_slice(j, 0);
    CHECK(s.density(0) == doctest::Approx(0.675 / 0.7));
    CHECK(s.density(1) == doctest::Approx(0.025 / 0.7));
  }

  SUBCASE("slicing at a null y rejects") {
    JointDistribution j(sx, sy, {{0.5, 0.0}, {0.5, 0.0}});
    CHECK_THROWS_AS(conditional_slice(j, 1), out_of_support_error);
  }
}

TEST_CASE("swap is an exact involution") {
  gen::Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    JointDistribution j = gen::random_joint(rng, gen::uniform_int(rng, 2, 4),
                                            gen::uniform_int(rng, 2, 4));
    CHECK(swap(swap(j)) == j);
  }
  // Product swaps to the reversed product; diagonal is symmetric.
  auto sx = MeasuredAlphabet::counting(2, "x");
  auto sy = MeasuredAlphabet::counting(2, "y");
  Distribution fx(sx, {0.3, 0.7}), fy(sy, {0.6, 0.4});
  CHECK(swap(JointDistribution::product(fx, fy)) == JointDistribution::product(fy, fx));
  JointDistribution diag(sx, sx == sy ? sy : MeasuredAlphabet::counting(2, "y"),
                         {{0.5, 0.0}, {0.0, 0.5}});
  JointDistribution swapped = swap(diag);
  CHECK(swapped.f(0, 0) == 0.5);
  CHECK(swapped.f(1, 0) == 0.0);
}

TEST_CASE("round trip: joint -> (input, channel) recovers both on the support") {
  gen::Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    auto sx = gen::random_alphabet(rng, 3);
    Distribution input = gen::random_distribution(rng, sx);
    Channel w = gen::random_channel(rng, 3, 2);
    Channel on_sx = Channel::from_row_densities(
        sx, w.output_space(), {w.row(0).density(), w.row(1).density(), w.row(2).density()});
    JointDistribution j = make_joint_from_input_and_channel(input, on_sx);

    Distribution mx = j.marginal_x();
    for (int i = 0; i < 3; ++i) CHECK(mx.density(i) == doctest::Approx(input.density(i)).epsilon(1e-12));

    InputAndChannel parts = decompose_joint(j);
    for (int i = 0; i < parts.input.size(); ++i) {
      for (int y = 0; y < 2; ++y)
        CHECK(parts.channel.row(i).density(y) ==
              doctest::Approx(on_sx.row(i).density(y)).epsilon(1e-12));
    }
  }
}

TEST_CASE("flatten matches product alphabet layout") {
  auto sx = MeasuredAlphabet({"a", "b"}, {1.0, 2.0});
  auto sy = MeasuredAlphabet({"u", "v"}, {0.5, 1.0});
  JointDistribution j = JointDistribution::from_masses(sx, sy, {{0.1, 0.2}, {0.3, 0.4}});
  Distribution flat = j.flatten();
  CHECK(flat.space().label(1) == "a|v");
  CHECK(flat.space().gamma(3) == doctest::Approx(2.0));
  CHECK(flat.mass(2) == doctest::Approx(0.3));
}
