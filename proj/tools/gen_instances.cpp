// Regenerates data/instances.json (the frozen desk-scale instance set used
// by the oracle-equivalence checks) and the example inputs under
// data/examples/. The outputs are committed; rerun only when the set itself
// is meant to change.

#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "renyi/generators.hpp"
#include "renyi/json_io.hpp"
#include "renyi/spaces.hpp"

using namespace renyi;
using nlohmann::json;

namespace {

json mi_check(const std::string& objective, const std::string& alpha, double step) {
  return json{{"objective", objective}, {"alpha", alpha}, {"step", step}};
}

json cap_check(const std::string& functional, const std::string& alpha, double step) {
  return json{{"functional", functional}, {"alpha", alpha}, {"step", step}};
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";

  json instances = json::array();

  // --- named joints -------------------------------------------------------
  {
    Distribution fx(MeasuredAlphabet::counting(2, "x"), {0.75, 0.25});
    Distribution fy(MeasuredAlphabet::counting(2, "y"), {0.6, 0.4});
    json inst{{"name", "product_2x2"},
              {"joint", io::to_json(JointDistribution::product(fx, fy))},
              {"mi_checks", json::array({mi_check("sibson", "2", 1e-3),
                                         mi_check("augustin", "0.7", 1e-3),
                                         mi_check("lp", "2", 1e-3)})}};
    instances.push_back(inst);
  }
  {
    MeasuredAlphabet sx({"a", "b"}, {2.0, 1.0});
    Distribution fx(sx, {0.25, 0.5});  // masses (0.5, 0.5)
    Distribution fy(MeasuredAlphabet::counting(3, "y"), {0.5, 0.3, 0.2});
    json inst{{"name", "product_2x3_weighted"},
              {"joint", io::to_json(JointDistribution::product(fx, fy))},
              {"mi_checks", json::array({mi_check("sibson", "0.5", 1e-3),
                                         mi_check("sibson", "2", 1e-3),
                                         mi_check("augustin", "2", 1e-3)})}};
    instances.push_back(inst);
  }
  {
    JointDistribution diag(MeasuredAlphabet::counting(2, "x"), MeasuredAlphabet::counting(2, "y"),
                           {{0.5, 0.0}, {0.0, 0.5}});
    json inst{{"name", "diagonal_2x2"},
              {"joint", io::to_json(diag)},
              {"mi_checks", json::array({mi_check("sibson", "2", 1e-3),
                                         mi_check("augustin", "2", 1e-3),
                                         mi_check("lp", "0.7", 1e-3)})}};
    instances.push_back(inst);
  }
  {
    Distribution uniform(MeasuredAlphabet::counting(2, "x"), {0.5, 0.5});
    JointDistribution j =
        make_joint_from_input_and_channel(uniform, Channel::binary_symmetric(0.1));
    json inst{{"name", "bsc01_uniform"},
              {"joint", io::to_json(j)},
              {"mi_checks", json::array({mi_check("sibson", "2", 1e-3),
                                         mi_check("augustin", "2", 1e-3),
                                         mi_check("lp", "2", 1e-3)})}};
    instances.push_back(inst);
  }
  {
    Distribution input(MeasuredAlphabet::counting(2, "in"), {0.75, 0.25});
    JointDistribution j =
        make_joint_from_input_and_channel(input, Channel::binary_symmetric(0.25));
    json inst{{"name", "bsc025_input075"},
              {"joint", io::to_json(j)},
              {"mi_checks", json::array({mi_check("sibson", "0.5", 1e-3),
                                         mi_check("augustin", "0.5", 1e-3),
                                         mi_check("lp", "2", 1e-3)})}};
    instances.push_back(inst);
  }

  // --- random joints, seeds 0..4 ------------------------------------------
  auto random_joint_instance = [&](std::uint64_t seed, int nx, int ny, json checks) {
    gen::Rng rng(seed);
    JointDistribution j = gen::random_joint(rng, nx, ny);
    return json{{"name", "random_joint_" + std::to_string(nx) + "x" + std::to_string(ny) +
                             "_seed" + std::to_string(seed)},
                {"joint", io::to_json(j)},
                {"mi_checks", std::move(checks)}};
  };
  instances.push_back(random_joint_instance(
      0, 2, 2,
      json::array({mi_check("sibson", "0.7", 1e-3), mi_check("augustin", "0.7", 1e-3),
                   mi_check("lp", "0.7", 1e-3)})));
  instances.push_back(random_joint_instance(
      1, 2, 2,
      json::array({mi_check("sibson", "2", 1e-3), mi_check("augustin", "2", 1e-3),
                   mi_check("lp", "2", 1e-3)})));
  instances.push_back(random_joint_instance(
      2, 2, 3,
      json::array({mi_check("sibson", "0.5", 1e-3), mi_check("augustin", "2", 1e-3),
                   mi_check("lp", "0.7", 1e-3)})));
  instances.push_back(random_joint_instance(
      3, 3, 2,
      json::array({mi_check("sibson", "2", 1e-3), mi_check("augustin", "2", 1e-3),
                   mi_check("lp", "2", 2e-3)})));
  instances.push_back(random_joint_instance(
      4, 3, 3,
      json::array({mi_check("sibson", "2", 1e-3), mi_check("augustin", "0.7", 1e-3)})));

  // --- named channels -------------------------------------------------------
  {
    Channel id = Channel::from_row_densities(MeasuredAlphabet::counting(2, "in"),
                                             MeasuredAlphabet::counting(2, "out"),
                                             {{1.0, 0.0}, {0.0, 1.0}});
    json inst{{"name", "identity2_channel"},
              {"channel", io::to_json(id)},
              {"capacity_checks", json::array({cap_check("I", "2", 1e-4),
                                               cap_check("J", "0.5", 1e-4)})}};
    instances.push_back(inst);
  }
  {
    json inst{{"name", "bsc025_channel"},
              {"channel", io::to_json(Channel::binary_symmetric(0.25))},
              {"capacity_checks",
               json::array({cap_check("I", "2", 1e-4), cap_check("K", "2", 1e-4),
                            cap_check("J", "0.7", 1e-4)})}};
    instances.push_back(inst);
  }
  {
    Channel constant = Channel::from_row_densities(MeasuredAlphabet::counting(2, "in"),
                                                   MeasuredAlphabet::counting(3, "out"),
                                                   {{0.5, 0.3, 0.2}, {0.5, 0.3, 0.2}});
    json inst{{"name", "constant_2x3_channel"},
              {"channel", io::to_json(constant)},
              {"capacity_checks", json::array({cap_check("I", "2", 1e-4)})}};
    instances.push_back(inst);
  }

  // --- random channels, seeds 5..7 -----------------------------------------
  auto random_channel_instance = [&](std::uint64_t seed, int nin, int nout, json checks) {
    gen::Rng rng(seed);
    Channel c = gen::random_channel(rng, nin, nout);
    return json{{"name", "random_channel_" + std::to_string(nin) + "x" + std::to_string(nout) +
                             "_seed" + std::to_string(seed)},
                {"channel", io::to_json(c)},
                {"capacity_checks", std::move(checks)}};
  };
  instances.push_back(random_channel_instance(
      5, 2, 2,
      json::array({cap_check("I", "2", 1e-4), cap_check("K", "2", 1e-4),
                   cap_check("J", "2", 1e-4)})));
  instances.push_back(random_channel_instance(
      6, 2, 3, json::array({cap_check("I", "2", 1e-4), cap_check("J", "0.9", 1e-4)})));
  instances.push_back(random_channel_instance(
      7, 3, 3, json::array({cap_check("I", "2", 5e-3), cap_check("K", "2", 5e-3)})));

  json root{{"description",
             "Frozen desk-scale instances for the oracle-equivalence checks. Regenerate with "
             "tools/gen_instances."},
            {"instances", instances}};
  write_file(dir + "/instances.json", root);

  // --- example inputs for the CLI ------------------------------------------
  write_file(dir + "/examples/uniform4.json",
             io::to_json(Distribution::uniform(MeasuredAlphabet::counting(4))));
  write_file(dir + "/examples/skewed2.json",
             io::to_json(Distribution(MeasuredAlphabet::counting(2), {0.75, 0.25})));
  write_file(dir + "/examples/diagonal_joint.json",
             io::to_json(JointDistribution(MeasuredAlphabet::counting(2, "x"),
                                           MeasuredAlphabet::counting(2, "y"),
                                           {{0.5, 0.0}, {0.0, 0.5}})));
  {
    Distribution uniform(MeasuredAlphabet::counting(2, "in"), {0.5, 0.5});
    write_file(dir + "/examples/bsc025_joint.json",
               io::to_json(make_joint_from_input_and_channel(uniform,
                                                             Channel::binary_symmetric(0.25))));
  }
  write_file(dir + "/examples/bsc025_channel.json", io::to_json(Channel::binary_symmetric(0.25)));
  {
    Channel id = Channel::from_row_densities(MeasuredAlphabet::counting(2, "in"),
                                             MeasuredAlphabet::counting(2, "out"),
                                             {{1.0, 0.0}, {0.0, 1.0}});
    write_file(dir + "/examples/identity2_channel.json", io::to_json(id));
  }

  std::cout << "wrote " << instances.size() << " instances under " << dir << "\n";
  return 0;
}
