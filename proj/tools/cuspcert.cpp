#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuspcert/error.hpp"
#include "cuspcert/replay.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cuspcert::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const cuspcert::report::Json& j) {
  std::cout << cuspcert::report::serialize(j);
  return cuspcert::kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite certificates for congruence covers of a cusped manifold"};
  app.require_subcommand(1);

  std::string spec_path, config_path, out_path;
  std::uint64_t prime = 0, root = 0, q = 0, p_max = 100'000;
  std::size_t index = 0, subgroup_order = 0, peripheral_order = 0;
  std::vector<int> f_set{1, 2, 4, 5, 7, 8};

  auto* split = app.add_subcommand("split", "Factor p in the trace field");
  split->add_option("--spec", spec_path)->required();
  split->add_option("--prime", prime)->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce generators modulo a degree-one prime");
  auto* prep = app.add_subcommand("prep", "Certify a p-rep");
  for (auto* sub : {reduce, prep}) {
    sub->add_option("--spec", spec_path)->required();
    sub->add_option("--prime", prime)->required();
    sub->add_option("--root", root)->required();
  }

  auto* gassmann = app.add_subcommand("gassmann", "Search PSL(2,q) for almost conjugate pairs");
  gassmann->add_option("--q", q)->required();
  gassmann->add_option("--index", index)->required();

  auto* cusps = app.add_subcommand("cusps", "Double-coset cusp decomposition in PSL(2,q)");
  cusps->add_option("--q", q)->required();
  cusps->add_option("--subgroup-order", subgroup_order)->required();
  cusps->add_option("--peripheral-order", peripheral_order)->required();

  auto* sweep = app.add_subcommand("sweep", "Sweep primes 5 mod 168");
  sweep->add_option("--p-max", p_max);
  sweep->add_option("--f-set", f_set)->delimiter(',');

  auto* replay = app.add_subcommand("replay", "Replay every certificate and write a report");
  replay->add_option("--spec", spec_path)->required();
  replay->add_option("--config", config_path);
  replay->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace cuspcert;
    if (*split) return emit(run_split(load_spec(spec_path), prime));
    if (*reduce) return emit(run_reduce(load_spec(spec_path), prime, root));
    if (*prep) {
      const auto j = run_prep(load_spec(spec_path), prime, root);
      emit(j);
      return j.at("overall").get<bool>() ? kExitPass : kExitMismatch;
    }
    if (*gassmann) return emit(run_gassmann(q, index));
    if (*cusps) return emit(run_cusps(q, subgroup_order, peripheral_order));
    if (*sweep) {
      const auto j = run_sweep(p_max, f_set);
      emit(j);
      return j.at("all_pass").get<bool>() ? kExitPass : kExitMismatch;
    }
    const std::string spec_text = read_file(spec_path);
    const std::string config_text = config_path.empty() ? std::string(default_config_text()) : read_file(config_path);
    const auto result = replay_all(spec_text, config_text);
    const std::string text = report::serialize(result.report);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw ParseError("cannot write '" + out_path + "'");
      out << text;
    }
    if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
    return result.exit_code;
  } catch (const cuspcert::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return cuspcert::kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cuspcert::kExitInputError;
  }
}
