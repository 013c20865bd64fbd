#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "modrep/commands.hpp"

using modrep::GroupSpec;
using modrep::Json;

namespace {

// exit codes: 0 success, 1 verification mismatch, 2 usage/input error,
// 3 internal computation error
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

GroupSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw modrep::UsageError("cannot open spec file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw modrep::UsageError(std::string("spec file is not valid JSON: ") +
                             e.what());
  }
  return GroupSpec::parse(j);
}

void emit(const modrep::Envelope& env, const std::string& json_out) {
  std::string text = env.to_json().dump(2);
  if (json_out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(json_out);
    if (!out) throw modrep::UsageError("cannot write " + json_out);
    out << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact modular representation theory of finite matrix groups"};
  app.require_subcommand(1);

  std::string spec_path, json_out, cache_flag, perturb_str;
  std::int64_t p = 3;
  int field_degree = 1, depth = 2, n_max = 3;
  std::uint64_t seed = 0;
  bool no_cache = false;

  auto add_common = [&](CLI::App* cmd, bool with_spec = true) {
    if (with_spec)
      cmd->add_option("--spec", spec_path, "group spec JSON file")->required();
    cmd->add_option("--json-out", json_out, "write the result envelope here");
    cmd->add_option("--cache-dir", cache_flag, "result cache directory");
    cmd->add_flag("--no-cache", no_cache, "disable the result cache");
  };
  auto add_modular = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "prime")->required();
    cmd->add_option("--field-degree", field_degree,
                    "degree of the coefficient field over GF(p)");
    cmd->add_option("--seed", seed, "meataxe seed");
  };

  CLI::App* chartable = app.add_subcommand("chartable", "ordinary character table");
  add_common(chartable);

  CLI::App* brauertable =
      app.add_subcommand("brauertable", "Brauer character table");
  add_common(brauertable);
  add_modular(brauertable);

  CLI::App* decomp = app.add_subcommand("decomp", "decomposition matrix");
  add_common(decomp);
  add_modular(decomp);

  CLI::App* cartan =
      app.add_subcommand("cartan", "decomposition and Cartan matrices, blocks");
  add_common(cartan);
  add_modular(cartan);

  CLI::App* blocks = app.add_subcommand("blocks", "block partition");
  add_common(blocks);
  add_modular(blocks);

  CLI::App* tower = app.add_subcommand(
      "tower", "congruence tower: C1, B and the Cartan recursion");
  add_common(tower, false);
  std::string family = "sl2";
  tower->add_option("--family", family, "tower family")
      ->check(CLI::IsMember({"sl2"}));
  tower->add_option("--p", p, "prime")->required();
  tower->add_option("--depth", depth, "number of levels to enumerate");
  tower->add_option("--n-max", n_max, "compute C_n for n up to this");
  tower->add_option("--seed", seed, "meataxe seed");

  CLI::App* verify = app.add_subcommand(
      "verify-paper-example",
      "recompute the SL2(Z_3) worked example and compare all matrices");
  add_common(verify, false);
  verify->add_option("--seed", seed, "meataxe seed");
  verify->add_option("--perturb", perturb_str,
                     "negative control: shift one expected entry (B:0,1:+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    modrep::ResultCache cache(
        no_cache ? std::string()
                 : modrep::resolve_cache_dir(
                       cache_flag.empty()
                           ? std::nullopt
                           : std::optional<std::string>(cache_flag)));

    if (app.got_subcommand(chartable)) {
      GroupSpec spec = load_spec(spec_path);
      auto env = modrep::run_command(
          "chartable", Json{{"spec", spec.canonical()}}, cache,
          [&] { return modrep::payload_chartable(spec); });
      emit(env, json_out);
      return 0;
    }
    if (app.got_subcommand(brauertable) || app.got_subcommand(decomp) ||
        app.got_subcommand(cartan) || app.got_subcommand(blocks)) {
      GroupSpec spec = load_spec(spec_path);
      std::string name = app.got_subcommand(brauertable) ? "brauertable"
                         : app.got_subcommand(decomp)    ? "decomp"
                         : app.got_subcommand(cartan)    ? "cartan"
                                                         : "blocks";
      Json input{{"spec", spec.canonical()},
                 {"p", p},
                 {"field_degree", field_degree},
                 {"seed", seed}};
      auto env = modrep::run_command(name, input, cache, [&] {
        if (name == "brauertable")
          return modrep::payload_brauertable(spec, p, field_degree, seed);
        if (name == "decomp")
          return modrep::payload_decomp(spec, p, field_degree, seed);
        if (name == "cartan")
          return modrep::payload_cartan(spec, p, field_degree, seed);
        return modrep::payload_blocks(spec, p, field_degree, seed);
      });
      emit(env, json_out);
      return 0;
    }
    if (app.got_subcommand(tower)) {
      Json input{{"family", family},
                 {"p", p},
                 {"depth", depth},
                 {"n_max", n_max},
                 {"seed", seed}};
      auto env = modrep::run_command("tower", input, cache, [&] {
        return modrep::payload_tower(p, depth, n_max, seed);
      });
      emit(env, json_out);
      return 0;
    }
    if (app.got_subcommand(verify)) {
      std::optional<modrep::Perturbation> perturb;
      if (!perturb_str.empty())
        perturb = modrep::Perturbation::parse(perturb_str);
      bool all_pass = false;
      // verification always recomputes; the cache is never consulted
      modrep::Envelope env;
      env.command = "verify-paper-example";
      env.input = Json{{"seed", seed},
                       {"perturb", perturb_str.empty() ? Json() : Json(perturb_str)}};
      env.input_digest = modrep::digest_hex(
          "verify-paper-example\n" + env.input.dump() + "\n" +
          modrep::kArtifactVersion);
      auto start = std::chrono::steady_clock::now();
      env.payload = modrep::payload_verify_paper_example(seed, perturb, all_pass);
      env.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      emit(env, json_out);
      // per-check summary on stderr so piping the JSON stays clean
      for (const auto& check : env.payload.at("checks"))
        std::cerr << (check.at("pass").get<bool>() ? "PASS " : "FAIL ")
                  << check.at("name").get<std::string>() << "\n";
      return all_pass ? 0 : kExitVerifyFail;
    }
  } catch (const modrep::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const modrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitUsage;
}
