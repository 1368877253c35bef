// Command-line front end; all computation goes through the C API in fgb.h.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fgb.h"
#include "json.hpp"

namespace {

using nlohmann::json;

int finish(fgb_status status, char* report) {
  if (report) {
    std::fputs(report, stdout);
    fgb_string_free(report);
  }
  switch (status) {
    case FGB_OK:
      return 0;
    case FGB_ERR_NOT_STABILIZED:
      return 2;
    default:
      std::fprintf(stderr, "error: %s\n", fgb_last_error());
      return 1;
  }
}

int dispatch(fgb_status (*runner)(const char*, char**), const json& cfg) {
  char* report = nullptr;
  fgb_status status = runner(cfg.dump().c_str(), &report);
  if (status == FGB_ERR_ARGUMENT || status == FGB_ERR_PARSE) {
    std::fprintf(stderr, "error: %s\n", fgb_last_error());
    if (report) fgb_string_free(report);
    return 1;
  }
  return finish(status, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the boundary of a free group"};
  app.require_subcommand(1);

  int d = 2;
  std::string relation = "S";
  std::string format = "json";
  std::string cache;
  int max_level = 4;
  int level = 2;
  int check_bound = 4;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--d", d, "rank of the free group (>= 2)");
    cmd->add_option("--format", format, "output format: json|tsv");
  };

  auto* kgroup = app.add_subcommand(
      "kgroup", "K-group presentation of the glued boundary quotient");
  add_common(kgroup);
  kgroup->add_option("--relation", relation,
                     "relation words, \"S\" for all generators, or \"none\"");
  kgroup->add_option("--max-level", max_level, "deepest cylinder level to use");
  kgroup->add_option("--cache", cache, "directory for cached normal forms");

  auto* verify = app.add_subcommand(
      "verify", "check the cylinder-function identities and obstructions");
  add_common(verify);
  std::string verify_mode = "all";
  std::string coeffs_text;
  int max_k = 6;
  verify->add_option("mode", verify_mode,
                     "recurrences|obstruction|preimage|sigma|all");
  verify->add_option("--coeffs", coeffs_text,
                     "comma-separated q-coefficients, padded with zeros");
  verify->add_option("--max-k", max_k, "largest power in the recurrences");
  verify->add_option("--level", level, "deepest membership level to test");

  auto* witness = app.add_subcommand(
      "witness", "construct density or separation witnesses");
  add_common(witness);
  std::string witness_mode, witness_x, witness_y;
  witness->add_option("mode", witness_mode, "density|separate")->required();
  witness->add_option("x", witness_x, "first word or point")->required();
  witness->add_option("y", witness_y, "second word or point")->required();

  auto* orbits = app.add_subcommand(
      "orbits", "count group orbits in the glued locus of the quotient");
  add_common(orbits);
  orbits->add_option("--relation", relation, "generator subset, e.g. \"a,b\"");
  orbits->add_option("--check-bound", check_bound,
                     "verify all translates up to this length");

  auto* act_cmd = app.add_subcommand(
      "act", "apply a group element to a boundary point");
  add_common(act_cmd);
  std::string act_g, act_x, act_class, act_eval;
  act_cmd->add_option("g", act_g, "group element")->required();
  act_cmd->add_option("x", act_x, "boundary point u|v")->required();
  act_cmd->add_option("--class", act_class, "relation for the class of the result");
  act_cmd->add_option("--eval", act_eval,
                      "comma-separated words; report p[w], q[w] at the result");

  CLI11_PARSE(app, argc, argv);

  json cfg;
  cfg["d"] = d;
  cfg["format"] = format;

  if (kgroup->parsed()) {
    cfg["relation"] = relation;
    cfg["max_level"] = max_level;
    if (!cache.empty()) cfg["cache"] = cache;
    return dispatch(fgb_run_kgroup, cfg);
  }
  if (verify->parsed()) {
    cfg["mode"] = verify_mode;
    cfg["max_k"] = max_k;
    cfg["level"] = level;
    if (!coeffs_text.empty()) {
      json arr = json::array();
      std::size_t pos = 0;
      while (pos <= coeffs_text.size()) {
        std::size_t comma = coeffs_text.find(',', pos);
        std::string tok = coeffs_text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
          arr.push_back(std::stoll(tok));
        } catch (const std::exception&) {
          std::fprintf(stderr, "error: bad coefficient \"%s\"\n", tok.c_str());
          return 1;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      cfg["coeffs"] = std::move(arr);
    }
    return dispatch(fgb_run_verify, cfg);
  }
  if (witness->parsed()) {
    cfg["mode"] = witness_mode;
    cfg["x"] = witness_x;
    cfg["y"] = witness_y;
    return dispatch(fgb_run_witness, cfg);
  }
  if (orbits->parsed()) {
    cfg["relation"] = relation;
    cfg["check_bound"] = check_bound;
    return dispatch(fgb_run_orbits, cfg);
  }
  if (act_cmd->parsed()) {
    cfg["g"] = act_g;
    cfg["x"] = act_x;
    if (!act_class.empty()) cfg["relation"] = act_class;
    if (!act_eval.empty()) {
      json arr = json::array();
      std::size_t pos = 0;
      while (pos <= act_eval.size()) {
        std::size_t comma = act_eval.find(',', pos);
        arr.push_back(act_eval.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      cfg["eval"] = std::move(arr);
    }
    return dispatch(fgb_run_act, cfg);
  }
  return 1;
}
