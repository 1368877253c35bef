#include "fgb/commands.hpp"

#include <numeric>
#include <stdexcept>

#include "fgb/ktheory.hpp"
#include "fgb/orbits.hpp"

namespace fgb {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

int get_d(const json& cfg) {
  if (!cfg.contains("d")) throw std::invalid_argument("missing rank --d");
  int d = cfg["d"].get<int>();
  if (d < 2 || d > 26) throw std::invalid_argument("rank must be in 2..26");
  return d;
}

std::string get_string(const json& cfg, const char* key, const char* fallback) {
  return cfg.contains(key) ? cfg[key].get<std::string>() : std::string(fallback);
}

int get_int(const json& cfg, const char* key, int fallback) {
  return cfg.contains(key) ? cfg[key].get<int>() : fallback;
}

ordered relation_json(const RelationSpec& spec) {
  if (spec.is_empty()) return ordered("none");
  ordered words = ordered::array();
  for (const ReducedWord& w : spec.words) words.push_back(w.str());
  return words;
}

CommandResult usage_error(const std::string& message) {
  return CommandResult{1, "error: " + message + "\n"};
}

template <typename Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const json::exception& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    return CommandResult{1, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace

CommandResult run_kgroup(const json& cfg) {
  return guarded([&]() -> CommandResult {
    const int d = get_d(cfg);
    RelationSpec spec = RelationSpec::parse(d, get_string(cfg, "relation", "S"));
    const int max_level = get_int(cfg, "max_level", 4);
    KGroupOptions opts;
    opts.cache_dir = get_string(cfg, "cache", "");
    KGroupResult res = pv_k_groups(d, spec, max_level, opts);
    const std::string format = get_string(cfg, "format", "json");
    std::string out;
    if (format == "tsv")
      out = res.to_tsv();
    else if (format == "json")
      out = res.to_json() + "\n";
    else
      throw std::invalid_argument("unknown format: " + format);
    return CommandResult{res.stabilized ? 0 : 2, out};
  });
}

CommandResult run_verify(const json& cfg) {
  return guarded([&]() -> CommandResult {
    const int d = get_d(cfg);
    const std::string mode = get_string(cfg, "mode", "all");
    const int max_k = get_int(cfg, "max_k", 6);
    const int max_membership_level = get_int(cfg, "level", 2);
    std::vector<long long> coeffs;
    if (cfg.contains("coeffs"))
      for (const auto& c : cfg["coeffs"]) coeffs.push_back(c.get<long long>());
    while (static_cast<int>(coeffs.size()) < d && !coeffs.empty())
      coeffs.push_back(0);

    ordered items = ordered::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, bool pass, ordered detail) {
      detail["name"] = name;
      detail["pass"] = pass;
      ordered entry;
      entry["name"] = detail["name"];
      entry["pass"] = detail["pass"];
      for (auto& [k, v] : detail.items())
        if (k != "name" && k != "pass") entry[k] = v;
      items.push_back(std::move(entry));
      all_pass = all_pass && pass;
    };

    const bool want_recurrences = mode == "recurrences" || mode == "all";
    const bool want_sigma = mode == "sigma" || mode == "all";
    const bool want_obstruction =
        mode == "obstruction" || (mode == "all" && !coeffs.empty());
    const bool want_preimage =
        mode == "preimage" || (mode == "all" && !coeffs.empty());
    if (!(want_recurrences || want_sigma || want_obstruction || want_preimage))
      throw std::invalid_argument("unknown verify mode: " + mode);
    if ((mode == "obstruction" || mode == "preimage") && coeffs.empty())
      throw std::invalid_argument("mode " + mode + " requires --coeffs");

    if (want_recurrences) {
      for (int g = 1; g <= d; ++g)
        for (int k = 2; k <= max_k; ++k) {
          bool ok = verify_recurrence(d, Letter(g, false), k);
          ordered detail;
          detail["s"] = std::string(1, static_cast<char>('a' + g - 1));
          detail["k"] = k;
          add("recurrence", ok, std::move(detail));
        }
    }

    LevelFunction r = LevelFunction::constant(d, 0);
    long long coeff_sum = 0;
    if (!coeffs.empty()) {
      for (int g = 1; g <= d; ++g) {
        ReducedWord s(d, {Letter(g, false)});
        r = r + LevelFunction::cylinder_q(s) * Int(coeffs[g - 1]);
        coeff_sum += coeffs[g - 1];
      }
    }

    if (want_obstruction) {
      const bool expected_member = coeff_sum % (d - 1) == 0;
      for (int level = 1; level <= max_membership_level; ++level) {
        EtaMembership mem = eta_membership(r, level);
        ordered detail;
        detail["level"] = level;
        detail["member"] = mem.member;
        detail["coeff_sum"] = coeff_sum;
        detail["expected_member"] = expected_member;
        add("obstruction", mem.member == expected_member, std::move(detail));
      }
    }

    if (want_preimage) {
      if (coeff_sum % (d - 1) != 0)
        throw std::invalid_argument(
            "preimage mode needs a coefficient sum divisible by d-1");
      std::vector<LevelFunction> tuple = standard_preimage(d, coeffs);
      bool exact = eta_apply(tuple) == r;
      ordered detail;
      ordered slots = ordered::array();
      for (const LevelFunction& f : tuple)
        slots.push_back(ordered::parse(f.to_json()));
      detail["preimage"] = std::move(slots);
      add("preimage", exact, std::move(detail));
      EtaMembership mem = eta_membership(r, 1);
      ordered detail2;
      detail2["level"] = 1;
      bool recheck = mem.member && eta_apply(mem.preimage) == r;
      add("preimage-recheck", recheck, std::move(detail2));
    }

    if (want_sigma) {
      for (int g = 1; g <= d; ++g) {
        ReducedWord s(d, {Letter(g, false)});
        LevelFunction q = LevelFunction::cylinder_q(s);
        bool stable = sigma_residue(q.refined(3)) == sigma_residue(q);
        ordered detail;
        detail["s"] = std::string(1, static_cast<char>('a' + g - 1));
        add("sigma-refine-stable", stable, std::move(detail));
      }
      for (int level = 1; level <= 2; ++level) {
        IntMatrix eta = eta_matrix(d, level);
        bool vanish = true;
        for (int j = 0; j < eta.cols && vanish; ++j) {
          LevelFunction img = LevelFunction::from_coefficients(
              d, level + 1, eta.column(j));
          vanish = sigma_residue(img) == 0;
        }
        ordered detail;
        detail["level"] = level;
        add("sigma-vanishes-on-image", vanish, std::move(detail));
      }
    }

    ordered out;
    out["d"] = d;
    out["mode"] = mode;
    out["items"] = std::move(items);
    out["all_pass"] = all_pass;
    return CommandResult{all_pass ? 0 : 2, out.dump() + "\n"};
  });
}

CommandResult run_witness(const json& cfg) {
  return guarded([&]() -> CommandResult {
    const int d = get_d(cfg);
    const std::string mode = get_string(cfg, "mode", "");
    if (mode == "density") {
      ReducedWord x = ReducedWord::parse(d, cfg.at("x").get<std::string>());
      ReducedWord y = ReducedWord::parse(d, cfg.at("y").get<std::string>());
      ReducedWord h = density_witness(x, y);
      ordered out;
      out["mode"] = "density";
      out["x"] = x.str();
      out["y"] = y.str();
      out["witness"] = h.str();
      out["prefix_plus"] =
          point_prefix(limit_point(h, Sign::plus), x.length()).str();
      out["prefix_minus"] =
          point_prefix(limit_point(h, Sign::minus), y.length()).str();
      bool pass = out["prefix_plus"] == x.str() && out["prefix_minus"] == y.str();
      out["pass"] = pass;
      return CommandResult{pass ? 0 : 2, out.dump() + "\n"};
    }
    if (mode == "separate") {
      BoundaryPoint x = BoundaryPoint::parse(d, cfg.at("x").get<std::string>());
      BoundaryPoint y = BoundaryPoint::parse(d, cfg.at("y").get<std::string>());
      auto [g, s] = separating_element(x, y);
      ordered out;
      out["mode"] = "separate";
      out["x"] = x.str();
      out["y"] = y.str();
      out["g"] = g.str();
      out["s"] = std::string(1, static_cast<char>('a' + s.gen - 1));
      const int vx = translated_q_value(g, s, x);
      const int vy = translated_q_value(g, s, y);
      out["value_x"] = vx;
      out["value_y"] = vy;
      bool pass = vx != vy;
      out["pass"] = pass;
      return CommandResult{pass ? 0 : 2, out.dump() + "\n"};
    }
    throw std::invalid_argument("witness mode must be density or separate");
  });
}

CommandResult run_orbits(const json& cfg) {
  return guarded([&]() -> CommandResult {
    const int d = get_d(cfg);
    RelationSpec spec = RelationSpec::parse(d, get_string(cfg, "relation", ""));
    if (spec.is_empty())
      throw std::invalid_argument("orbits requires a nonempty relation");
    const int bound = get_int(cfg, "check_bound", 4);
    OrbitCount oc = orbit_count(spec, bound);
    ordered out;
    out["d"] = d;
    out["relation"] = relation_json(spec);
    out["count"] = oc.count;
    ordered reps = ordered::array();
    for (const BoundaryPoint& p : oc.representatives) reps.push_back(p.str());
    out["representatives"] = std::move(reps);
    out["check_bound"] = bound;
    out["verified_translates"] = oc.points_verified;
    return CommandResult{0, out.dump() + "\n"};
  });
}

CommandResult run_act(const json& cfg) {
  return guarded([&]() -> CommandResult {
    const int d = get_d(cfg);
    ReducedWord g = ReducedWord::parse(d, cfg.at("g").get<std::string>());
    BoundaryPoint x = BoundaryPoint::parse(d, cfg.at("x").get<std::string>());
    BoundaryPoint moved = act(g, x);
    ordered out;
    out["d"] = d;
    out["g"] = g.str();
    out["x"] = x.str();
    out["result"] = moved.str();
    if (!g.empty()) out["is_fixed"] = (moved == x);
    if (cfg.contains("relation")) {
      RelationSpec spec =
          RelationSpec::parse(d, cfg["relation"].get<std::string>());
      ordered cls = ordered::array();
      for (const BoundaryPoint& p : class_of(moved, spec).points)
        cls.push_back(p.str());
      out["class"] = std::move(cls);
    }
    if (cfg.contains("eval")) {
      ordered evals = ordered::object();
      for (const auto& token : cfg["eval"]) {
        ReducedWord w = ReducedWord::parse(d, token.get<std::string>());
        evals["p[" + w.str() + "]"] = static_cast<long long>(
            LevelFunction::cylinder_p(w).evaluate(moved));
        evals["q[" + w.str() + "]"] = static_cast<long long>(
            LevelFunction::cylinder_q(w).evaluate(moved));
      }
      out["eval"] = std::move(evals);
    }
    return CommandResult{0, out.dump() + "\n"};
  });
}

}  // namespace fgb
