// unitri: command-line front end over the library.
//
// Exit codes: 0 success, 1 a check failed, 2 usage, parse or input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "unitri/central.hpp"
#include "unitri/serialize.hpp"
#include "unitri/suites.hpp"

namespace {

using namespace unitri;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct CliConfig {
  std::uint64_t seed = 1;
  int trials = 8;
  int subst_degree = 2;
  int cap = 5;
  std::optional<int> working_cap;
  int max_layer = 3;
  bool json = false;

  PitConfig pit() const {
    PitConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.subst_degree = subst_degree;
    cfg.working_cap = working_cap.value_or(cap * subst_degree);
    cfg.max_layer = max_layer;
    return cfg;
  }
};

void emit(const CliConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

std::string verdict_text(const Verdict& v) {
  std::string out = to_string(v.kind);
  if (v.kind == Verdict::Kind::ProbablyHolds) out += " (" + std::to_string(v.trials) + " trials)";
  for (const auto& w : v.witness) out += "\nwitness: " + aut_format(w);
  return out;
}

NcPoly parse_poly_arg(const std::string& text, std::optional<int> rank) {
  return poly_parse(text, rank.value_or(std::max(infer_rank(text), 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Unitriangular automorphisms of free associative algebras over Q"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Random seed")->default_val(1);
  app.add_option("--trials", cfg.trials, "Random trials per check")->check(CLI::PositiveNumber);
  app.add_option("--subst-degree", cfg.subst_degree, "Degree of sampled substitutions")->check(CLI::PositiveNumber);
  app.add_option("--cap", cfg.cap, "Degree cap for truncated layers")->check(CLI::NonNegativeNumber);
  app.add_option("--working-cap", cfg.working_cap, "Working degree cap (default cap * subst-degree)");
  app.add_option("--max-layer", cfg.max_layer, "Largest layer tried by rank-3 classification")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Emit JSON");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string text;
  std::optional<int> rank;
  auto* parse = sub("parse", "Parse and print a polynomial or automorphism (images separated by ';')");
  parse->add_option("text", text)->required();
  parse->add_option("--rank", rank, "Polynomial rank (default: largest variable index)");
  parse->callback([&] {
    action = [&] {
      if (text.find(';') != std::string::npos) {
        const UniAut phi = aut_parse(text);
        emit(cfg, to_json(phi), aut_format(phi));
      } else {
        const NcPoly p = parse_poly_arg(text, rank);
        emit(cfg, Json{{"rank", p.rank()}, {"polynomial", poly_format(p)}}, poly_format(p));
      }
      return kOk;
    };
  });

  std::vector<std::string> auts;
  auto* compose_cmd = sub("compose", "Compose automorphisms left to right (the first acts first)");
  compose_cmd->add_option("auts", auts)->required()->expected(2, -1);
  compose_cmd->callback([&] {
    action = [&] {
      UniAut acc = aut_parse(auts.front());
      for (std::size_t i = 1; i < auts.size(); ++i) acc = compose(acc, aut_parse(auts[i]));
      emit(cfg, to_json(acc), aut_format(acc));
      return kOk;
    };
  });

  std::string phi_text;
  std::string psi_text;
  auto* invert_cmd = sub("invert", "Inverse automorphism");
  invert_cmd->add_option("aut", phi_text)->required();
  invert_cmd->callback([&] {
    action = [&] {
      const UniAut inv = invert(aut_parse(phi_text));
      emit(cfg, to_json(inv), aut_format(inv));
      return kOk;
    };
  });

  auto* commutator_cmd = sub("commutator", "Group commutator phi^-1 psi^-1 phi psi");
  commutator_cmd->add_option("phi", phi_text)->required();
  commutator_cmd->add_option("psi", psi_text)->required();
  commutator_cmd->callback([&] {
    action = [&] {
      const UniAut c = group_commutator(aut_parse(phi_text), aut_parse(psi_text));
      emit(cfg, to_json(c), aut_format(c));
      return kOk;
    };
  });

  auto* conjugate_cmd = sub("conjugate", "Conjugate psi^-1 phi psi");
  conjugate_cmd->add_option("phi", phi_text)->required();
  conjugate_cmd->add_option("psi", psi_text)->required();
  conjugate_cmd->callback([&] {
    action = [&] {
      const UniAut c = conjugate(aut_parse(phi_text), aut_parse(psi_text));
      emit(cfg, to_json(c), aut_format(c));
      return kOk;
    };
  });

  std::string poly_text;
  auto* apply_cmd = sub("apply", "Apply an automorphism to a polynomial");
  apply_cmd->add_option("aut", phi_text)->required();
  apply_cmd->add_option("poly", poly_text)->required();
  apply_cmd->callback([&] {
    action = [&] {
      const UniAut phi = aut_parse(phi_text);
      const NcPoly p = apply(phi, poly_parse(poly_text, phi.rank()));
      emit(cfg, Json{{"rank", p.rank()}, {"polynomial", poly_format(p)}}, poly_format(p));
      return kOk;
    };
  });

  auto* factor_cmd = sub("factor", "Elementary factors g_1, ..., g_n; g_n acts first in the product");
  factor_cmd->add_option("aut", phi_text)->required();
  factor_cmd->callback([&] {
    action = [&] {
      const auto factors = factor_semidirect(aut_parse(phi_text));
      Json j = Json::array();
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        j.push_back(to_json(factors[i]));
        out += (i ? "\n" : "") + std::string("g") + std::to_string(i + 1) + " = " + aut_format(factors[i]);
      }
      emit(cfg, Json{{"factors", std::move(j)}}, out);
      return kOk;
    };
  });

  auto* classify_cmd = sub("classify", "Hypercenter level in U_2 (exact) or U_3 (truncated)");
  classify_cmd->add_option("aut", phi_text)->required();
  classify_cmd->callback([&] {
    action = [&] {
      const UniAut phi = aut_parse(phi_text);
      if (phi.rank() == 2) {
        const OrdinalLevel level = u2_hypercenter_level(phi);
        emit(cfg, Json{{"level", to_string(level)}, {"verdict", to_json(Verdict::holds())}}, to_string(level));
        return kOk;
      }
      if (phi.rank() != 3) {
        std::cerr << "error: classify supports ranks 2 and 3, got " << phi.rank() << '\n';
        return kUsage;
      }
      const LevelResult res = u3_hypercenter_level_truncated(phi, cfg.cap, cfg.pit());
      std::string out = to_string(res.level) + "\nverdict: " + verdict_text(res.confidence);
      if (res.banded) out += "\nlower bound only: no computed layer up to the configured bound contains f1";
      emit(cfg, to_json(res), out);
      return kOk;
    };
  });

  auto* center_cmd = sub("center-test", "Is the automorphism central? Exact for rank 2, sampled for rank >= 3");
  center_cmd->add_option("aut", phi_text)->required();
  center_cmd->callback([&] {
    action = [&] {
      const UniAut phi = aut_parse(phi_text);
      if (phi.rank() == 2) {
        const bool central = u2_center_test(phi);
        emit(cfg, Json{{"central", central}, {"class", to_string(u2_centralizer_classify(phi))}},
             std::string(central ? "true" : "false") + "\ncentralizer: " + to_string(u2_centralizer_classify(phi)));
        return kOk;
      }
      const Verdict v = un_center_test(phi, cfg.pit());
      emit(cfg, to_json(v), verdict_text(v));
      return kOk;
    };
  });

  int level = 1;
  auto* invariants_cmd = sub("invariants", "Truncated basis of the invariant layer S_m in Q<x2, x3> up to --cap");
  invariants_cmd->add_option("--level", level, "Layer index m")->check(CLI::PositiveNumber);
  invariants_cmd->callback([&] {
    action = [&] {
      const GradedSubspace s = s_layer_basis(level, cfg.cap, cfg.pit());
      std::string out = "S_" + std::to_string(level) + " at degree <= " + std::to_string(cfg.cap) +
                        " (working cap " + std::to_string(s.working_cap()) + "): " + verdict_text(s.verdict());
      for (const auto& b : s.basis()) out += "\n  " + poly_format(b);
      const auto dims = s.dimension_by_degree();
      out += "\ndimensions:";
      for (std::size_t d = 0; d < dims.size(); ++d) out += " " + std::to_string(d) + ":" + std::to_string(dims[d]);
      emit(cfg, to_json(s), out);
      return kOk;
    };
  });

  auto* straighten_cmd = sub("straighten", "Write f in Q<x2, x3> as sum r_ab x2^a x3^b with r_ab in the commutator algebra");
  straighten_cmd->add_option("poly", poly_text)->required();
  straighten_cmd->callback([&] {
    action = [&] {
      const NcPoly f = poly_parse(poly_text, kInvariantRank);
      const int cap = std::max(cfg.cap, degree(f).is_finite() ? degree(f).value() : 0);
      const StraightenMap parts = SpechtStraightener(cap).straighten(f);
      std::string out;
      for (const auto& [ab, coeff] : parts) {
        if (!out.empty()) out += '\n';
        out += "(" + std::to_string(ab.first) + ", " + std::to_string(ab.second) + "): " + poly_format(coeff);
      }
      emit(cfg, to_json(parts), out.empty() ? "0" : out);
      return kOk;
    };
  });

  std::string suite;
  auto* verify_cmd = sub("verify", "Run a verification suite by name, or 'all'");
  verify_cmd->add_option("suite", suite)->required();
  verify_cmd->callback([&] {
    action = [&] {
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else if (is_suite(suite)) {
        names.push_back(suite);
      } else {
        std::cerr << "error: unknown suite '" << suite << "'; known:";
        for (const auto& n : suite_names()) std::cerr << ' ' << n;
        std::cerr << '\n';
        return kUsage;
      }
      SuiteOptions opts;
      opts.seed = cfg.seed;
      opts.pit = cfg.pit();
      opts.cap = cfg.cap;
      bool all_passed = true;
      Json reports = Json::array();
      std::string out;
      for (const auto& name : names) {
        const SuiteReport rep = run_suite(name, opts);
        all_passed = all_passed && rep.passed();
        reports.push_back(to_json(rep));
        for (const auto& c : rep.checks) {
          if (!out.empty()) out += '\n';
          out += std::string(c.passed ? "PASS" : "FAIL") + " " + name + ": " + c.name;
          if (!c.detail.empty()) out += " [" + c.detail + "]";
        }
      }
      emit(cfg, names.size() == 1 ? reports.front() : Json{{"suites", reports}, {"passed", all_passed}}, out);
      return all_passed ? kOk : kCheckFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (cfg.working_cap && *cfg.working_cap < cfg.cap * cfg.subst_degree) {
    std::cerr << "error: --working-cap " << *cfg.working_cap << " is below --cap * --subst-degree = "
              << cfg.cap * cfg.subst_degree << '\n';
    return kUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
