// bellsim: exact simulation and verification of passive linear-optical
// Bell-measurement schemes.  Every code path renders rationals canonically
// ("num/den") and floating values with fixed 12-digit precision, so repeated
// invocations are byte-identical.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bellsim/bellsim.hpp"

namespace {

using bellsim::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) return usage_error("cannot open output path: " + out_path);
  f << text;
  if (!f.good()) return usage_error("failed writing output path: " + out_path);
  return kExitOk;
}

// Input labels accept both the internal spelling ("psi+") and the hyphenated
// command-line spelling ("psi-plus").
std::string normalize_label(const std::string& raw) {
  if (raw == "psi-plus") return bellsim::kPsiPlus;
  if (raw == "psi-minus") return bellsim::kPsiMinus;
  if (raw == "phi-plus") return bellsim::kPhiPlus;
  if (raw == "phi-minus") return bellsim::kPhiMinus;
  if (raw == "beta-plus") return bellsim::kLabelBetaPlus;
  if (raw == "beta-minus") return bellsim::kLabelBetaMinus;
  return raw;
}

std::string display_label(const std::string& internal) {
  if (internal == bellsim::kPsiPlus) return "psi-plus";
  if (internal == bellsim::kPsiMinus) return "psi-minus";
  if (internal == bellsim::kPhiPlus) return "phi-plus";
  if (internal == bellsim::kPhiMinus) return "phi-minus";
  if (internal == bellsim::kLabelBetaPlus) return "beta-plus";
  if (internal == bellsim::kLabelBetaMinus) return "beta-minus";
  return internal;
}

std::optional<bellsim::SchemeSpec> lookup_scheme(const std::string& name) {
  try {
    return bellsim::scheme_by_name(name);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string valid_inputs(const bellsim::SchemeSpec& spec) {
  std::string s;
  for (const auto& [label, state] : spec.candidates) {
    (void)state;
    if (!s.empty()) s += ", ";
    s += display_label(label);
  }
  return s;
}

std::optional<bellsim::Occupation> parse_pattern(const std::string& text, int modes) {
  std::vector<int> counts;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) return std::nullopt;
      for (char d : cur)
        if (d < '0' || d > '9') return std::nullopt;
      counts.push_back(std::stoi(cur));
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (static_cast<int>(counts.size()) != modes) return std::nullopt;
  return bellsim::Occupation{counts};
}

std::string scheme_header(const bellsim::SchemeSpec& spec) {
  return "scheme: " + spec.name + " (" + std::to_string(spec.mode_count) + " modes, photon budget " +
         std::to_string(spec.photon_budget) + ", ancillae: " + spec.ancilla_desc + ")\n";
}

// The evolved candidate states, reusing the memoized classifier caches where
// the heavy evolutions already live.
const bellsim::SparseState& evolved_candidate(const bellsim::SchemeSpec& spec,
                                              const std::string& label) {
  using namespace bellsim;
  if (spec.name == "arm-n1") return arm_classifier(1).evolved.at(label);
  if (spec.name == "arm-n2") return arm_classifier(2).evolved.at(label);
  if (spec.name == "scheme-25-32") return boosted_arm_classifier().evolved.at(label);
  if (spec.name == "full-n1") return full_joint_classifier(1).evolved.at(label);
  if (spec.name == "simple") {
    static std::map<std::string, SparseState> cache;
    auto it = cache.find(label);
    if (it == cache.end())
      it = cache.emplace(label, evolve(bell_state(label), core_stage())).first;
    return it->second;
  }
  throw std::invalid_argument("no joint evolution for scheme " + spec.name);
}

struct CommonOpts {
  std::string format = "text";
  std::string out_path;
};

int cmd_simulate(const std::string& scheme_name, const std::string& raw_label,
                 const CommonOpts& opts) {
  using namespace bellsim;
  auto spec = lookup_scheme(scheme_name);
  if (!spec) return usage_error("unknown scheme: " + scheme_name);
  std::string label = normalize_label(raw_label);
  bool known = false;
  for (const auto& [l, st] : spec->candidates) {
    (void)st;
    if (l == label) known = true;
  }
  if (!known)
    return usage_error("unknown input '" + raw_label + "' for scheme " + spec->name +
                       "; valid inputs: " + valid_inputs(*spec));

  if (spec->name == "full-n2") {
    // The 16-mode joint state has too many terms to expand; the first stage
    // splits exactly into two-arm branches that never interfere afterwards,
    // so report that split and the resulting rates.
    auto branches = core_branches(label);
    auto succ = full_success(2);
    if (opts.format == "json") {
      Json jb = Json::array();
      for (const auto& b : branches)
        jb.push_back(Json{{"amplitude", amplitude_json(b.amp)},
                          {"arm1", b.arm1_name},
                          {"arm2", b.arm2_name}});
      Json j{{"scheme", scheme_json(*spec)},
             {"input", display_label(label)},
             {"note", "joint expansion skipped; arms evolve independently after the first stage"},
             {"branches", std::move(jb)},
             {"success", success_map_json(succ)},
             {"average_success", value_json(average_success(succ))}};
      return emit(opts.out_path, j.dump(2) + "\n");
    }
    std::string text = scheme_header(*spec) + "input: " + display_label(label) + "\n" +
                       "joint expansion skipped; arms evolve independently after the first stage\n" +
                       "first-stage branches:\n";
    for (const auto& b : branches)
      text += "  " + b.amp.str() + "  arm1 <- " + b.arm1_name + ", arm2 <- " + b.arm2_name + "\n";
    text += "per-input success rates:\n";
    for (const auto& [l, p] : succ)
      text += "  " + display_label(l) + ": " + rational_str(p) + "\n";
    text += "average success = " + rational_str(average_success(succ)) + "\n";
    return emit(opts.out_path, text);
  }

  const SparseState& ev = evolved_candidate(*spec, label);
  if (opts.format == "json") {
    Json j{{"scheme", scheme_json(*spec)},
           {"input", display_label(label)},
           {"state", state_json(ev)}};
    return emit(opts.out_path, j.dump(2) + "\n");
  }
  std::string text = scheme_header(*spec) + "input: " + display_label(label) + "\n" +
                     "evolved state (" + std::to_string(ev.support_size()) + " patterns):\n" +
                     state_text(ev);
  return emit(opts.out_path, text);
}

// Success rates for every scheme, via the route its classifier policy names.
std::map<std::string, bellsim::Rational> scheme_success(const bellsim::SchemeSpec& spec) {
  using namespace bellsim;
  if (spec.name == "simple") {
    std::vector<std::pair<std::string, SparseState>> ev;
    for (const auto& [label, st] : spec.candidates) {
      (void)st;
      ev.emplace_back(label, evolved_candidate(spec, label));
    }
    return build_classifier(ev).success_probabilities();
  }
  if (spec.name == "arm-n1") return arm_classifier(1).success_probabilities();
  if (spec.name == "arm-n2") return arm_classifier(2).success_probabilities();
  if (spec.name == "scheme-25-32") return boosted_arm_classifier().success_probabilities();
  if (spec.name == "full-n1") return full_success(1);
  return full_success(2);
}

int cmd_classify(const std::string& scheme_name, const std::string& pattern_text, bool want_table,
                 const CommonOpts& opts) {
  using namespace bellsim;
  auto spec = lookup_scheme(scheme_name);
  if (!spec) return usage_error("unknown scheme: " + scheme_name);

  if (!pattern_text.empty()) {
    auto occ = parse_pattern(pattern_text, spec->mode_count);
    if (!occ)
      return usage_error("pattern must be " + std::to_string(spec->mode_count) +
                         " comma-separated photon counts, got '" + pattern_text + "'");
    Verdict v;
    if (spec->name == "simple") {
      std::vector<std::pair<std::string, SparseState>> ev;
      for (const auto& [label, st] : spec->candidates) {
        (void)st;
        ev.emplace_back(label, evolved_candidate(*spec, label));
      }
      v = build_classifier(ev).classify(*occ);
    } else if (spec->name == "arm-n1") {
      v = parity_classify(1, *occ);
    } else if (spec->name == "arm-n2") {
      v = parity_classify(2, *occ);
    } else if (spec->name == "scheme-25-32") {
      v = boosted_arm_classifier().classify(*occ);
    } else if (spec->name == "full-n1") {
      v = full_classify(1, *occ);
    } else {
      v = full_classify(2, *occ);
    }
    if (opts.format == "json") {
      Json j{{"scheme", spec->name}, {"pattern", occ->str()}, {"classification", verdict_json(v)}};
      return emit(opts.out_path, j.dump(2) + "\n");
    }
    return emit(opts.out_path, "pattern (" + occ->str() + ") -> " + v.str() + "\n");
  }

  if (want_table && spec->name == "full-n2")
    return usage_error(
        "no joint outcome table for full-n2; classify individual patterns with --pattern");

  auto succ = scheme_success(*spec);
  const Classifier* table = nullptr;
  if (spec->name == "simple") {
    static std::optional<Classifier> simple_cache;
    if (!simple_cache) {
      std::vector<std::pair<std::string, SparseState>> ev;
      for (const auto& [label, st] : spec->candidates) {
        (void)st;
        ev.emplace_back(label, evolved_candidate(*spec, label));
      }
      simple_cache = build_classifier(ev);
    }
    table = &*simple_cache;
  } else if (spec->name == "arm-n1") {
    table = &arm_classifier(1);
  } else if (spec->name == "arm-n2") {
    table = &arm_classifier(2);
  } else if (spec->name == "scheme-25-32") {
    table = &boosted_arm_classifier();
  } else if (spec->name == "full-n1") {
    table = &full_joint_classifier(1);
  }

  if (opts.format == "json") {
    Json j{{"scheme", scheme_json(*spec)},
           {"success", success_map_json(succ)},
           {"average_success", value_json(average_success(succ))}};
    if (table) j["outcome_count"] = table->table.size();
    if (want_table && table) j["outcomes"] = classifier_table_json(*table);
    return emit(opts.out_path, j.dump(2) + "\n");
  }
  std::string text = scheme_header(*spec) + "success rates:\n";
  for (const auto& [label, p] : succ)
    text += "  " + display_label(label) + ": " + rational_str(p) + "\n";
  text += "average success = " + rational_str(average_success(succ)) + "\n";
  if (table)
    text += "distinct detection outcomes: " + std::to_string(table->table.size()) + "\n";
  if (want_table && table) {
    text += "outcome table:\n";
    for (const auto& [occ, labels] : table->table) {
      (void)labels;
      text += "  (" + occ.str() + ") -> " + table->classify(occ).str() + "\n";
    }
  }
  return emit(opts.out_path, text);
}

int cmd_verify(const std::string& selector, const CommonOpts& opts) {
  using namespace bellsim;
  bool valid = selector == "all";
  for (const auto& g : check_groups())
    if (g == selector) valid = true;
  if (!valid) {
    std::string groups = "all";
    for (const auto& g : check_groups()) groups += ", " + g;
    return usage_error("unknown verify selector '" + selector + "'; choose one of: " + groups);
  }
  std::vector<CheckResult> checks = run_check_group(selector);
  size_t passed = 0;
  for (const auto& c : checks)
    if (c.passed) ++passed;
  int exit_code = passed == checks.size() ? kExitOk : kExitVerifyFail;
  if (opts.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks)
      arr.push_back(Json{{"group", c.group},
                         {"criterion", c.criterion},
                         {"name", c.name},
                         {"actual", c.actual},
                         {"expected", c.expected},
                         {"passed", c.passed}});
    Json j{{"selector", selector},
           {"checks", std::move(arr)},
           {"passed", passed},
           {"total", checks.size()},
           {"ok", exit_code == kExitOk}};
    int emit_code = emit(opts.out_path, j.dump(2) + "\n");
    return emit_code != kExitOk ? emit_code : exit_code;
  }
  std::string text;
  for (const auto& c : checks) text += check_line(c) + "\n";
  text += "passed " + std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks\n";
  int emit_code = emit(opts.out_path, text);
  return emit_code != kExitOk ? emit_code : exit_code;
}

int cmd_sweep(const std::string& eta_s_range, const std::string& eta_d_range,
              const CommonOpts& opts) {
  using namespace bellsim;
  std::vector<Rational> svals, dvals;
  try {
    svals = parse_range(eta_s_range);
    dvals = parse_range(eta_d_range);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  for (const auto& v : svals)
    if (v < 0 || v > 1) return usage_error("--eta-s values must lie in [0,1]");
  for (const auto& v : dvals)
    if (v < 0 || v > 1) return usage_error("--eta-d values must lie in [0,1]");
  std::vector<SweepRow> rows = sweep_rows(svals, dvals);
  if (opts.format == "json") return emit(opts.out_path, sweep_json(rows).dump(2) + "\n");
  return emit(opts.out_path, sweep_csv(rows));
}

int cmd_dump_network(const std::string& scheme_name, const CommonOpts& opts) {
  using namespace bellsim;
  auto spec = lookup_scheme(scheme_name);
  if (!spec) return usage_error("unknown scheme: " + scheme_name);
  if (opts.format == "json") {
    Json j{{"scheme", scheme_json(*spec)}, {"network", network_json(spec->network)}};
    return emit(opts.out_path, j.dump(2) + "\n");
  }
  std::string text = scheme_header(*spec) + "network (" + std::to_string(spec->network.modes) +
                     "x" + std::to_string(spec->network.modes) + ", rows = inputs):\n" +
                     network_text(spec->network);
  return emit(opts.out_path, text);
}

int cmd_tables(const CommonOpts& opts) {
  using namespace bellsim;
  if (opts.format == "json")
    return emit(opts.out_path, Json{{"parity_signatures", parity_table_json()}}.dump(2) + "\n");
  std::string text =
      "photon-count parity signatures after the depth-2 cascade\n"
      "(block(1,3) = modes {1,2,5,6}, block(2,3) = modes {1,2,3,4}):\n" +
      parity_table_text();
  return emit(opts.out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simulator for passive linear-optical Bell-measurement schemes"};
  app.require_subcommand(1);

  std::string scheme, input_label, pattern, selector = "all";
  std::string eta_s_range = "0:1:0.1", eta_d_range = "0:1:0.1";
  bool want_table = false;
  CommonOpts opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o,--output", opts.out_path, "write output to this path instead of stdout");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "evolve a labeled input through a scheme");
  simulate->add_option("--scheme", scheme, "scheme name")->required();
  simulate->add_option("--input", input_label, "input state label (e.g. psi-plus, alpha)")
      ->required();
  add_common(simulate);

  CLI::App* classify =
      app.add_subcommand("classify", "classification table and rates, or one pattern's verdict");
  classify->add_option("--scheme", scheme, "scheme name")->required();
  classify->add_option("--pattern", pattern, "comma-separated detected photon counts");
  classify->add_flag("--table", want_table, "include the full outcome table");
  add_common(classify);

  CLI::App* verify = app.add_subcommand("verify", "run self-checks (exit 1 on any failure)");
  verify->add_option("selector", selector,
                     "all, probabilities, lemmas, table-par04, imperfections, or oracle");
  add_common(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "efficiency sweep of the depth-1 scheme");
  sweep->add_option("--eta-s", eta_s_range, "source efficiency value or start:stop:step");
  sweep->add_option("--eta-d", eta_d_range, "detector efficiency value or start:stop:step");
  add_common(sweep);

  CLI::App* dump = app.add_subcommand("dump-network", "print a scheme's unitary");
  dump->add_option("--scheme", scheme, "scheme name")->required();
  add_common(dump);

  CLI::App* tables = app.add_subcommand("tables", "parity signature table of the boosted scheme");
  add_common(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(scheme, input_label, opts);
    if (classify->parsed()) return cmd_classify(scheme, pattern, want_table, opts);
    if (verify->parsed()) return cmd_verify(selector, opts);
    if (sweep->parsed()) return cmd_sweep(eta_s_range, eta_d_range, opts);
    if (dump->parsed()) return cmd_dump_network(scheme, opts);
    if (tables->parsed()) return cmd_tables(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
