#ifndef BELLSIM_SERIALIZE_HPP
#define BELLSIM_SERIALIZE_HPP

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "bellsim/discrimination.hpp"
#include "bellsim/imperfections.hpp"
#include "bellsim/schemes.hpp"
#include "json.hpp"

/*
 * Rendering of exact results for the command-line tool: JSON (ordered keys,
 * so output is byte-stable) and plain text.  Every numeric value is emitted
 * as an {exact, decimal} pair; decimals are fixed 12-digit strings produced
 * by one snprintf path so text and JSON never disagree.
 */
namespace bellsim {

using Json = nlohmann::ordered_json;

inline Json value_json(const Rational& r) {
  return Json{{"exact", rational_str(r)}, {"decimal", fixed12(to_double(r))}};
}

inline Json amplitude_json(const Amplitude& z) {
  auto [re, im] = z.to_complex();
  return Json{{"exact", z.str()}, {"re", fixed12(re)}, {"im", fixed12(im)}};
}

inline Json state_json(const SparseState& state) {
  Json terms = Json::array();
  for (const auto& [pattern, amp] : state.terms) {
    Json term{{"pattern", pattern.str()}, {"amplitude", amplitude_json(amp)}};
    if (state.convention == Convention::Monomial)
      term["probability"] = value_json(probability_of(state, pattern));
    terms.push_back(std::move(term));
  }
  return Json{{"modes", state.mode_count},
              {"convention", state.convention == Convention::Monomial ? "monomial" : "fock"},
              {"term_count", state.terms.size()},
              {"total_probability",
               state.convention == Convention::Monomial ? value_json(total_probability(state))
                                                        : Json()},
              {"terms", std::move(terms)}};
}

inline std::string state_text(const SparseState& state) {
  std::string out;
  for (const auto& [pattern, amp] : state.terms) {
    out += "  (" + pattern.str() + ")  " + amp.str();
    if (state.convention == Convention::Monomial)
      out += "   p = " + rational_str(probability_of(state, pattern));
    out += "\n";
  }
  if (state.convention == Convention::Monomial)
    out += "  total probability = " + rational_str(total_probability(state)) + "\n";
  return out;
}

inline Json verdict_json(const Verdict& v) {
  Json labels = Json::array();
  for (const auto& l : v.labels) labels.push_back(l);
  return Json{{"verdict", v.str()}, {"labels", std::move(labels)}};
}

inline Json success_map_json(const std::map<std::string, Rational>& m) {
  Json out;
  for (const auto& [label, p] : m) out[label] = value_json(p);
  return out;
}

inline Json network_json(const Interferometer& net) {
  Json rows = Json::array();
  for (int j = 1; j <= net.modes; ++j) {
    Json row = Json::array();
    for (int k = 1; k <= net.modes; ++k) row.push_back(net.entry(j, k).str());
    rows.push_back(std::move(row));
  }
  return Json{{"modes", net.modes}, {"unitary", net.is_unitary()}, {"matrix", std::move(rows)}};
}

inline std::string network_text(const Interferometer& net) {
  std::string out;
  for (int j = 1; j <= net.modes; ++j) {
    out += "  row " + std::to_string(j) + ":";
    for (int k = 1; k <= net.modes; ++k) out += "  " + net.entry(j, k).str();
    out += "\n";
  }
  return out;
}

// Full outcome table of a brute-force classifier: one entry per reachable
// pattern with its verdict and each candidate's probability of producing it.
inline Json classifier_table_json(const Classifier& c) {
  Json rows = Json::array();
  for (const auto& [pattern, labels] : c.table) {
    Verdict v = c.classify(pattern);
    Json probs;
    for (const auto& [label, state] : c.evolved) {
      Rational p = probability_of(state, pattern);
      if (p != 0) probs[label] = value_json(p);
    }
    rows.push_back(Json{{"pattern", pattern.str()},
                        {"verdict", v.str()},
                        {"probabilities", std::move(probs)}});
  }
  return rows;
}

inline Json scheme_json(const SchemeSpec& s) {
  Json cands = Json::array();
  for (const auto& [label, state] : s.candidates)
    cands.push_back(Json{{"label", label}, {"term_count", state.terms.size()}});
  return Json{{"name", s.name},
              {"modes", s.mode_count},
              {"photon_budget", s.photon_budget},
              {"ancillae", s.ancilla_desc},
              {"classifier_policy", classifier_policy_str(s.policy)},
              {"candidates", std::move(cands)}};
}

inline Json imperfection_report_json(const ImperfectionParams& params,
                                     const ImperfectionReport& rep) {
  return Json{{"eta_s", value_json(params.source_efficiency)},
              {"eta_d", value_json(params.detector_efficiency)},
              {"success", success_map_json(rep.success)},
              {"misidentified", success_map_json(rep.misidentified)},
              {"inconclusive", success_map_json(rep.inconclusive)},
              {"average_success", value_json(rep.average)},
              {"simple_baseline", value_json(rep.baseline)}};
}

inline std::string sweep_csv_header() {
  return "eta_s,eta_d,p_psi_plus,p_psi_minus,p_phi_plus,p_phi_minus,p_total,"
         "p_simple_baseline,above_baseline";
}

inline std::string sweep_csv_row(const SweepRow& row) {
  std::string out = fixed12(to_double(row.eta_s)) + "," + fixed12(to_double(row.eta_d));
  for (const auto& label : bell_labels())
    out += "," + fixed12(to_double(row.success.at(label)));
  out += "," + fixed12(to_double(row.total)) + "," + fixed12(to_double(row.baseline)) + "," +
         (row.above_baseline ? "true" : "false");
  return out;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = sweep_csv_header() + "\n";
  for (const auto& row : rows) out += sweep_csv_row(row) + "\n";
  return out;
}

inline Json sweep_json(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json obj{{"eta_s", value_json(row.eta_s)}, {"eta_d", value_json(row.eta_d)}};
    obj["success"] = success_map_json(row.success);
    obj["total"] = value_json(row.total);
    obj["simple_baseline"] = value_json(row.baseline);
    obj["above_baseline"] = row.above_baseline;
    arr.push_back(std::move(obj));
  }
  return arr;
}

inline Json parity_table_json() {
  Json rows = Json::array();
  for (const auto& row : output_parity_table())
    rows.push_back(Json{{"component", row.component},
                        {"mass", value_json(row.mass)},
                        {"parity_1_3", parity_class_str(row.n13)},
                        {"parity_2_3", parity_class_str(row.n23)}});
  return rows;
}

inline std::string parity_table_text() {
  std::string out;
  for (const auto& row : output_parity_table()) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-68s  mass %-6s  n(1,3) %-6s  n(2,3) %s\n",
                  row.component.c_str(), rational_str(row.mass).c_str(),
                  parity_class_str(row.n13).c_str(), parity_class_str(row.n23).c_str());
    out += buf;
  }
  return out;
}

}  // namespace bellsim

#endif
