/* report_json.hh -- structured (JSON) forms of the analysis reports and
 * machine traces, shared by the CLI and the tests. */

#ifndef SEMITHUE_REPORT_JSON_HH_
#define SEMITHUE_REPORT_JSON_HH_

#include <json.hpp>

#include "semithue/analysis.hh"

namespace semithue {

using nlohmann::json;

inline void to_json(json& j, const DeterminacyReport& r) {
  j = json{{"pass", r.pass},
           {"states_checked", r.states_checked},
           {"collapses_checked", r.collapses_checked},
           {"complete", r.complete},
           {"counterexample", r.counterexample}};
}

inline void from_json(const json& j, DeterminacyReport& r) {
  j.at("pass").get_to(r.pass);
  j.at("states_checked").get_to(r.states_checked);
  j.at("collapses_checked").get_to(r.collapses_checked);
  j.at("complete").get_to(r.complete);
  j.at("counterexample").get_to(r.counterexample);
}

inline void to_json(json& j, const IsomorphismReport::LayerResult& r) {
  j = json{{"string_nodes", r.string_nodes},
           {"machine_nodes", r.machine_nodes},
           {"bijective", r.bijective}};
}

inline void from_json(const json& j, IsomorphismReport::LayerResult& r) {
  j.at("string_nodes").get_to(r.string_nodes);
  j.at("machine_nodes").get_to(r.machine_nodes);
  j.at("bijective").get_to(r.bijective);
}

inline void to_json(json& j, const IsomorphismReport& r) {
  j = json{{"depth_checked", r.depth_checked}, {"layers", r.layers},
           {"edges_matched", r.edges_matched}, {"edges_unmatched", r.edges_unmatched},
           {"pass", r.pass},                   {"complete", r.complete},
           {"counterexample", r.counterexample}};
}

inline void from_json(const json& j, IsomorphismReport& r) {
  j.at("depth_checked").get_to(r.depth_checked);
  j.at("layers").get_to(r.layers);
  j.at("edges_matched").get_to(r.edges_matched);
  j.at("edges_unmatched").get_to(r.edges_unmatched);
  j.at("pass").get_to(r.pass);
  j.at("complete").get_to(r.complete);
  j.at("counterexample").get_to(r.counterexample);
}

inline void to_json(json& j, const LanguageComparison& c) {
  j = json{{"generated", c.generated},
           {"leftmost", c.leftmost},
           {"full", c.full},
           {"recognized", c.recognized},
           {"extended_generated", c.extended_generated},
           {"extended_recognized", c.extended_recognized},
           {"generated_complete", c.generated_complete},
           {"leftmost_complete", c.leftmost_complete},
           {"full_complete", c.full_complete},
           {"recognized_complete", c.recognized_complete},
           {"extended_generated_complete", c.extended_generated_complete},
           {"extended_recognized_complete", c.extended_recognized_complete}};
}

inline void from_json(const json& j, LanguageComparison& c) {
  j.at("generated").get_to(c.generated);
  j.at("leftmost").get_to(c.leftmost);
  j.at("full").get_to(c.full);
  j.at("recognized").get_to(c.recognized);
  j.at("extended_recognized").get_to(c.extended_recognized);
  j.at("extended_generated").get_to(c.extended_generated);
  j.at("generated_complete").get_to(c.generated_complete);
  j.at("leftmost_complete").get_to(c.leftmost_complete);
  j.at("full_complete").get_to(c.full_complete);
  j.at("recognized_complete").get_to(c.recognized_complete);
  j.at("extended_generated_complete").get_to(c.extended_generated_complete);
  j.at("extended_recognized_complete").get_to(c.extended_recognized_complete);
}

/// One trace record: move id, production rendered or "-", tape snapshot.
inline json trace_record_json(const Grammar& g, const TraceRecord& r) {
  return json{{"move", r.move},
              {"production",
               r.production >= 0 ? g.render(g.productions()[r.production]) : "-"},
              {"top", render_tape(g, r.state.top)},
              {"middle", render_tape(g, r.state.middle)},
              {"bottom", render_tape(g, r.state.bottom)}};
}

inline json trace_json(const Grammar& g, const std::vector<TraceRecord>& trace) {
  json records = json::array();
  for (const TraceRecord& r : trace) records.push_back(trace_record_json(g, r));
  return records;
}

}  // namespace semithue

#endif  // SEMITHUE_REPORT_JSON_HH_
