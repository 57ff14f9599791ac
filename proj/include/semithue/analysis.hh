/* analysis.hh -- empirical verification: determinacy of the non-5 move
 * continuation, the string-graph/machine-graph isomorphism, and side-by-side
 * language comparisons. */

#ifndef SEMITHUE_ANALYSIS_HH_
#define SEMITHUE_ANALYSIS_HH_

#include <set>
#include <string>
#include <vector>

#include "semithue/machine.hh"
#include "semithue/transforms.hh"

namespace semithue {

struct DeterminacyReport {
  bool pass = true;
  int states_checked = 0;
  int collapses_checked = 0;
  bool complete = true;
  std::string counterexample;  // empty when pass
};

/// Explores the generative machine of a prepared grammar and verifies, for
/// every reached decision state and applicable production, that the non-5
/// continuation is unique, loop-free, and ends move-5-enabled or halted.
DeterminacyReport check_determinacy(const Grammar& prepared, const Bounds& bounds);

struct IsomorphismReport {
  int depth_checked = 0;
  struct LayerResult {
    int string_nodes = 0;
    int machine_nodes = 0;
    bool bijective = false;
  };
  std::vector<LayerResult> layers;
  int edges_matched = 0;
  int edges_unmatched = 0;
  bool pass = false;
  bool complete = true;  // both graphs exhausted within bounds
  std::string counterexample;
};

/// Compares the leftmost reduction graph rooted at the initial string with
/// the collapsed-transition graph rooted at the post-move-1 machine state:
/// the string-to-state encoding must map layer i onto layer i injectively,
/// and edges must correspond (same production label) in both directions.
IsomorphismReport check_isomorphism(const Grammar& prepared, int depth,
                                    const Bounds& bounds);

struct LanguageComparison {
  std::set<std::string> generated;   // generative machine on prepare(g)
  std::set<std::string> leftmost;    // oracle
  std::set<std::string> full;        // oracle
  std::set<std::string> recognized;  // recognitive machine over full sentences
  std::set<std::string> extended_generated;
  std::set<std::string> extended_recognized;
  bool generated_complete = true;
  bool leftmost_complete = true;
  bool full_complete = true;
  bool recognized_complete = true;
  bool extended_generated_complete = true;
  bool extended_recognized_complete = true;
};

/// Fills all six sets: oracle enumerations on g, machine runs on prepare(g),
/// and recognition verdicts over every full-language sentence found within
/// bounds. Sentences are rendered as space-separated symbol names so the
/// sets are comparable across the two grammars.
LanguageComparison compare_languages(const Grammar& g, const Bounds& bounds);

}  // namespace semithue

#endif  // SEMITHUE_ANALYSIS_HH_
