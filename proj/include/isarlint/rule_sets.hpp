#pragma once

// Named constants behind the built-in rules. Every set can be overridden
// through the configuration file so the catalog can be recalibrated
// without touching code.

#include <cstddef>
#include <set>
#include <string>

namespace isarlint {

struct RuleSets {
  std::set<std::string> tactic_methods = {
      "insert",    "subgoal_tac", "rule_tac",  "erule_tac",
      "drule_tac", "frule_tac",   "cut_tac",   "induct_tac",
      "case_tac",  "rotate_tac",  "tactic"};

  std::set<std::string> low_level_methods = {
      "rule", "erule", "drule", "frule", "insert", "subst", "intro", "elim"};

  std::set<std::string> simplifier_methods = {"simp", "simp_all", "auto",
                                              "fastforce", "force"};

  std::set<std::string> bad_style_commands = {"back", "apply_end"};

  std::set<std::string> counterexample_commands = {"nitpick", "quickcheck",
                                                   "nunchaku"};

  std::set<std::string> proof_finder_commands = {"sledgehammer", "try", "try0",
                                                 "solve_direct"};

  std::set<std::string> diagnostic_commands = {"find_theorems", "find_consts"};

  std::set<std::string> transforming_attributes = {
      "simplified", "unfolded", "folded", "rotated",
      "THEN",       "OF",       "of",     "where"};

  // Minimal length of an apply run for low_level_apply_chain.
  std::size_t apply_chain_threshold = 5;
};

}  // namespace isarlint
