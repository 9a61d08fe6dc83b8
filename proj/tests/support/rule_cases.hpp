#pragma once

// Hand-annotated rule snippets: for every rule at least one triggering and
// one non-triggering case. `lines` lists the expected result start lines
// under a selection containing only `lint`.

#include <string>
#include <vector>

namespace isarlint::testing {

struct RuleCase {
  std::string lint;
  std::string source;
  std::vector<std::size_t> lines;
};

inline std::string repeat_line(const std::string& line, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) out += line;
  return out;
}

inline const std::vector<RuleCase>& rule_cases() {
  static const std::vector<RuleCase> cases = {
      // apply_isar_switch
      {"apply_isar_switch",
       "lemma x: ‹P›\napply (simp only: foo)\napply safe\nproof -\nqed\n",
       {4}},
      {"apply_isar_switch", "lemma x: ‹P›\nproof -\nqed\n", {}},
      {"apply_isar_switch",
       "lemma a: ‹P›\napply simp\nproof -\nqed\n"
       "lemma b: ‹Q›\napply auto\nproof (cases x)\nqed\n",
       {3, 7}},
      {"apply_isar_switch",
       "lemma a: ‹P›\napply simp\ndone\nlemma b: ‹Q›\nproof -\nqed\n",
       {}},

      // auto_structural_composition
      {"auto_structural_composition", "apply (auto; simp)\ndone\n", {1}},
      {"auto_structural_composition", "apply (simp; auto)\ndone\n", {}},
      {"auto_structural_composition", "apply (auto, simp)\ndone\n", {}},

      // bad_style_command
      {"bad_style_command", "back\n", {1}},
      {"bad_style_command", "apply_end simp\n", {1}},
      {"bad_style_command", "apply simp\n", {}},

      // complex_isar_initial_method
      {"complex_isar_initial_method", "proof (simp add: foo)\n", {1}},
      {"complex_isar_initial_method", "proof (cases n)\n", {}},
      {"complex_isar_initial_method", "proof (rule conjI, simp)\n", {1}},
      {"complex_isar_initial_method", "proof -\n", {}},

      // complex_method
      {"complex_method", "by (simp; auto; force)\n", {1}},
      {"complex_method", "by (simp add: xs)\n", {}},
      {"complex_method", "apply ((simp | auto)+)\n", {1}},
      {"complex_method", "by (cases x) (simp; auto; blast)\n", {1}},

      // counter_example_finder
      {"counter_example_finder", "nitpick\n", {1}},
      {"counter_example_finder", "nitpick [expect = genuine]\n", {}},
      {"counter_example_finder", "nitpick [satisfy]\n", {}},
      {"counter_example_finder", "quickcheck\n", {1}},

      // global_attribute_changes
      {"global_attribute_changes",
       "declare foo[simp]\ndeclare foo[simp del]\n",
       {2}},
      {"global_attribute_changes", "declare foo[simp]\n", {}},
      {"global_attribute_changes",
       "declare foo[simp]\ndeclare foo[cong del]\n",
       {}},

      // global_attribute_on_unnamed_lemma
      {"global_attribute_on_unnamed_lemma", "lemma [simp]: ‹x = x›\n", {1}},
      {"global_attribute_on_unnamed_lemma", "lemma foo[simp]: ‹x = x›\n", {}},
      {"global_attribute_on_unnamed_lemma", "lemma ‹x = x›\n", {}},

      // implicit_rule
      {"implicit_rule", "apply rule\n", {1}},
      {"implicit_rule", "apply (rule conjI)\n", {}},
      {"implicit_rule", "proof rule\n", {1}},

      // lemma_transforming_attribute
      {"lemma_transforming_attribute", "lemmas foo' = foo[simplified]\n",
       {1}},
      {"lemma_transforming_attribute", "lemma foo[simp]: ‹P›\n", {}},
      {"lemma_transforming_attribute", "lemma bar[OF assms]: ‹P›\n", {1}},

      // low_level_apply_chain
      {"low_level_apply_chain", repeat_line("apply (rule exI)\n", 5), {1}},
      {"low_level_apply_chain", repeat_line("apply (rule exI)\n", 4), {}},
      {"low_level_apply_chain", repeat_line("apply (rule exI)\n", 10), {1}},

      // tactic_proofs
      {"tactic_proofs", "apply (subgoal_tac ‹P x›)\n", {1}},
      {"tactic_proofs", "apply (rule_tac x=‹y› in exI)\n", {1}},
      {"tactic_proofs", "apply (rule exI)\n", {}},

      // unrestricted_auto
      {"unrestricted_auto", "apply auto\napply simp\ndone\n", {1}},
      {"unrestricted_auto", "apply auto\ndone\n", {}},
      {"unrestricted_auto", "apply (auto)[1]\napply simp\ndone\n", {}},

      // smt_oracle
      {"smt_oracle", "declare [[smt_oracle]]\n", {1}},
      {"smt_oracle", "declare [[smt_oracle = false]]\n", {}},
      {"smt_oracle", "declare [[show_types]]\n", {}},

      // axiomatization_with_where
      {"axiomatization_with_where", "axiomatization c where ax: ‹P c›\n",
       {1}},
      {"axiomatization_with_where", "axiomatization c :: ‹nat›\n", {}},
      {"axiomatization_with_where", "definition d where ‹d = 1›\n", {}},

      // proof_finder
      {"proof_finder", "sledgehammer\n", {1}},
      {"proof_finder", "try0\n", {1}},
      {"proof_finder", "by simp\n", {}},

      // diagnostic_command
      {"diagnostic_command", "find_theorems ‹_ + _›\n", {1}},
      {"diagnostic_command", "find_consts ‹nat ⇒ nat›\n", {1}},
      {"diagnostic_command", "thm foo\n", {}},

      // use_by
      {"use_by", "apply simp\ndone\n", {1}},
      {"use_by", "apply simp\napply auto\ndone\n", {1}},
      {"use_by", "apply simp\napply auto\napply force\ndone\n", {}},
  };
  return cases;
}

}  // namespace isarlint::testing
