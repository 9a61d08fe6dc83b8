#pragma once

// Lint store: the repository of registered lints and bundles, selection
// resolution, and the per-document linting driver. The store is populated
// at startup and read-only afterwards.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "isarlint/lint.hpp"

namespace isarlint {

struct DuplicateLintError : std::runtime_error {
  explicit DuplicateLintError(const std::string& name)
      : std::runtime_error("lint already registered: " + name) {}
};

struct UnknownLintError : std::runtime_error {
  explicit UnknownLintError(const std::string& name)
      : std::runtime_error("unknown lint: " + name) {}
};

struct UnknownBundleError : std::runtime_error {
  explicit UnknownBundleError(const std::string& name)
      : std::runtime_error("unknown bundle: " + name) {}
};

struct Bundle {
  std::string name;
  std::vector<std::string> lints;  // non-empty, each a registered lint
};

// The resolved set of active lints.
struct Selection {
  std::set<std::string> active;

  bool contains(const std::string& name) const {
    return active.contains(name);
  }
};

class LintStore {
 public:
  void register_lint(std::shared_ptr<const Lint> lint) {
    const std::string& name = lint->descriptor().name;
    if (lints_.contains(name)) throw DuplicateLintError(name);
    lints_.emplace(name, std::move(lint));
  }

  void register_bundle(Bundle bundle) {
    if (bundle.lints.empty())
      throw std::invalid_argument("empty bundle: " + bundle.name);
    for (const std::string& member : bundle.lints)
      if (!lints_.contains(member)) throw UnknownLintError(member);
    bundles_[bundle.name] = std::move(bundle);
  }

  const Lint* find(const std::string& name) const {
    auto it = lints_.find(name);
    return it == lints_.end() ? nullptr : it->second.get();
  }

  const Bundle* find_bundle(const std::string& name) const {
    auto it = bundles_.find(name);
    return it == bundles_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return lints_.size(); }

  std::vector<std::string> lint_names() const {
    std::vector<std::string> names;
    for (const auto& [name, lint] : lints_) names.push_back(name);
    return names;  // map order: already sorted
  }

  std::vector<std::string> bundle_names() const {
    std::vector<std::string> names;
    for (const auto& [name, bundle] : bundles_) names.push_back(name);
    return names;
  }

 private:
  std::map<std::string, std::shared_ptr<const Lint>> lints_;
  std::map<std::string, Bundle> bundles_;
};

inline constexpr std::string_view kDefaultBundle = "default";

// Union of the bundle members and `enable`, minus `disable`. With no
// bundles and nothing enabled the `default` bundle applies.
inline Selection resolve_selection(const LintStore& store,
                                   const std::vector<std::string>& bundles,
                                   const std::vector<std::string>& enable,
                                   const std::vector<std::string>& disable) {
  Selection selection;
  std::vector<std::string> bundle_names = bundles;
  if (bundles.empty() && enable.empty())
    bundle_names.push_back(std::string(kDefaultBundle));
  for (const std::string& name : bundle_names) {
    const Bundle* bundle = store.find_bundle(name);
    if (!bundle) throw UnknownBundleError(name);
    selection.active.insert(bundle->lints.begin(), bundle->lints.end());
  }
  for (const std::string& name : enable) {
    if (!store.find(name)) throw UnknownLintError(name);
    selection.active.insert(name);
  }
  for (const std::string& name : disable) {
    if (!store.find(name)) throw UnknownLintError(name);
    selection.active.erase(name);
  }
  return selection;
}

// Runs every selected lint over the document. Lints never abort the run:
// a throwing lint simply contributes nothing.
inline Report lint_document(const TheoryDocument& doc,
                            const Selection& selection,
                            const LintStore& store) {
  Report report;
  report.path = doc.path;
  report.sloc = doc.sloc;
  for (const std::string& name : selection.active) {
    const Lint* lint = store.find(name);
    if (!lint) continue;
    std::vector<LintResult> results;
    try {
      lint->check(doc, results);
    } catch (const std::exception&) {
      continue;  // robustness contract
    }
    report.results.insert(report.results.end(),
                          std::make_move_iterator(results.begin()),
                          std::make_move_iterator(results.end()));
  }
  std::sort(report.results.begin(), report.results.end(), result_order);
  return report;
}

}  // namespace isarlint
