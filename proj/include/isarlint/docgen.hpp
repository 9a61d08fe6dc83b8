#pragma once

// Markdown documentation for the registered lints and bundles.

#include <string>

#include "isarlint/store.hpp"

namespace isarlint {

inline std::string generate_docs(const LintStore& store) {
  std::string out = "# Lints\n";
  for (const std::string& name : store.lint_names()) {
    const LintDescriptor& descriptor = store.find(name)->descriptor();
    out += "\n## " + name + "\n\n";
    out += "- severity: " + std::string(to_string(descriptor.severity)) + "\n";
    out += "- abstraction: " +
           std::string(to_string(descriptor.abstraction)) + "\n\n";
    out += descriptor.short_description + ".\n";
    if (!descriptor.long_description.empty())
      out += "\n" + descriptor.long_description + "\n";
  }
  out += "\n# Bundles\n";
  for (const std::string& name : store.bundle_names()) {
    const Bundle* bundle = store.find_bundle(name);
    out += "\n## " + name + "\n\n";
    out += "| lint | severity |\n|------|----------|\n";
    for (const std::string& member : bundle->lints) {
      const LintDescriptor& descriptor = store.find(member)->descriptor();
      out += "| " + member + " | " +
             std::string(to_string(descriptor.severity)) + " |\n";
    }
  }
  return out;
}

}  // namespace isarlint
