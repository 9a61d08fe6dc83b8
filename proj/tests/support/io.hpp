#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace isarlint::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string read_file_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string read_fixture(const std::string& name) {
  return read_file_or_throw(fixture_path(name));
}

}  // namespace isarlint::testing
