#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "qex/algebra.hpp"

namespace qex::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(QEX_FIXTURE_DIR) + "/" + name;
}

inline QuiverPresentation load_fixture(const std::string& name) {
  return parse_presentation(read_file(fixture_path(name)));
}

inline std::shared_ptr<AlgebraBasis> algebra_fixture(const std::string& name,
                                                     int cap = 30) {
  return std::make_shared<AlgebraBasis>(groebner_basis(load_fixture(name), cap));
}

}  // namespace qex::test
