#pragma once

#include <memory>
#include <string>

#include "hammock/spec_file.hpp"

namespace hammock::testing {

inline std::string fixture_path(const std::string& name) { return std::string(HAMMOCK_FIXTURE_DIR) + "/" + name; }

inline Model load_fixture(const std::string& name) { return load_model_file(fixture_path(name)); }

inline std::shared_ptr<const RelCat> fixture_category(const std::string& name) {
  return load_fixture(name).primary();
}

}  // namespace hammock::testing
