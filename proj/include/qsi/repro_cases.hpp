#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsi/catalog.hpp"
#include "qsi/decide.hpp"

namespace qsi {

struct CaseAssertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ReproCaseResult {
  std::string id;
  std::vector<CaseAssertion> assertions;

  bool passed() const;
};

const std::vector<std::string>& repro_case_ids();

/// Throws NotFound for an unknown id.
ReproCaseResult run_repro_case(std::string_view id, const Catalog& catalog, SearchBounds bounds = {});

} // namespace qsi
