#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parakov/dspace.hpp"
#include "parakov/galois.hpp"
#include "parakov/kovacic.hpp"

namespace parakov {

// One closed-form solution, as an ordered list of printable fields. The
// first field is always ("type", ...). min_poly is set only for the
// algebraic type and is rendered as a coefficient list.
struct SolutionRecord {
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> min_poly;
};

struct Report {
  int case_id = 4;
  std::vector<std::string> screen;
  std::vector<SolutionRecord> solutions;
  bool has_group = false;
  GroupDescription group;
  bool has_dspace = false;
  DSpace dspace;
  std::vector<std::string> diagnostics;
};

// Classifies Y'' = r Y, collects verified solution certificates, and when
// requested the parameterized group description and the integrability space.
// The group for the dense case depends on the integrability dimension, so
// want_group implies the space is computed for case 4.
Report run_pipeline(const RatFunc& r, bool want_group, bool want_dspace);

// Deterministic serializations: same report, same bytes.
std::string report_to_json(const Report& rep);
std::string report_to_text(const Report& rep);

}  // namespace parakov
