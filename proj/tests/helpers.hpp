#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include <doctest.h>

#include "parakov/expr.hpp"
#include "parakov/param_elem.hpp"
#include "parakov/ratfunc.hpp"

namespace parakov::testing {

inline FieldPtr field(std::initializer_list<std::string> params = {}) {
  return std::make_shared<Field>(std::vector<std::string>(params));
}

inline RatFunc rf(const std::string& text, const FieldPtr& fld) {
  return parse_expr(text, fld);
}

inline ParamElem pe(const std::string& text, const FieldPtr& fld) {
  RatFunc f = parse_expr(text, fld);
  REQUIRE(f.is_constant());
  return f.constant_value();
}

}  // namespace parakov::testing
