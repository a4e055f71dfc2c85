#pragma once

#include <string>

#include <json.hpp>

#include "nakloc/algebra.hpp"

namespace nakloc {

using json = nlohmann::json;

// `line:n,h` | `cycle:n,h` | `kupisch:line=2,2,1;cycle=3,3` | JSON object.
Algebra parse_algebra(const std::string& text);
std::string algebra_spec(const Algebra& a);
json algebra_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

// Accepts M(a,t), Pa, Sa (1-based), separated by ',' or '+'.
Indec parse_module(const Algebra& a, const std::string& text);
ModuleList parse_module_list(const Algebra& a, const std::string& text);

std::string literal(const Indec& x);
std::string short_name(const Algebra& a, const Indec& x);
std::string sum_name(const Algebra& a, const ModuleList& m);  // P1+P3+S1, or 0
std::string set_name(const Algebra& a, const ModuleList& m);  // {P1,S1}, or {0}
std::string vertex_set_name(const std::vector<int>& vs);      // {1,3}

json module_json(const Indec& x);
Indec module_from_json(const Algebra& a, const json& j);
json literals_json(const ModuleList& m);

}  // namespace nakloc
