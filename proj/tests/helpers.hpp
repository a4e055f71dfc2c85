#pragma once

#include <doctest.h>

#include "nakloc/format.hpp"
#include "nakloc/verify.hpp"

namespace nakloc::test {

inline ModuleList mods(const Algebra& a, const std::string& s) { return parse_module_list(a, s); }
inline Indec mod(const Algebra& a, const std::string& s) { return parse_module(a, s); }

// A smaller battery for unit-level property tests; the full one runs in `verify`.
inline const std::vector<Algebra>& small_battery() {
    static const auto b = battery(4, 4);
    return b;
}

}  // namespace nakloc::test
