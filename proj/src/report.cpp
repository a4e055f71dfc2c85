#include "nakloc/report.hpp"

#include "nakloc/format.hpp"

namespace nakloc {

json localisation_json(const Localisation& loc) {
    const Algebra& a = loc.base;
    std::vector<int> e;
    for (int v : loc.flags.annihilated) e.push_back(v + 1);
    return {
        {"sigma", literals_json(loc.sigma)},
        {"trivial_set", literals_json(loc.trivial)},
        {"w", literals_json(loc.w)},
        {"w_tilde", literals_json(loc.w_tilde)},
        {"collection_mainnak", literals_json(loc.mainnak)},
        {"simples", literals_json(loc.simples)},
        {"xcat", literals_json(loc.xcat)},
        {"B", algebra_json(loc.b())},
        {"AB", literals_json(loc.ab)},
        {"AB_name", sum_name(a, loc.ab)},
        {"dim_AB", loc.dim_ab},
        {"flags",
         {{"injective", loc.flags.injective},
          {"surjective", loc.flags.surjective},
          {"pure", loc.flags.pure},
          {"semisimple", loc.flags.semisimple},
          {"homological", loc.flags.homological},
          {"annihilated", e}}},
    };
}

json stt_json(const Algebra& a, const SupportTauTilting& s) {
    std::vector<int> e;
    for (int v : s.e) e.push_back(v + 1);
    return {{"T", literals_json(s.t)}, {"E", e}, {"name", sum_name(a, s.t)}};
}

json modules_json(const Algebra& a, const ModuleList& m) {
    return {{"modules", literals_json(m)}, {"name", set_name(a, m)}};
}

json verify_json(const VerifyReport& r) {
    json suites = json::object();
    for (const auto& [k, v] : r.suites) suites[k] = {{"checks", v.checks}, {"failures", v.failures}};
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"suite", f.suite}, {"invariant", f.invariant}, {"algebra", f.algebra}, {"detail", f.detail}});
    return {{"algebras", r.algebras.size()}, {"suites", suites}, {"failures", fails}, {"ok", r.ok()}};
}

}  // namespace nakloc
