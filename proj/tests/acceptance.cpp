// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nakloc/arcs.hpp"
#include "nakloc/format.hpp"
#include "nakloc/oracle.hpp"
#include "nakloc/tautilt.hpp"
#include "nakloc/verify.hpp"
#include "tables.hpp"

using namespace nakloc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
    }
};

ModuleList mods(const Algebra& a, const std::string& s) { return parse_module_list(a, s); }

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool hereditary(const Algebra& a) {
    for (int v = 0; v < a.num_vertices(); ++v)
        if (auto pd = proj_dim(a, a.simple(v)); !pd || *pd > 1) return false;
    return true;
}

const std::vector<Algebra>& audit_battery() {
    static const auto b = battery(5, 5);
    return b;
}

Outcome line32_at_s2() {
    Outcome o;
    auto a = build_line(3, 2);
    auto loc = canonicalise(a, mods(a, "S2"));
    o.require(loc.ab == ModuleList{{0, 1}, {1, 2}, {1, 2}}, "AB = " + sum_name(a, loc.ab));
    o.require(loc.dim_ab == 5, "dim AB = " + std::to_string(loc.dim_ab));
    o.require(loc.b() == from_kupisch({{Shape::line, {1}}, {Shape::line, {1}}}), "B = " + algebra_spec(loc.b()));
    o.require(!loc.flags.injective, "injective");
    o.require(loc.flags.pure, "not pure");
    return o;
}

Outcome cycle33_rows() {
    Outcome o;
    auto a = build_cycle(3, 3);
    auto stt = enumerate_stt(a);
    std::set<SupportTauTilting> tau;
    for (const auto& s : stt)
        if (s.e.empty()) tau.insert(s);
    o.require(stt.size() == 20, "#stt = " + std::to_string(stt.size()));
    o.require(tau.size() == 10, "#τ-tilting = " + std::to_string(tau.size()));
    int pure = 0;
    for (const auto& l : enumerate_uniloc(a)) pure += l.flags.pure;
    o.require(pure == 10, "#pure = " + std::to_string(pure));
    std::set<SupportTauTilting> listed;
    for (const auto& [t, sp] : nakloc::test::cycle33_table()) {
        SupportTauTilting s{mods(a, t), {}};
        listed.insert(s);
        o.require(tau.count(s) == 1, t + " is not τ-tilting");
        o.require(sigma_prime(a, s) == mods(a, sp), "Σ′(" + t + ") = " + set_name(a, sigma_prime(a, s)));
    }
    o.require(listed == tau, "table rows differ from the τ-tilting modules");
    return o;
}

Outcome cycle63_homological() {
    Outcome o;
    auto a = build_cycle(6, 3);
    auto locs = enumerate_uniloc(a);
    auto cls = classify_homological_selfinjective(a);
    std::vector<ModuleList> expected_cycles = {mods(a, "S1,S4"), mods(a, "S2,S5"), mods(a, "S3,S6")};

    // non-empty orthogonal collections of projectives, counted directly
    int proj_collections = 0;
    for (int mask = 1; mask < 64; ++mask) {
        ModuleList c;
        for (int v = 0; v < 6; ++v)
            if (mask >> v & 1) c.push_back(a.projective(v));
        proj_collections += is_orth_collection(a, c);
    }

    int identity = 0, zero = 0, semisimple = 0, cycles = 0, other = 0;
    for (const auto& l : locs) {
        const bool h = is_homological(l);
        bool in_cls = false;
        for (const auto& c : cls) in_cls = in_cls || c.same_epiclass(l);
        o.require(h == in_cls, "is_homological disagrees with the classification at " + set_name(a, l.trivial));
        if (!h) continue;
        bool all_proj = !l.simples.empty();
        for (const auto& s : l.simples) all_proj = all_proj && a.is_projective(s);
        if (l.trivial.empty())
            ++identity;
        else if (l.xcat.empty())
            ++zero;
        else if (l.flags.semisimple && all_proj)
            ++semisimple;
        else if (std::find(expected_cycles.begin(), expected_cycles.end(), l.w) != expected_cycles.end()) {
            ++cycles;
            o.require(isomorphic(l.b(), build_cycle(4, 2)), "B = " + algebra_spec(l.b()));
        } else {
            ++other;
        }
    }
    o.require(identity == 1 && zero == 1, "identity/zero not both homological");
    o.require(semisimple == proj_collections, "semisimple part: " + std::to_string(semisimple) + " vs " +
                                                  std::to_string(proj_collections));
    o.require(cycles == 3, "localisations onto Ã_4^2: " + std::to_string(cycles));
    o.require(other == 0, std::to_string(other) + " unexpected homological localisations");
    return o;
}

Outcome counting_laws() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        const auto cyc = enumerate_uniloc(build_cycle(n, n)).size();
        o.require(static_cast<long long>(cyc) == binom(2 * n, n), "#uniloc Ã_" + std::to_string(n));
        o.require(enumerate_uniloc(build_cycle(n, n + 1)).size() == cyc, "count depends on h");
        const long long catalan = binom(2 * n + 2, n + 1) / (n + 2);
        o.require(static_cast<long long>(enumerate_uniloc(build_line(n, n)).size()) == catalan,
                  "#uniloc A_" + std::to_string(n));
        o.require(static_cast<long long>(enumerate_support_tilting_classical(build_line(n, n)).size()) == catalan,
                  "#support tilting A_" + std::to_string(n));
        int nonzero = 0;
        for (const auto& l : enumerate_uniloc(build_cycle(n, n))) nonzero += is_homological(l) && !l.xcat.empty();
        o.require(nonzero == (1 << n) - 1, "#homological Ã_" + std::to_string(n) + " = " + std::to_string(nonzero));
    }
    return o;
}

std::set<std::pair<std::string, std::string>> labelled_edges(const HasseQuiver& q) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [i, j] : q.edges) out.insert({q.labels[i], q.labels[j]});
    return out;
}

Outcome a2_hasse() {
    Outcome o;
    auto a = build_line(2, 2);
    auto stt = hasse_stt(a);
    std::set<std::string> stt_nodes(stt.labels.begin(), stt.labels.end());
    o.require(stt_nodes == std::set<std::string>{"P1+P2", "P1+S1", "P2", "S1", "0"}, "stt nodes");
    o.require(labelled_edges(stt) == std::set<std::pair<std::string, std::string>>{{"P1+P2", "P1+S1"},
                                                                                   {"P1+S1", "S1"},
                                                                                   {"S1", "0"},
                                                                                   {"P1+P2", "P2"},
                                                                                   {"P2", "0"}},
              "stt edges");
    auto uni = hasse_uniloc(a);
    std::set<std::string> uni_nodes(uni.labels.begin(), uni.labels.end());
    o.require(uni_nodes == std::set<std::string>{"{0}", "{S1}", "{P1}", "{P2}", "{P1,P2,S1}"}, "uniloc nodes");
    o.require(labelled_edges(uni) == std::set<std::pair<std::string, std::string>>{{"{0}", "{S1}"},
                                                                                   {"{0}", "{P1}"},
                                                                                   {"{0}", "{P2}"},
                                                                                   {"{S1}", "{P1,P2,S1}"},
                                                                                   {"{P1}", "{P1,P2,S1}"},
                                                                                   {"{P2}", "{P1,P2,S1}"}},
              "uniloc edges");
    // T_2 = S_1 ≤ T_1 = P_1+S_1, yet their localisations are incomparable
    SupportTauTilting t1{mods(a, "P1,S1"), {}}, t2{mods(a, "S1"), {1}};
    o.require(is_subset(torsion_from_stt(a, t2), torsion_from_stt(a, t1)), "T_2 ≤ T_1 fails");
    auto l1 = psi(a, t1), l2 = psi(a, t2);
    o.require(l1.trivial == mods(a, "S1") && l2.trivial == mods(a, "P2"), "Ψ(T_1), Ψ(T_2)");
    o.require(!is_subset(l1.trivial, l2.trivial) && !is_subset(l2.trivial, l1.trivial), "localisations comparable");
    return o;
}

Outcome bijection_audit() {
    Outcome o;
    for (const auto& a : audit_battery()) {
        const std::string name = algebra_spec(a);
        auto orth = enumerate_orth_collections(a);
        auto wide = enumerate_wide(a);
        auto tors = enumerate_torsion_classes(a);
        auto stt = enumerate_stt(a);
        auto locs = enumerate_uniloc(a);
        o.require(orth.size() == wide.size() && wide.size() == tors.size() && tors.size() == stt.size() &&
                      stt.size() == locs.size(),
                  "counts differ over " + name);
        for (const auto& t : tors) o.require(beta(a, alpha(a, t)) == t, "β∘α over " + name);
        for (const auto& c : wide) o.require(alpha(a, beta(a, c)) == c, "α∘β over " + name);
        for (const auto& s : stt) {
            auto l = psi(a, s);
            o.require(psi_inverse(a, l) == s, "Ψ⁻¹∘Ψ over " + name);
            o.require(l.flags.pure == s.e.empty(), "purity over " + name);
            o.require(l.flags.annihilated == s.e, "annihilated vertices over " + name);
            o.require(canonicalise(a, sigma_prime(a, s)).same_epiclass(l), "Σ′ over " + name);
        }
        for (const auto& l : locs) {
            o.require(psi(a, psi_inverse(a, l)).same_epiclass(l), "Ψ∘Ψ⁻¹ over " + name);
            o.require(sigma_star(a, lower_star(a, l.xcat)) == l.xcat, "fixpoint over " + name);
            std::vector<int> killed = l.flags.annihilated;
            auto q = quotient_by_vertices(a, killed);
            ModuleList quotient_mods;
            for (const auto& x : list_indecomposables(q.algebra)) quotient_mods.push_back(q.embed(x));
            normalize(quotient_mods);
            o.require(l.flags.surjective == (l.xcat == quotient_mods), "surjectivity over " + name);
        }
    }
    return o;
}

Outcome syzygy_law() {
    Outcome o;
    for (const auto& a : audit_battery()) {
        const auto& comps = a.components();
        if (comps.size() != 1 || comps[0].shape != Shape::cycle) continue;
        const int n = a.num_vertices(), h = a.loewy(0);
        bool uniform = true;
        for (int v = 0; v < n; ++v) uniform = uniform && a.loewy(v) == h;
        if (!uniform || n < 2) continue;
        for (const auto& m : list_indecomposables(a)) {
            if (a.is_projective(m)) continue;
            MaybeIndec cur = m;
            for (int z = 1; z <= 2 * n + 2; ++z) {
                cur = syzygy(a, *cur);
                const bool back = cur == MaybeIndec(m);
                o.require(back == syzygy_returns(n, h, m.length, z),
                          "Ω^" + std::to_string(z) + " " + literal(m) + " over " + algebra_spec(a));
                if (back) o.require(ext_dim(a, m, m, z) == 1, "Ext^" + std::to_string(z) + " " + literal(m));
            }
        }
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (const auto& a : audit_battery()) {
        auto ind = list_indecomposables(a);
        std::vector<oracle::Rep> reps;
        for (const auto& x : ind) reps.push_back(oracle::realize(a, x));
        for (std::size_t i = 0; i < ind.size(); ++i)
            for (std::size_t j = 0; j < ind.size(); ++j) {
                o.require(hom_dim(a, ind[i], ind[j]) == oracle::hom_dim_lin(a, reps[i], reps[j]),
                          "Hom over " + algebra_spec(a));
                o.require(ext_dim(a, ind[i], ind[j], 1) == oracle::ext1_dim_lin(a, ind[i], ind[j]),
                          "Ext¹ over " + algebra_spec(a));
            }
    }
    auto a = build_line(3, 2);
    auto loc = canonicalise(a, mods(a, "S2"));
    o.require(oracle::end_dim_lin(a, loc.ab) == 5, "End(AB) over A_3^2");
    return o;
}

Outcome gldim_law() {
    Outcome o;
    for (int n = 3; n <= 8; ++n)
        for (int h = 2; h < n; ++h) {
            const int x = n / h, r = n % h;
            const int expected = r == 0 ? 2 * x - 1 : r == 1 ? 2 * x : 2 * x + 1;
            auto pd = proj_dim(build_line(n, h), Indec{0, 1});
            o.require(pd && *pd == expected, "pd(S_1) over A_" + std::to_string(n) + "^" + std::to_string(h));
        }
    return o;
}

Outcome line32_tilting() {
    Outcome o;
    auto a = build_line(3, 2);
    auto t = mods(a, "P2,P1,S2");
    o.require(is_tilting_classical(a, t), "T is not tilting");
    auto loc = psi(a, {t, {}});
    o.require(loc.same_epiclass(canonicalise(a, mods(a, "S2"))), "Ψ(T) is not the localisation at S_2");
    o.require(!loc.flags.injective, "Ψ(T) injective");
    for (const auto& l : enumerate_uniloc(a))
        o.require(l.flags.injective == l.trivial.empty(), "injective localisation at " + set_name(a, l.trivial));
    return o;
}

Outcome hereditary_ab() {
    Outcome o;
    int checked = 0;
    for (const auto& a : audit_battery()) {
        if (!hereditary(a)) continue;
        for (const auto& l : enumerate_uniloc(a)) {
            if (!l.flags.pure) continue;
            ++checked;
            auto add = normalized(set_union(normalized(l.ab), unit_cokernel_summands(l)));
            auto t = psi_inverse(a, l).t;
            o.require(add == t, algebra_spec(a) + ": " + sum_name(a, add) + " vs " + sum_name(a, t));
        }
    }
    o.require(checked > 0, "no hereditary members");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_ms;  // 0 = no limit
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 A_3^2 localised at S_2", 1, line32_at_s2},
        {"2 Ã_3^3 counts and table", 1000, cycle33_rows},
        {"3 Ã_6^3 homological classification", 10000, cycle63_homological},
        {"4 counting laws", 30000, counting_laws},
        {"5 Hasse quivers of A_2", 0, a2_hasse},
        {"6 bijection audit", 120000, bijection_audit},
        {"7 syzygy periodicity", 0, syzygy_law},
        {"8 oracle equivalence", 0, oracle_equivalence},
        {"9 global dimension", 0, gldim_law},
        {"10 tilting module of A_3^2", 0, line32_tilting},
        {"11 hereditary AB + cokernel = T", 0, hereditary_ab},
    };
    audit_battery();  // built once, outside the timings
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && c.budget_ms > 0 && ms > c.budget_ms) {
            o.ok = false;
            o.detail = "over budget";
        }
        failed += !o.ok;
        std::printf("%s  %-40s %10.3f ms%s%s\n", o.ok ? "PASS" : "FAIL", c.name, ms, o.ok ? "" : "  ", o.detail.c_str());
    }
    return failed ? 1 : 0;
}
