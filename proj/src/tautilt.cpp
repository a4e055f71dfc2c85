#include "nakloc/tautilt.hpp"

#include <algorithm>
#include <functional>

#include "nakloc/format.hpp"

namespace nakloc {

namespace {

bool tau_compatible(const Algebra& a, const Indec& x, const Indec& y) {
    if (!a.is_projective(y) && hom_dim(a, x, tau(a, y))) return false;
    if (!a.is_projective(x) && hom_dim(a, y, tau(a, x))) return false;
    return true;
}

bool ext_compatible(const Algebra& a, const Indec& x, const Indec& y) {
    return ext_dim(a, x, y, 1) == 0 && ext_dim(a, y, x, 1) == 0;
}

// For every killed set E, all subsets of size |A/AeA| of pairwise compatible
// modules over A/AeA that pass `self`.
std::vector<SupportTauTilting> brute_force(const Algebra& a,
                                           const std::function<bool(const Algebra&, const Indec&)>& self,
                                           const std::function<bool(const Algebra&, const Indec&, const Indec&)>& pair) {
    const int n = a.num_vertices();
    std::vector<SupportTauTilting> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> e;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) e.push_back(v);
        Quotient q = quotient_by_vertices(a, e);
        const Algebra& b = q.algebra;
        ModuleList cand;
        for (const auto& x : b.indecomposables())
            if (self(b, x)) cand.push_back(x);
        const int want = b.num_vertices();
        ModuleList cur;
        std::function<void(std::size_t)> go = [&](std::size_t from) {
            if (static_cast<int>(cur.size()) == want) {
                ModuleList t;
                for (const auto& x : cur) t.push_back(q.embed(x));
                normalize(t);
                out.push_back({t, e});
                return;
            }
            for (std::size_t i = from; i < cand.size(); ++i) {
                if (std::all_of(cur.begin(), cur.end(), [&](const Indec& y) { return pair(b, cand[i], y); })) {
                    cur.push_back(cand[i]);
                    go(i + 1);
                    cur.pop_back();
                }
            }
        };
        go(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_tau_rigid(const Algebra& a, const ModuleList& m) {
    for (const auto& x : m)
        for (const auto& y : m)
            if (!a.is_projective(y) && hom_dim(a, x, tau(a, y))) return false;
    return true;
}

bool is_tilting_classical(const Algebra& a, const ModuleList& t) {
    for (const auto& x : t) {
        auto pd = proj_dim(a, x);
        if (!pd || *pd > 1) return false;
        for (const auto& y : t)
            if (ext_dim(a, x, y, 1)) return false;
    }
    return static_cast<int>(normalized(t).size()) == a.num_vertices();
}

SupportTauTilting stt_from_torsion(const Algebra& a, const ModuleList& torsion) {
    SupportTauTilting s;
    s.t = ext_projectives(a, torsion);
    auto sup = support(a, torsion);
    for (int v = 0; v < a.num_vertices(); ++v)
        if (!std::binary_search(sup.begin(), sup.end(), v)) s.e.push_back(v);
    return s;
}

ModuleList torsion_from_stt(const Algebra& a, const SupportTauTilting& s) { return gen_closure(a, s.t); }

std::vector<SupportTauTilting> enumerate_stt_bruteforce(const Algebra& a) {
    return brute_force(
        a, [](const Algebra& b, const Indec& x) { return b.is_projective(x) || hom_dim(b, x, tau(b, x)) == 0; },
        tau_compatible);
}

std::vector<SupportTauTilting> enumerate_support_tilting_classical(const Algebra& a) {
    return brute_force(
        a,
        [](const Algebra& b, const Indec& x) {
            auto pd = proj_dim(b, x);
            return pd && *pd <= 1 && ext_dim(b, x, x, 1) == 0;
        },
        ext_compatible);
}

std::vector<SupportTauTilting> enumerate_stt(const Algebra& a) {
    std::vector<SupportTauTilting> out;
    for (const auto& t : enumerate_torsion_classes(a)) out.push_back(stt_from_torsion(a, t));
    auto sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != enumerate_stt_bruteforce(a))
        throw StructureViolation("torsion-class and brute-force enumerations of support τ-tilting modules differ");
    return out;
}

Localisation psi(const Algebra& a, const SupportTauTilting& s) {
    return localisation_with_xcat(a, alpha(a, torsion_from_stt(a, s)));
}

SupportTauTilting psi_inverse(const Algebra& a, const Localisation& loc) {
    return stt_from_torsion(a, beta(a, loc.xcat));
}

ModuleList sigma_prime(const Algebra& a, const SupportTauTilting& s) {
    ModuleList out;
    for (int v : s.e) out.push_back(a.projective(v));
    auto split = split_projectives(a, torsion_from_stt(a, s));
    for (const auto& x : s.t)
        if (!contains(split, x)) out.push_back(x);
    normalize(out);
    return out;
}

HasseQuiver hasse_stt(const Algebra& a) {
    auto ts = enumerate_torsion_classes(a);
    std::vector<std::string> labels;
    for (const auto& t : ts) labels.push_back(sum_name(a, ext_projectives(a, t)));
    return hasse_from_order(labels, [&](int i, int j) { return i != j && is_subset(ts[i], ts[j]) && ts[i] != ts[j]; });
}

}  // namespace nakloc
