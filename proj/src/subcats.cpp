#include "nakloc/subcats.hpp"

#include <algorithm>
#include <functional>

namespace nakloc {

bool hom_iso_against(const Algebra& a, const Presentation& p, const Indec& target) {
    auto from = hom_positions(a, p.codomain, target);
    if (!p.domain) return from.empty();
    auto to = hom_positions(a, *p.domain, target);
    if (from.size() != to.size()) return false;
    for (int w : from) {
        auto c = compose_positions(p.shift, w, target);
        if (!c || !std::binary_search(to.begin(), to.end(), *c)) return false;
    }
    return true;
}

ModuleList sigma_star(const Algebra& a, const ModuleList& sigma) {
    std::vector<Presentation> pres;
    for (const auto& c : sigma) pres.push_back(proj_presentation(a, c));
    ModuleList out;
    for (const auto& x : a.indecomposables())
        if (std::all_of(pres.begin(), pres.end(), [&](const Presentation& p) { return hom_iso_against(a, p, x); }))
            out.push_back(x);
    return out;
}

ModuleList lower_star(const Algebra& a, const ModuleList& c) {
    ModuleList out;
    for (const auto& x : a.indecomposables()) {
        auto p = proj_presentation(a, x);
        if (std::all_of(c.begin(), c.end(), [&](const Indec& y) { return hom_iso_against(a, p, y); }))
            out.push_back(x);
    }
    return out;
}

bool is_orth_collection(const Algebra& a, const ModuleList& s) {
    for (const auto& x : s) {
        if (!a.valid(x)) return false;
        for (const auto& y : s) {
            int d = hom_dim(a, x, y);
            if (x == y ? d != 1 : d != 0) return false;
        }
    }
    return true;
}

bool is_wide(const Algebra& a, const ModuleList& c) {
    auto in = [&](const MaybeIndec& m) { return !m || contains(c, *m); };
    for (const auto& x : c)
        for (const auto& y : c) {
            for (int v : hom_positions(a, x, y))
                if (!in(kernel_of(a, x, y, v)) || !in(cokernel_of(y, v))) return false;
            for (const auto& mid : extension_middles(a, x, y))
                for (const auto& z : mid)
                    if (!contains(c, z)) return false;
        }
    return true;
}

bool is_torsion_class(const Algebra& a, const ModuleList& t) {
    for (const auto& x : t) {
        for (const auto& q : quotients(a, x))
            if (!contains(t, q)) return false;
        for (const auto& y : t)
            for (const auto& mid : extension_middles(a, x, y))
                for (const auto& z : mid)
                    if (!contains(t, z)) return false;
    }
    return true;
}

ModuleList simples_of_wide(const Algebra& a, const ModuleList& c) {
    if (!is_wide(a, c)) throw NotWide("subcategory is not wide");
    ModuleList out;
    for (const auto& x : c) {
        bool simple = true;
        for (const auto& y : c)
            for (int v : hom_positions(a, x, y))
                if (y.length - v != x.length) simple = false;
        if (simple) out.push_back(x);
    }
    return out;
}

ModuleList wide_from_collection(const Algebra& a, const ModuleList& s) {
    if (!is_orth_collection(a, s)) throw Error("not an orthogonal collection");
    ModuleList cur = normalized(s);
    for (bool grew = true; grew;) {
        grew = false;
        ModuleList add;
        for (const auto& x : cur)
            for (const auto& y : cur)
                if (auto z = stacked_extension(a, x, y); z && !contains(cur, *z)) add.push_back(*z);
        if (!add.empty()) {
            cur = set_union(cur, normalized(add));
            grew = true;
        }
    }
    return cur;
}

ModuleList alpha(const Algebra& a, const ModuleList& t) {
    if (!is_torsion_class(a, t)) throw NotTorsion("not a torsion class");
    ModuleList out;
    for (const auto& x : t) {
        bool keep = true;
        for (const auto& y : t)
            for (int v : hom_positions(a, y, x))
                if (auto k = kernel_of(a, y, x, v); k && !contains(t, *k)) keep = false;
        if (keep) out.push_back(x);
    }
    return out;
}

BetaResult beta_closure(const Algebra& a, const ModuleList& c) {
    ModuleList g = gen_closure(a, c);
    ModuleList add;
    for (const auto& x : g)
        for (const auto& y : g)
            if (auto z = stacked_extension(a, x, y)) add.push_back(*z);
    BetaResult r{set_union(g, normalized(add)), 0};
    while (true) {
        ModuleList next = gen_closure(a, r.torsion);
        for (const auto& x : r.torsion)
            for (const auto& y : r.torsion)
                for (const auto& mid : extension_middles(a, x, y)) next.insert(next.end(), mid.begin(), mid.end());
        normalize(next);
        if (next == r.torsion) return r;
        r.torsion = next;
        ++r.extra_steps;
    }
}

ModuleList beta(const Algebra& a, const ModuleList& c) { return beta_closure(a, c).torsion; }

ModuleList ext_projectives(const Algebra& a, const ModuleList& t) {
    if (!is_torsion_class(a, t)) throw NotTorsion("not a torsion class");
    ModuleList out;
    for (const auto& x : t)
        if (std::all_of(t.begin(), t.end(), [&](const Indec& m) { return ext_dim(a, x, m, 1) == 0; }))
            out.push_back(x);
    return out;
}

ModuleList split_projectives(const Algebra& a, const ModuleList& t) {
    if (!is_torsion_class(a, t)) throw NotTorsion("not a torsion class");
    ModuleList out;
    for (const auto& x : t)
        if (std::none_of(t.begin(), t.end(),
                         [&](const Indec& y) { return y.vertex == x.vertex && y.length > x.length; }))
            out.push_back(x);
    return out;
}

std::vector<ModuleList> enumerate_orth_collections(const Algebra& a) {
    ModuleList bricks;
    for (const auto& x : a.indecomposables())
        if (hom_dim(a, x, x) == 1) bricks.push_back(x);
    std::vector<ModuleList> out;
    ModuleList cur;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        out.push_back(cur);
        for (std::size_t i = from; i < bricks.size(); ++i) {
            const auto& b = bricks[i];
            if (std::any_of(cur.begin(), cur.end(),
                            [&](const Indec& x) { return hom_dim(a, x, b) || hom_dim(a, b, x); }))
                continue;
            cur.push_back(b);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

std::vector<ModuleList> enumerate_torsion_classes(const Algebra& a) {
    // Quotient-closed sets are {M(v,1..k_v)}; choose k_v vertex by vertex and
    // check extension closure for pairs whose tops are already decided.
    const int n = a.num_vertices();
    std::vector<int> k(n, 0);
    std::vector<ModuleList> out;
    auto in = [&](const Indec& x, int upto) { return x.vertex <= upto && x.length <= k[x.vertex]; };
    auto closed_at = [&](int j) {
        for (int v = 0; v <= j; ++v)
            for (int s = 1; s <= k[v]; ++s)
                for (int t = 1; t <= k[j]; ++t) {
                    Indec x{v, s}, y{j, t};
                    for (const auto& mid : extension_middles(a, x, y))
                        for (const auto& z : mid)
                            if (!in(z, j)) return false;
                    for (const auto& mid : extension_middles(a, y, x))
                        for (const auto& z : mid)
                            if (!in(z, j)) return false;
                }
        return true;
    };
    std::function<void(int)> go = [&](int j) {
        if (j == n) {
            ModuleList t;
            for (int v = 0; v < n; ++v)
                for (int s = 1; s <= k[v]; ++s) t.push_back({v, s});
            out.push_back(t);
            return;
        }
        for (int kk = 0; kk <= a.loewy(j); ++kk) {
            k[j] = kk;
            if (closed_at(j)) go(j + 1);
        }
        k[j] = 0;
    };
    go(0);
    return out;
}

std::vector<ModuleList> enumerate_wide(const Algebra& a) {
    std::vector<ModuleList> out;
    for (const auto& s : enumerate_orth_collections(a)) out.push_back(wide_from_collection(a, s));
    return out;
}

std::vector<int> support(const Algebra& a, const ModuleList& m) {
    std::vector<char> seen(a.num_vertices(), 0);
    for (const auto& x : m)
        for (int j = 0; j < x.length; ++j) seen[*a.shift(x.vertex, j)] = 1;
    std::vector<int> out;
    for (int v = 0; v < a.num_vertices(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

}  // namespace nakloc
