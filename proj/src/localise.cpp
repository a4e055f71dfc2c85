#include "nakloc/localise.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nakloc/format.hpp"

namespace nakloc {

namespace {

int end_vertex(const Algebra& a, const Indec& x) { return *a.shift(x.vertex, x.length); }

// Step j ∈ [0, len] at which the path of length len from `top` meets v.
std::optional<int> along(const Algebra& a, int top, int len, int v) {
    if (a.component_of(top) != a.component_of(v)) return std::nullopt;
    for (int j = 0; j <= len; ++j)
        if (auto s = a.shift(top, j); s && *s == v) return j;
    return std::nullopt;
}

bool strictly_inside(const Algebra& a, const Indec& y, int v) {
    auto j = along(a, y.vertex, y.length, v);
    return j && *j > 0 && *j < y.length;
}

void violation(const std::string& prop, const Algebra& a, const ModuleList& set, const std::string& what) {
    throw PropertyViolation("property " + prop + " fails for " + set_name(a, set) + ": " + what);
}

void check_tops_distinct(const Algebra& a, const ModuleList& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].vertex == s[i - 1].vertex) violation("(tops)", a, s, "two members share a top");
}

void check_lengths(const Algebra& a, const ModuleList& s, const ModuleList& nonproj, const std::string& name) {
    for (const auto& x : nonproj)
        if (x.length > a.component_size_of(x.vertex) - 1) violation(name, a, s, literal(x) + " is too long");
}

void check_nesting(const Algebra& a, const ModuleList& s, const ModuleList& nonproj, const std::string& name) {
    for (const auto& x : nonproj)
        for (const auto& y : nonproj) {
            if (x == y) continue;
            if (strictly_inside(a, y, x.vertex) != strictly_inside(a, y, end_vertex(a, x)))
                violation(name, a, s, literal(x) + " crosses " + literal(y));
        }
}

// Closed intervals of two arcs are disjoint, or one lies strictly inside the other.
bool separated_or_nested(const Algebra& a, const Indec& x, const Indec& y) {
    auto inside = [&](const Indec& p, const Indec& q) {
        auto k = along(a, q.vertex, q.length, p.vertex);
        return k && *k > 0 && *k + p.length < q.length;
    };
    if (inside(x, y) || inside(y, x)) return true;
    for (int j = 0; j <= x.length; ++j)
        if (along(a, y.vertex, y.length, *a.shift(x.vertex, j))) return false;
    return true;
}

ModuleList non_projectives(const Algebra& a, const ModuleList& s) {
    ModuleList out;
    for (const auto& x : s)
        if (!a.is_projective(x)) out.push_back(x);
    return out;
}

}  // namespace

ModuleList map_to_modules(const Algebra& a, const std::vector<ProjMap>& maps) {
    ModuleList out;
    const int n = a.num_vertices();
    for (const auto& m : maps) {
        if (m.source < 0 || m.source >= n || m.target < 0 || m.target >= n || m.shift < 0)
            throw InvalidMap("map refers to a vertex outside the algebra");
        if (m.shift > a.loewy(m.target)) throw InvalidMap("shift exceeds the Loewy length of the target");
        auto s = a.shift(m.target, m.shift);
        if (a.component_of(m.source) != a.component_of(m.target) || !s || *s != m.source)
            throw InvalidMap("source vertex does not match target + shift");
        if (m.shift == a.loewy(m.target))
            throw InvalidMap("zero maps are rejected; pass the annihilated projectives directly");
        if (m.shift > 0) out.push_back({m.target, m.shift});
    }
    normalize(out);
    return out;
}

Indec phi(const Algebra& a, const Indec& x) {
    if (a.is_projective(x)) return {x.vertex, 1};
    return {x.vertex, x.length + 1};
}

Indec phi_inverse(const Algebra& a, const Indec& x) {
    if (x.length == 1) return a.projective(x.vertex);
    return {x.vertex, x.length - 1};
}

ModuleList phi(const Algebra& a, const ModuleList& m) {
    ModuleList out;
    for (const auto& x : m) out.push_back(phi(a, x));
    normalize(out);
    return out;
}

ModuleList phi_inverse(const Algebra& a, const ModuleList& m) {
    ModuleList out;
    for (const auto& x : m) out.push_back(phi_inverse(a, x));
    normalize(out);
    return out;
}

ModuleList minimal_trivial(const Algebra& a, const ModuleList& trivial) {
    ModuleList out;
    for (int v = 0; v < a.num_vertices(); ++v) {
        if (contains(trivial, a.projective(v))) {
            out.push_back(a.projective(v));
            continue;
        }
        for (int t = 1; t < a.loewy(v); ++t)
            if (contains(trivial, {v, t})) {
                out.push_back({v, t});
                break;
            }
    }
    return out;
}

void check_w_properties(const Algebra& a, const ModuleList& w) {
    check_tops_distinct(a, w);
    auto np = non_projectives(a, w);
    check_lengths(a, w, np, "(1)");
    for (const auto& x : np) {
        // (2): following consecutive presentations never returns to the start
        int at = end_vertex(a, x);
        for (std::size_t steps = 0; steps <= np.size(); ++steps) {
            if (at == x.vertex) violation("(2)", a, w, "a chain from " + literal(x) + " closes up");
            auto next = std::find_if(np.begin(), np.end(), [&](const Indec& y) { return y.vertex == at; });
            if (next == np.end()) break;
            at = end_vertex(a, *next);
        }
        for (const auto& p : w)
            if (a.is_projective(p) && along(a, x.vertex, x.length, p.vertex))
                violation("(3)", a, w, literal(x) + " factors through " + short_name(a, p));
        for (const auto& y : np)
            if (!(x == y) && end_vertex(a, x) == end_vertex(a, y))
                violation("(4)", a, w, literal(x) + " and " + literal(y) + " share a domain");
    }
    check_nesting(a, w, np, "(5)");
}

void check_w_tilde_properties(const Algebra& a, const ModuleList& wt) {
    check_tops_distinct(a, wt);
    auto np = non_projectives(a, wt);
    check_lengths(a, wt, np, "(1')");
    for (const auto& x : np)
        for (const auto& y : np) {
            if (end_vertex(a, x) == y.vertex)
                violation("(2')", a, wt, literal(x) + " and " + literal(y) + " compose");
            if (!(x == y) && end_vertex(a, x) == end_vertex(a, y))
                violation("(3')", a, wt, literal(x) + " and " + literal(y) + " share a domain");
        }
    check_nesting(a, wt, np, "(4')");
    for (const auto& x : np)
        for (const auto& y : np)
            if (!(x == y) && !separated_or_nested(a, x, y))
                violation("(4')", a, wt, literal(x) + " and " + literal(y) + " overlap around the cycle");
    for (const auto& p : wt)
        if (a.is_projective(p))
            for (const auto& x : np)
                if (end_vertex(a, x) == p.vertex)
                    violation("(4')", a, wt, short_name(a, p) + " sits on an end of " + literal(x));
}

std::vector<std::vector<Indec>> chains(const Algebra& a, const ModuleList& w) {
    check_w_properties(a, w);
    auto np = non_projectives(a, w);
    std::vector<std::vector<Indec>> out;
    for (const auto& x : np) {
        bool has_pred = std::any_of(np.begin(), np.end(), [&](const Indec& y) { return end_vertex(a, y) == x.vertex; });
        if (has_pred) continue;
        std::vector<Indec> chain{x};
        while (true) {
            int at = end_vertex(a, chain.back());
            auto next = std::find_if(np.begin(), np.end(), [&](const Indec& y) { return y.vertex == at; });
            if (next == np.end()) break;
            chain.push_back(*next);
        }
        out.push_back(chain);
    }
    return out;
}

ModuleList w_tilde(const Algebra& a, const ModuleList& w) {
    ModuleList out;
    for (const auto& x : w)
        if (a.is_projective(x)) out.push_back(x);
    for (const auto& chain : chains(a, w)) {
        int total = 0;
        for (const auto& x : chain) total += x.length;
        const int top = chain.front().vertex;
        if (total >= a.loewy(top))
            throw StructureViolation("chain from " + literal(chain.front()) + " composes to the zero map");
        out.push_back({top, total});
        for (std::size_t j = 1; j < chain.size(); ++j) out.push_back(a.projective(chain[j].vertex));
    }
    normalize(out);
    check_w_tilde_properties(a, out);
    return out;
}

ModuleList w_from_w_tilde(const Algebra& a, const ModuleList& wt) {
    check_w_tilde_properties(a, wt);
    const auto arcs = non_projectives(a, wt);
    // each projective inside an arc is a cut point of the innermost arc around it
    std::map<Indec, std::vector<int>> cuts;
    ModuleList out;
    for (const auto& x : wt) {
        if (!a.is_projective(x)) continue;
        const Indec* inner = nullptr;
        for (const auto& y : arcs)
            if (strictly_inside(a, y, x.vertex) && (!inner || y.length < inner->length)) inner = &y;
        if (inner)
            cuts[*inner].push_back(x.vertex);
        else
            out.push_back(x);
    }
    for (const auto& x : arcs) {
        int start = 0;
        for (int k = 1; k < x.length; ++k) {
            const int v = *a.shift(x.vertex, k);
            const auto& c = cuts[x];
            if (std::find(c.begin(), c.end(), v) == c.end()) continue;
            out.push_back({*a.shift(x.vertex, start), k - start});
            start = k;
        }
        out.push_back({*a.shift(x.vertex, start), x.length - start});
    }
    normalize(out);
    return out;
}

Reconstruction reconstruct_algebra(const Algebra& a, const ModuleList& xcat, const ModuleList& simples) {
    const int r = static_cast<int>(simples.size());
    std::vector<int> out(r, -1), in(r, -1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int e = ext_dim(a, simples[i], simples[j], 1);
            if (e == 0) continue;
            if (e > 1 || out[i] != -1 || in[j] != -1)
                throw StructureViolation("quiver of the localised algebra is not of Nakayama type at " +
                                         literal(simples[i]));
            out[i] = j;
            in[j] = i;
        }

    auto layers = [&](const Indec& x) {
        std::vector<int> ls;
        Indec cur = x;
        while (true) {
            int k = -1;
            for (int s = 0; s < r; ++s)
                if (simples[s].vertex == cur.vertex && simples[s].length <= cur.length) k = s;
            if (k < 0) throw StructureViolation(literal(x) + " has no simple quotient in the subcategory");
            if (!ls.empty() && out[ls.back()] != k)
                throw StructureViolation("filtration of " + literal(x) + " does not follow the quiver");
            ls.push_back(k);
            int rest = cur.length - simples[k].length;
            if (rest == 0) return ls;
            cur = {*a.shift(cur.vertex, simples[k].length), rest};
            if (!contains(xcat, cur)) throw StructureViolation("filtration of " + literal(x) + " leaves the subcategory");
        }
    };

    std::vector<int> proj_of(r, -1);
    std::vector<std::vector<int>> proj_layers(r);
    for (int idx = 0; idx < static_cast<int>(xcat.size()); ++idx) {
        const auto& x = xcat[idx];
        bool proj = std::all_of(xcat.begin(), xcat.end(), [&](const Indec& m) { return ext_dim(a, x, m, 1) == 0; });
        if (!proj) continue;
        auto ls = layers(x);
        if (proj_of[ls.front()] != -1) throw StructureViolation("two projectives over " + literal(simples[ls.front()]));
        proj_of[ls.front()] = idx;
        proj_layers[ls.front()] = ls;
    }
    for (int k = 0; k < r; ++k)
        if (proj_of[k] < 0) throw StructureViolation("no projective cover for " + literal(simples[k]));

    // components of the quiver, each listed from its start, ordered by start
    std::vector<std::pair<Shape, std::vector<int>>> comps;
    std::vector<char> seen(r, 0);
    auto walk = [&](int s, Shape shape) {
        std::vector<int> vs;
        for (int v = s; v != -1 && !seen[v]; v = out[v]) {
            seen[v] = 1;
            vs.push_back(v);
        }
        comps.emplace_back(shape, vs);
    };
    for (int i = 0; i < r; ++i)
        if (in[i] == -1) walk(i, Shape::line);
    for (int i = 0; i < r; ++i)
        if (!seen[i]) walk(i, Shape::cycle);
    std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) { return x.second.front() < y.second.front(); });

    Reconstruction rec;
    std::vector<Component> bcomps;
    std::vector<int> order;
    for (const auto& [shape, vs] : comps) {
        Component c{shape, {}};
        for (int v : vs) {
            c.kupisch.push_back(static_cast<int>(proj_layers[v].size()));
            order.push_back(v);
        }
        bcomps.push_back(c);
    }
    try {
        rec.b = Algebra(bcomps);
    } catch (const InvalidKupisch& e) {
        throw StructureViolation(std::string("localised algebra is not a valid Nakayama datum: ") + e.what());
    }
    for (int j = 0; j < r; ++j) {
        int k = order[j];
        rec.b_simples.push_back(simples[k]);
        const Indec p = xcat[proj_of[k]];
        rec.b_projectives.push_back(p);
        int len = 0;
        for (std::size_t u = 0; u < proj_layers[k].size(); ++u) {
            len += simples[proj_layers[k][u]].length;
            Indec am{p.vertex, len}, bm{j, static_cast<int>(u) + 1};
            if (!contains(xcat, am)) throw StructureViolation(literal(am) + " should lie in the subcategory");
            rec.dict.emplace_back(bm, am);
            rec.to_b[am] = bm;
        }
    }
    if (rec.to_b.size() != xcat.size() || rec.dict.size() != xcat.size())
        throw StructureViolation("localised algebra does not account for every module of the subcategory");
    return rec;
}

LocalisedModule module_of_localisation(const Algebra& a, const Reconstruction& rec, const ModuleList& xcat) {
    LocalisedModule lm;
    for (int i = 0; i < a.num_vertices(); ++i) {
        ModuleList refl;
        for (std::size_t j = 0; j < rec.b_simples.size(); ++j) {
            int m = comp_factor_mult(a, rec.b_simples[j], i);
            for (int k = 0; k < m; ++k) refl.push_back(rec.b_projectives[j]);
        }
        std::sort(refl.begin(), refl.end());
        lm.ab.insert(lm.ab.end(), refl.begin(), refl.end());
        lm.reflections.push_back(refl);

        int u = 0;
        for (const auto& x : xcat)
            for (int v = 0; v < x.length; ++v)
                if (*a.shift(x.vertex, v) == i) u = std::max(u, x.length - v);
        lm.unit_image.push_back(u);
    }
    std::sort(lm.ab.begin(), lm.ab.end());
    return lm;
}

std::vector<std::pair<Indec, int>> unit_map(const Localisation& loc, int vertex) {
    std::vector<std::pair<Indec, int>> out;
    const auto& a = loc.base;
    for (std::size_t j = 0; j < loc.rec.b_simples.size(); ++j) {
        const auto& y = loc.rec.b_simples[j];
        for (int v = 0; v < y.length; ++v)
            if (*a.shift(y.vertex, v) == vertex) out.emplace_back(loc.rec.b_projectives[j], v);
    }
    return out;
}

Localisation canonicalise(const Algebra& a, const ModuleList& sigma_in) {
    Localisation loc;
    loc.base = a;
    loc.sigma = normalized(sigma_in);
    for (const auto& x : loc.sigma) a.check(x);
    loc.xcat = sigma_star(a, loc.sigma);
    loc.trivial = lower_star(a, loc.xcat);
    if (sigma_star(a, loc.trivial) != loc.xcat) throw StructureViolation("fixpoint X = (*X)^* fails");
    loc.w = minimal_trivial(a, loc.trivial);
    loc.w_tilde = w_tilde(a, loc.w);
    loc.mainnak = phi(a, loc.w_tilde);
    if (!is_orth_collection(a, loc.mainnak)) throw StructureViolation("Φ(W̃) is not an orthogonal collection");
    try {
        loc.simples = simples_of_wide(a, loc.xcat);
    } catch (const NotWide&) {
        throw StructureViolation("module category of the localisation is not wide");
    }
    loc.rec = reconstruct_algebra(a, loc.xcat, loc.simples);
    auto lm = module_of_localisation(a, loc.rec, loc.xcat);
    loc.ab = lm.ab;
    loc.reflections = lm.reflections;
    loc.unit_image = lm.unit_image;
    for (const auto& x : loc.ab) loc.dim_ab += x.length;

    auto& f = loc.flags;
    for (int i = 0; i < a.num_vertices(); ++i)
        if (loc.reflections[i].empty()) f.annihilated.push_back(i);
    f.pure = f.annihilated.empty();
    f.injective = true;
    int image = 0;
    for (int i = 0; i < a.num_vertices(); ++i) {
        f.injective = f.injective && loc.unit_image[i] == a.loewy(i);
        image += loc.unit_image[i];
    }
    f.surjective = image == loc.dim_ab;
    f.semisimple = loc.xcat == loc.simples;
    f.homological = is_homological(loc);
    return loc;
}

Localisation localisation_with_xcat(const Algebra& a, const ModuleList& xcat) {
    if (!is_wide(a, xcat)) throw NotWide("subcategory is not wide");
    Localisation loc = canonicalise(a, lower_star(a, xcat));
    if (loc.xcat != xcat) throw StructureViolation("wide subcategory " + set_name(a, xcat) + " is not a localisation");
    return loc;
}

bool is_homological(const Localisation& loc) {
    const auto& a = loc.base;
    const auto& b = loc.rec.b;
    std::vector<Orbit> oa, ob;
    std::vector<Indec> xb;
    for (const auto& x : loc.xcat) {
        oa.push_back(omega_orbit(a, x));
        xb.push_back(loc.rec.to_b.at(x));
        ob.push_back(omega_orbit(b, xb.back()));
    }
    for (std::size_t i = 0; i < loc.xcat.size(); ++i) {
        long long pre = std::max(oa[i].preperiod, ob[i].preperiod);
        long long per = std::lcm<long long>(oa[i].period, ob[i].period);
        for (long long k = 1; k <= pre + per; ++k)
            for (std::size_t j = 0; j < loc.xcat.size(); ++j) {
                int kk = static_cast<int>(k);
                if (ext_dim(a, oa[i], loc.xcat[j], kk) != ext_dim(b, ob[i], xb[j], kk)) return false;
            }
    }
    return true;
}

std::vector<Localisation> enumerate_uniloc(const Algebra& a) {
    std::vector<Localisation> out;
    for (const auto& s : enumerate_orth_collections(a)) {
        auto wt = phi_inverse(a, s);
        auto loc = canonicalise(a, w_from_w_tilde(a, wt));
        if (loc.w_tilde != wt || loc.mainnak != s)
            throw StructureViolation("collection " + set_name(a, s) + " is not recovered from its localisation");
        out.push_back(std::move(loc));
    }
    return out;
}

HasseQuiver hasse_uniloc(const std::vector<Localisation>& locs) {
    std::vector<std::string> labels;
    for (const auto& l : locs) labels.push_back(set_name(l.base, l.trivial));
    return hasse_from_order(labels, [&](int i, int j) {
        return i != j && is_subset(locs[i].xcat, locs[j].xcat) && locs[i].xcat != locs[j].xcat;
    });
}

HasseQuiver hasse_uniloc(const Algebra& a) { return hasse_uniloc(enumerate_uniloc(a)); }

std::vector<Localisation> classify_homological_selfinjective(int n, int h) {
    if (n < 2 || h < 2) throw NotSelfInjective("classification needs n, h >= 2");
    const Algebra a = build_cycle(n, h);
    std::vector<Localisation> out;
    auto add = [&](Localisation l) {
        for (const auto& o : out)
            if (o.same_epiclass(l)) return;
        out.push_back(std::move(l));
    };
    add(canonicalise(a, {}));
    ModuleList projectives;
    for (int v = 0; v < n; ++v) projectives.push_back(a.projective(v));
    add(canonicalise(a, projectives));
    if (h <= n) {
        const int np = static_cast<int>(projectives.size());
        for (int mask = 1; mask < (1 << np); ++mask) {
            ModuleList c;
            for (int v = 0; v < np; ++v)
                if (mask >> v & 1) c.push_back(projectives[v]);
            if (!is_orth_collection(a, c)) continue;
            add(localisation_with_xcat(a, wide_from_collection(a, c)));
        }
    }
    const int d = std::gcd(n, h);
    if (d != 1 && h > 2) {
        const int kmax = h == d ? d - 2 : d - 1;
        for (int mask = 1; mask < (1 << d); ++mask) {
            int k = __builtin_popcount(static_cast<unsigned>(mask));
            if (k > kmax) continue;
            ModuleList sigma;
            for (int v = 0; v < n; ++v)
                if (mask >> (v % d) & 1) sigma.push_back(a.simple(v));
            add(canonicalise(a, sigma));
        }
    }
    return out;
}

std::vector<Localisation> classify_homological_selfinjective(const Algebra& a) {
    const auto& cs = a.components();
    if (cs.size() != 1 || cs[0].shape != Shape::cycle ||
        std::adjacent_find(cs[0].kupisch.begin(), cs[0].kupisch.end(), std::not_equal_to<>()) != cs[0].kupisch.end())
        throw NotSelfInjective("algebra is not of the form cycle:n,h");
    return classify_homological_selfinjective(cs[0].size(), cs[0].kupisch[0]);
}

QuotientLocalisation compose_with_quotient(const Algebra& a, const Localisation& loc) {
    const auto& e = loc.flags.annihilated;
    if (e.empty()) throw NotAnnihilating("localisation kills no projective");
    QuotientLocalisation out{quotient_by_vertices(a, e), {}};
    ModuleList xq;
    for (const auto& x : loc.xcat) {
        auto y = out.quotient.restrict(x);
        if (!y) throw StructureViolation(literal(x) + " is not a module over the quotient");
        xq.push_back(*y);
    }
    normalize(xq);
    out.loc = localisation_with_xcat(out.quotient.algebra, xq);

    ModuleList back;
    for (const auto& x : out.loc.w) back.push_back(out.quotient.embed(x));
    for (int v : e) back.push_back(a.projective(v));
    if (!canonicalise(a, back).same_epiclass(loc))
        throw StructureViolation("adding the killed projectives back does not recover the localisation");
    return out;
}

}  // namespace nakloc
