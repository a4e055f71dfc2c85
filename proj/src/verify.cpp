#include "nakloc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "nakloc/arcs.hpp"
#include "nakloc/format.hpp"

namespace nakloc {

namespace {

constexpr int kShownPerInvariant = 3;

class Recorder {
public:
    Recorder(VerifyReport& r, std::string algebra) : r_(r), algebra_(std::move(algebra)) {}

    void suite(std::string s) { suite_ = std::move(s); }

    template <class Detail>
    bool check(const std::string& invariant, bool ok, Detail&& detail) {
        auto& t = r_.suites[suite_];
        ++t.checks;
        if (ok) return true;
        ++t.failures;
        if (shown_[suite_ + "/" + invariant]++ < kShownPerInvariant)
            r_.failures.push_back({suite_, invariant, algebra_, detail()});
        return false;
    }
    bool check(const std::string& invariant, bool ok) {
        return check(invariant, ok, [] { return std::string(); });
    }

private:
    VerifyReport& r_;
    std::string algebra_;
    std::string suite_;
    std::map<std::string, int> shown_;
};

bool is_hereditary(const Algebra& a) {
    for (const auto& c : a.components()) {
        if (c.shape != Shape::line) return false;
        for (int i = 0; i < c.size(); ++i)
            if (c.kupisch[i] != c.size() - i) return false;
    }
    return true;
}

std::optional<UniformFamily> family_of(const Algebra& a) {
    try {
        return uniform_family(a);
    } catch (const NotUniformFamily&) {
        return std::nullopt;
    }
}

std::vector<int> dim_vector(const Algebra& a, const Indec& x) {
    std::vector<int> d(a.num_vertices(), 0);
    for (int j = 0; j < x.length; ++j) ++d[*a.shift(x.vertex, j)];
    return d;
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
    return {v.begin(), v.end()};
}

std::string pair_name(const Algebra& a, const Indec& x, const Indec& y) {
    return short_name(a, x) + ", " + short_name(a, y);
}

// Everything the suites share, computed once per algebra.
struct Data {
    ModuleList ind;
    std::vector<ModuleList> orth, wide, torsion;
    std::vector<Localisation> locs;
    std::vector<SupportTauTilting> stts;
};

void algebra_suite(const Algebra& a, Recorder& rec) {
    rec.suite("algebra");
    int total = 0;
    for (int v = 0; v < a.num_vertices(); ++v) total += a.loewy(v);
    auto ind = list_indecomposables(a);
    rec.check("indecomposable count", static_cast<int>(ind.size()) == total,
              [&] { return std::to_string(ind.size()) + " vs " + std::to_string(total); });
    for (const auto& x : ind)
        rec.check("indecomposable range", x.length >= 1 && x.length <= a.loewy(x.vertex), [&] { return literal(x); });

    auto q0 = quotient_by_vertices(a, {});
    std::vector<int> id(a.num_vertices());
    std::iota(id.begin(), id.end(), 0);
    rec.check("quotient by nothing", q0.algebra == a && q0.vertex_map == id);

    const int n = a.num_vertices();
    if (n > 5) return;
    for (int m2 = 0; m2 < (1 << n); ++m2)
        for (int m1 = m2;; m1 = (m1 - 1) & m2) {
            std::vector<int> e1, e2;
            for (int v = 0; v < n; ++v) {
                if (m1 >> v & 1) e1.push_back(v);
                if (m2 >> v & 1) e2.push_back(v);
            }
            auto q1 = quotient_by_vertices(a, e1);
            std::vector<int> rest;
            for (int u = 0; u < q1.algebra.num_vertices(); ++u)
                if (m2 >> q1.vertex_map[u] & 1) rest.push_back(u);
            auto q12 = quotient_by_vertices(q1.algebra, rest);
            auto q2 = quotient_by_vertices(a, e2);
            std::vector<int> composed;
            for (int u : q12.vertex_map) composed.push_back(q1.vertex_map[u]);
            std::sort(composed.begin(), composed.end());
            auto direct = q2.vertex_map;
            std::sort(direct.begin(), direct.end());
            rec.check("quotients compose", isomorphic(q12.algebra, q2.algebra) && composed == direct, [&] {
                return "E1=" + vertex_set_name(e1) + " E2=" + vertex_set_name(e2);
            });
            if (m1 == 0) break;
        }
}

void modcat_suite(const Algebra& a, const Data& d, Recorder& rec) {
    rec.suite("modcat");
    for (const auto& x : d.ind)
        for (int i = 0; i < a.num_vertices(); ++i)
            rec.check("Hom(P_i,X) counts composition factors",
                      hom_dim(a, a.projective(i), x) == comp_factor_mult(a, x, i),
                      [&] { return literal(x) + " at vertex " + std::to_string(i + 1); });

    const bool hereditary = is_hereditary(a);
    for (const auto& x : d.ind) {
        for (const auto& y : d.ind) {
            const int e = ext_dim(a, x, y, 1);
            rec.check("middles count 1 + dim Ext", static_cast<int>(extension_middles(a, y, x).size()) == 1 + e,
                      [&] { return pair_name(a, x, y); });
            if (!a.is_projective(x))
                rec.check("Ext(X,Y) = stable Hom(Y, τX)", e == stable_hom_dim_inj(a, y, tau(a, x)),
                          [&] { return pair_name(a, x, y); });
            if (hereditary) {
                auto dx = dim_vector(a, x), dy = dim_vector(a, y);
                int euler = 0;
                for (int v = 0; v < a.num_vertices(); ++v) {
                    euler += dx[v] * dy[v];
                    if (auto w = a.shift(v, 1)) euler -= dx[v] * dy[*w];
                }
                rec.check("Euler form", hom_dim(a, x, y) - e == euler, [&] { return pair_name(a, x, y); });
            }
        }
        auto o = omega_orbit(a, x);
        rec.check("syzygy orbit closes", o.period >= 1 && o.preperiod + o.period <= static_cast<int>(o.seq.size()),
                  [&] { return literal(x); });
    }

    auto fam = family_of(a);
    if (!fam || fam->shape != ArcShape::circle || fam->n < 2) return;
    const int n = fam->n, h = fam->h;
    for (const auto& m : d.ind) {
        if (a.is_projective(m)) continue;
        auto o = omega_orbit(a, m);
        for (int z = 1; z <= 4 * n + 4; ++z) {
            const bool back = o.at(z) == MaybeIndec(m);
            rec.check("syzygy periodicity law", back == syzygy_returns(n, h, m.length, z),
                      [&] { return literal(m) + " z=" + std::to_string(z); });
            if (back)
                rec.check("Ext^z(M,M) one-dimensional at a period", ext_dim(a, o, m, z) == 1,
                          [&] { return literal(m) + " z=" + std::to_string(z); });
        }
    }
}

void oracle_suite(const Algebra& a, const Data& d, const VerifyOptions& opt, Recorder& rec) {
    rec.suite("oracle");
    const auto p = opt.prime;
    std::vector<oracle::Rep> reps;
    for (const auto& x : d.ind) {
        reps.push_back(oracle::realize(a, x));
        rec.check("realisation satisfies the relations", oracle::is_module(a, reps.back(), p),
                  [&] { return literal(x); });
    }
    for (std::size_t i = 0; i < d.ind.size(); ++i)
        for (std::size_t j = 0; j < d.ind.size(); ++j) {
            const auto &x = d.ind[i], &y = d.ind[j];
            const int hl = oracle::hom_dim_lin(a, reps[i], reps[j], p);
            rec.check("hom_dim matches", hl == hom_dim(a, x, y),
                      [&] { return pair_name(a, x, y) + " oracle " + std::to_string(hl); });
            int el = -1;
            try {
                el = oracle::ext1_dim_lin(a, x, y, p);
            } catch (const Error&) {
            }
            rec.check("ext1 matches", el == ext_dim(a, x, y, 1),
                      [&] { return pair_name(a, x, y) + " oracle " + std::to_string(el); });
            if ((i + j) % 5 == 0) {
                rec.check("hom independent of p", oracle::hom_dim_lin(a, reps[i], reps[j], 2) == hl,
                          [&] { return pair_name(a, x, y); });
                int e2 = -1;
                try {
                    e2 = oracle::ext1_dim_lin(a, x, y, 2);
                } catch (const Error&) {
                }
                rec.check("ext1 independent of p", e2 == el, [&] { return pair_name(a, x, y); });
            }
            for (int v : hom_positions(a, x, y)) {
                auto f = oracle::position_map(a, {x}, {y}, {{0, 0, v}});
                auto k = oracle::decompose(a, oracle::kernel(a, reps[i], f, p).rep, p);
                auto kc = kernel_of(a, x, y, v);
                rec.check("kernel matches", k == (kc ? ModuleList{*kc} : ModuleList{}),
                          [&] { return pair_name(a, x, y) + " v=" + std::to_string(v); });
                auto c = oracle::decompose(a, oracle::cokernel(a, reps[j], f, p).rep, p);
                auto cc = cokernel_of(y, v);
                rec.check("cokernel matches", c == (cc ? ModuleList{*cc} : ModuleList{}),
                          [&] { return pair_name(a, x, y) + " v=" + std::to_string(v); });
            }
        }

    // Kernels of maps from decomposable sources into members of α(T).
    std::mt19937 rng(static_cast<unsigned>(a.num_vertices() * 131 + d.ind.size()));
    for (const auto& t : d.torsion) {
        auto al = alpha(a, t);
        if (al.empty()) continue;
        for (int trial = 0; trial < 4; ++trial) {
            const Indec x = al[rng() % al.size()];
            const ModuleList src{t[rng() % t.size()], t[rng() % t.size()]};
            auto basis = oracle::hom_basis(a, oracle::realize(a, src), oracle::realize(a, x), p);
            if (basis.empty()) continue;
            oracle::Morphism f = basis[0];
            for (auto& m : f.maps)
                for (auto& e : m.e) e = 0;
            for (const auto& b : basis) {
                const std::int64_t c = rng() % p;
                for (std::size_t v = 0; v < f.maps.size(); ++v)
                    for (std::size_t k = 0; k < f.maps[v].e.size(); ++k)
                        f.maps[v].e[k] = (f.maps[v].e[k] + c * b.maps[v].e[k]) % p;
            }
            auto ker = oracle::decompose(a, oracle::kernel(a, oracle::realize(a, src), f, p).rep, p);
            rec.check("α with decomposable sources", std::all_of(ker.begin(), ker.end(), [&](const Indec& k) {
                          return contains(t, k);
                      }),
                      [&] { return "T=" + set_name(a, t) + " X=" + literal(x) + " Y=" + sum_name(a, src); });
        }
    }

    for (const auto& loc : d.locs)
        rec.check("End(AB) dimension", oracle::end_dim_lin(a, loc.ab, p) == loc.dim_ab,
                  [&] { return "xcat " + set_name(a, loc.xcat); });
}

void subcats_suite(const Algebra& a, const Data& d, Recorder& rec) {
    rec.suite("subcats");
    rec.check("#orth = #wide = #torsion", d.orth.size() == d.wide.size() && d.wide.size() == d.torsion.size(), [&] {
        return std::to_string(d.orth.size()) + "/" + std::to_string(d.wide.size()) + "/" +
               std::to_string(d.torsion.size());
    });
    for (const auto& t : d.torsion) {
        rec.check("torsion predicate", is_torsion_class(a, t), [&] { return set_name(a, t); });
        auto al = alpha(a, t);
        rec.check("β∘α = id", beta(a, al) == t, [&] { return set_name(a, t); });
        auto ep = ext_projectives(a, t), sp = split_projectives(a, t);
        rec.check("split-projectives are Ext-projective", is_subset(sp, ep), [&] { return set_name(a, t); });
        for (const auto& x : sp) {
            auto qs = quotients(a, x);
            rec.check("split-projective has a quotient in α(T)",
                      std::any_of(qs.begin(), qs.end(), [&](const Indec& q) { return contains(al, q); }),
                      [&] { return set_name(a, t) + " " + literal(x); });
        }
    }
    for (const auto& c : d.wide) {
        rec.check("wide predicate", is_wide(a, c), [&] { return set_name(a, c); });
        auto b = beta_closure(a, c);
        rec.check("α∘β = id", alpha(a, b.torsion) == c, [&] { return set_name(a, c); });
        rec.check("β in one sweep", b.extra_steps == 0, [&] { return set_name(a, c); });
        rec.check("collection of simples round trip", wide_from_collection(a, simples_of_wide(a, c)) == c,
                  [&] { return set_name(a, c); });
    }
    for (const auto& s : d.orth)
        rec.check("wide closure round trip", simples_of_wide(a, wide_from_collection(a, s)) == s,
                  [&] { return set_name(a, s); });
    for (const auto& x : d.ind) {
        rec.check("Σ^* is wide", is_wide(a, sigma_star(a, {x})), [&] { return literal(x); });
        for (const auto& y : d.ind)
            if (x < y && (x.vertex + y.length) % 3 == 0)
                rec.check("Σ^* is wide", is_wide(a, sigma_star(a, {x, y})), [&] { return pair_name(a, x, y); });
    }
}

void localise_suite(const Algebra& a, const Data& d, Recorder& rec) {
    rec.suite("localise");
    rec.check("#uniloc = #orth", d.locs.size() == d.orth.size());
    const bool hereditary = is_hereditary(a);
    std::set<ModuleList> mains, simples, xcats;
    const int n = a.num_vertices();
    std::set<ModuleList> quotient_cats;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> e;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) e.push_back(v);
        auto q = quotient_by_vertices(a, e);
        ModuleList cat;
        for (const auto& x : q.algebra.indecomposables()) cat.push_back(q.embed(x));
        quotient_cats.insert(normalized(cat));
    }

    for (const auto& loc : d.locs) {
        const auto name = [&] { return "xcat " + set_name(a, loc.xcat); };
        mains.insert(loc.mainnak);
        simples.insert(loc.simples);
        xcats.insert(loc.xcat);
        rec.check("fixpoint", sigma_star(a, lower_star(a, loc.xcat)) == loc.xcat && lower_star(a, loc.xcat) == loc.trivial,
                  name);
        bool w_ok = true, wt_ok = true;
        try {
            check_w_properties(a, loc.w);
        } catch (const PropertyViolation&) {
            w_ok = false;
        }
        try {
            check_w_tilde_properties(a, loc.w_tilde);
        } catch (const PropertyViolation&) {
            wt_ok = false;
        }
        rec.check("W properties", w_ok, name);
        rec.check("W~ properties", wt_ok, name);
        rec.check("W~ undoes", w_from_w_tilde(a, loc.w_tilde) == loc.w, name);
        rec.check("B has one vertex per simple", loc.b().num_vertices() == static_cast<int>(loc.simples.size()), name);

        int len = 0;
        for (const auto& x : loc.ab) len += x.length;
        rec.check("dim AB is additive", len == loc.dim_ab, name);
        if (hereditary) rec.check("pure iff injective", loc.flags.pure == loc.flags.injective, name);
        rec.check("surjective iff quotient epiclass", loc.flags.surjective == (quotient_cats.count(loc.xcat) > 0), name);
        rec.check("rebuild from xcat", localisation_with_xcat(a, loc.xcat).xcat == loc.xcat, name);
        if (!loc.flags.pure) {
            bool ok = true;
            try {
                compose_with_quotient(a, loc);
            } catch (const Error&) {
                ok = false;
            }
            rec.check("factors through the quotient", ok, name);
        }

        const auto& tr = loc.trivial;
        for (const auto& x : tr)
            for (const auto& z : tr) {
                auto mids = extension_middles(a, x, z);
                for (const auto& m : mids)
                    rec.check("trivial modules closed under extensions",
                              std::all_of(m.begin(), m.end(), [&](const Indec& y) { return contains(tr, y); }),
                              [&] { return name() + " " + pair_name(a, x, z); });
                for (int v : hom_positions(a, x, z)) {
                    if (kernel_of(a, x, z, v)) continue;
                    auto c = cokernel_of(z, v);
                    if (!c) continue;
                    auto pd = proj_dim(a, *c);
                    if (pd && *pd <= 1)
                        rec.check("trivial modules closed under cokernels", contains(tr, *c),
                                  [&] { return name() + " " + pair_name(a, x, z); });
                }
            }
    }
    const auto orth = as_set(d.orth);
    rec.check("Φ(W~) indexes the collections", mains == orth && mains.size() == d.locs.size());
    rec.check("simples of 𝒳 index the collections", simples == orth && simples.size() == d.locs.size());

    auto fam = family_of(a);
    if (fam && fam->shape == ArcShape::circle && fam->n >= 2) {
        std::set<ModuleList> generic, classified;
        for (const auto& loc : d.locs)
            if (is_homological(loc)) generic.insert(loc.xcat);
        for (const auto& loc : classify_homological_selfinjective(a)) classified.insert(loc.xcat);
        rec.check("homological agrees with the classification", generic == classified);
    }
}

void tautilt_suite(const Algebra& a, const Data& d, Recorder& rec, std::int64_t p) {
    rec.suite("tautilt");
    rec.check("#stt = #uniloc", d.stts.size() == d.locs.size());
    std::set<ModuleList> images;
    for (const auto& s : d.stts) {
        const auto name = [&] { return sum_name(a, s.t) + " E=" + vertex_set_name(s.e); };
        rec.check("τ-rigid", is_tau_rigid(a, s.t), name);
        auto loc = psi(a, s);
        images.insert(loc.xcat);
        rec.check("Ψ⁻¹∘Ψ = id", psi_inverse(a, loc) == s, name);
        rec.check("τ-tilting iff pure", s.e.empty() == loc.flags.pure, name);
        rec.check("support matches the annihilated vertices", loc.flags.annihilated == s.e, name);
        rec.check("Σ′ localises to Ψ", canonicalise(a, sigma_prime(a, s)).xcat == loc.xcat, name);

        auto gen = torsion_from_stt(a, s);
        auto sp = split_projectives(a, gen);
        for (const auto& x : s.t)
            rec.check("non-split-projective summands are trivial", !contains(sp, x) == contains(loc.trivial, x),
                      [&] { return name() + " " + literal(x); });
        for (const auto& x : loc.trivial)
            rec.check("trivial modules in add T are those in Gen T", contains(s.t, x) == contains(gen, x),
                      [&] { return name() + " " + literal(x); });
    }
    rec.check("Ψ is injective", images.size() == d.stts.size());
    for (const auto& loc : d.locs) {
        auto s = psi_inverse(a, loc);
        rec.check("Ψ∘Ψ⁻¹ = id", psi(a, s).xcat == loc.xcat, [&] { return set_name(a, loc.xcat); });
    }
    for (const auto& l1 : d.locs)
        for (const auto& l2 : d.locs)
            if (&l1 != &l2 && is_subset(l1.xcat, l2.xcat))
                rec.check("𝒳 order implies Gen order",
                          is_subset(torsion_from_stt(a, psi_inverse(a, l1)), torsion_from_stt(a, psi_inverse(a, l2))),
                          [&] { return set_name(a, l1.xcat) + " ⊆ " + set_name(a, l2.xcat); });

    if (!is_hereditary(a)) return;
    for (const auto& loc : d.locs) {
        if (!loc.flags.pure) continue;
        auto t = psi_inverse(a, loc).t;
        rec.check("classical tilting", is_tilting_classical(a, t), [&] { return sum_name(a, t); });
        auto add = normalized(set_union(normalized(loc.ab), unit_cokernel_summands(loc, p)));
        rec.check("AB plus cokernel gives add T", add == t,
                  [&] { return sum_name(a, add) + " vs " + sum_name(a, t); });
    }
}

void arcs_suite(const Algebra& a, const Data& d, Recorder& rec) {
    auto fam = family_of(a);
    if (!fam) return;
    rec.suite("arcs");
    auto diagrams = enumerate_diagrams(fam->shape, fam->n, fam->h);
    rec.check("#diagrams = #orth", diagrams.size() == d.orth.size());
    rec.check("count_noncrossing", count_noncrossing(fam->shape, fam->n, fam->h) == static_cast<long long>(diagrams.size()));
    std::set<ArcDiagram> seen;
    for (const auto& loc : d.locs) {
        auto dg = to_arc_diagram(a, loc.w_tilde);
        seen.insert(dg);
        rec.check("diagram valid", is_valid_diagram(dg, fam->h), [&] { return set_name(a, loc.w_tilde); });
        rec.check("diagram round trip", from_arc_diagram(a, dg) == loc.w_tilde, [&] { return set_name(a, loc.w_tilde); });
    }
    rec.check("diagrams of localisations", seen == as_set(diagrams));
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

bool VerifyReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const auto& kv) { return kv.second.failures == 0; });
}

void VerifyReport::merge(const VerifyReport& o) {
    algebras.insert(algebras.end(), o.algebras.begin(), o.algebras.end());
    for (const auto& [k, v] : o.suites) {
        suites[k].checks += v.checks;
        suites[k].failures += v.failures;
    }
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

const std::vector<std::string>& nonuniform_series() {
    static const std::vector<std::string> list = {
        "kupisch:line=3,2,2,1", "kupisch:line=2,3,2,1",   "kupisch:line=3,3,2,1",      "kupisch:line=2,2,3,2,1",
        "kupisch:cycle=2,3",    "kupisch:cycle=3,2,2",    "kupisch:cycle=2,2,3,3",     "kupisch:cycle=4,3,2",
        "kupisch:line=2,1;cycle=2,2", "kupisch:cycle=3,4,4,3,2"};
    return list;
}

std::vector<Algebra> battery(int nmax, int hmax) {
    std::vector<Algebra> out;
    std::set<std::string> seen;
    auto add = [&](const Algebra& a) {
        if (seen.insert(algebra_spec(Algebra(canonical_form(a)))).second) out.push_back(a);
    };
    for (int n = 1; n <= nmax; ++n)
        for (int h = 2; h <= hmax; ++h) {
            add(build_line(n, h));
            add(build_cycle(n, h));
        }
    for (const auto& s : nonuniform_series()) {
        auto a = parse_algebra(s);
        int top = 0;
        for (int v = 0; v < a.num_vertices(); ++v) top = std::max(top, a.loewy(v));
        if (a.num_vertices() <= nmax && top <= hmax) add(a);
    }
    return out;
}

VerifyReport verify_algebra(const Algebra& a, const VerifyOptions& opt) {
    VerifyReport r;
    const auto spec = algebra_spec(a);
    r.algebras.push_back(spec);
    Recorder rec(r, spec);
    try {
        algebra_suite(a, rec);
        Data d;
        d.ind = list_indecomposables(a);
        d.orth = enumerate_orth_collections(a);
        d.wide = enumerate_wide(a);
        d.torsion = enumerate_torsion_classes(a);
        d.locs = enumerate_uniloc(a);
        d.stts = enumerate_stt(a);
        modcat_suite(a, d, rec);
        subcats_suite(a, d, rec);
        localise_suite(a, d, rec);
        tautilt_suite(a, d, rec, opt.prime);
        arcs_suite(a, d, rec);
        if (opt.oracle) oracle_suite(a, d, opt, rec);
    } catch (const std::exception& e) {
        rec.suite("exceptions");
        rec.check("no exception", false, [&] { return std::string(e.what()); });
    }
    return r;
}

VerifyReport verify_battery(const std::vector<Algebra>& algebras, const VerifyOptions& opt, int threads) {
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<VerifyReport> parts(algebras.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < algebras.size();) parts[i] = verify_algebra(algebras[i], opt);
        });
    for (auto& t : pool) t.join();
    VerifyReport out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

VerifyReport verify_global(int nmax, int hmax) {
    VerifyReport r;
    Recorder rec(r, "-");
    rec.suite("algebra");
    for (int shape = 0; shape < 2; ++shape)
        for (int m = 1; m <= 4; ++m) {
            std::vector<int> k(m, 0);
            while (true) {
                Component c{shape ? Shape::cycle : Shape::line, k};
                bool accepted = true;
                try {
                    validate_component(c);
                } catch (const InvalidKupisch&) {
                    accepted = false;
                }
                rec.check("Kupisch validity", accepted == kupisch_valid_by_radicals(c), [&] {
                    std::string s = shape ? "cycle=" : "line=";
                    for (int x : k) s += std::to_string(x) + ",";
                    return s;
                });
                int i = 0;
                while (i < m && k[i] == 5) k[i++] = 0;
                if (i == m) break;
                ++k[i];
            }
        }

    rec.suite("arcs");
    for (int n = 1; n <= nmax; ++n)
        for (int h = std::max(n, 2); h <= hmax + 2; ++h) {
            rec.check("circle count is C(2n,n) once h ≥ n", count_noncrossing(ArcShape::circle, n, h) == binom(2 * n, n),
                      [&] { return "n=" + std::to_string(n) + " h=" + std::to_string(h); });
            rec.check("line count is Catalan once h ≥ n",
                      count_noncrossing(ArcShape::line, n, h) == binom(2 * n + 2, n + 1) / (n + 2),
                      [&] { return "n=" + std::to_string(n) + " h=" + std::to_string(h); });
        }

    rec.suite("modcat");
    for (int n = 3; n <= 8; ++n)
        for (int h = 2; h < n; ++h) {
            auto a = build_line(n, h);
            auto pd = proj_dim(a, a.simple(0));
            int gl = 0;
            for (int v = 0; v < n; ++v) gl = std::max(gl, proj_dim(a, a.simple(v)).value_or(-1));
            rec.check("pd(S_1) law", pd && *pd == gldim_formula(n, h) && gl == *pd,
                      [&] { return "n=" + std::to_string(n) + " h=" + std::to_string(h); });
        }
    return r;
}

ModuleList unit_cokernel_summands(const Localisation& loc, std::int64_t p) {
    const Algebra& a = loc.base;
    ModuleList out;
    for (int i = 0; i < a.num_vertices(); ++i) {
        auto parts = unit_map(loc, i);
        ModuleList dst;
        std::vector<oracle::Block> blocks;
        for (const auto& [y, v] : parts) {
            blocks.push_back({0, static_cast<int>(dst.size()), v});
            dst.push_back(y);
        }
        auto f = oracle::position_map(a, {a.projective(i)}, dst, blocks);
        auto c = oracle::cokernel(a, oracle::realize(a, dst), f, p);
        auto parts_c = oracle::decompose(a, c.rep, p);
        out.insert(out.end(), parts_c.begin(), parts_c.end());
    }
    normalize(out);
    return out;
}

bool kupisch_valid_by_radicals(const Component& c) {
    const int m = c.size();
    const auto& k = c.kupisch;
    for (int i = 0; i < m; ++i) {
        if (k[i] < 1) return false;
        const bool has_next = c.shape == Shape::cycle || i + 1 < m;
        // the arrow out of i is nonzero exactly when there is a next vertex
        if (has_next != (k[i] >= 2)) return false;
        if (has_next && k[i] - 1 > k[(i + 1) % m]) return false;
    }
    return true;
}

int gldim_formula(int n, int h) {
    const int x = n / h, r = n % h;
    if (r == 0) return 2 * x - 1;
    if (r == 1) return 2 * x;
    return 2 * x + 1;
}

bool syzygy_returns(int n, int h, int s, int z) {
    if (2 * s == h) return (static_cast<long long>(z) * s) % n == 0;
    return z % 2 == 0 && (static_cast<long long>(z / 2) * h) % n == 0;
}

}  // namespace nakloc
