#include "nakloc/modcat.hpp"

#include <algorithm>
#include <map>

namespace nakloc {

std::vector<int> hom_positions(const Algebra& a, const Indec& x, const Indec& y) {
    std::vector<int> out;
    if (a.component_of(x.vertex) != a.component_of(y.vertex)) return out;
    for (int v = 0; v < y.length; ++v)
        if (*a.shift(y.vertex, v) == x.vertex && y.length - v <= x.length) out.push_back(v);
    return out;
}

int hom_dim(const Algebra& a, const Indec& x, const Indec& y) {
    return static_cast<int>(hom_positions(a, x, y).size());
}

int hom_dim(const Algebra& a, const ModuleList& x, const ModuleList& y) {
    int d = 0;
    for (const auto& p : x)
        for (const auto& q : y) d += hom_dim(a, p, q);
    return d;
}

std::optional<int> compose_positions(int vf, int vg, const Indec& z) {
    if (vf + vg >= z.length) return std::nullopt;
    return vf + vg;
}

Indec image_of(const Algebra& a, const Indec& y, int v) { return {*a.shift(y.vertex, v), y.length - v}; }

MaybeIndec kernel_of(const Algebra& a, const Indec& x, const Indec& y, int v) {
    int im = y.length - v;
    if (im == x.length) return std::nullopt;
    return Indec{*a.shift(x.vertex, im), x.length - im};
}

MaybeIndec cokernel_of(const Indec& y, int v) {
    if (v == 0) return std::nullopt;
    return Indec{y.vertex, v};
}

Presentation proj_presentation(const Algebra& a, const Indec& x) {
    Presentation p;
    p.codomain = a.projective(x.vertex);
    if (a.is_projective(x)) return p;
    p.domain = a.projective(*a.shift(x.vertex, x.length));
    p.shift = x.length;
    return p;
}

MaybeIndec syzygy(const Algebra& a, const Indec& x) {
    if (a.is_projective(x)) return std::nullopt;
    return Indec{*a.shift(x.vertex, x.length), a.loewy(x.vertex) - x.length};
}

const MaybeIndec& Orbit::at(long long i) const {
    if (i < static_cast<long long>(seq.size())) return seq[i];
    return seq[preperiod + (i - preperiod) % period];
}

Orbit omega_orbit(const Algebra& a, const Indec& x) {
    Orbit o;
    std::map<Indec, int> seen;
    MaybeIndec cur = x;
    while (true) {
        if (!cur) {
            o.seq.push_back(cur);
            o.preperiod = static_cast<int>(o.seq.size()) - 1;
            o.period = 1;
            return o;
        }
        auto it = seen.find(*cur);
        if (it != seen.end()) {
            o.preperiod = it->second;
            o.period = static_cast<int>(o.seq.size()) - it->second;
            return o;
        }
        seen[*cur] = static_cast<int>(o.seq.size());
        o.seq.push_back(cur);
        cur = syzygy(a, *cur);
    }
}

namespace {

int ext1(const Algebra& a, const Indec& x, const Indec& y) {
    auto om = syzygy(a, x);
    if (!om) return 0;
    return hom_dim(a, *om, y) - hom_dim(a, a.projective(x.vertex), y) + hom_dim(a, x, y);
}

}  // namespace

int ext_dim(const Algebra& a, const Orbit& ox, const Indec& y, int i) {
    const auto& z = ox.at(i - 1);
    return z ? ext1(a, *z, y) : 0;
}

int ext_dim(const Algebra& a, const Indec& x, const Indec& y, int i) {
    if (i == 1) return ext1(a, x, y);
    return ext_dim(a, omega_orbit(a, x), y, i);
}

Indec tau(const Algebra& a, const Indec& x) {
    if (a.is_projective(x)) throw ProjectiveHasNoTau("projective modules have no AR translate");
    return {*a.shift(x.vertex, 1), x.length};
}

ModuleList quotients(const Algebra&, const Indec& x) {
    ModuleList out;
    for (int u = 1; u <= x.length; ++u) out.push_back({x.vertex, u});
    return out;
}

ModuleList submodules(const Algebra& a, const Indec& x) {
    ModuleList out;
    for (int v = 0; v < x.length; ++v) out.push_back({*a.shift(x.vertex, v), x.length - v});
    normalize(out);
    return out;
}

int comp_factor_mult(const Algebra& a, const Indec& x, int vertex) {
    if (a.component_of(x.vertex) != a.component_of(vertex)) return 0;
    int k = 0;
    for (int j = 0; j < x.length; ++j) k += *a.shift(x.vertex, j) == vertex;
    return k;
}

ModuleList gen_closure(const Algebra& a, const ModuleList& g) {
    ModuleList out;
    for (const auto& x : g)
        for (const auto& q : quotients(a, x)) out.push_back(q);
    normalize(out);
    return out;
}

std::vector<ModuleList> extension_middles(const Algebra& a, const Indec& xsub, const Indec& xquot) {
    std::vector<ModuleList> out{normalized({xsub, xquot})};
    if (a.component_of(xsub.vertex) != a.component_of(xquot.vertex)) return out;
    // Middle M(a2,L) ⊕ M(a1, t1+t2-L) for t2 < L ≤ t1+t2, when the socle of
    // xsub sits L-1 steps below the top of xquot.
    for (int k = 1; k <= xsub.length; ++k) {
        int len = xquot.length + k;
        if (len > a.loewy(xquot.vertex)) break;
        int offset = len - xsub.length;
        if (offset <= 0 || *a.shift(xquot.vertex, offset) != xsub.vertex) continue;  // offset 0 is the split middle again
        ModuleList mid{{xquot.vertex, len}};
        if (k < xsub.length) mid.push_back({xsub.vertex, xsub.length - k});
        out.push_back(normalized(mid));
    }
    return out;
}

MaybeIndec stacked_extension(const Algebra& a, const Indec& xsub, const Indec& xquot) {
    if (a.component_of(xsub.vertex) != a.component_of(xquot.vertex)) return std::nullopt;
    int len = xsub.length + xquot.length;
    if (len > a.loewy(xquot.vertex) || *a.shift(xquot.vertex, xquot.length) != xsub.vertex) return std::nullopt;
    return Indec{xquot.vertex, len};
}

std::optional<int> proj_dim(const Algebra& a, const Indec& x) {
    Orbit o = omega_orbit(a, x);
    if (o.seq.back()) return std::nullopt;
    return static_cast<int>(o.seq.size()) - 2;  // seq ends X, ..., Ω^pd X, 0
}

Indec injective_envelope(const Algebra& a, const Indec& x) {
    Indec i{a.socle(x), 1};
    while (true) {
        auto p = a.prev(i.vertex);
        if (!p || a.loewy(*p) < i.length + 1) return i;
        i = {*p, i.length + 1};
    }
}

bool is_injective(const Algebra& a, const Indec& x) { return injective_envelope(a, x) == x; }

int stable_hom_dim_inj(const Algebra& a, const Indec& x, const Indec& y) {
    Indec env = injective_envelope(a, x);
    int depth = env.length - x.length;  // x = rad^depth env
    auto through = hom_positions(a, env, y);
    int d = 0;
    for (int v : hom_positions(a, x, y)) {
        int w = v - depth;
        d += !(w >= 0 && std::find(through.begin(), through.end(), w) != through.end());
    }
    return d;
}

}  // namespace nakloc
