#include "nakloc/algebra.hpp"

#include <algorithm>
#include <set>

namespace nakloc {

namespace {

std::string at(int i) { return "c[" + std::to_string(i + 1) + "]"; }

}  // namespace

void validate_component(const Component& c) {
    const int m = c.size();
    if (m == 0) throw InvalidKupisch("component has no vertices");
    const auto& k = c.kupisch;
    for (int i = 0; i < m; ++i)
        if (k[i] < 1) throw InvalidKupisch(at(i) + " must be at least 1");
    if (c.shape == Shape::line) {
        if (k[m - 1] != 1) throw InvalidKupisch("line: last entry must be 1");
        for (int i = 0; i + 1 < m; ++i) {
            if (k[i] > k[i + 1] + 1)
                throw InvalidKupisch(at(i) + "=" + std::to_string(k[i]) + " exceeds " + at(i + 1) + "+1=" +
                                     std::to_string(k[i + 1] + 1));
            if (k[i] < 2) throw InvalidKupisch(at(i) + " must be at least 2 before the end of a line");
        }
        for (int i = 0; i < m; ++i)
            if (k[i] > m - i)
                throw InvalidKupisch(at(i) + "=" + std::to_string(k[i]) + " runs past the end of the line");
    } else {
        for (int i = 0; i < m; ++i) {
            int j = (i + 1) % m;
            if (k[i] < 2) throw InvalidKupisch(at(i) + " must be at least 2 on a cycle");
            if (k[i] > k[j] + 1)
                throw InvalidKupisch(at(i) + "=" + std::to_string(k[i]) + " exceeds " + at(j) + "+1=" +
                                     std::to_string(k[j] + 1));
        }
    }
}

Algebra::Algebra(std::vector<Component> components) : comps_(std::move(components)) {
    for (int c = 0; c < static_cast<int>(comps_.size()); ++c) {
        validate_component(comps_[c]);
        start_.push_back(num_vertices());
        for (int i = 0; i < comps_[c].size(); ++i) {
            comp_of_.push_back(c);
            local_.push_back(i);
            offset_.push_back(total_);
            total_ += comps_[c].kupisch[i];
        }
    }
}

std::optional<int> Algebra::shift(int v, int k) const {
    const auto& c = comps_[comp_of_[v]];
    int l = local_[v] + k;
    if (c.shape == Shape::line) {
        if (l >= c.size()) return std::nullopt;
        return v + k;
    }
    return start_[comp_of_[v]] + l % c.size();
}

std::optional<int> Algebra::prev(int v) const {
    const auto& c = comps_[comp_of_[v]];
    if (c.shape == Shape::line) {
        if (local_[v] == 0) return std::nullopt;
        return v - 1;
    }
    return start_[comp_of_[v]] + (local_[v] + c.size() - 1) % c.size();
}

bool Algebra::valid(const Indec& x) const {
    return x.vertex >= 0 && x.vertex < num_vertices() && x.length >= 1 && x.length <= loewy(x.vertex);
}

void Algebra::check(const Indec& x) const {
    if (!valid(x))
        throw InvalidModule("M(" + std::to_string(x.vertex + 1) + "," + std::to_string(x.length) +
                            ") is not a module over this algebra");
}

Indec Algebra::indec_at(int idx) const {
    auto it = std::upper_bound(offset_.begin(), offset_.end(), idx);
    int v = static_cast<int>(it - offset_.begin()) - 1;
    return {v, idx - offset_[v] + 1};
}

ModuleList Algebra::indecomposables() const {
    ModuleList out;
    out.reserve(total_);
    for (int v = 0; v < num_vertices(); ++v)
        for (int t = 1; t <= loewy(v); ++t) out.push_back({v, t});
    return out;
}

Algebra build_line(int n, int h) {
    if (n < 1) throw InvalidKupisch("line needs at least one vertex");
    if (n == 1) return Algebra({Component{Shape::line, {1}}});
    if (h < 2) throw InvalidKupisch("h must be at least 2");
    Component c{Shape::line, {}};
    for (int i = 0; i < n; ++i) c.kupisch.push_back(std::min(h, n - i));
    return Algebra({c});
}

Algebra build_cycle(int n, int h) {
    if (n < 1) throw InvalidKupisch("cycle needs at least one vertex");
    if (h < 2) throw InvalidKupisch("h must be at least 2");
    return Algebra({Component{Shape::cycle, std::vector<int>(n, h)}});
}

Algebra from_kupisch(std::vector<Component> components) { return Algebra(std::move(components)); }

ModuleList list_indecomposables(const Algebra& a) { return a.indecomposables(); }

std::optional<Indec> Quotient::restrict(const Indec& x) const {
    auto it = std::find(vertex_map.begin(), vertex_map.end(), x.vertex);
    if (it == vertex_map.end()) return std::nullopt;
    Indec y{static_cast<int>(it - vertex_map.begin()), x.length};
    if (!algebra.valid(y)) return std::nullopt;
    return y;
}

Quotient quotient_by_vertices(const Algebra& a, const std::vector<int>& killed) {
    std::set<int> dead(killed.begin(), killed.end());
    struct Run {
        std::vector<int> verts;
        bool whole_cycle = false;
    };
    std::vector<Run> runs;
    auto cut = [&](const std::vector<int>& order) {
        std::vector<Run> local;
        Run run;
        for (int v : order) {
            if (dead.count(v)) {
                if (!run.verts.empty()) local.push_back(run);
                run.verts.clear();
            } else {
                run.verts.push_back(v);
            }
        }
        if (!run.verts.empty()) local.push_back(run);
        std::sort(local.begin(), local.end(), [](const Run& x, const Run& y) { return x.verts < y.verts; });
        runs.insert(runs.end(), local.begin(), local.end());
    };
    for (int c = 0; c < static_cast<int>(a.components().size()); ++c) {
        const auto& comp = a.components()[c];
        const int s = a.component_start(c), m = comp.size();
        std::vector<int> order;
        if (comp.shape == Shape::line) {
            for (int i = 0; i < m; ++i) order.push_back(s + i);
            cut(order);
            continue;
        }
        int first_dead = -1;
        for (int i = 0; i < m && first_dead < 0; ++i)
            if (dead.count(s + i)) first_dead = i;
        if (first_dead < 0) {
            Run r;
            r.whole_cycle = true;
            for (int i = 0; i < m; ++i) r.verts.push_back(s + i);
            runs.push_back(r);
            continue;
        }
        // start just after a killed vertex so no surviving run wraps
        for (int j = 1; j <= m; ++j) order.push_back(s + (first_dead + j) % m);
        cut(order);
    }

    Quotient q;
    std::vector<Component> comps;
    for (const auto& r : runs) {
        if (r.whole_cycle) {
            comps.push_back(a.components()[a.component_of(r.verts.front())]);
        } else {
            Component c{Shape::line, {}};
            const int len = static_cast<int>(r.verts.size());
            for (int j = 0; j < len; ++j) c.kupisch.push_back(std::min(a.loewy(r.verts[j]), len - j));
            comps.push_back(c);
        }
        q.vertex_map.insert(q.vertex_map.end(), r.verts.begin(), r.verts.end());
    }
    q.algebra = Algebra(std::move(comps));
    return q;
}

std::vector<Component> canonical_form(const Algebra& a) {
    std::vector<Component> out;
    for (auto c : a.components()) {
        if (c.shape == Shape::cycle) {
            auto best = c.kupisch;
            auto k = c.kupisch;
            for (int r = 1; r < c.size(); ++r) {
                std::rotate(k.begin(), k.begin() + 1, k.end());
                best = std::min(best, k);
            }
            c.kupisch = best;
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
        if (x.shape != y.shape) return x.shape < y.shape;
        return x.kupisch < y.kupisch;
    });
    return out;
}

bool isomorphic(const Algebra& a, const Algebra& b) { return canonical_form(a) == canonical_form(b); }

void normalize(ModuleList& m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
}

ModuleList normalized(ModuleList m) {
    normalize(m);
    return m;
}

bool contains(const ModuleList& sorted, const Indec& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool is_subset(const ModuleList& a, const ModuleList& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ModuleList set_union(const ModuleList& a, const ModuleList& b) {
    ModuleList out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ModuleList set_difference(const ModuleList& a, const ModuleList& b) {
    ModuleList out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<char> mask_of(const Algebra& a, const ModuleList& m) {
    std::vector<char> mask(a.num_indecomposables(), 0);
    for (const auto& x : m) mask[a.index_of(x)] = 1;
    return mask;
}

ModuleList from_mask(const Algebra& a, const std::vector<char>& mask) {
    ModuleList out;
    for (int i = 0; i < static_cast<int>(mask.size()); ++i)
        if (mask[i]) out.push_back(a.indec_at(i));
    return out;
}

}  // namespace nakloc
