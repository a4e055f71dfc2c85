#include "nakloc/arcs.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nakloc {

namespace {

int dist(ArcShape shape, int n, int from, int to) {
    if (shape == ArcShape::line) return to - from;
    return ((to - from) % n + n) % n;
}

std::vector<int> covered(const ArcDiagram& d, const std::pair<int, int>& arc) {
    std::vector<int> pts;
    for (int k = 0; k <= arc_length(d, arc); ++k) pts.push_back((arc.second + k) % d.n);
    return pts;
}

bool strictly_inside(const ArcDiagram& d, const std::pair<int, int>& p, const std::pair<int, int>& q) {
    int k = dist(d.shape, d.n, q.second, p.second);
    return k > 0 && k + arc_length(d, p) < arc_length(d, q);
}

bool compatible(const ArcDiagram& d, const std::pair<int, int>& p, const std::pair<int, int>& q) {
    if (strictly_inside(d, p, q) || strictly_inside(d, q, p)) return true;
    auto cp = covered(d, p), cq = covered(d, q);
    for (int x : cp)
        if (std::find(cq.begin(), cq.end(), x) != cq.end()) return false;
    return true;
}

std::vector<std::pair<int, int>> possible_arcs(ArcShape shape, int n, int h) {
    std::vector<std::pair<int, int>> out;
    const int maxlen = std::min(n - 1, h - 1);
    for (int i = 0; i < n; ++i)
        for (int len = 1; len <= maxlen; ++len) {
            if (shape == ArcShape::line && i + len >= n) break;
            out.emplace_back((i + len) % n, i);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Calls back with every compatible arc set and its list of free points.
void for_each_arc_set(ArcShape shape, int n, int h,
                      const std::function<void(const ArcDiagram&, const std::vector<int>&)>& f) {
    auto all = possible_arcs(shape, n, h);
    ArcDiagram d{shape, n, {}, {}};
    std::vector<char> used(n, 0);
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        std::vector<int> free;
        for (int p = 0; p < n; ++p)
            if (!used[p]) free.push_back(p);
        f(d, free);
        for (std::size_t k = from; k < all.size(); ++k) {
            auto arc = all[k];
            if (used[arc.first] || used[arc.second]) continue;
            if (!std::all_of(d.arcs.begin(), d.arcs.end(), [&](const auto& o) { return compatible(d, arc, o); }))
                continue;
            used[arc.first] = used[arc.second] = 1;
            d.arcs.push_back(arc);
            go(k + 1);
            d.arcs.pop_back();
            used[arc.first] = used[arc.second] = 0;
        }
    };
    go(0);
}

}  // namespace

UniformFamily uniform_family(const Algebra& a) {
    const auto& cs = a.components();
    if (cs.size() == 1) {
        const auto& c = cs[0];
        const int n = c.size();
        if (c.shape == Shape::cycle &&
            std::all_of(c.kupisch.begin(), c.kupisch.end(), [&](int k) { return k == c.kupisch[0]; }))
            return {ArcShape::circle, n, c.kupisch[0]};
        if (c.shape == Shape::line) {
            int h = n == 1 ? 2 : std::max(c.kupisch[0], 2);
            if (build_line(n, h) == a) return {ArcShape::line, n, h};
        }
    }
    throw NotUniformFamily("arc diagrams are defined for line:n,h and cycle:n,h only");
}

int arc_length(const ArcDiagram& d, const std::pair<int, int>& arc) {
    return dist(d.shape, d.n, arc.second, arc.first);
}

bool is_valid_diagram(const ArcDiagram& d, int h) {
    std::set<int> ends;
    for (const auto& arc : d.arcs) {
        if (arc.first < 0 || arc.first >= d.n || arc.second < 0 || arc.second >= d.n) return false;
        int len = arc_length(d, arc);
        if (len < 1 || len > std::min(d.n - 1, h - 1)) return false;
        if (!ends.insert(arc.first).second || !ends.insert(arc.second).second) return false;
    }
    std::set<int> loops;
    for (int p : d.loops)
        if (p < 0 || p >= d.n || ends.count(p) || !loops.insert(p).second) return false;
    for (std::size_t i = 0; i < d.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < d.arcs.size(); ++j)
            if (!compatible(d, d.arcs[i], d.arcs[j])) return false;
    return true;
}

ArcDiagram to_arc_diagram(const Algebra& a, const ModuleList& w_tilde) {
    auto fam = uniform_family(a);
    ArcDiagram d{fam.shape, fam.n, {}, {}};
    for (const auto& x : w_tilde) {
        a.check(x);
        if (a.is_projective(x))
            d.loops.push_back(x.vertex);
        else
            d.arcs.emplace_back(*a.shift(x.vertex, x.length), x.vertex);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    std::sort(d.loops.begin(), d.loops.end());
    return d;
}

ModuleList from_arc_diagram(const Algebra& a, const ArcDiagram& d) {
    auto fam = uniform_family(a);
    if (fam.shape != d.shape || fam.n != d.n) throw NotUniformFamily("diagram does not match the algebra");
    ModuleList out;
    for (int p : d.loops) out.push_back(a.projective(p));
    for (const auto& arc : d.arcs) {
        Indec x{arc.second, arc_length(d, arc)};
        a.check(x);
        out.push_back(x);
    }
    normalize(out);
    return out;
}

std::vector<ArcDiagram> enumerate_diagrams(ArcShape shape, int n, int h) {
    std::vector<ArcDiagram> out;
    for_each_arc_set(shape, n, h, [&](const ArcDiagram& base, const std::vector<int>& free) {
        const int f = static_cast<int>(free.size());
        for (long mask = 0; mask < (1L << f); ++mask) {
            ArcDiagram d = base;
            std::sort(d.arcs.begin(), d.arcs.end());
            for (int k = 0; k < f; ++k)
                if (mask >> k & 1) d.loops.push_back(free[k]);
            out.push_back(d);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

long long count_noncrossing(ArcShape shape, int n, int h) {
    long long total = 0;
    for_each_arc_set(shape, n, h, [&](const ArcDiagram&, const std::vector<int>& free) { total += 1LL << free.size(); });
    return total;
}

nlohmann::json diagram_json(const ArcDiagram& d) {
    nlohmann::json arcs = nlohmann::json::array(), loops = nlohmann::json::array();
    for (const auto& [j, i] : d.arcs) arcs.push_back({j + 1, i + 1});
    for (int p : d.loops) loops.push_back(p + 1);
    return {{"shape", d.shape == ArcShape::line ? "line" : "circle"}, {"n", d.n}, {"arcs", arcs}, {"loops", loops}};
}

std::string render_ascii(const ArcDiagram& d) {
    // one row per arc, outermost first; points are three columns wide
    auto arcs = d.arcs;
    std::sort(arcs.begin(), arcs.end(),
              [&](const auto& x, const auto& y) { return arc_length(d, x) > arc_length(d, y); });
    std::string s;
    for (const auto& arc : arcs) {
        std::string row(3 * d.n, ' ');
        auto pts = covered(d, arc);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            int c = 3 * pts[k] + 1;
            row[c] = (k == 0 || k + 1 == pts.size()) ? '+' : '-';
            if (k + 1 < pts.size() && pts[k + 1] == pts[k] + 1) row[c + 1] = row[c + 2] = '-';
        }
        if (d.shape == ArcShape::circle && pts.back() < pts.front()) row += "  (wraps)";
        while (!row.empty() && row.back() == ' ') row.pop_back();
        s += row + "\n";
    }
    std::string loops(3 * d.n, ' '), points(3 * d.n + 1, ' ');
    for (int p : d.loops) loops[3 * p + 1] = 'o';
    while (!loops.empty() && loops.back() == ' ') loops.pop_back();
    if (!loops.empty()) s += loops + "\n";
    for (int p = 0; p < d.n; ++p) points.replace(3 * p + 1, 2, std::to_string(p + 1).append(" ").substr(0, 2));
    while (!points.empty() && points.back() == ' ') points.pop_back();
    return s + points + "\n";
}

}  // namespace nakloc
