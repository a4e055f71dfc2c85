#include "nakloc/oracle.hpp"

#include <algorithm>

#include "nakloc/errors.hpp"

namespace nakloc::oracle {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

std::int64_t inverse(std::int64_t x, std::int64_t p) {
    std::int64_t r = 1, b = mod(x, p), e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Row-reduces in place; returns pivot columns.
std::vector<int> rref(Mat& m, std::int64_t p) {
    for (auto& v : m.e) v = mod(v, p);
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < m.cols && row < m.rows; ++c) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m(r, c)) { piv = r; break; }
        if (piv < 0) continue;
        for (int k = 0; k < m.cols; ++k) std::swap(m(row, k), m(piv, k));
        std::int64_t inv = inverse(m(row, c), p);
        for (int k = 0; k < m.cols; ++k) m(row, k) = m(row, k) * inv % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || !m(r, c)) continue;
            std::int64_t f = m(r, c);
            for (int k = 0; k < m.cols; ++k) m(r, k) = mod(m(r, k) - f * m(row, k), p);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

// (summand, position) -> (vertex, index at that vertex)
struct Layout {
    std::vector<int> dims;
    std::vector<std::vector<std::pair<int, int>>> at;
};

Layout layout(const Algebra& a, const ModuleList& m) {
    Layout l;
    l.dims.assign(a.num_vertices(), 0);
    for (const auto& x : m) {
        std::vector<std::pair<int, int>> pos;
        for (int j = 0; j < x.length; ++j) {
            int v = *a.shift(x.vertex, j);
            pos.emplace_back(v, l.dims[v]++);
        }
        l.at.push_back(pos);
    }
    return l;
}

Mat path_action_p(const Algebra& a, const Rep& r, int from, int steps, std::int64_t p) {
    Mat cur = Mat::identity(r.dims[from]);
    int v = from;
    for (int s = 0; s < steps; ++s) {
        auto w = a.shift(v, 1);
        if (!w) return Mat(0, r.dims[from]);
        cur = multiply(r.arrows[v], cur, p);
        v = *w;
    }
    return cur;
}

Mat flatten(const Morphism& f) {
    int n = 0;
    for (const auto& m : f.maps) n += static_cast<int>(m.e.size());
    Mat out(1, n);
    int k = 0;
    for (const auto& m : f.maps)
        for (auto x : m.e) out(0, k++) = x;
    return out;
}

}  // namespace

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

int rank(Mat m, std::int64_t p) { return static_cast<int>(rref(m, p).size()); }

Mat nullspace(const Mat& m, std::int64_t p) {
    Mat r = m;
    auto piv = rref(r, p);
    std::vector<int> free;
    for (int c = 0, k = 0; c < m.cols; ++c) {
        if (k < static_cast<int>(piv.size()) && piv[k] == c)
            ++k;
        else
            free.push_back(c);
    }
    Mat out(m.cols, static_cast<int>(free.size()));
    for (int f = 0; f < static_cast<int>(free.size()); ++f) {
        out(free[f], f) = 1;
        for (int i = 0; i < static_cast<int>(piv.size()); ++i) out(piv[i], f) = mod(-r(i, free[f]), p);
    }
    return out;
}

Mat multiply(const Mat& a, const Mat& b, std::int64_t p) {
    if (a.cols != b.rows) throw Error("oracle: matrix shapes do not match");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (!a(i, k)) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) = (c(i, j) + a(i, k) * b(k, j)) % p;
        }
    return c;
}

Mat solve_in_span(const Mat& basis, const Mat& b, std::int64_t p) {
    Mat aug(basis.rows, basis.cols + b.cols);
    for (int r = 0; r < basis.rows; ++r) {
        for (int c = 0; c < basis.cols; ++c) aug(r, c) = basis(r, c);
        for (int c = 0; c < b.cols; ++c) aug(r, basis.cols + c) = b(r, c);
    }
    auto piv = rref(aug, p);
    Mat x(basis.cols, b.cols);
    for (int i = 0; i < static_cast<int>(piv.size()); ++i) {
        if (piv[i] >= basis.cols) throw Error("oracle: vector outside the span");
        for (int c = 0; c < b.cols; ++c) x(piv[i], c) = aug(i, basis.cols + c);
    }
    if (static_cast<int>(piv.size()) != basis.cols) throw Error("oracle: basis is not independent");
    return x;
}

Rep realize(const Algebra& a, const ModuleList& m) {
    Layout l = layout(a, m);
    Rep r;
    r.dims = l.dims;
    for (int v = 0; v < a.num_vertices(); ++v) {
        auto w = a.shift(v, 1);
        r.arrows.push_back(w ? Mat(l.dims[*w], l.dims[v]) : Mat());
    }
    for (std::size_t s = 0; s < m.size(); ++s)
        for (int j = 0; j + 1 < m[s].length; ++j) {
            auto [v, i] = l.at[s][j];
            auto [w, k] = l.at[s][j + 1];
            r.arrows[v](k, i) = 1;
        }
    return r;
}

Rep realize(const Algebra& a, const Indec& x) { return realize(a, ModuleList{x}); }

Morphism position_map(const Algebra& a, const ModuleList& src, const ModuleList& dst, const std::vector<Block>& blocks) {
    Layout ls = layout(a, src), ld = layout(a, dst);
    Morphism f;
    for (int v = 0; v < a.num_vertices(); ++v) f.maps.emplace_back(ld.dims[v], ls.dims[v]);
    for (const auto& b : blocks)
        for (int j = 0; j + b.position < dst[b.to].length && j < src[b.from].length; ++j) {
            auto [v, i] = ls.at[b.from][j];
            auto [w, k] = ld.at[b.to][j + b.position];
            if (v != w) throw Error("oracle: block does not respect vertices");
            f.maps[v](k, i) = 1;
        }
    return f;
}

std::vector<Morphism> hom_basis(const Algebra& a, const Rep& x, const Rep& y, std::int64_t p) {
    const int n = a.num_vertices();
    std::vector<int> off(n + 1, 0);
    for (int v = 0; v < n; ++v) off[v + 1] = off[v] + y.dims[v] * x.dims[v];
    auto var = [&](int v, int r, int c) { return off[v] + r * x.dims[v] + c; };
    int rows = 0;
    for (int v = 0; v < n; ++v)
        if (auto w = a.shift(v, 1)) rows += y.dims[*w] * x.dims[v];
    Mat eq(rows, off[n]);
    int row = 0;
    for (int v = 0; v < n; ++v) {
        auto w = a.shift(v, 1);
        if (!w) continue;
        const Mat& ya = y.arrows[v];
        const Mat& xa = x.arrows[v];
        for (int r = 0; r < y.dims[*w]; ++r)
            for (int c = 0; c < x.dims[v]; ++c, ++row) {
                for (int k = 0; k < y.dims[v]; ++k) eq(row, var(v, k, c)) = mod(eq(row, var(v, k, c)) + ya(r, k), p);
                for (int k = 0; k < x.dims[*w]; ++k)
                    eq(row, var(*w, r, k)) = mod(eq(row, var(*w, r, k)) - xa(k, c), p);
            }
    }
    Mat ns = nullspace(eq, p);
    std::vector<Morphism> out;
    for (int b = 0; b < ns.cols; ++b) {
        Morphism f;
        for (int v = 0; v < n; ++v) {
            Mat m(y.dims[v], x.dims[v]);
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) m(r, c) = ns(var(v, r, c), b);
            f.maps.push_back(m);
        }
        out.push_back(f);
    }
    return out;
}

int hom_dim_lin(const Algebra& a, const Rep& x, const Rep& y, std::int64_t p) {
    return static_cast<int>(hom_basis(a, x, y, p).size());
}

int hom_dim_lin(const Algebra& a, const Indec& x, const Indec& y, std::int64_t p) {
    return hom_dim_lin(a, realize(a, x), realize(a, y), p);
}

Morphism compose(const Morphism& g, const Morphism& f, std::int64_t p) {
    Morphism h;
    for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(multiply(g.maps[v], f.maps[v], p));
    return h;
}

int ext1_dim_lin(const Algebra& a, const Indec& x, const Indec& y, std::int64_t p) {
    const Indec top = a.projective(x.vertex);
    Rep p0 = realize(a, top), xr = realize(a, x), yr = realize(a, y);
    Morphism pi = position_map(a, {top}, {x}, {{0, 0, 0}});
    SubRep k = kernel(a, p0, pi, p);
    int hom_ky = hom_dim_lin(a, k.rep, yr, p);
    auto from_top = hom_basis(a, p0, yr, p);
    int by_count = hom_ky - static_cast<int>(from_top.size()) + hom_dim_lin(a, xr, yr, p);

    Mat restricted;
    for (const auto& g : from_top) {
        Mat row = flatten(compose(g, k.map, p));
        if (restricted.cols == 0) restricted = Mat(0, row.cols);
        Mat grown(restricted.rows + 1, row.cols);
        std::copy(restricted.e.begin(), restricted.e.end(), grown.e.begin());
        std::copy(row.e.begin(), row.e.end(), grown.e.begin() + restricted.e.size());
        restricted = grown;
    }
    int by_cokernel = hom_ky - (restricted.rows ? rank(restricted, p) : 0);
    if (by_count != by_cokernel) throw Error("oracle: the two Ext computations disagree");
    return by_count;
}

int end_dim_lin(const Algebra& a, const ModuleList& m, std::int64_t p) {
    Rep r = realize(a, m);
    return hom_dim_lin(a, r, r, p);
}

bool is_module(const Algebra& a, const Rep& r, std::int64_t p) {
    for (int v = 0; v < a.num_vertices(); ++v) {
        Mat m = path_action_p(a, r, v, a.loewy(v), p);
        if (std::any_of(m.e.begin(), m.e.end(), [](std::int64_t e) { return e != 0; })) return false;
    }
    return true;
}

SubRep kernel(const Algebra& a, const Rep& x, const Morphism& f, std::int64_t p) {
    const int n = a.num_vertices();
    std::vector<Mat> basis;
    SubRep k;
    for (int v = 0; v < n; ++v) {
        basis.push_back(nullspace(f.maps[v], p));
        k.rep.dims.push_back(basis.back().cols);
    }
    for (int v = 0; v < n; ++v) {
        auto w = a.shift(v, 1);
        if (!w) {
            k.rep.arrows.emplace_back();
            continue;
        }
        Mat img = multiply(x.arrows[v], basis[v], p);
        k.rep.arrows.push_back(solve_in_span(basis[*w], img, p));
    }
    k.map.maps = basis;
    return k;
}

SubRep cokernel(const Algebra& a, const Rep& y, const Morphism& f, std::int64_t p) {
    const int n = a.num_vertices();
    std::vector<Mat> proj, section;
    SubRep c;
    for (int v = 0; v < n; ++v) {
        const Mat& fv = f.maps[v];
        const int d = y.dims[v];
        // image columns first, then standard vectors, keeping independent ones
        std::vector<std::vector<std::int64_t>> cols;
        auto independent_with = [&](const std::vector<std::int64_t>& col) {
            Mat m(static_cast<int>(cols.size()) + 1, d);
            for (std::size_t i = 0; i < cols.size(); ++i)
                for (int r = 0; r < d; ++r) m(static_cast<int>(i), r) = cols[i][r];
            for (int r = 0; r < d; ++r) m(static_cast<int>(cols.size()), r) = col[r];
            return rank(m, p) == static_cast<int>(cols.size()) + 1;
        };
        for (int j = 0; j < fv.cols; ++j) {
            std::vector<std::int64_t> col(d);
            for (int r = 0; r < d; ++r) col[r] = fv(r, j);
            if (independent_with(col)) cols.push_back(col);
        }
        const int im = static_cast<int>(cols.size());
        for (int r = 0; r < d; ++r) {
            std::vector<std::int64_t> col(d, 0);
            col[r] = 1;
            if (independent_with(col)) cols.push_back(col);
        }
        Mat full(d, d);
        for (int j = 0; j < d; ++j)
            for (int r = 0; r < d; ++r) full(r, j) = cols[j][r];
        Mat inv = solve_in_span(full, Mat::identity(d), p);
        Mat q(d - im, d), s(d, d - im);
        for (int i = 0; i < d - im; ++i)
            for (int r = 0; r < d; ++r) {
                q(i, r) = inv(im + i, r);
                s(r, i) = full(r, im + i);
            }
        proj.push_back(q);
        section.push_back(s);
        c.rep.dims.push_back(d - im);
    }
    for (int v = 0; v < n; ++v) {
        auto w = a.shift(v, 1);
        if (!w) {
            c.rep.arrows.emplace_back();
            continue;
        }
        c.rep.arrows.push_back(multiply(proj[*w], multiply(y.arrows[v], section[v], p), p));
    }
    c.map.maps = proj;
    return c;
}

ModuleList decompose(const Algebra& a, const Rep& r, std::int64_t p) {
    ModuleList out;
    int total = 0;
    for (int d : r.dims) total += d;
    auto tops = [&](int v, int k) {  // summands with top v and length > k
        int here = rank(path_action_p(a, r, v, k, p), p);
        auto u = a.prev(v);
        int above = u ? rank(path_action_p(a, r, *u, k + 1, p), p) : 0;
        return here - above;
    };
    for (int v = 0; v < a.num_vertices(); ++v) {
        std::vector<int> n(total + 2, 0);
        for (int k = 0; k <= total + 1; ++k) n[k] = tops(v, k);
        for (int t = 1; t <= total; ++t)
            for (int c = 0; c < n[t - 1] - n[t]; ++c) out.push_back({v, t});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nakloc::oracle
