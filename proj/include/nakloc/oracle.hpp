#pragma once

#include <cstdint>
#include <vector>

#include "nakloc/algebra.hpp"

// Brute-force linear algebra over F_p on explicit quiver representations.
// Slow on purpose; it checks the combinatorial formulas.
namespace nakloc::oracle {

// Dense matrix over F_p, entries kept in [0, p).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> e;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}
    std::int64_t& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
    static Mat identity(int n);
};

struct Rep {
    std::vector<int> dims;    // per vertex
    std::vector<Mat> arrows;  // arrows[v] : vertex v -> next vertex (empty if no arrow)
};

struct Morphism {
    std::vector<Mat> maps;  // per vertex, dim target × dim source
};

constexpr std::int64_t default_prime = 101;

Rep realize(const Algebra& a, const ModuleList& m);
Rep realize(const Algebra& a, const Indec& x);

// Map between realised sums given by blocks (source summand, target summand, image position).
struct Block {
    int from;
    int to;
    int position;
};
Morphism position_map(const Algebra& a, const ModuleList& src, const ModuleList& dst, const std::vector<Block>& blocks);

std::vector<Morphism> hom_basis(const Algebra& a, const Rep& x, const Rep& y, std::int64_t p = default_prime);
int hom_dim_lin(const Algebra& a, const Rep& x, const Rep& y, std::int64_t p = default_prime);
int hom_dim_lin(const Algebra& a, const Indec& x, const Indec& y, std::int64_t p = default_prime);
// Computed twice (dimension count and explicit cokernel); throws on disagreement.
int ext1_dim_lin(const Algebra& a, const Indec& x, const Indec& y, std::int64_t p = default_prime);
int end_dim_lin(const Algebra& a, const ModuleList& m, std::int64_t p = default_prime);

Morphism compose(const Morphism& g, const Morphism& f, std::int64_t p = default_prime);
bool is_module(const Algebra& a, const Rep& r, std::int64_t p = default_prime);

struct SubRep {
    Rep rep;
    Morphism map;  // inclusion for kernels, projection for cokernels
};
SubRep kernel(const Algebra& a, const Rep& x, const Morphism& f, std::int64_t p = default_prime);
SubRep cokernel(const Algebra& a, const Rep& y, const Morphism& f, std::int64_t p = default_prime);

// Indecomposable summands (with multiplicity) of a representation.
ModuleList decompose(const Algebra& a, const Rep& r, std::int64_t p = default_prime);

// Linear-algebra helpers, exposed for tests.
int rank(Mat m, std::int64_t p);
Mat nullspace(const Mat& m, std::int64_t p);  // basis as columns
Mat multiply(const Mat& a, const Mat& b, std::int64_t p);
// X with b = basis · X; every column of b must lie in the column span of basis.
Mat solve_in_span(const Mat& basis, const Mat& b, std::int64_t p);

}  // namespace nakloc::oracle
