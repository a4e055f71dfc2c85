#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "nakloc/errors.hpp"

namespace nakloc {

enum class Shape { line, cycle };

struct Component {
    Shape shape = Shape::line;
    std::vector<int> kupisch;

    int size() const { return static_cast<int>(kupisch.size()); }
    bool operator==(const Component&) const = default;
};

// M(vertex, length) = P_vertex / rad^length P_vertex. Vertices are 0-based
// internally; every text format is 1-based.
struct Indec {
    int vertex = 0;
    int length = 1;
    auto operator<=>(const Indec&) const = default;
};

// Sorted by (vertex, length). Sets are kept unique; AB keeps multiplicities.
using ModuleList = std::vector<Indec>;

class Algebra {
public:
    Algebra() = default;  // the zero algebra
    explicit Algebra(std::vector<Component> components);

    const std::vector<Component>& components() const { return comps_; }
    int num_vertices() const { return static_cast<int>(comp_of_.size()); }
    bool is_zero() const { return comps_.empty(); }

    int loewy(int v) const { return comps_[comp_of_[v]].kupisch[local_[v]]; }
    int component_of(int v) const { return comp_of_[v]; }
    int local_index(int v) const { return local_[v]; }
    int component_start(int c) const { return start_[c]; }
    int component_size_of(int v) const { return comps_[comp_of_[v]].size(); }
    Shape shape_of(int v) const { return comps_[comp_of_[v]].shape; }

    // Vertex reached from v along k arrows, if the path exists.
    std::optional<int> shift(int v, int k) const;
    // Vertex before v (source of the arrow ending at v), if any.
    std::optional<int> prev(int v) const;

    bool valid(const Indec& x) const;
    void check(const Indec& x) const;  // throws InvalidModule
    bool is_projective(const Indec& x) const { return x.length == loewy(x.vertex); }
    bool is_simple(const Indec& x) const { return x.length == 1; }
    Indec projective(int v) const { return {v, loewy(v)}; }
    Indec simple(int v) const { return {v, 1}; }
    // Vertex of the socle of x.
    int socle(const Indec& x) const { return *shift(x.vertex, x.length - 1); }

    int num_indecomposables() const { return total_; }
    int index_of(const Indec& x) const { return offset_[x.vertex] + x.length - 1; }
    Indec indec_at(int idx) const;
    ModuleList indecomposables() const;

    bool operator==(const Algebra& o) const { return comps_ == o.comps_; }

private:
    std::vector<Component> comps_;
    std::vector<int> comp_of_, local_, start_, offset_;
    int total_ = 0;
};

Algebra build_line(int n, int h);
Algebra build_cycle(int n, int h);
Algebra from_kupisch(std::vector<Component> components);
ModuleList list_indecomposables(const Algebra& a);

// Throws InvalidKupisch naming the violated constraint.
void validate_component(const Component& c);

struct Quotient {
    Algebra algebra;
    std::vector<int> vertex_map;  // quotient vertex -> vertex of the original algebra

    Indec embed(const Indec& x) const { return {vertex_map[x.vertex], x.length}; }
    // Inverse of embed on modules with no composition factor in the killed set.
    std::optional<Indec> restrict(const Indec& x) const;
};

// A / AeA where e is the idempotent of the vertex set `killed` (0-based).
Quotient quotient_by_vertices(const Algebra& a, const std::vector<int>& killed);

// Canonical representative up to isomorphism: cycles rotated to the
// lexicographically least Kupisch series, components sorted.
std::vector<Component> canonical_form(const Algebra& a);
bool isomorphic(const Algebra& a, const Algebra& b);

// ---- module set helpers --------------------------------------------------

void normalize(ModuleList& m);
ModuleList normalized(ModuleList m);
bool contains(const ModuleList& sorted, const Indec& x);
bool is_subset(const ModuleList& a, const ModuleList& b);
ModuleList set_union(const ModuleList& a, const ModuleList& b);
ModuleList set_difference(const ModuleList& a, const ModuleList& b);

// Membership mask indexed by Algebra::index_of.
std::vector<char> mask_of(const Algebra& a, const ModuleList& m);
ModuleList from_mask(const Algebra& a, const std::vector<char>& mask);

}  // namespace nakloc
