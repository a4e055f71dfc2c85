#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nakloc/algebra.hpp"

namespace nakloc {

enum class ArcShape { line, circle };

// Points are 0-based internally. An arc (j, i) runs from j back to i, where
// j is reached from i along the arrows.
struct ArcDiagram {
    ArcShape shape = ArcShape::line;
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // (source j, target i), sorted
    std::vector<int> loops;                 // sorted

    auto operator<=>(const ArcDiagram&) const = default;
};

struct UniformFamily {
    ArcShape shape;
    int n;
    int h;
};

// Throws NotUniformFamily unless `a` is build_line(n,h) or build_cycle(n,h).
UniformFamily uniform_family(const Algebra& a);

int arc_length(const ArcDiagram& d, const std::pair<int, int>& arc);
bool is_valid_diagram(const ArcDiagram& d, int h);

ArcDiagram to_arc_diagram(const Algebra& a, const ModuleList& w_tilde);
ModuleList from_arc_diagram(const Algebra& a, const ArcDiagram& d);

std::vector<ArcDiagram> enumerate_diagrams(ArcShape shape, int n, int h);
long long count_noncrossing(ArcShape shape, int n, int h);

nlohmann::json diagram_json(const ArcDiagram& d);
std::string render_ascii(const ArcDiagram& d);

}  // namespace nakloc
