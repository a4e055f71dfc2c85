#include "nakloc/hasse.hpp"

#include <algorithm>

namespace nakloc {

HasseQuiver hasse_from_order(std::vector<std::string> labels, const std::function<bool(int, int)>& less) {
    HasseQuiver q;
    const int n = static_cast<int>(labels.size());
    q.labels = std::move(labels);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!less(j, i)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (less(j, k) && less(k, i)) cover = false;
            if (cover) q.edges.emplace_back(i, j);
        }
    std::sort(q.edges.begin(), q.edges.end());
    return q;
}

std::string to_dot(const HasseQuiver& q, const std::string& name) {
    std::string s = "digraph " + name + " {\n";
    for (std::size_t i = 0; i < q.labels.size(); ++i)
        s += "  n" + std::to_string(i) + " [label=\"" + q.labels[i] + "\"];\n";
    for (auto [i, j] : q.edges) s += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    return s + "}\n";
}

nlohmann::json to_json(const HasseQuiver& q) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : q.edges) edges.push_back({i, j});
    return {{"nodes", q.labels}, {"edges", edges}};
}

}  // namespace nakloc
