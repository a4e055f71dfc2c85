#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace nakloc {

// Covering relations of a finite poset; an edge (i, j) means j is covered by i.
struct HasseQuiver {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
};

HasseQuiver hasse_from_order(std::vector<std::string> labels, const std::function<bool(int, int)>& less);
std::string to_dot(const HasseQuiver& q, const std::string& name);
nlohmann::json to_json(const HasseQuiver& q);

}  // namespace nakloc
