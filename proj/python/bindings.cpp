#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nakloc/arcs.hpp"
#include "nakloc/format.hpp"
#include "nakloc/report.hpp"

namespace py = pybind11;
using namespace nakloc;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string localise(const std::string& algebra, const std::string& sigma) {
    auto a = parse_algebra(algebra);
    auto j = localisation_json(canonicalise(a, parse_module_list(a, sigma)));
    j["algebra"] = algebra_json(a);
    return j.dump();
}

std::string enumerate(const std::string& algebra, const std::string& what) {
    auto a = parse_algebra(algebra);
    json out = json::array();
    if (what == "uniloc")
        for (const auto& l : enumerate_uniloc(a)) out.push_back(localisation_json(l));
    else if (what == "stt")
        for (const auto& s : enumerate_stt(a)) out.push_back(stt_json(a, s));
    else if (what == "torsion")
        for (const auto& t : enumerate_torsion_classes(a)) out.push_back(modules_json(a, t));
    else if (what == "wide")
        for (const auto& c : enumerate_wide(a)) out.push_back(modules_json(a, c));
    else if (what == "orth")
        for (const auto& s : enumerate_orth_collections(a)) out.push_back(modules_json(a, s));
    else if (what == "homological")
        for (const auto& l : classify_homological_selfinjective(a)) out.push_back(localisation_json(l));
    else
        throw py::value_error("unknown enumeration '" + what + "'");
    return out.dump();
}

std::string hasse(const std::string& algebra, const std::string& what) {
    auto a = parse_algebra(algebra);
    if (what == "stt") return to_json(hasse_stt(a)).dump();
    if (what == "uniloc") return to_json(hasse_uniloc(a)).dump();
    throw py::value_error("hasse needs 'stt' or 'uniloc'");
}

std::string verify(int nmax, int hmax, bool use_oracle) {
    VerifyOptions opt;
    opt.oracle = use_oracle;
    auto r = verify_battery(battery(nmax, hmax), opt);
    r.merge(verify_global(nmax, hmax));
    return verify_json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_nakloc, m) {
    py::register_exception<Error>(m, "NaklocError", PyExc_ValueError);
    m.def("localise", &localise, py::arg("algebra"), py::arg("sigma"));
    m.def("enumerate", &enumerate, py::arg("algebra"), py::arg("what"));
    m.def("hasse", &hasse, py::arg("algebra"), py::arg("what"));
    m.def("count_noncrossing", [](const std::string& shape, int n, int h) {
        if (shape != "line" && shape != "circle") throw py::value_error("shape is 'line' or 'circle'");
        return count_noncrossing(shape == "line" ? ArcShape::line : ArcShape::circle, n, h);
    });
    m.def("verify", &verify, py::arg("nmax"), py::arg("hmax"), py::arg("oracle") = false);
    m.def("canonical_spec", [](const std::string& algebra) { return algebra_spec(parse_algebra(algebra)); });
}
