#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nakloc/arcs.hpp"
#include "nakloc/format.hpp"
#include "nakloc/report.hpp"

using namespace nakloc;
namespace fs = std::filesystem;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string algebra;
    std::string sigma;
    std::string module;
    std::string what;
    std::string format = "json";
    std::string cache;
    bool timing = false;
    bool oracle = false;
    bool count = false;
    int nmax = 0;
    int hmax = 0;
    int threads = 0;
};

std::string enumerate(const Algebra& a, const std::string& what) {
    std::ostringstream out;
    long n = 0;
    auto line = [&](const json& j) {
        out << j.dump() << "\n";
        ++n;
    };
    if (what == "uniloc") {
        for (const auto& l : enumerate_uniloc(a)) line(localisation_json(l));
    } else if (what == "stt") {
        for (const auto& s : enumerate_stt(a)) line(stt_json(a, s));
    } else if (what == "torsion") {
        for (const auto& t : enumerate_torsion_classes(a)) line(modules_json(a, t));
    } else if (what == "wide") {
        for (const auto& c : enumerate_wide(a)) line(modules_json(a, c));
    } else if (what == "orth") {
        for (const auto& s : enumerate_orth_collections(a)) line(modules_json(a, s));
    } else if (what == "arcs") {
        auto fam = uniform_family(a);
        for (const auto& d : enumerate_diagrams(fam.shape, fam.n, fam.h)) line(diagram_json(d));
    } else if (what == "homological") {
        for (const auto& l : classify_homological_selfinjective(a)) line(localisation_json(l));
    } else {
        throw Usage("unknown --what '" + what + "'");
    }
    out << json{{"count", n}}.dump() << "\n";
    return out.str();
}

std::string hasse(const Algebra& a, const Options& o) {
    HasseQuiver q;
    if (o.what == "stt")
        q = hasse_stt(a);
    else if (o.what == "uniloc")
        q = hasse_uniloc(a);
    else
        throw Usage("hasse needs --what stt or --what uniloc");
    if (o.format == "dot") return to_dot(q, o.what);
    if (o.format == "json") return to_json(q).dump() + "\n";
    throw Usage("hasse supports --format dot or json");
}

std::string stt_report(const Algebra& a, const Options& o) {
    auto t = parse_module_list(a, o.module);
    for (const auto& s : enumerate_stt(a)) {
        if (s.t != t) continue;
        auto loc = psi(a, s);
        json j = stt_json(a, s);
        j["tau_tilting"] = s.e.empty();
        j["tilting_classical"] = is_tilting_classical(a, s.t);
        j["gen"] = literals_json(torsion_from_stt(a, s));
        j["sigma_prime"] = literals_json(sigma_prime(a, s));
        j["psi"] = localisation_json(loc);
        return j.dump() + "\n";
    }
    throw Error(sum_name(a, t) + " is not a support τ-tilting module");
}

std::string arcs_report(const Algebra& a, const Options& o) {
    auto fam = uniform_family(a);
    if (o.count) return json{{"count", count_noncrossing(fam.shape, fam.n, fam.h)}}.dump() + "\n";
    auto loc = canonicalise(a, parse_module_list(a, o.sigma));
    auto d = to_arc_diagram(a, loc.w_tilde);
    if (o.format == "ascii") return render_ascii(d);
    if (o.format == "json") return diagram_json(d).dump() + "\n";
    throw Usage("arcs supports --format json or ascii");
}

std::string verify_report(const Options& o, bool& ok) {
    if (o.nmax < 1 || o.hmax < 1) throw Usage("verify bounds must be at least 1");
    VerifyOptions vo;
    vo.oracle = o.oracle;
    auto r = verify_battery(battery(o.nmax, o.hmax), vo, o.threads);
    r.merge(verify_global(o.nmax, o.hmax));
    ok = r.ok();
    if (o.format == "json") return verify_json(r).dump() + "\n";
    std::ostringstream out;
    out << "algebras: " << r.algebras.size() << "\n";
    out << std::left << std::setw(12) << "suite" << std::right << std::setw(10) << "checks" << std::setw(10)
        << "failures" << "\n";
    for (const auto& [k, v] : r.suites)
        out << std::left << std::setw(12) << k << std::right << std::setw(10) << v.checks << std::setw(10) << v.failures
            << "\n";
    for (const auto& f : r.failures)
        out << "FAIL " << f.suite << " / " << f.invariant << " on " << f.algebra
            << (f.detail.empty() ? "" : " : " + f.detail) << "\n";
    out << (ok ? "OK" : "FAILED") << "\n";
    return out.str();
}

// Reads or fills the --cache entry for a deterministic command output.
std::string cached(const Options& o, const std::string& key, const std::function<std::string()>& compute) {
    if (o.cache.empty()) return compute();
    std::string name;
    for (char c : key) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    fs::path file = fs::path(o.cache) / (name + ".out");
    if (fs::exists(file)) {
        std::ifstream in(file);
        return {std::istreambuf_iterator<char>(in), {}};
    }
    std::string s = compute();
    fs::create_directories(o.cache);
    std::ofstream(file) << s;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal localisations of Nakayama algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--timing", o.timing, "report wall time");
    app.add_option("--cache", o.cache, "directory memoising enumeration output");

    auto algebra_opt = [&](CLI::App* c) {
        c->add_option("-A,--algebra", o.algebra, "line:n,h | cycle:n,h | kupisch:line=..;cycle=.. | JSON")->required();
    };
    auto* loc = app.add_subcommand("localise", "localise at a set of modules");
    algebra_opt(loc);
    loc->add_option("-S,--sigma", o.sigma, "modules, e.g. \"M(2,1),P3\"");
    loc->add_option("--format", o.format)->check(CLI::IsMember({"json"}));

    auto* en = app.add_subcommand("enumerate", "list every object of one kind, one JSON line each");
    algebra_opt(en);
    en->add_option("--what", o.what)
        ->required()
        ->check(CLI::IsMember({"uniloc", "stt", "torsion", "wide", "orth", "arcs", "homological"}));

    auto* ha = app.add_subcommand("hasse", "Hasse quiver of support τ-tilting modules or localisations");
    algebra_opt(ha);
    ha->add_option("--what", o.what)->required()->check(CLI::IsMember({"stt", "uniloc"}));
    ha->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));

    auto* st = app.add_subcommand("stt", "report on one support τ-tilting module");
    algebra_opt(st);
    st->add_option("-T,--module", o.module, "summands, e.g. \"P1+S1\"")->required();

    auto* ar = app.add_subcommand("arcs", "arc diagrams of A_n^h and Ã_n^h");
    algebra_opt(ar);
    auto* cnt = ar->add_flag("--count", o.count, "number of non-crossing diagrams");
    ar->add_option("--of-sigma", o.sigma, "diagram of the localisation at these modules")->excludes(cnt);
    ar->add_option("--format", o.format)->check(CLI::IsMember({"json", "ascii"}));

    auto* ve = app.add_subcommand("verify", "run every invariant suite over the test battery");
    ve->add_option("nmax", o.nmax)->required();
    ve->add_option("hmax", o.hmax)->required();
    ve->add_flag("--oracle", o.oracle, "include the linear-algebra sweeps");
    ve->add_option("--threads", o.threads, "worker threads (default: all cores)");
    ve->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}))->default_str("table");

    try {
        o.format.clear();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string out;
    bool ok = true;
    try {
        if (*ve) {
            if (o.format.empty()) o.format = "table";
            out = verify_report(o, ok);
        } else {
            Algebra a = parse_algebra(o.algebra);
            const std::string spec = algebra_spec(a);
            if (*loc) {
                json j = {{"command", "localise"}, {"algebra", algebra_json(a)}};
                j.update(localisation_json(canonicalise(a, parse_module_list(a, o.sigma))));
                out = j.dump() + "\n";
            } else if (*en) {
                out = cached(o, "enumerate " + spec + " " + o.what, [&] { return enumerate(a, o.what); });
            } else if (*ha) {
                if (o.format.empty()) o.format = "dot";
                out = cached(o, "hasse " + spec + " " + o.what + " " + o.format, [&] { return hasse(a, o); });
            } else if (*st) {
                out = stt_report(a, o);
            } else if (*ar) {
                if (o.format.empty()) o.format = "json";
                if (!o.count && !ar->count("--of-sigma")) throw Usage("arcs needs --count or --of-sigma");
                out = arcs_report(a, o);
            }
        }
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << out;
    if (o.timing) {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cerr << json{{"timing_ms", ms}}.dump() << "\n";
    }
    return ok ? 0 : 1;
}
