#include "nakloc/format.hpp"

#include <algorithm>
#include <cctype>

namespace nakloc {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    bool accept(const std::string& w) {
        skip_ws();
        if (s_.compare(i_, w.size(), w) == 0) {
            i_ += w.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        skip_ws();
        std::size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (st == i_) fail("expected an integer");
        if (i_ - st > 6) fail("integer too large");
        return std::stoi(s_.substr(st, i_ - st));
    }
    std::vector<int> int_list() {
        std::vector<int> out{integer()};
        while (accept(',')) out.push_back(integer());
        return out;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }
    std::size_t pos() const { return i_; }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

Indec module_at(const Algebra& a, Scanner& sc) {
    std::size_t st = sc.pos();
    Indec x;
    if (sc.accept('M')) {
        sc.expect('(');
        x.vertex = sc.integer() - 1;
        sc.expect(',');
        x.length = sc.integer();
        sc.expect(')');
    } else if (sc.accept('P')) {
        x.vertex = sc.integer() - 1;
        if (x.vertex < 0 || x.vertex >= a.num_vertices()) throw ParseError("no such vertex", st);
        x.length = a.loewy(x.vertex);
    } else if (sc.accept('S')) {
        x.vertex = sc.integer() - 1;
        x.length = 1;
    } else {
        sc.fail("expected a module literal");
    }
    if (!a.valid(x)) throw ParseError("module is not valid over this algebra", st);
    return x;
}

}  // namespace

Algebra parse_algebra(const std::string& text) {
    Scanner sc(text);
    sc.skip_ws();
    if (!text.empty() && text.find_first_not_of(" \t\n") != std::string::npos &&
        text[text.find_first_not_of(" \t\n")] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("bad algebra JSON: ") + e.what(), e.byte);
        }
        return algebra_from_json(j);
    }
    Algebra out;
    if (sc.accept("line:")) {
        int n = sc.integer();
        sc.expect(',');
        int h = sc.integer();
        out = build_line(n, h);
    } else if (sc.accept("cycle:")) {
        int n = sc.integer();
        sc.expect(',');
        int h = sc.integer();
        out = build_cycle(n, h);
    } else if (sc.accept("kupisch:")) {
        std::vector<Component> comps;
        if (!sc.done()) {
            do {
                Component c;
                if (sc.accept("line="))
                    c.shape = Shape::line;
                else if (sc.accept("cycle="))
                    c.shape = Shape::cycle;
                else
                    sc.fail("expected 'line=' or 'cycle='");
                c.kupisch = sc.int_list();
                comps.push_back(c);
            } while (sc.accept(';'));
        }
        out = from_kupisch(comps);
    } else {
        sc.fail("expected 'line:', 'cycle:', 'kupisch:' or JSON");
    }
    if (!sc.done()) sc.fail("trailing input");
    return out;
}

std::string algebra_spec(const Algebra& a) {
    std::string s = "kupisch:";
    bool first = true;
    for (const auto& c : a.components()) {
        if (!first) s += ';';
        first = false;
        s += c.shape == Shape::line ? "line=" : "cycle=";
        for (int i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c.kupisch[i]);
    }
    return s;
}

json algebra_json(const Algebra& a) {
    json comps = json::array();
    for (const auto& c : a.components())
        comps.push_back({{"shape", c.shape == Shape::line ? "line" : "cycle"}, {"kupisch", c.kupisch}});
    return {{"components", comps}};
}

Algebra algebra_from_json(const json& j) {
    std::vector<Component> comps;
    try {
        for (const auto& c : j.at("components")) {
            Component comp;
            auto shape = c.at("shape").get<std::string>();
            if (shape == "line")
                comp.shape = Shape::line;
            else if (shape == "cycle")
                comp.shape = Shape::cycle;
            else
                throw ParseError("unknown shape '" + shape + "'", 0);
            comp.kupisch = c.at("kupisch").get<std::vector<int>>();
            comps.push_back(comp);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad algebra JSON: ") + e.what(), 0);
    }
    return from_kupisch(comps);
}

Indec parse_module(const Algebra& a, const std::string& text) {
    Scanner sc(text);
    Indec x = module_at(a, sc);
    if (!sc.done()) sc.fail("trailing input");
    return x;
}

ModuleList parse_module_list(const Algebra& a, const std::string& text) {
    Scanner sc(text);
    ModuleList out;
    if (sc.done()) return out;
    do {
        out.push_back(module_at(a, sc));
    } while (sc.accept(',') || sc.accept('+'));
    if (!sc.done()) sc.fail("trailing input");
    normalize(out);
    return out;
}

std::string literal(const Indec& x) {
    return "M(" + std::to_string(x.vertex + 1) + "," + std::to_string(x.length) + ")";
}

std::string short_name(const Algebra& a, const Indec& x) {
    if (a.is_projective(x)) return "P" + std::to_string(x.vertex + 1);
    if (x.length == 1) return "S" + std::to_string(x.vertex + 1);
    return literal(x);
}

namespace {

// Projectives first, then longer modules first, as in P1+M(1,2)+S2.
std::string joined_names(const Algebra& a, ModuleList m, const char* sep) {
    std::stable_sort(m.begin(), m.end(), [&](const Indec& x, const Indec& y) {
        bool px = a.is_projective(x), py = a.is_projective(y);
        if (px != py) return px;
        if (px) return x.vertex < y.vertex;
        return x.length != y.length ? x.length > y.length : x.vertex < y.vertex;
    });
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? sep : "") + short_name(a, m[i]);
    return s;
}

}  // namespace

std::string sum_name(const Algebra& a, const ModuleList& m) {
    if (m.empty()) return "0";
    return joined_names(a, m, "+");
}

std::string set_name(const Algebra& a, const ModuleList& m) {
    if (m.empty()) return "{0}";
    return "{" + joined_names(a, m, ",") + "}";
}

std::string vertex_set_name(const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i] + 1);
    return s + "}";
}

json module_json(const Indec& x) { return {{"vertex", x.vertex + 1}, {"length", x.length}}; }

Indec module_from_json(const Algebra& a, const json& j) {
    Indec x;
    try {
        x = {j.at("vertex").get<int>() - 1, j.at("length").get<int>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad module JSON: ") + e.what(), 0);
    }
    a.check(x);
    return x;
}

json literals_json(const ModuleList& m) {
    json out = json::array();
    for (const auto& x : m) out.push_back(literal(x));
    return out;
}

}  // namespace nakloc
