#include "helpers.hpp"

using namespace nakloc;
using namespace nakloc::test;

// Frozen values below were produced by the linear-algebra oracle first; each
// case re-asks the oracle so a drift in either side shows up here.

TEST_CASE("hom dimensions") {
    auto a = build_line(3, 2);
    CHECK(hom_dim(a, mod(a, "P3"), mod(a, "P2")) == 1);
    CHECK(oracle::hom_dim_lin(a, mod(a, "P3"), mod(a, "P2")) == 1);
    CHECK(hom_positions(a, mod(a, "P3"), mod(a, "P2")) == std::vector<int>{1});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(hom_dim(a, a.simple(i), a.simple(j)) == (i == j));

    for (int n = 1; n <= 4; ++n)
        for (int h = 2; h <= 6; ++h) {
            auto c = build_cycle(n, h);
            for (const auto& x : list_indecomposables(c)) {
                CHECK(hom_dim(c, x, x) == (x.length + n - 1) / n);
                CHECK(oracle::hom_dim_lin(c, x, x) == (x.length + n - 1) / n);
            }
        }
}

TEST_CASE("syzygies and presentations") {
    auto a2 = build_line(2, 2);
    CHECK(syzygy(a2, a2.simple(0)) == MaybeIndec(a2.projective(1)));
    auto p = proj_presentation(a2, a2.simple(0));
    CHECK(p.domain == MaybeIndec(a2.projective(1)));
    CHECK(p.codomain == a2.projective(0));
    CHECK(p.shift == 1);
    CHECK(!syzygy(a2, a2.projective(0)));
    CHECK(!proj_presentation(a2, a2.projective(0)).domain);

    auto c = build_cycle(3, 3);
    CHECK(syzygy(c, c.simple(0)) == MaybeIndec(Indec{1, 2}));
    CHECK(syzygy(c, {1, 2}) == MaybeIndec(c.simple(0)));
    auto o = omega_orbit(c, c.simple(0));
    CHECK(o.preperiod == 0);
    CHECK(o.period == 2);
    CHECK(o.at(7) == MaybeIndec(Indec{1, 2}));
}

TEST_CASE("Ext dimensions") {
    auto a2 = build_line(2, 2);
    CHECK(ext_dim(a2, a2.simple(0), a2.projective(0)) == 0);
    CHECK(oracle::ext1_dim_lin(a2, a2.simple(0), a2.projective(0)) == 0);
    auto a = build_line(3, 2);
    CHECK(ext_dim(a, a.simple(0), a.simple(1)) == 1);
    CHECK(oracle::ext1_dim_lin(a, a.simple(0), a.simple(1)) == 1);
    CHECK(ext_dim(a, a.simple(1), a.simple(0)) == 0);
    // Ext^2(S_1, S_3) through the resolution S_3 -> S_2 -> S_1 of A_3^2
    CHECK(ext_dim(a, a.simple(0), a.simple(2), 2) == 1);
    CHECK(ext_dim(a, a.simple(0), a.simple(2), 3) == 0);
}

TEST_CASE("AR translate") {
    auto a2 = build_line(2, 2);
    CHECK(tau(a2, a2.simple(0)) == a2.projective(1));
    CHECK_THROWS_AS(tau(a2, a2.projective(0)), ProjectiveHasNoTau);
    auto c = build_cycle(3, 3);
    CHECK(tau(c, {0, 2}) == Indec{1, 2});
    CHECK(oracle::ext1_dim_lin(c, {0, 2}, {1, 2}) == 1);
    auto a = build_line(3, 2);
    CHECK(tau(a, a.simple(0)) == a.simple(1));
}

TEST_CASE("quotients, submodules, composition factors") {
    auto a = build_line(3, 2);
    CHECK(submodules(a, a.projective(0)) == ModuleList{{0, 2}, {1, 1}});
    CHECK(quotients(a, a.projective(0)) == ModuleList{{0, 1}, {0, 2}});
    auto c = build_cycle(3, 3);
    CHECK(comp_factor_mult(c, {1, 2}, 2) == 1);
    CHECK(comp_factor_mult(a, {1, 2}, 0) == 0);
    CHECK(comp_factor_mult(c, {0, 3}, 0) == 1);
}

TEST_CASE("Gen closure") {
    auto a2 = build_line(2, 2);
    CHECK(gen_closure(a2, mods(a2, "P1,S1")) == mods(a2, "P1,S1"));
    CHECK(gen_closure(a2, {}).empty());
    for (const auto& b : small_battery()) {
        ModuleList proj;
        for (int v = 0; v < b.num_vertices(); ++v) proj.push_back(b.projective(v));
        CHECK(gen_closure(b, proj) == list_indecomposables(b));
    }
}

TEST_CASE("extension middles") {
    auto a2 = build_line(2, 2);
    auto mids = extension_middles(a2, a2.projective(1), a2.simple(0));
    REQUIRE(mids.size() == 2);
    CHECK(mids[0] == ModuleList{{0, 1}, {1, 1}});
    CHECK(mids[1] == ModuleList{a2.projective(0)});
    CHECK(stacked_extension(a2, a2.projective(1), a2.simple(0)) == MaybeIndec(a2.projective(0)));

    auto a = build_line(3, 3);
    mids = extension_middles(a, {2, 1}, {0, 2});
    REQUIRE(mids.size() == 2);
    CHECK(mids[1] == ModuleList{{0, 3}});

    CHECK(extension_middles(a2, a2.simple(0), a2.simple(1)).size() == 1);

    // Ext^1(S_1, P_2) = 1 over A_3: the only non-split middle is P_1
    mids = extension_middles(a, {1, 2}, {0, 1});
    REQUIRE(mids.size() == 2);
    CHECK(mids[1] == ModuleList{{0, 3}});

    // two-summand middle: 0 -> P_2 -> P_1 + S_2 -> M(1,2) -> 0 over A_3
    mids = extension_middles(a, {1, 2}, {0, 2});
    REQUIRE(mids.size() == 2);
    CHECK(mids[1] == ModuleList{{0, 3}, {1, 1}});
    CHECK(oracle::ext1_dim_lin(a, Indec{0, 2}, Indec{1, 2}) == 1);
}

TEST_CASE("middle count is 1 + dim Ext on the battery") {
    for (const auto& b : small_battery())
        for (const auto& x : list_indecomposables(b))
            for (const auto& y : list_indecomposables(b))
                CHECK(extension_middles(b, y, x).size() == static_cast<std::size_t>(1 + ext_dim(b, x, y, 1)));
}

TEST_CASE("projective dimension") {
    auto a = build_line(3, 2);
    CHECK(proj_dim(a, a.simple(0)) == 2);
    CHECK(proj_dim(a, a.simple(1)) == 1);
    CHECK(proj_dim(a, a.projective(0)) == 0);
    auto c = build_cycle(3, 2);
    for (const auto& x : list_indecomposables(c)) CHECK(proj_dim(c, x).has_value() == c.is_projective(x));
}

TEST_CASE("global dimension law for A_n^h") {
    CHECK(gldim_formula(3, 2) == 2);
    CHECK(gldim_formula(4, 2) == 3);
    for (int n = 3; n <= 8; ++n)
        for (int h = 2; h < n; ++h) {
            auto a = build_line(n, h);
            CHECK(proj_dim(a, a.simple(0)) == gldim_formula(n, h));
        }
}

TEST_CASE("injective envelopes and stable Hom") {
    auto a = build_line(3, 2);
    CHECK(injective_envelope(a, a.simple(0)) == a.simple(0));
    CHECK(injective_envelope(a, a.simple(1)) == a.projective(0));
    CHECK(is_injective(a, a.projective(0)));
    CHECK(!is_injective(a, a.projective(2)));
    CHECK(injective_envelope(a, a.simple(2)) == Indec{1, 2});
    for (const auto& b : small_battery())
        for (const auto& x : list_indecomposables(b)) {
            if (b.is_projective(x)) continue;
            for (const auto& y : list_indecomposables(b))
                CHECK(ext_dim(b, x, y, 1) == stable_hom_dim_inj(b, y, tau(b, x)));
        }
}

TEST_CASE("Euler form on hereditary lines") {
    for (int n = 1; n <= 5; ++n) {
        auto a = build_line(n, n + 1);
        for (const auto& x : list_indecomposables(a))
            for (const auto& y : list_indecomposables(a)) {
                int euler = 0;
                for (int v = 0; v < n; ++v) {
                    int dx = v >= x.vertex && v < x.vertex + x.length;
                    int dy = v >= y.vertex && v < y.vertex + y.length;
                    int dy1 = v + 1 >= y.vertex && v + 1 < y.vertex + y.length;
                    euler += dx * dy - (v + 1 < n ? dx * dy1 : 0);
                }
                CHECK(hom_dim(a, x, y) - ext_dim(a, x, y, 1) == euler);
            }
    }
}

TEST_CASE("syzygy periodicity law over self-injective cycles") {
    CHECK(syzygy_returns(3, 3, 1, 2));
    CHECK(!syzygy_returns(3, 3, 1, 1));
    for (int n = 2; n <= 5; ++n)
        for (int h = 2; h <= 5; ++h) {
            auto c = build_cycle(n, h);
            for (const auto& m : list_indecomposables(c)) {
                if (c.is_projective(m)) continue;
                auto o = omega_orbit(c, m);
                for (int z = 1; z <= 4 * n; ++z) {
                    const bool back = o.at(z) == MaybeIndec(m);
                    CHECK(back == syzygy_returns(n, h, m.length, z));
                    if (back) CHECK(ext_dim(c, o, m, z) == 1);
                }
            }
        }
}
