#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nakloc/hasse.hpp"
#include "nakloc/subcats.hpp"

namespace nakloc {

struct LocFlags {
    bool injective = false;
    bool surjective = false;
    bool pure = false;
    bool semisimple = false;
    bool homological = false;
    std::vector<int> annihilated;  // E
};

// The localised algebra B rebuilt from the simples of 𝒳. B-vertex j
// corresponds to b_simples[j]; dict pairs every B-indecomposable with the
// A-module it restricts to.
struct Reconstruction {
    Algebra b;
    std::vector<Indec> b_simples;
    std::vector<Indec> b_projectives;  // as A-modules, indexed by B-vertex
    std::vector<std::pair<Indec, Indec>> dict;
    std::map<Indec, Indec> to_b;
};

struct Localisation {
    Algebra base;
    ModuleList sigma;
    ModuleList trivial;  // *𝒳
    ModuleList w;
    ModuleList w_tilde;
    ModuleList xcat;
    ModuleList simples;
    ModuleList mainnak;  // Φ(W̃)
    Reconstruction rec;
    std::vector<ModuleList> reflections;  // r(P_i) per vertex of A
    std::vector<int> unit_image;          // u_i
    ModuleList ab;                        // _AB with multiplicities
    int dim_ab = 0;
    LocFlags flags;

    const Algebra& b() const { return rec.b; }
    bool same_epiclass(const Localisation& o) const { return base == o.base && xcat == o.xcat; }
};

struct ProjMap {
    int source;  // P_source -> P_target with image rad^shift P_target
    int target;
    int shift;
};
ModuleList map_to_modules(const Algebra& a, const std::vector<ProjMap>& maps);

Indec phi(const Algebra& a, const Indec& x);
Indec phi_inverse(const Algebra& a, const Indec& x);
ModuleList phi(const Algebra& a, const ModuleList& m);
ModuleList phi_inverse(const Algebra& a, const ModuleList& m);

// Per vertex the minimal trivial quotient (t_i = 0 read as P_i).
ModuleList minimal_trivial(const Algebra& a, const ModuleList& trivial);
void check_w_properties(const Algebra& a, const ModuleList& w);        // throws PropertyViolation
void check_w_tilde_properties(const Algebra& a, const ModuleList& wt);  // throws PropertyViolation
std::vector<std::vector<Indec>> chains(const Algebra& a, const ModuleList& w);
ModuleList w_tilde(const Algebra& a, const ModuleList& w);
// Inverse of w_tilde: arcs are cut at the projectives lying strictly inside them.
ModuleList w_from_w_tilde(const Algebra& a, const ModuleList& wt);

Reconstruction reconstruct_algebra(const Algebra& a, const ModuleList& xcat, const ModuleList& simples);

struct LocalisedModule {
    ModuleList ab;
    std::vector<ModuleList> reflections;
    std::vector<int> unit_image;
};
LocalisedModule module_of_localisation(const Algebra& a, const Reconstruction& rec, const ModuleList& xcat);

// Components of the unit P_i -> r(P_i): each entry is a summand of r(P_i)
// (as an A-module) and the image position of the map into it.
std::vector<std::pair<Indec, int>> unit_map(const Localisation& loc, int vertex);

Localisation canonicalise(const Algebra& a, const ModuleList& sigma);
// The localisation whose module category is the wide subcategory `xcat`.
Localisation localisation_with_xcat(const Algebra& a, const ModuleList& xcat);

bool is_homological(const Localisation& loc);

std::vector<Localisation> enumerate_uniloc(const Algebra& a);
HasseQuiver hasse_uniloc(const Algebra& a);
HasseQuiver hasse_uniloc(const std::vector<Localisation>& locs);

std::vector<Localisation> classify_homological_selfinjective(int n, int h);
std::vector<Localisation> classify_homological_selfinjective(const Algebra& a);

struct QuotientLocalisation {
    Quotient quotient;
    Localisation loc;
};
QuotientLocalisation compose_with_quotient(const Algebra& a, const Localisation& loc);

}  // namespace nakloc
