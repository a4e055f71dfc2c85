#pragma once

#include <vector>

#include "nakloc/modcat.hpp"

namespace nakloc {

// True iff Hom(σ, target) : Hom(P_0, target) -> Hom(P_1, target) is bijective.
bool hom_iso_against(const Algebra& a, const Presentation& p, const Indec& target);

ModuleList sigma_star(const Algebra& a, const ModuleList& sigma);
ModuleList lower_star(const Algebra& a, const ModuleList& c);

bool is_orth_collection(const Algebra& a, const ModuleList& s);
bool is_wide(const Algebra& a, const ModuleList& c);
bool is_torsion_class(const Algebra& a, const ModuleList& t);

ModuleList simples_of_wide(const Algebra& a, const ModuleList& c);
ModuleList wide_from_collection(const Algebra& a, const ModuleList& s);

ModuleList alpha(const Algebra& a, const ModuleList& t);

struct BetaResult {
    ModuleList torsion;
    int extra_steps = 0;  // closure steps needed after the first Gen + extension sweep
};
BetaResult beta_closure(const Algebra& a, const ModuleList& c);
ModuleList beta(const Algebra& a, const ModuleList& c);

ModuleList ext_projectives(const Algebra& a, const ModuleList& t);
ModuleList split_projectives(const Algebra& a, const ModuleList& t);

std::vector<ModuleList> enumerate_orth_collections(const Algebra& a);
std::vector<ModuleList> enumerate_torsion_classes(const Algebra& a);
std::vector<ModuleList> enumerate_wide(const Algebra& a);

// Vertices that occur as a composition factor of some member.
std::vector<int> support(const Algebra& a, const ModuleList& m);

}  // namespace nakloc
