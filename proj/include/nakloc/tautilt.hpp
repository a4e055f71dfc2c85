#pragma once

#include <vector>

#include "nakloc/localise.hpp"

namespace nakloc {

struct SupportTauTilting {
    ModuleList t;        // basic, sorted
    std::vector<int> e;  // killed vertices, sorted

    auto operator<=>(const SupportTauTilting&) const = default;
};

bool is_tau_rigid(const Algebra& a, const ModuleList& m);
bool is_tilting_classical(const Algebra& a, const ModuleList& t);

SupportTauTilting stt_from_torsion(const Algebra& a, const ModuleList& torsion);
ModuleList torsion_from_stt(const Algebra& a, const SupportTauTilting& s);

// Via torsion classes; throws StructureViolation if the brute-force
// enumeration over τ-rigid modules of each A/AeA disagrees.
std::vector<SupportTauTilting> enumerate_stt(const Algebra& a);
std::vector<SupportTauTilting> enumerate_stt_bruteforce(const Algebra& a);
// Classical tilting modules over each A/AeA (pd ≤ 1, no self-extensions).
std::vector<SupportTauTilting> enumerate_support_tilting_classical(const Algebra& a);

Localisation psi(const Algebra& a, const SupportTauTilting& s);
SupportTauTilting psi_inverse(const Algebra& a, const Localisation& loc);
ModuleList sigma_prime(const Algebra& a, const SupportTauTilting& s);

HasseQuiver hasse_stt(const Algebra& a);

}  // namespace nakloc
