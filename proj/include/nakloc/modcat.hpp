#pragma once

#include <optional>
#include <vector>

#include "nakloc/algebra.hpp"

namespace nakloc {

using MaybeIndec = std::optional<Indec>;  // nullopt is the zero module

// A nonzero map X -> Y is named by the position v of its image rad^v Y.
std::vector<int> hom_positions(const Algebra& a, const Indec& x, const Indec& y);
int hom_dim(const Algebra& a, const Indec& x, const Indec& y);
int hom_dim(const Algebra& a, const ModuleList& x, const ModuleList& y);

// Position of g∘f for f: X -> Y at position vf and g: Y -> Z at position vg.
std::optional<int> compose_positions(int vf, int vg, const Indec& z);
Indec image_of(const Algebra& a, const Indec& y, int v);
MaybeIndec kernel_of(const Algebra& a, const Indec& x, const Indec& y, int v);
MaybeIndec cokernel_of(const Indec& y, int v);

// P_1 -> P_0 with image rad^shift P_0; domain is empty for projective X.
struct Presentation {
    MaybeIndec domain;
    Indec codomain;
    int shift = 0;
};

Presentation proj_presentation(const Algebra& a, const Indec& x);
MaybeIndec syzygy(const Algebra& a, const Indec& x);

// X, ΩX, Ω²X, ... up to the first repeat. seq[preperiod .. preperiod+period)
// is the cycle; a zero syzygy is treated as a fixed point of period 1.
struct Orbit {
    std::vector<MaybeIndec> seq;
    int preperiod = 0;
    int period = 1;

    const MaybeIndec& at(long long i) const;  // Ω^i X
};

Orbit omega_orbit(const Algebra& a, const Indec& x);
int ext_dim(const Algebra& a, const Indec& x, const Indec& y, int i = 1);
int ext_dim(const Algebra& a, const Orbit& ox, const Indec& y, int i);

Indec tau(const Algebra& a, const Indec& x);

ModuleList quotients(const Algebra& a, const Indec& x);
ModuleList submodules(const Algebra& a, const Indec& x);
int comp_factor_mult(const Algebra& a, const Indec& x, int vertex);
ModuleList gen_closure(const Algebra& a, const ModuleList& g);

// First entry is the split middle; the rest are the non-split middles.
std::vector<ModuleList> extension_middles(const Algebra& a, const Indec& xsub, const Indec& xquot);
// Indecomposable middle of a non-split extension, if one exists.
MaybeIndec stacked_extension(const Algebra& a, const Indec& xsub, const Indec& xquot);

std::optional<int> proj_dim(const Algebra& a, const Indec& x);  // nullopt = infinite

Indec injective_envelope(const Algebra& a, const Indec& x);
bool is_injective(const Algebra& a, const Indec& x);
// dim Hom(X,Y) modulo maps factoring through injectives.
int stable_hom_dim_inj(const Algebra& a, const Indec& x, const Indec& y);

}  // namespace nakloc
