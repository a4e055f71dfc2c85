#pragma once

#include <map>
#include <string>
#include <vector>

#include "nakloc/oracle.hpp"
#include "nakloc/tautilt.hpp"

namespace nakloc {

struct Failure {
    std::string suite;
    std::string invariant;
    std::string algebra;
    std::string detail;
};

struct SuiteTally {
    long checks = 0;
    long failures = 0;
};

struct VerifyReport {
    std::vector<std::string> algebras;
    std::map<std::string, SuiteTally> suites;
    std::vector<Failure> failures;  // first few per invariant; tallies count all

    bool ok() const;
    void merge(const VerifyReport& o);
};

struct VerifyOptions {
    bool oracle = false;
    std::int64_t prime = oracle::default_prime;
};

// Non-uniform Kupisch series that are always part of the battery.
const std::vector<std::string>& nonuniform_series();
// A_n^h and Ã_n^h for n ≤ nmax, 2 ≤ h ≤ hmax (isomorphic lines dropped), plus
// the non-uniform series that fit inside the same bounds.
std::vector<Algebra> battery(int nmax, int hmax);

VerifyReport verify_algebra(const Algebra& a, const VerifyOptions& opt);
VerifyReport verify_battery(const std::vector<Algebra>& algebras, const VerifyOptions& opt, int threads = 0);
// Checks that do not depend on a single algebra (Kupisch validity, arc counts, gldim law).
VerifyReport verify_global(int nmax, int hmax);

// Summands of coker(P_i -> r(P_i)) over all vertices, computed on explicit matrices.
ModuleList unit_cokernel_summands(const Localisation& loc, std::int64_t p = oracle::default_prime);
// Kupisch validity as the condition that every rad P_i is a valid indecomposable.
bool kupisch_valid_by_radicals(const Component& c);
// pd(S_1) of A_n^h predicted from n = xh + r.
int gldim_formula(int n, int h);
// Whether Ω^z M = M over Ã_n^h for M non-projective of length s, by the periodicity law.
bool syzygy_returns(int n, int h, int s, int z);

}  // namespace nakloc
