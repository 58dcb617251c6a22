#pragma once

#include "druz/inversion.hpp"
#include "druz/polymap.hpp"

#include <vector>

namespace druz {

/// F = X + (A_i X)^{d_i}; zero rows give H_i = 0.
PolyMap realize_map(const PowerLinearData& data);

struct Theorem21Report {
    bool trace_zero;                       // Tr JH = 0 identically
    std::vector<MinorSizeReport> minors;   // sizes 2..n
    bool minors_vanish;
    bool hypotheses_hold;
    std::optional<InverseResult> inverse;  // present iff hypotheses hold
};

/// Hypothesis checks for the power-linear automorphism criterion, plus an
/// independent invertibility confirmation by formal inversion.
Theorem21Report theorem21_check(const PowerLinearData& data);

struct CorollaryReport {
    int n;
    int rank_a;
    int corank_a;
    bool keller;                 // det JF = 1
    // minors of sizes 2..n-4 all vanish (vacuous when n < 6)
    bool cor22_range_vacuous;
    bool cor22_minors_vanish;
    bool cor22_applicable;       // keller && minors vanish
    bool diagonal_all_nonzero;   // every A_ii != 0
    bool rank_le_half;           // rank A <= floor(n/2)
    bool cor23_applicable;       // keller && diagonal nonzero
};

/// Hypothesis diagnostics only; the tameness / triangularizability
/// conclusions rest on external theorems and are never computed here.
CorollaryReport corollary_diagnostics(const PowerLinearData& data);

struct WaringTerm {
    Rat coeff;
    std::vector<Rat> form;  // normalized: first nonzero entry is 1
    int exponent;           // >= 2
};

/**
 * Exact decomposition of a homogeneous p of degree d >= 2 into rational
 * multiples of d-th powers of linear forms. Degree-2 mixed monomials use
 * the two-point polarization x*y = ((x+y)^2 - (x-y)^2)/4; higher degrees
 * use the per-monomial finite-difference formula
 *   e! z_1...z_e = sum_{S != {}} (-1)^{e-|S|} (sum_{i in S} z_i)^e.
 * Like forms are merged after normalization.
 */
std::vector<WaringTerm> waring_decompose(const Polynomial& p);

/// Re-expands sum c_j (l_j . x)^{e_j}; test oracle and sanity check.
Polynomial waring_expand(std::span<const WaringTerm> terms, int arity);

}  // namespace druz
