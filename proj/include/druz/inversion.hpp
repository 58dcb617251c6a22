#pragma once

#include "druz/gz_pairing.hpp"
#include "druz/polymap.hpp"

#include <optional>

namespace druz {

enum class InverseVerdict { inverse, not_invertible_within_bound };

struct InverseResult {
    InverseVerdict verdict;
    std::optional<PolyMap> inverse;   // present iff verdict == inverse
    std::optional<int64_t> degree;
    int64_t bound;                    // truncation degree that was in force
    bool certified;                   // F o G = X and G o F = X, checked exactly
};

/**
 * Truncated formal inversion of F = X + H (H without constant or linear
 * terms): iterate G <- X - H(G) with a truncation degree that grows to
 * `bound` (default (deg F)^{n-1}), then certify the candidate by exact,
 * untruncated composition both ways.
 */
InverseResult formal_inverse(const PolyMap& f, std::optional<int64_t> bound = std::nullopt);

/// F^{-1} = X - H(C f^{-1}(B X)) for an at-least-weak pair with a verified
/// inverse of f. The result is certified by composition before returning.
PolyMap inverse_via_pairing(const GZPair& pair, const PolyMap& f_inv);

/// Closed form X - H(X - H) for homogeneous H with JH^3 = 0 and matching
/// kernel dimensions (generic rank = n - dim constant kernel). Throws
/// hypothesis_error naming the failed hypothesis.
InverseResult nilpotent_inverse_formula(const PolyMap& f);

/// Normal-form data for maps with rank JH <= 1 (the conjugating matrix is
/// not computed; the normal form is taken as input).
struct RankOneNormalForm {
    int n;
    int s;                         // 0 <= s <= n-1
    std::vector<Rat> c;            // s constants
    Rat lambda;                    // != -1
    Polynomial g;                  // arity n, uses only x_1..x_s
    std::vector<Polynomial> tails; // arity 1 each, for components s+2..n
};

PolyMap rank_one_realize(const RankOneNormalForm& nf);
/// The displayed inverse; certified by composition and by the pivot
/// substitution identity before returning.
PolyMap rank_one_inverse(const RankOneNormalForm& nf);

struct DMatrix {
    Rat lambda;
    std::vector<int> degrees;
    RatMatrix mat;
};

/// D_ii = (1/d_i)(1 + lambda + ... + lambda^{d_i - 1}); geometric-sum form,
/// no division by lambda - 1. lambda = 1 is rejected by contract.
DMatrix build_D(const Rat& lambda, const std::vector<int>& degrees);

/// Same entries as univariate polynomials in lambda (arity 1).
PolyMatrix build_D_symbolic(const std::vector<int>& degrees);

struct LineCheckResult {
    bool maps_equal;        // F(a) = F(lambda a)
    bool kernel_condition;  // (I + D JH|_a) a = 0
};

/// Both sides of the line-injectivity equivalence, evaluated exactly.
LineCheckResult line_injectivity_check(const PolyMap& f, const HomogeneousProfile& prof,
                                       std::span<const Rat> a, const Rat& lambda);

/// Whether det(I + D JH) = 1 identically in (x, lambda); lambda is
/// adjoined as an extra variable and D uses the geometric sums.
bool det_identity_check(const PolyMap& f, const HomogeneousProfile& prof);

struct DegreeBoundReport {
    int n;
    int64_t deg_f;
    int64_t deg_inverse;
    int64_t bcw_bound;                    // (deg F)^{n-1}
    bool bcw_holds;
    std::optional<int> jh_nilpotency_index;
    std::optional<bool> cor42_holds;      // deg <= (deg F)^2 when JH^3 = 0
    std::optional<int64_t> power_index_bound;  // (deg F)^k with JH^{k+1} = 0
    std::optional<bool> power_index_bound_holds;  // may legitimately be false
    std::optional<int64_t> pairing_upper;  // d * deg f^{-1} when a pair is given
    std::optional<bool> pairing_sandwich_holds;
};

DegreeBoundReport degree_bound_report(const PolyMap& f, const InverseResult& result,
                                      const GZPair* pair = nullptr,
                                      const PolyMap* f_inv = nullptr);

}  // namespace druz
