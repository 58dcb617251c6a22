#pragma once

#include "druz/polymap.hpp"

#include <optional>
#include <string>

namespace druz {

enum class PairStatus { strong, weak, invalid };

std::string to_string(PairStatus s);

/// A map f in dimension r paired with a map F in dimension n > r through
/// B (r x n) and C (n x r).
struct GZPair {
    PolyMap f;
    PolyMap F;
    RatMatrix B;
    RatMatrix C;
    PairStatus status;
    /// Power-linear data of F when the pair came out of a lift/extension.
    std::optional<PowerLinearData> power;
};

struct PairingVerdict {
    PairStatus status;
    std::string detail;  // names the first failed condition when invalid
};

/// Checks f(y) = B F(C y), BC = I_r, and ker B vs the constant kernel of
/// J(F - X): containment gives weak, equality gives strong.
PairingVerdict verify_pairing(const PolyMap& f, const PolyMap& F, const RatMatrix& B,
                              const RatMatrix& C);

/**
 * Lifts f = x + h (components of h without constant or linear terms) to a
 * power-linear map through its Waring decomposition. Cancelling +/- column
 * pairs are appended until the coefficient matrix has full row rank, the
 * linear forms span the dual space, and n > r. The returned pair is
 * re-verified and comes out strong.
 */
GZPair gz_lift(const PolyMap& f);

/// Reduces F = X + H to dimension r through a deterministic subspace of
/// the constant kernel of JH. Requires n - dim ker <= r < n.
GZPair gz_reduce(const PolyMap& F, int r);

/// Translation properties of a weak pair: H(X + t*y0) = H(X) for kernel
/// basis vectors y0, B(CB - I) = 0, and H(CBX) = H(X).
bool kernel_translation_check(const PolyMap& F, const RatMatrix& B, const RatMatrix& C);

/// Extends a pair by one dimension with last component x_{n+1} + (B_i X)^d;
/// i is a 0-based row index of B. The status is re-verified.
GZPair extend_with_power(const GZPair& pair, int i, int d);

}  // namespace druz
