#pragma once

#include "druz/polynomial.hpp"
#include "druz/ratmatrix.hpp"

#include <optional>
#include <vector>

namespace druz {

/// Polynomial map F = (F_1, ..., F_n) with all components in n variables.
class PolyMap {
public:
    explicit PolyMap(std::vector<Polynomial> components);
    static PolyMap identity(int n);

    int dim() const { return static_cast<int>(comps_.size()); }
    const Polynomial& comp(int i) const { return comps_[static_cast<size_t>(i)]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    /// H = F - X.
    std::vector<Polynomial> minus_identity() const;
    std::vector<Rat> evaluate(std::span<const Rat> point) const;

    friend bool operator==(const PolyMap& a, const PolyMap& b) = default;

private:
    std::vector<Polynomial> comps_;
};

/// Matrix with polynomial entries sharing one arity.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int arity);
    static PolyMatrix identity(int n, int arity);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int arity() const { return arity_; }
    Polynomial& at(int i, int j) { return data_[index(i, j)]; }
    const Polynomial& at(int i, int j) const { return data_[index(i, j)]; }

    bool is_zero() const;
    Polynomial trace() const;
    RatMatrix evaluate(std::span<const Rat> point) const;
    PolyMatrix lift_arity(int new_arity) const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

    /// Entry (i, j) of the product; parallel version splits over entries.
    friend PolyMatrix mul_serial(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix mul_parallel(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

    std::vector<Polynomial> apply(std::span<const Rat> v) const;  // M * v, v rational

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    int rows_;
    int cols_;
    int arity_;
    std::vector<Polynomial> data_;
};

PolyMatrix jacobian(const PolyMap& f);
PolyMatrix jacobian_of(const std::vector<Polynomial>& comps);

/// Fraction-free determinant of a polynomial matrix (Bareiss with exact
/// polynomial division).
Polynomial determinant(const PolyMatrix& m);

Polynomial jacobian_determinant(const PolyMap& f);
/// det JF = 1 identically (the paper's normalization of the Keller condition).
bool is_keller(const PolyMap& f);

/// Least k <= rows with M^k = 0, or nullopt if M is not nilpotent.
std::optional<int> nilpotency_index(const PolyMatrix& m);

/// Basis of {v in Q^n : M(x) * v = 0 identically}, via one stacked linear
/// condition per (row, monomial) pair.
std::vector<std::vector<Rat>> constant_kernel(const PolyMatrix& m);

/// Largest k such that some k x k minor of M is nonzero as a polynomial;
/// certified by a rational evaluation from below and symbolic minor
/// vanishing from above.
int generic_rank(const PolyMatrix& m);

PolyMap compose(const PolyMap& outer, const PolyMap& inner);  // outer after inner
std::vector<Polynomial> substitute_all(const std::vector<Polynomial>& polys,
                                       std::span<const Polynomial> g);
std::optional<int64_t> map_degree(const PolyMap& f);

/// X -> M X as a polynomial map (square M).
PolyMap linear_map(const RatMatrix& m);
/// The forms (M X)_1, ..., (M X)_rows for a rectangular M acting on arity cols.
std::vector<Polynomial> linear_forms(const RatMatrix& m);

struct HomogeneousProfile {
    std::vector<int> degrees;
    std::vector<bool> defaulted;  // true where H_i = 0 forced a default degree
};

/// Degrees d_i with H_i zero or homogeneous of degree exactly d_i; zero
/// components get the defaulted degree 2. Throws if some H_i is inhomogeneous.
HomogeneousProfile derive_profile(const PolyMap& f);

/// F = (I + D' JH) X with D' = diag(1/d_i); throws on profile mismatch.
bool euler_form_check(const PolyMap& f, const HomogeneousProfile& prof);

struct PowerLinearData {
    RatMatrix a;
    std::vector<int> d;  // d_i >= 2, present even for zero rows
};

struct DetectedPowerLinear {
    PowerLinearData data;
    std::vector<bool> degree_defaulted;  // true where H_i = 0
};

/// Recovers (A, d) with H_i = (A_i X)^{d_i} if such rational data exists.
/// Even-degree rows are normalized to a positive leading coefficient.
std::optional<DetectedPowerLinear> detect_power_linear(const PolyMap& f);

}  // namespace druz
