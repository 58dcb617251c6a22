#pragma once

#include "druz/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace druz {

/// Dense matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);
    static RatMatrix from_rows(std::vector<std::vector<Rat>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[index(i, j)]; }
    const Rat& at(int i, int j) const { return data_[index(i, j)]; }
    std::vector<Rat> row(int i) const;
    std::vector<Rat> col(int j) const;

    RatMatrix transpose() const;
    bool is_zero() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    RatMatrix& operator*=(const Rat& c);

    std::vector<Rat> apply(std::span<const Rat> v) const;  // M * v

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    int rows_;
    int cols_;
    std::vector<Rat> data_;
};

struct RrefResult {
    int rank;
    RatMatrix rref;
    std::vector<int> pivot_cols;  // 0-based, ascending
};

/// Gauss-Jordan elimination with the first-nonzero pivot rule; exact and
/// deterministic.
RrefResult rank_and_rref(const RatMatrix& m);
int rank(const RatMatrix& m);

/// Canonical basis of {v : M v = 0}, one vector per free column of the RREF.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant after per-row denominator clearing.
Rat determinant(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Right inverse C with B*C = I. Deterministic choice: C is supported on
/// the pivot columns of rref(B). Throws if B is rank deficient.
RatMatrix right_inverse(const RatMatrix& b);

/// Matrix B with ker B = span(span_vectors), rank B = n - s, deterministic.
/// An empty set yields the identity. Throws on dependent input.
RatMatrix matrix_with_kernel(const std::vector<std::vector<Rat>>& span_vectors, int n);

struct MinorSizeReport {
    int size;
    bool all_vanish;
    std::optional<std::vector<int>> witness_indices;  // 0-based index set
    std::optional<Rat> witness_value;
};

/// For each size in [lo, hi], reports whether all principal minors of that
/// size vanish; lists the lexicographically first non-vanishing witness.
/// Exponential scan, hard error above 16x16.
std::vector<MinorSizeReport> principal_minor_scan(const RatMatrix& a, int lo, int hi);
std::vector<MinorSizeReport> principal_minor_scan_serial(const RatMatrix& a, int lo, int hi);

}  // namespace druz
