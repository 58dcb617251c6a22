#pragma once

#include "druz/monomial.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace druz {

/**
 * @brief Sparse multivariate polynomial over Q with a fixed arity.
 *
 * Canonical form: no stored zero coefficients, terms kept in graded-lex
 * order (leading term first). Two polynomials are equal iff their term
 * maps are equal. Values are immutable in spirit: every operation
 * returns a fresh canonical polynomial.
 */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, GrlexDesc>;

    explicit Polynomial(int arity);

    static Polynomial zero(int arity) { return Polynomial(arity); }
    static Polynomial constant(int arity, const Rat& c);
    static Polynomial variable(int arity, int j);  // 0-based index
    static Polynomial term(Monomial m, const Rat& c);
    static Polynomial from_terms(int arity, TermMap terms);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    /// Total degree; nullopt is the distinguished "minus infinity" of the
    /// zero polynomial.
    std::optional<int64_t> degree() const;

    Rat coeff(const Monomial& m) const;
    Rat constant_term() const;
    /// Smallest 0-based variable index occurring, or nullopt.
    std::optional<int> first_variable() const;
    /// Largest exponent of variable j over all terms.
    uint32_t max_exponent(int j) const;

    bool is_homogeneous() const;  // zero counts as homogeneous
    std::map<int64_t, Polynomial> homogeneous_parts() const;
    Polynomial homogeneous_part(int64_t d) const;
    /// Keeps the terms of total degree <= max_degree.
    Polynomial truncated(int64_t max_degree) const;
    /// Drops terms of total degree <= 1.
    Polynomial without_affine_part() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Rat& c);
    friend Polynomial operator*(const Rat& c, Polynomial p) { p *= c; return p; }

    Polynomial pow(uint32_t k) const;
    Polynomial pow_truncated(uint32_t k, int64_t bound) const;

    /// Exact partial derivative with respect to variable j (0-based).
    Polynomial derivative(int j) const;

    /// Exact composition p(g_1, ..., g_arity); all g share one arity.
    Polynomial substitute(std::span<const Polynomial> g) const;
    /// Same, truncating every intermediate at total degree `bound`.
    Polynomial substitute_truncated(std::span<const Polynomial> g, int64_t bound) const;

    Rat evaluate(std::span<const Rat> point) const;

    /// Reinterprets in a larger arity; new trailing variables are unused.
    Polynomial lift_arity(int new_arity) const;

    /// Quotient if the division is exact, nullopt otherwise.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    /// Canonical rendering in graded-lex order; parse(str(p)) == p.
    std::string str() const;
    std::string str(std::span<const std::string> names) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Adds c * m, keeping canonical form.
    void add_term(const Monomial& m, const Rat& c);

private:
    int arity_;
    TermMap terms_;
};

/// Default variable names "x1", ..., "xn".
std::vector<std::string> default_var_names(int arity);

}  // namespace druz
