#pragma once

#include "druz/rational.hpp"

#include <cstdint>
#include <vector>

namespace druz {

/// Exponent vector of fixed arity. Exponents are 32-bit counters and
/// overflow is a hard error, never wraparound.
class Monomial {
public:
    explicit Monomial(int arity) : e_(static_cast<size_t>(arity), 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

    int arity() const { return static_cast<int>(e_.size()); }
    uint32_t exp(int j) const { return e_[static_cast<size_t>(j)]; }
    const std::vector<uint32_t>& exps() const { return e_; }

    uint64_t degree() const {
        uint64_t d = 0;
        for (uint32_t e : e_) d += e;
        return d;
    }

    bool is_constant() const {
        for (uint32_t e : e_)
            if (e) return false;
        return true;
    }

    Monomial times(const Monomial& o) const;
    Monomial pow(uint32_t k) const;
    bool divides(const Monomial& o) const;  // this | o
    Monomial quotient_of(const Monomial& numer) const;  // numer / this

    /// Graded lexicographic order with x1 > x2 > ... ; returns -1, 0, 1.
    static int cmp_grlex(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<uint32_t> e_;
};

/// Map comparator that iterates leading (largest grlex) terms first.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_grlex(a, b) > 0;
    }
};

}  // namespace druz
