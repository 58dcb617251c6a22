#include "druz/monomial.hpp"

namespace druz {

namespace {
constexpr uint64_t kExpMax = 0xFFFFFFFFull;
}

Monomial Monomial::times(const Monomial& o) const {
    if (arity() != o.arity()) throw error("monomial arity mismatch");
    std::vector<uint32_t> r(e_.size());
    for (size_t j = 0; j < e_.size(); ++j) {
        uint64_t s = static_cast<uint64_t>(e_[j]) + o.e_[j];
        if (s > kExpMax) throw error("monomial exponent overflow");
        r[j] = static_cast<uint32_t>(s);
    }
    return Monomial(std::move(r));
}

Monomial Monomial::pow(uint32_t k) const {
    std::vector<uint32_t> r(e_.size());
    for (size_t j = 0; j < e_.size(); ++j) {
        uint64_t s = static_cast<uint64_t>(e_[j]) * k;
        if (s > kExpMax) throw error("monomial exponent overflow");
        r[j] = static_cast<uint32_t>(s);
    }
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
    if (arity() != o.arity()) throw error("monomial arity mismatch");
    for (size_t j = 0; j < e_.size(); ++j)
        if (e_[j] > o.e_[j]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& numer) const {
    if (!divides(numer)) throw error("monomial quotient is not exact");
    std::vector<uint32_t> r(e_.size());
    for (size_t j = 0; j < e_.size(); ++j) r[j] = numer.e_[j] - e_[j];
    return Monomial(std::move(r));
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t j = 0; j < a.e_.size(); ++j) {
        if (a.e_[j] != b.e_[j]) return a.e_[j] < b.e_[j] ? -1 : 1;
    }
    return 0;
}

}  // namespace druz
