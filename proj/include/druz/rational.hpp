#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace druz {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a theorem hypothesis fails (a mathematical "no", not a
/// malformed input).
struct hypothesis_error : error {
    using error::error;
};

/// Exact rational scalar backed by arbitrary-precision integers.
/// Always reduced to lowest terms, denominator > 0, zero is 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    Rat(mpz_class num, mpz_class den);
    explicit Rat(mpz_class n) : v_(std::move(n)) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "a" or "a/b". Throws druz::error on malformed text or b = 0.
    static Rat from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    Rat inv() const;
    Rat abs() const { return sign() < 0 ? -*this : *this; }
    /// Integer power; negative exponents require a nonzero base.
    Rat pow(long e) const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// Canonical rendering: "a" for integers, "a/b" otherwise.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_;
};

/// Exact n-th root if one exists in Q (for even n the positive root).
std::optional<Rat> nth_root(const Rat& a, unsigned long n);

}  // namespace druz
