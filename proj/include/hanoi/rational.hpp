#pragma once

// Exact big-rational scalar on top of GMP, usable as an Eigen matrix scalar.
// Values are always canonical: reduced, denominator positive.

#include <gmpxx.h>

#include <Eigen/Core>
#include <iostream>
#include <stdexcept>
#include <string>

namespace hanoi {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, scalar semantics
    Rational(long num, long den) : q_(num, den) { canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) { canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(const mpq_class& q) : q_(q) { canonicalize(); }
    // Accepts "7", "-3/4", ...
    explicit Rational(const std::string& s) : q_(s) { canonicalize(); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.q_;
    }

private:
    void canonicalize() {
        if (sgn(q_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Exact power with small nonnegative exponent.
inline Rational pow(Rational base, unsigned long e) {
    Rational out(1);
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

}  // namespace hanoi

namespace Eigen {

template <>
struct NumTraits<hanoi::Rational> : GenericNumTraits<hanoi::Rational> {
    typedef hanoi::Rational Real;
    typedef hanoi::Rational NonInteger;
    typedef hanoi::Rational Nested;
    typedef hanoi::Rational Literal;

    static inline Real epsilon() { return hanoi::Rational(0); }
    static inline Real dummy_precision() { return hanoi::Rational(0); }
    static inline int digits10() { return 0; }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100,
    };
};

}  // namespace Eigen

namespace hanoi {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace hanoi
