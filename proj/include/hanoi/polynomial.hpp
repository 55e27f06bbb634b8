#pragma once

// Exact polynomial arithmetic: dense univariate Poly1 and sparse-map
// bivariate Poly2, both templated on the coefficient ring, plus rational
// functions in two variables.  Coefficient rings in use are Rational and
// Poly1<Rational> (polynomials whose coefficients are themselves univariate
// polynomials in a parameter).  No GCDs or factorization: rational functions
// are never reduced, and equality is decided by cross-multiplication.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hanoi/rational.hpp"

namespace hanoi {

// ---------------------------------------------------------------------------
// Univariate, dense.  Zero polynomial has empty coefficient vector.
// ---------------------------------------------------------------------------

template <class Coeff>
class Poly1 {
public:
    Poly1() = default;
    Poly1(const Coeff& c) {  // NOLINT: implicit constant embedding
        if (!(c == Coeff(0))) coeffs_.push_back(c);
    }
    Poly1(long n) : Poly1(Coeff(n)) {}  // NOLINT
    explicit Poly1(std::vector<Coeff> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Poly1 variable() { return Poly1(std::vector<Coeff>{Coeff(0), Coeff(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    Coeff coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(coeffs_.size())) ? coeffs_[d] : Coeff(0);
    }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    Poly1& operator+=(const Poly1& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly1& operator-=(const Poly1& o) { return *this += -o; }

    friend Poly1 operator+(Poly1 a, const Poly1& b) { a += b; return a; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { a -= b; return a; }
    friend Poly1 operator-(const Poly1& a) {
        std::vector<Coeff> c(a.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = -a.coeffs_[i];
        return Poly1(std::move(c));
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return Poly1();
        std::vector<Coeff> c(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly1(std::move(c));
    }
    Poly1& operator*=(const Poly1& o) { return *this = *this * o; }

    friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    // Horner evaluation; T must embed Coeff and support ring ops.
    template <class T>
    T eval(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    Poly1 compose(const Poly1& inner) const {
        Poly1 acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + Poly1(*it);
        return acc;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            if (coeff(d) == Coeff(0)) continue;
            if (!first) os << " + ";
            os << "(" << coeff(d) << ")";
            if (d > 0) os << "*" << var;
            if (d > 1) os << "^" << d;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;  // coeffs_[d] multiplies x^d
};

template <class Coeff>
Poly1<Coeff> pow(const Poly1<Coeff>& base, unsigned long e) {
    Poly1<Coeff> out(Coeff(1));
    Poly1<Coeff> b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bivariate in (x, y), sparse map keyed by (deg_x, deg_y).  Invariant: no
// stored zero coefficients.
// ---------------------------------------------------------------------------

template <class Coeff>
class Poly2 {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, Coeff>;

    Poly2() = default;
    Poly2(const Coeff& c) { set(0, 0, c); }  // NOLINT: constant embedding
    Poly2(long n) : Poly2(Coeff(n)) {}       // NOLINT

    static Poly2 x() { Poly2 p; p.set(1, 0, Coeff(1)); return p; }
    static Poly2 y() { Poly2 p; p.set(0, 1, Coeff(1)); return p; }
    static Poly2 term(int dx, int dy, const Coeff& c) { Poly2 p; p.set(dx, dy, c); return p; }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Coeff coeff(int dx, int dy) const {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? Coeff(0) : it->second;
    }
    int deg_x() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    int deg_y() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }

    void set(int dx, int dy, const Coeff& c) {
        if (dx < 0 || dy < 0) throw std::invalid_argument("Poly2: negative exponent");
        if (c == Coeff(0)) {
            terms_.erase({dx, dy});
        } else {
            terms_[{dx, dy}] = c;
        }
    }

    Poly2& operator+=(const Poly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { a += b; return a; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { a -= b; return a; }
    friend Poly2 operator-(const Poly2& a) {
        Poly2 r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    // Exact evaluation at a point with both coordinates in the coefficient ring.
    Coeff eval(const Coeff& x, const Coeff& y) const {
        std::vector<Coeff> xp = powers(x, deg_x());
        std::vector<Coeff> yp = powers(y, deg_y());
        Coeff acc(0);
        for (const auto& [k, c] : terms_) acc += c * xp[k.first] * yp[k.second];
        return acc;
    }

    // Restriction y = y0 as a univariate polynomial in x.
    Poly1<Coeff> restrict_y(const Coeff& y0) const {
        std::vector<Coeff> yp = powers(y0, deg_y());
        std::vector<Coeff> out(static_cast<std::size_t>(deg_x()) + 1, Coeff(0));
        for (const auto& [k, c] : terms_) out[k.first] += c * yp[k.second];
        return Poly1<Coeff>(std::move(out));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c << ")";
            if (k.first > 0) os << "*x^" << k.first;
            if (k.second > 0) os << "*y^" << k.second;
            first = false;
        }
        return os.str();
    }

private:
    static std::vector<Coeff> powers(const Coeff& v, int up_to) {
        std::vector<Coeff> p(static_cast<std::size_t>(up_to) + 1, Coeff(1));
        for (int i = 1; i <= up_to; ++i) p[i] = p[i - 1] * v;
        return p;
    }

    void add_term(const Key& k, const Coeff& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!(c == Coeff(0))) terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second == Coeff(0)) terms_.erase(it);
    }

    TermMap terms_;
};

template <class Coeff>
Poly2<Coeff> pow(const Poly2<Coeff>& base, unsigned long e) {
    Poly2<Coeff> out(Coeff(1));
    Poly2<Coeff> b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

// Coefficient-ring embedding, e.g. Poly2<Rational> -> Poly2<Poly1<Rational>>.
template <class To, class From>
Poly2<To> lift_coeffs(const Poly2<From>& p) {
    Poly2<To> out;
    for (const auto& [k, c] : p.terms()) out.set(k.first, k.second, To(c));
    return out;
}

// ---------------------------------------------------------------------------
// Rational functions in (x, y).  Never reduced; equality by cross-multiplying.
// ---------------------------------------------------------------------------

template <class Coeff>
class RatFun2 {
public:
    RatFun2() : num_(), den_(Coeff(1)) {}
    RatFun2(Poly2<Coeff> num, Poly2<Coeff> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFun2: zero denominator");
    }
    RatFun2(const Poly2<Coeff>& p) : num_(p), den_(Coeff(1)) {}  // NOLINT
    RatFun2(long n) : num_(Coeff(n)), den_(Coeff(1)) {}          // NOLINT

    const Poly2<Coeff>& num() const { return num_; }
    const Poly2<Coeff>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun2 operator+(const RatFun2& a, const RatFun2& b) {
        return RatFun2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun2 operator-(const RatFun2& a, const RatFun2& b) {
        return RatFun2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun2 operator*(const RatFun2& a, const RatFun2& b) {
        return RatFun2(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun2 operator/(const RatFun2& a, const RatFun2& b) {
        if (b.num_.is_zero()) throw std::domain_error("RatFun2: division by zero function");
        return RatFun2(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFun2 operator-(const RatFun2& a) { return RatFun2(-a.num_, a.den_); }

private:
    Poly2<Coeff> num_;
    Poly2<Coeff> den_;
};

// f == g as rational functions.
template <class Coeff>
bool ratfun_equal(const RatFun2<Coeff>& f, const RatFun2<Coeff>& g) {
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

// p(X(x,y), Y(x,y)) written over the common denominator
// X.den^max_deg_x * Y.den^max_deg_y.
template <class Coeff>
RatFun2<Coeff> subst(const Poly2<Coeff>& p, const RatFun2<Coeff>& X, const RatFun2<Coeff>& Y) {
    const int dx = p.deg_x();
    const int dy = p.deg_y();
    std::vector<Poly2<Coeff>> xn(dx + 1, Poly2<Coeff>(Coeff(1))), xd = xn;
    std::vector<Poly2<Coeff>> yn(dy + 1, Poly2<Coeff>(Coeff(1))), yd = yn;
    for (int i = 1; i <= dx; ++i) {
        xn[i] = xn[i - 1] * X.num();
        xd[i] = xd[i - 1] * X.den();
    }
    for (int j = 1; j <= dy; ++j) {
        yn[j] = yn[j - 1] * Y.num();
        yd[j] = yd[j - 1] * Y.den();
    }
    Poly2<Coeff> num;
    for (const auto& [k, c] : p.terms()) {
        num += Poly2<Coeff>(c) * xn[k.first] * xd[dx - k.first] * yn[k.second] * yd[dy - k.second];
    }
    return RatFun2<Coeff>(num, xd[dx] * yd[dy]);
}

using BivariatePoly = Poly2<Rational>;
using RationalFunction2 = RatFun2<Rational>;
using UnivariatePoly = Poly1<Rational>;

// Exact evaluation of a bivariate polynomial at a rational point.
inline Rational poly_eval(const BivariatePoly& p, const Rational& x, const Rational& y) {
    return p.eval(x, y);
}

}  // namespace hanoi
