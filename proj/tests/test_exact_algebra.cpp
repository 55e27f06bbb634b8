#include <doctest.h>

#include <random>

#include "hanoi/bareiss.hpp"
#include "hanoi/polynomial.hpp"
#include "hanoi/rational.hpp"

using namespace hanoi;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    return Rational(num, den);
}

BivariatePoly random_poly(std::mt19937_64& rng) {
    BivariatePoly p;
    const int terms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < terms; ++t)
        p += BivariatePoly::term(static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                                 random_rational(rng));
    return p;
}

// Independent oracle: determinant by cofactor expansion along the first row.
Rational cofactor_det(const RationalMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational det(0);
    for (Eigen::Index c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        RationalMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                minor(r - 1, cc++) = m(r, c2);
            }
        }
        const Rational term = m(0, c) * cofactor_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

TEST_CASE("Rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7).num() == 0);
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational("-3/4") == Rational(-3, 4));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        for (const Rational& v : {a + b, a - b, a * b}) {
            CHECK(v.den() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), v.num().get_mpz_t(), v.den().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("Poly2 ring axioms on random triples") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        const BivariatePoly a = random_poly(rng);
        const BivariatePoly b = random_poly(rng);
        const BivariatePoly c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == BivariatePoly());
    }
}

TEST_CASE("evaluation commutes with arithmetic and composition") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 300; ++t) {
        const BivariatePoly a = random_poly(rng);
        const BivariatePoly b = random_poly(rng);
        const Rational x = random_rational(rng);
        const Rational y = random_rational(rng);
        CHECK((a * b).eval(x, y) == a.eval(x, y) * b.eval(x, y));
        CHECK((a + b).eval(x, y) == a.eval(x, y) + b.eval(x, y));

        // Substituting polynomials (as rational functions with denominator 1)
        // and then evaluating equals composing the evaluations.
        const RationalFunction2 fa(a), fb(b);
        const RationalFunction2 composed = subst(a, fb, fa);
        const Rational den = composed.den().eval(x, y);
        REQUIRE(!den.is_zero());
        CHECK(composed.num().eval(x, y) / den == a.eval(b.eval(x, y), a.eval(x, y)));
    }
}

TEST_CASE("named evaluation examples") {
    const Rational x(0), y(2);
    // L = x - 1 - y, K = x^2 - 1 + y - y^2, Psi numerator x^2 - 1 - xy - 2y^2.
    BivariatePoly L = BivariatePoly::x() - BivariatePoly(1) - BivariatePoly::y();
    CHECK(poly_eval(L, x, y) == Rational(-3));
    BivariatePoly K = BivariatePoly::x() * BivariatePoly::x() - BivariatePoly(1) +
                      BivariatePoly::y() - BivariatePoly::y() * BivariatePoly::y();
    CHECK(poly_eval(K, x, y) == Rational(-3));
    BivariatePoly psi_num = BivariatePoly::x() * BivariatePoly::x() - BivariatePoly(1) -
                            BivariatePoly::x() * BivariatePoly::y() -
                            BivariatePoly(2) * BivariatePoly::y() * BivariatePoly::y();
    CHECK(poly_eval(psi_num, x, y) == Rational(-9));
}

TEST_CASE("ratfun equality by cross-multiplication") {
    const BivariatePoly x = BivariatePoly::x();
    const BivariatePoly y = BivariatePoly::y();
    CHECK(ratfun_equal(RationalFunction2(x, y), RationalFunction2(x, y)));
    // (x^2 - 1)/(x - 1) == (x + 1)/1
    const RationalFunction2 f(x * x - BivariatePoly(1), x - BivariatePoly(1));
    const RationalFunction2 g(x + BivariatePoly(1), BivariatePoly(1));
    CHECK(ratfun_equal(f, g));
    CHECK_FALSE(ratfun_equal(f, RationalFunction2(x, BivariatePoly(1))));
    CHECK_THROWS_AS(RationalFunction2(x, BivariatePoly()), std::domain_error);
}

TEST_CASE("bareiss determinant basics") {
    RationalMatrix id = RationalMatrix::Identity(3, 3);
    CHECK(bareiss_det(id) == Rational(1));

    RationalMatrix swap(2, 2);
    swap << Rational(0), Rational(1), Rational(1), Rational(0);
    CHECK(bareiss_det(swap) == Rational(-1));

    RationalMatrix zero = RationalMatrix::Zero(3, 3);
    CHECK(bareiss_det(zero) == Rational(0));

    // Delta_1(0,2) = [[1,2,2],[2,1,2],[2,2,1]] has determinant 5, matching
    // -(x-1-2y)(x-1+y)^2 at (0,2).
    RationalMatrix d1(3, 3);
    d1 << Rational(1), Rational(2), Rational(2), Rational(2), Rational(1), Rational(2),
        Rational(2), Rational(2), Rational(1);
    CHECK(bareiss_det(d1) == Rational(5));
}

TEST_CASE("bareiss agrees with cofactor expansion on random 4x4 matrices") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 150; ++t) {
        RationalMatrix m(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                m(r, c) = (rng() % 4 == 0) ? Rational(0) : random_rational(rng);
        CHECK(bareiss_det(m) == cofactor_det(m));
    }
}

TEST_CASE("Poly1 composition and power") {
    const UnivariatePoly x = UnivariatePoly::variable();
    const UnivariatePoly f = x * x - x - UnivariatePoly(3);
    CHECK(f.eval<Rational>(Rational(3)) == Rational(3));
    CHECK(f.compose(f).eval<Rational>(Rational(1, 2)) ==
          f.eval<Rational>(f.eval<Rational>(Rational(1, 2))));
    CHECK(pow(x + UnivariatePoly(1), 3ul) ==
          UnivariatePoly(std::vector<Rational>{Rational(1), Rational(3), Rational(3), Rational(1)}));
}
