#include <doctest.h>

#include <cmath>

#include <gmpxx.h>

#include "hanoi/spectrum.hpp"

using namespace hanoi;

namespace {

// Forward interval iteration of an enclosure; containment of the base is
// guaranteed whenever the enclosure is correct.
bool round_trips(const AlgebraicEigenvalue& e) {
    Interval x = e.enclosure;
    for (int t = 0; t < e.depth; ++t) x = f_eval(x);
    return x.contains(static_cast<double>(e.base));
}

mpz_class pow_z(unsigned long base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace

TEST_CASE("f at the anchor points") {
    CHECK(f_eval(3.0) == 3.0);
    CHECK(f_eval(-2.0) == 3.0);
    CHECK(f_eval(Rational(1, 2)) == Rational(-13, 4));  // critical value
    CHECK(f_eval(Rational(3)) == Rational(3));
}

TEST_CASE("preimages: first backward steps") {
    const auto of_zero = preimages(0.0, 1);
    REQUIRE(of_zero.size() == 2);
    const double sqrt13 = std::sqrt(13.0);
    CHECK(of_zero[0].value == doctest::Approx((1 - sqrt13) / 2).epsilon(1e-14));
    CHECK(of_zero[1].value == doctest::Approx((1 + sqrt13) / 2).epsilon(1e-14));
    CHECK(of_zero[0].path == 0);
    CHECK(of_zero[1].path == 1);

    const auto of_three = preimages(3.0, 1);
    REQUIRE(of_three.size() == 2);
    CHECK(of_three[0].enclosure.contains(-2.0));
    CHECK(of_three[1].enclosure.contains(3.0));

    const auto depth2 = preimages(0.0, 2);
    REQUIRE(depth2.size() == 4);
    for (const auto& e : depth2) {
        CHECK(e.value >= -2.0);
        CHECK(e.value <= 3.0);
        CHECK(e.enclosure.width() <= 1e-12);
    }

    CHECK_THROWS_AS(preimages(4.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(preimages(0.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(preimages(0.0, 50), std::invalid_argument);
}

TEST_CASE("preimage counts and containment up to depth 12") {
    for (int depth : {4, 8, 12}) {
        const auto values = preimages(0.0, depth);
        CHECK(values.size() == (std::size_t{1} << depth));
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            CHECK(values[i].value < values[i + 1].value);
        for (const auto& e : values) {
            CHECK(e.value >= -2.0);
            CHECK(e.value <= 3.0);
        }
    }
}

TEST_CASE("enclosures round-trip to their base") {
    for (double base : {0.0, -2.0}) {
        for (int depth : {1, 3, 6, 10}) {
            for (const auto& e : preimages(base, depth)) CHECK(round_trips(e));
        }
    }
}

TEST_CASE("preimage families are pairwise disjoint across depths <= 10") {
    for (double base : {0.0, -2.0}) {
        std::vector<Interval> all;
        for (int i = 0; i <= 10; ++i)
            for (const auto& e : preimages(base, i)) all.push_back(e.enclosure);
        std::sort(all.begin(), all.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        for (std::size_t t = 0; t + 1 < all.size(); ++t)
            CHECK(all[t].hi < all[t + 1].lo);
    }
}

TEST_CASE("multiplicity sequences") {
    CHECK(multiplicity_a(1) == 2);
    CHECK(multiplicity_a(2) == 3);
    CHECK(multiplicity_a(3) == 6);
    CHECK(multiplicity_a(4) == 15);
    CHECK(multiplicity_a(6) == 123);
    CHECK(multiplicity_b(2) == 1);
    CHECK(multiplicity_b(3) == 4);
    CHECK(multiplicity_b(4) == 13);
    for (int m = 1; m <= 20; ++m) CHECK(multiplicity_b(m) == multiplicity_a(m) - 2);
}

TEST_CASE("level spectrum tables at small levels") {
    const SpectrumTable t1 = level_spectrum(1);
    REQUIRE(t1.entries.size() == 2);
    CHECK(t1.entries[0].eigenvalue.value == 0.0);
    CHECK(t1.entries[0].multiplicity == 2);
    CHECK(t1.entries[1].eigenvalue.value == 3.0);
    CHECK(t1.entries[1].multiplicity == 1);

    const SpectrumTable t2 = level_spectrum(2);
    REQUIRE(t2.entries.size() == 5);
    const double sqrt13 = std::sqrt(13.0);
    CHECK(t2.entries[0].eigenvalue.value == doctest::Approx(-2.0));
    CHECK(t2.entries[0].multiplicity == 1);
    CHECK(t2.entries[1].eigenvalue.value == doctest::Approx((1 - sqrt13) / 2));
    CHECK(t2.entries[1].multiplicity == 2);
    CHECK(t2.entries[2].eigenvalue.value == doctest::Approx(0.0));
    CHECK(t2.entries[2].multiplicity == 3);
    CHECK(t2.entries[3].eigenvalue.value == doctest::Approx((1 + sqrt13) / 2));
    CHECK(t2.entries[3].multiplicity == 2);
    CHECK(t2.entries[4].eigenvalue.value == doctest::Approx(3.0));
    CHECK(t2.entries[4].multiplicity == 1);

    // -2 carries multiplicity b_4 = 13 at level 4.
    const SpectrumTable t4 = level_spectrum(4);
    CHECK(t4.entries.front().eigenvalue.value == doctest::Approx(-2.0));
    CHECK(t4.entries.front().multiplicity == 13);
}

TEST_CASE("level spectrum counts and sums for n <= 16") {
    long long p3 = 3;
    for (int n = 1; n <= 16; ++n) {
        const SpectrumTable t = level_spectrum(n);
        CHECK(t.entries.size() == (std::size_t{3} << (n - 1)) - 1);
        CHECK(t.multiplicity_sum() == p3);
        p3 *= 3;
    }
}

TEST_CASE("multiplicity sums reach 3^n symbolically up to n = 30") {
    for (int n = 1; n <= 30; ++n) {
        mpz_class sum = 1;  // the eigenvalue 3
        for (int i = 0; i <= n - 1; ++i)
            sum += pow_z(2, i) * ((pow_z(3, n - i - 1) + 3) / 2);
        for (int j = 0; j <= n - 2; ++j)
            sum += pow_z(2, j) * ((pow_z(3, n - j - 1) - 1) / 2);
        CHECK(sum == pow_z(3, n));
    }
}

TEST_CASE("KNS atoms and masses") {
    const auto atoms0 = kns_atoms(0);
    REQUIRE(atoms0.size() == 2);
    for (const auto& a : atoms0) CHECK(a.mass == Rational(1, 6));

    for (const auto& a : kns_atoms(2))
        if (a.eigenvalue.depth == 2) CHECK(a.mass == Rational(1, 54));

    // Partial masses: materialized atoms at small depth, per-depth counts
    // beyond that.
    Rational material_sum(0);
    for (const auto& a : kns_atoms(3)) material_sum += a.mass;
    CHECK(material_sum == Rational(65, 81));
    CHECK(kns_partial_mass(3) == Rational(65, 81));

    for (int d = 0; d <= 30; ++d) {
        const Rational expected =
            Rational(1) - pow(Rational(2, 3), static_cast<unsigned long>(d + 1));
        CHECK(kns_partial_mass(d) == expected);
    }
}

TEST_CASE("counting-measure convergence toward the KNS mass") {
    const KNSLimitReport report = kns_limit_check(0, 8);
    CHECK(report.limit == Rational(1, 6));
    // a_6 / 3^6 = 123/729 with exact gap 3 / (2 * 3^6).
    const KNSLimitRow& row6 = report.rows[5];
    CHECK(row6.n == 6);
    CHECK(row6.ratio == Rational(123, 729));
    CHECK(row6.gap == Rational(3, 2 * 729));
    // Successive gaps shrink by exactly 1/3.
    for (std::size_t t = 0; t + 1 < report.rows.size(); ++t)
        CHECK(report.rows[t + 1].gap == report.rows[t].gap * Rational(1, 3));

    CHECK(kns_limit_check(2, 10).limit == Rational(1, 54));
}

TEST_CASE("characteristic polynomial factorizations") {
    const auto p0 = char_poly_factored(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].poly == UnivariatePoly(std::vector<Rational>{Rational(3), Rational(-1)}));

    // P_2 = -(x-3) x^3 f(x)^2 (x+2).
    const UnivariatePoly x = UnivariatePoly::variable();
    const UnivariatePoly f = x * x - x - UnivariatePoly(3);
    const UnivariatePoly expected =
        -(x - UnivariatePoly(3)) * pow(x, 3ul) * f * f * (x + UnivariatePoly(2));
    CHECK(char_poly_expanded(2) == expected);

    CHECK(char_poly_degree(char_poly_factored(3)) == 27);
    for (int n = 0; n <= 5; ++n) {
        const UnivariatePoly p = char_poly_expanded(n);
        long long deg = 1;
        for (int i = 0; i < n; ++i) deg *= 3;
        CHECK(p.degree() == deg);
        CHECK(p.coeff(p.degree()) == Rational(-1));  // det(Delta - x), odd dimension
    }
}

TEST_CASE("conjugation identity for the integer factor family") {
    CHECK(conjugation_identity(1));
    CHECK(conjugation_identity(5));
    CHECK(conjugation_identity(10));

    const UnivariatePoly x = UnivariatePoly::variable();
    const UnivariatePoly bad = x * x - UnivariatePoly(5) * x + UnivariatePoly(4);
    CHECK_FALSE(conjugation_identity(1, bad));

    // The shift conjugacy to z^2 - 15/4 that places the Julia set on the line.
    const UnivariatePoly f = x * x - x - UnivariatePoly(3);
    const UnivariatePoly shifted =
        f.compose(x + UnivariatePoly(Rational(1, 2))) - UnivariatePoly(Rational(1, 2));
    CHECK(shifted == x * x - UnivariatePoly(Rational(15, 4)));
}

TEST_CASE("julia approximation by inverse iteration") {
    const JuliaApproximation j0 = julia_approx(0);
    CHECK(j0.points == std::vector<double>{3.0});

    const JuliaApproximation j1 = julia_approx(1);
    REQUIRE(j1.points.size() == 2);
    CHECK(j1.points[0] == -2.0);
    CHECK(j1.points[1] == 3.0);

    const JuliaApproximation j12 = julia_approx(12);
    CHECK(j12.points.size() == 4096);
    CHECK(j12.min_value >= -2.0);
    CHECK(j12.max_value <= 3.0);
    CHECK(j12.min_gap > 0.0);

    // 0 is not in the Julia set; the approximation stays far from it.
    double nearest_zero = 1e9;
    for (double p : j12.points) nearest_zero = std::min(nearest_zero, std::abs(p));
    CHECK(nearest_zero > 0.5);
}

TEST_CASE("boundary spectrum report") {
    const BoundaryReport report = boundary_spectrum_description(4, 12);
    // Depth 0 of the isolated family is just {0}.
    const BoundaryReport depth0 = boundary_spectrum_description(0, 4);
    REQUIRE(depth0.isolated.size() == 1);
    CHECK(depth0.isolated[0].value == 0.0);

    CHECK(report.isolated.size() == 1 + 2 + 4 + 8 + 16);
    CHECK(report.min_isolated_to_julia > 1e-3);
    CHECK(report.classification.find("isolated") != std::string::npos);
    CHECK(report.conjugation_note.find("15/4") != std::string::npos);
}

TEST_CASE("hecke rescaling") {
    const SpectrumTable t1 = hecke_spectrum(1);
    REQUIRE(t1.entries.size() == 2);
    CHECK(t1.entries[0].eigenvalue.value == doctest::Approx(0.0));
    CHECK(t1.entries[0].multiplicity == 2);
    CHECK(t1.entries[1].eigenvalue.value == doctest::Approx(1.0));
    CHECK(t1.entries[1].multiplicity == 1);

    for (int n = 1; n <= 6; ++n) {
        const SpectrumTable t = hecke_spectrum(n);
        CHECK(t.multiplicity_sum() == level_spectrum(n).multiplicity_sum());
        for (const SpectrumEntry& e : t.entries) {
            CHECK(e.eigenvalue.value >= -2.0 / 3.0 - 1e-12);
            CHECK(e.eigenvalue.value <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("eigenvalue identity is the path, reported in descriptions") {
    const auto values = preimages(0.0, 3);
    for (const auto& e : values) {
        CHECK(e.path_string().size() == 3);
        CHECK(e.describe().find("f^-3(0)") != std::string::npos);
    }
    // Paths are distinct identities even where floats are close.
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            CHECK(values[a].path != values[b].path);
}

TEST_CASE("table enclosures round-trip in every level up to 12") {
    for (int n : {6, 12}) {
        const SpectrumTable t = level_spectrum(n);
        for (const SpectrumEntry& e : t.entries) CHECK(round_trips(e.eigenvalue));
    }
}
