#pragma once

// The two-parameter pencil machinery: named plane polynomials, the plane
// map F and the function Psi semi-conjugating it to the quadratic
// f(x) = x^2 - x - 3, the factor families A_n and B_n with their exponent
// sequences, and exact verification of the determinant recursion and the
// factorization, either as polynomial identities or at exact rational
// sample points.
//
// Factor values at rational points stay rational throughout: the product of
// Psi_theta over theta in f^{-d}(c) equals y^(2^d) * (f^d(Psi) - c), the
// fully symmetric form of pairing conjugate theta's, so no irrational
// arithmetic ever enters.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hanoi/bareiss.hpp"
#include "hanoi/caps.hpp"
#include "hanoi/interval.hpp"
#include "hanoi/matrices.hpp"
#include "hanoi/polynomial.hpp"

namespace hanoi {

struct RationalPoint {
    Rational x;
    Rational y;
};

// Named plane polynomials.
BivariatePoly poly_L();        // x - 1 - y
BivariatePoly poly_K();        // x^2 - 1 + y - y^2
BivariatePoly poly_A1();       // x - 1 + y
BivariatePoly poly_B2();       // x + 1 + y
BivariatePoly poly_D0();       // -(x - 1 - 2y)
BivariatePoly poly_psi_num();  // x^2 - 1 - x y - 2 y^2
UnivariatePoly poly_f();       // x^2 - x - 3
UnivariatePoly poly_g();       // x^2 - 5x + 5

struct DecimationMap {
    RationalFunction2 x_prime;  // both coordinates over the denominator L*K
    RationalFunction2 y_prime;
    RationalFunction2 psi;      // (x^2 - 1 - x y - 2 y^2) / y
    UnivariatePoly f;
};

const DecimationMap& decimation_map();

// Exact image under F; empty when the point lies on L = 0 or K = 0.
std::optional<RationalPoint> apply_F(const RationalPoint& pt);

// Psi at an exact point; requires y != 0.
Rational psi_value(const RationalPoint& pt);

// Cross-multiplied numerator of Psi(F) - f(Psi); the identity holds iff this
// is the zero polynomial.
BivariatePoly semiconjugacy_defect(const UnivariatePoly& f);
bool semiconjugacy_identity();
bool semiconjugacy_identity(const UnivariatePoly& f);

// The splitting of Psi_theta under F, as a polynomial identity in (x, y,
// theta) after writing Psi_theta0 * Psi_theta1 in the elementary symmetric
// functions of the two roots of f = theta.  The parameterized overload takes
// those symmetric functions as polynomials in theta (root sum e1, root
// product e2); the default is e1 = 1, e2 = -(3 + theta).
bool psi_split_identity();
bool psi_split_identity(const Poly1<Rational>& e1, const Poly1<Rational>& e2);

// Exact pencil at a rational point, by block recursion.  Level capped by
// caps.max_exact_pencil_level.
RationalMatrix assemble_pencil(int n, const Rational& x0, const Rational& y0,
                               const ResourceLimits& caps = {});

// det of the pencil, by fraction-free elimination.
Rational det_pencil(int n, const Rational& x0, const Rational& y0,
                    const ResourceLimits& caps = {});

enum class CheckStatus { holds, fails, degenerate_point };

// Determinant recursion at an exact point, 2 <= n <= 5:
// det Delta_n(pt) == (L*B2)(pt)^(3^(n-2)) * K(pt)^(2*3^(n-2)) * det Delta_{n-1}(F(pt)).
CheckStatus recursion_check(int n, const RationalPoint& pt, const ResourceLimits& caps = {});

// Full factorization at an exact point, 1 <= n <= 4:
// det Delta_n(pt) == D0 * A1^{a_n} A2^{a_{n-1}} ... An^{a_1} * B2^{b_n} ... Bn^{b_2} at pt.
CheckStatus factorization_check(int n, const RationalPoint& pt, const ResourceLimits& caps = {});

// Exact factor values at a rational point (y != 0 required for m >= 2 resp. 3).
Rational eval_A(int m, const RationalPoint& pt);
Rational eval_B(int m, const RationalPoint& pt);

// Exponent bookkeeping m_n from the factorization recursion, n >= 2.
long long factor_m(int n);

struct FactorDescriptor {
    std::string name;                   // "D0", "A1", "A2", ..., "B2", ...
    long long exponent;
    int theta_depth;                    // backward depth of the theta set; -1 for the linear factors
    std::vector<Interval> thetas;       // certified enclosures, empty for linear factors
};

struct FactorFamily {
    int n;
    std::vector<FactorDescriptor> factors;
};

FactorFamily build_factorization(int n);

// Random rational point with numerators and denominators in [-9, 9], rejected
// until L, K, B2 and y are nonzero at the point and at its first
// guard_iterates images under F.
RationalPoint sample_nondegenerate_point(std::mt19937_64& rng, int guard_iterates);

struct GridSpec {
    double y_min = -3.0;
    double y_max = 3.0;
    int count = 121;
};

struct HyperbolaSample {
    int theta_depth;  // -1 for the lines D0, A1, B2
    int theta_index;
    double x;
    double y;
};

// Solved samples of the auxiliary-spectrum curves: Psi_theta = 0 for theta in
// f^{-i}(0) or f^{-i}(-2), i <= theta_depth, plus the lines D0, A1, B2
// (encoded with theta_depth -1 and indices 0, 1, 2).
std::vector<HyperbolaSample> hyperbola_samples(int theta_depth, const GridSpec& grid);

}  // namespace hanoi
