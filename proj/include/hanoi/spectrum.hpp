#pragma once

// Closed-form level spectra: eigenvalues are backward-orbit points of
// f(x) = x^2 - x - 3 with certified interval enclosures, multiplicities come
// from the exact integer sequences a_m, b_m, and the limit objects (KNS
// masses, Julia approximation, characteristic polynomial factorization over
// the integers) are derived from the same data.
//
// Eigenvalue identity is the backward-orbit path, never the float: equality
// and disjointness are decided on enclosures refined to width <= 1e-12.

#include <cstdint>
#include <string>
#include <vector>

#include "hanoi/caps.hpp"
#include "hanoi/interval.hpp"
#include "hanoi/polynomial.hpp"
#include "hanoi/rational.hpp"

namespace hanoi {

inline double f_eval(double x) { return x * x - x - 3.0; }
inline Rational f_eval(const Rational& x) { return x * x - x - Rational(3); }
inline Interval f_eval(const Interval& x) {
    return square(x) - x - interval_point(3.0);
}

// An eigenvalue as a backward-orbit point: base in {0, -2, 3}, the number of
// backward steps, and one bit per step (0 = smaller root, 1 = larger root).
// For non-integer backward-orbit targets the depth-0 value carries the
// target and base is its truncation (only the integer bases appear in
// spectra).
struct AlgebraicEigenvalue {
    int base = 0;
    int depth = 0;
    std::uint64_t path = 0;
    double value = 0.0;  // enclosure midpoint
    Interval enclosure;

    std::string path_string() const;  // "" at depth 0
    std::string describe() const;     // for mismatch reports
};

// The 2^depth preimages of target under depth backward steps of f, sorted
// ascending, each with a certified enclosure of width <= 1e-12.  target must
// lie in [-2, 3], which the backward orbit never leaves.
std::vector<AlgebraicEigenvalue> preimages(double target, int depth,
                                           const ResourceLimits& caps = {});

// Exact multiplicity sequences, m >= 1.
long long multiplicity_a(int m);  // (3^(m-1) + 3) / 2
long long multiplicity_b(int m);  // (3^(m-1) - 1) / 2

struct SpectrumEntry {
    AlgebraicEigenvalue eigenvalue;
    long long multiplicity;
};

// Level-n spectrum, entries ascending: {3} with multiplicity 1, f^{-i}(0)
// with multiplicity a_{n-i} for i < n, f^{-j}(-2) with multiplicity b_{n-j}
// for j <= n-2.  Adjacent enclosures are verified disjoint.
struct SpectrumTable {
    int n = 0;
    std::vector<SpectrumEntry> entries;

    long long multiplicity_sum() const;
};

SpectrumTable level_spectrum(int n, const ResourceLimits& caps = {});

// Same table with every eigenvalue rescaled by 1/3 (averaged generator
// operator on the boundary); multiplicities unchanged.
SpectrumTable hecke_spectrum(int n, const ResourceLimits& caps = {});

struct KNSAtom {
    AlgebraicEigenvalue eigenvalue;
    Rational mass;  // 1 / (6 * 3^depth)
};

std::vector<KNSAtom> kns_atoms(int depth, const ResourceLimits& caps = {});

// Total mass of all atoms of depth <= depth, computed exactly from the
// per-depth counts; equals 1 - (2/3)^(depth+1).
Rational kns_partial_mass(int depth);

struct KNSLimitRow {
    int n;
    Rational ratio;  // a_{n-i} / 3^n
    Rational gap;    // |limit - ratio|
};

struct KNSLimitReport {
    int i = 0;
    Rational limit;  // 1 / (6 * 3^i)
    std::vector<KNSLimitRow> rows;
};

KNSLimitReport kns_limit_check(int i, int n_max);

// Characteristic polynomial of the level-n adjacency matrix, factored over
// the integers: -(x-3) x^{a_n} f(x)^{a_{n-1}} ... f^{n-1}(x)^{a_1}
// (x+2)^{b_n} g(x+2)^{b_{n-1}} ... g^{n-2}(x+2)^{b_2}, with g = x^2 - 5x + 5.
struct CharPolyFactor {
    UnivariatePoly poly;
    long long exponent;
};

std::vector<CharPolyFactor> char_poly_factored(int n);
UnivariatePoly char_poly_expanded(int n);  // n <= 8 guard
long long char_poly_degree(const std::vector<CharPolyFactor>& factors);

// g^n(x+2) == f^n(x) + 2, compared coefficientwise in exact arithmetic.
bool conjugation_identity(int n);
bool conjugation_identity(int n, const UnivariatePoly& g);

struct JuliaApproximation {
    int depth = 0;
    std::vector<double> points;  // sorted ascending, 2^depth of them
    double min_value = 0.0;
    double max_value = 0.0;
    double min_gap = 0.0;
    double max_gap = 0.0;
    double mean_gap = 0.0;
};

// f^{-depth}(3) by inverse iteration from the repelling fixed point 3; the
// computed points stay in [-2, 3] exactly (monotone IEEE rounding of the
// stable root forms preserves the containment).
JuliaApproximation julia_approx(int depth, const ResourceLimits& caps = {});

struct BoundaryReport {
    int isolated_depth = 0;
    std::vector<AlgebraicEigenvalue> isolated;  // f^{-i}(0), i <= isolated_depth
    JuliaApproximation julia;
    double min_isolated_to_julia = 0.0;
    std::string classification;
    std::string conjugation_note;
    std::string hecke_note;  // the limit spectrum of the averaged-generator operator
};

BoundaryReport boundary_spectrum_description(int isolated_depth, int julia_depth = 12,
                                             const ResourceLimits& caps = {});

}  // namespace hanoi
