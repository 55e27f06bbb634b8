#pragma once

/*
 * Fraction-free (Bareiss) determinant over exact rationals.
 *
 * Denominators are cleared up front so the elimination runs over big
 * integers, where every Bareiss division is exact (each intermediate entry
 * is a minor of the scaled matrix).  Zero pivots are handled by row swaps
 * with the sign tracked; if a pivot column is entirely zero the determinant
 * is zero.  Pivot choice is deterministic (first nonzero row), so results
 * are reproducible bit for bit.
 */

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "hanoi/rational.hpp"

namespace hanoi {

// Exact determinant of a square matrix of big integers, destroying w.
// w is row-major of size n*n.
inline mpz_class bareiss_det_int(std::vector<mpz_class>& w, std::size_t n) {
    if (n == 0) return 1;
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return w[r * n + c]; };
    int sign = 1;
    mpz_class prev = 1;
    mpz_class t0, t1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(at(k, k)) == 0) {
            std::size_t r = k + 1;
            while (r < n && sgn(at(r, k)) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(r, c));
            sign = -sign;
        }
        const mpz_class& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            mpz_class& lik = at(i, k);
            const bool lik_zero = sgn(lik) == 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class& wij = at(i, j);
                if (lik_zero) {
                    if (sgn(wij) == 0) continue;
                    mpz_mul(t0.get_mpz_t(), wij.get_mpz_t(), pivot.get_mpz_t());
                } else {
                    mpz_mul(t0.get_mpz_t(), wij.get_mpz_t(), pivot.get_mpz_t());
                    mpz_mul(t1.get_mpz_t(), lik.get_mpz_t(), at(k, j).get_mpz_t());
                    mpz_sub(t0.get_mpz_t(), t0.get_mpz_t(), t1.get_mpz_t());
                }
                mpz_divexact(wij.get_mpz_t(), t0.get_mpz_t(), prev.get_mpz_t());
            }
            lik = 0;
        }
        prev = pivot;
    }
    return sign < 0 ? mpz_class(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

// Exact determinant of a matrix of rationals.
inline Rational bareiss_det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: matrix not square");
    const std::size_t n = static_cast<std::size_t>(m.rows());
    if (n == 0) return Rational(1);

    // Common denominator of all entries.
    mpz_class lcm_den = 1;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            mpz_class d = m(r, c).den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
            lcm_den = lcm_den / g * d;
        }

    std::vector<mpz_class> w(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& e = m(r, c);
            w[r * n + c] = e.num() * (lcm_den / e.den());
        }

    mpz_class det_scaled = bareiss_det_int(w, n);
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lcm_den.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(det_scaled, scale);
}

}  // namespace hanoi
