#include "hanoi/decimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hanoi/spectrum.hpp"

namespace hanoi {

namespace {

using P2 = BivariatePoly;

P2 var_x() { return P2::x(); }
P2 var_y() { return P2::y(); }

}  // namespace

BivariatePoly poly_L() { return var_x() - P2(1) - var_y(); }

BivariatePoly poly_K() {
    return var_x() * var_x() - P2(1) + var_y() - var_y() * var_y();
}

BivariatePoly poly_A1() { return var_x() - P2(1) + var_y(); }

BivariatePoly poly_B2() { return var_x() + P2(1) + var_y(); }

BivariatePoly poly_D0() { return -(var_x() - P2(1) - P2(2) * var_y()); }

BivariatePoly poly_psi_num() {
    return var_x() * var_x() - P2(1) - var_x() * var_y() - P2(2) * var_y() * var_y();
}

UnivariatePoly poly_f() {
    return UnivariatePoly(std::vector<Rational>{Rational(-3), Rational(-1), Rational(1)});
}

UnivariatePoly poly_g() {
    return UnivariatePoly(std::vector<Rational>{Rational(5), Rational(-5), Rational(1)});
}

const DecimationMap& decimation_map() {
    static const DecimationMap map = [] {
        const P2 x = var_x();
        const P2 y = var_y();
        const P2 den = poly_L() * poly_K();
        // x' = x + 2y^2 (-x^2 + x + y^2) / (L K), over the common denominator
        const P2 xp_num = x * den + P2(2) * y * y * (-(x * x) + x + y * y);
        const P2 yp_num = y * y * poly_A1();
        DecimationMap m;
        m.x_prime = RationalFunction2(xp_num, den);
        m.y_prime = RationalFunction2(yp_num, den);
        m.psi = RationalFunction2(poly_psi_num(), y);
        m.f = poly_f();
        return m;
    }();
    return map;
}

std::optional<RationalPoint> apply_F(const RationalPoint& pt) {
    const Rational lv = poly_L().eval(pt.x, pt.y);
    const Rational kv = poly_K().eval(pt.x, pt.y);
    if (lv.is_zero() || kv.is_zero()) return std::nullopt;
    const Rational den = lv * kv;
    const Rational y2 = pt.y * pt.y;
    const Rational xp = pt.x + Rational(2) * y2 * (-(pt.x * pt.x) + pt.x + y2) / den;
    const Rational yp = y2 * poly_A1().eval(pt.x, pt.y) / den;
    return RationalPoint{xp, yp};
}

Rational psi_value(const RationalPoint& pt) {
    if (pt.y.is_zero()) throw std::domain_error("psi_value: y = 0");
    return poly_psi_num().eval(pt.x, pt.y) / pt.y;
}

BivariatePoly semiconjugacy_defect(const UnivariatePoly& f) {
    const DecimationMap& map = decimation_map();
    // Psi(F) = q(F) / y', with q the numerator of Psi.
    const RationalFunction2 lhs = subst(poly_psi_num(), map.x_prime, map.y_prime) / map.y_prime;
    const RationalFunction2 rhs = f.eval<RationalFunction2>(map.psi);
    return lhs.num() * rhs.den() - rhs.num() * lhs.den();
}

bool semiconjugacy_identity() { return semiconjugacy_identity(poly_f()); }

bool semiconjugacy_identity(const UnivariatePoly& f) {
    return semiconjugacy_defect(f).is_zero();
}

bool psi_split_identity() {
    // Roots theta_0, theta_1 of f(x) = theta: sum 1, product -(3 + theta).
    const Poly1<Rational> e1(Rational(1));
    const Poly1<Rational> e2(std::vector<Rational>{Rational(-3), Rational(-1)});
    return psi_split_identity(e1, e2);
}

bool psi_split_identity(const Poly1<Rational>& e1, const Poly1<Rational>& e2) {
    using R = Poly1<Rational>;  // polynomials in theta
    using P2R = Poly2<R>;
    using RF2R = RatFun2<R>;

    const DecimationMap& map = decimation_map();
    const P2R q = lift_coeffs<R>(poly_psi_num());
    const P2R a1 = lift_coeffs<R>(poly_A1());
    const P2R lk = lift_coeffs<R>(poly_L() * poly_K());
    const P2R y = P2R::y();
    const R theta = R::variable();

    // Psi_theta0 * Psi_theta1 = q^2 - e1 q y + e2 y^2.
    const P2R product = q * q - P2R(e1) * q * y + P2R(e2) * y * y;
    const RF2R lhs(a1 * product, lk);

    // Psi_theta composed with F.
    const P2R psi_theta = q - P2R::term(0, 1, theta);
    const RF2R xp(lift_coeffs<R>(map.x_prime.num()), lift_coeffs<R>(map.x_prime.den()));
    const RF2R yp(lift_coeffs<R>(map.y_prime.num()), lift_coeffs<R>(map.y_prime.den()));
    const RF2R rhs = subst(psi_theta, xp, yp);

    return ratfun_equal(lhs, rhs);
}

RationalMatrix assemble_pencil(int n, const Rational& x0, const Rational& y0,
                               const ResourceLimits& caps) {
    if (n < 1) throw std::invalid_argument("assemble_pencil: n must be >= 1");
    if (n > caps.max_exact_pencil_level)
        throw ResourceCapExceeded("assemble_pencil: level above exact-arithmetic cap");
    return pencil_matrix<Rational>(n, x0, y0,
                                   static_cast<std::uint64_t>(pow3(caps.max_exact_pencil_level)));
}

Rational det_pencil(int n, const Rational& x0, const Rational& y0, const ResourceLimits& caps) {
    return bareiss_det(assemble_pencil(n, x0, y0, caps));
}

CheckStatus recursion_check(int n, const RationalPoint& pt, const ResourceLimits& caps) {
    if (n < 2 || n > 5) throw std::invalid_argument("recursion_check: need 2 <= n <= 5");
    const Rational lv = poly_L().eval(pt.x, pt.y);
    const Rational kv = poly_K().eval(pt.x, pt.y);
    if (lv.is_zero() || kv.is_zero()) return CheckStatus::degenerate_point;

    const auto image = apply_F(pt);
    const Rational lhs = det_pencil(n, pt.x, pt.y, caps);

    const Rational b2v = poly_B2().eval(pt.x, pt.y);
    const unsigned long e = static_cast<unsigned long>(pow3(n - 2));
    const Rational prefactor = pow(lv * b2v, e) * pow(kv, 2 * e);
    const Rational rhs = prefactor * det_pencil(n - 1, image->x, image->y, caps);

    return lhs == rhs ? CheckStatus::holds : CheckStatus::fails;
}

Rational eval_A(int m, const RationalPoint& pt) {
    if (m < 1) throw std::invalid_argument("eval_A: m must be >= 1");
    if (m == 1) return poly_A1().eval(pt.x, pt.y);
    // prod_{theta in f^-(m-2)(0)} Psi_theta = y^(2^(m-2)) * f^(m-2)(Psi).
    Rational v = psi_value(pt);
    for (int t = 0; t < m - 2; ++t) v = f_eval(v);
    return pow(pt.y, 1ul << (m - 2)) * v;
}

Rational eval_B(int m, const RationalPoint& pt) {
    if (m < 2) throw std::invalid_argument("eval_B: m must be >= 2");
    if (m == 2) return poly_B2().eval(pt.x, pt.y);
    // prod_{theta in f^-(m-3)(-2)} Psi_theta = y^(2^(m-3)) * (f^(m-3)(Psi) + 2).
    Rational v = psi_value(pt);
    for (int t = 0; t < m - 3; ++t) v = f_eval(v);
    return pow(pt.y, 1ul << (m - 3)) * (v + Rational(2));
}

CheckStatus factorization_check(int n, const RationalPoint& pt, const ResourceLimits& caps) {
    if (n < 1 || n > 4) throw std::invalid_argument("factorization_check: need 1 <= n <= 4");
    if (n >= 2 && pt.y.is_zero()) return CheckStatus::degenerate_point;

    Rational product = poly_D0().eval(pt.x, pt.y) *
                       pow(poly_A1().eval(pt.x, pt.y),
                           static_cast<unsigned long>(multiplicity_a(n)));
    for (int m = 2; m <= n; ++m) {
        product *= pow(eval_A(m, pt), static_cast<unsigned long>(multiplicity_a(n - m + 1)));
        product *= pow(eval_B(m, pt), static_cast<unsigned long>(multiplicity_b(n - m + 2)));
    }

    const Rational det = det_pencil(n, pt.x, pt.y, caps);
    return det == product ? CheckStatus::holds : CheckStatus::fails;
}

long long factor_m(int n) {
    if (n < 2) throw std::invalid_argument("factor_m: n must be >= 2");
    long long m_n = 0;
    for (int m = 2; m <= n - 1; ++m) m_n += (1ll << (m - 2)) * multiplicity_a(n - m);
    for (int m = 3; m <= n - 1; ++m) m_n += (1ll << (m - 3)) * multiplicity_b(n - m + 1);
    return m_n;
}

FactorFamily build_factorization(int n) {
    if (n < 1) throw std::invalid_argument("build_factorization: n must be >= 1");
    FactorFamily family;
    family.n = n;
    family.factors.push_back({"D0", 1, -1, {}});
    family.factors.push_back({"A1", multiplicity_a(n), -1, {}});
    for (int m = 2; m <= n; ++m) {
        FactorDescriptor a{"A" + std::to_string(m), multiplicity_a(n - m + 1), m - 2, {}};
        for (const auto& e : preimages(0.0, m - 2)) a.thetas.push_back(e.enclosure);
        family.factors.push_back(std::move(a));

        FactorDescriptor b{"B" + std::to_string(m), multiplicity_b(n - m + 2), m - 3, {}};
        if (m >= 3) {
            for (const auto& e : preimages(-2.0, m - 3)) b.thetas.push_back(e.enclosure);
        } else {
            b.theta_depth = -1;  // B2 is the line x + 1 + y
        }
        family.factors.push_back(std::move(b));
    }
    return family;
}

RationalPoint sample_nondegenerate_point(std::mt19937_64& rng, int guard_iterates) {
    auto small_rational = [&rng] {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = static_cast<long>(rng() % 9) + 1;
        return Rational(num, den);
    };

    const BivariatePoly L = poly_L();
    const BivariatePoly K = poly_K();
    const BivariatePoly B2 = poly_B2();

    for (int attempt = 0; attempt < 20000; ++attempt) {
        RationalPoint pt{small_rational(), small_rational()};
        RationalPoint cur = pt;
        bool ok = true;
        for (int t = 0; t <= guard_iterates && ok; ++t) {
            if (cur.y.is_zero() || L.eval(cur.x, cur.y).is_zero() ||
                K.eval(cur.x, cur.y).is_zero() || B2.eval(cur.x, cur.y).is_zero()) {
                ok = false;
                break;
            }
            if (t < guard_iterates) cur = *apply_F(cur);
        }
        if (ok) return pt;
    }
    throw std::runtime_error("sample_nondegenerate_point: rejection sampling did not terminate");
}

std::vector<HyperbolaSample> hyperbola_samples(int theta_depth, const GridSpec& grid) {
    if (theta_depth < 0 || theta_depth > 6)
        throw std::invalid_argument("hyperbola_samples: need 0 <= depth <= 6");
    if (grid.count < 1) throw std::invalid_argument("hyperbola_samples: empty grid");

    std::vector<HyperbolaSample> out;
    auto y_at = [&grid](int t) {
        return grid.count == 1
                   ? grid.y_min
                   : grid.y_min + (grid.y_max - grid.y_min) * t / (grid.count - 1);
    };

    // The lines D0 = 0, A1 = 0, B2 = 0, encoded with depth -1.
    for (int t = 0; t < grid.count; ++t) {
        const double y = y_at(t);
        out.push_back({-1, 0, 1.0 + 2.0 * y, y});
        out.push_back({-1, 1, 1.0 - y, y});
        out.push_back({-1, 2, -1.0 - y, y});
    }

    for (int depth = 0; depth <= theta_depth; ++depth) {
        // Indices 0 .. 2^depth-1 are the f^-depth(0) thetas (ascending), the
        // rest are the f^-depth(-2) thetas; consumers can split families by
        // index.
        std::vector<double> thetas;
        for (const auto& e : preimages(0.0, depth)) thetas.push_back(e.value);
        for (const auto& e : preimages(-2.0, depth)) thetas.push_back(e.value);

        for (std::size_t idx = 0; idx < thetas.size(); ++idx) {
            const double theta = thetas[idx];
            for (int t = 0; t < grid.count; ++t) {
                const double y = y_at(t);
                // Psi_theta = 0 solved for x: x^2 - y x - (1 + 2y^2 + theta y) = 0.
                const double c = 1.0 + 2.0 * y * y + theta * y;
                const double disc = y * y + 4.0 * c;
                if (disc < 0.0) continue;
                const double s = std::sqrt(disc);
                for (double x : {0.5 * (y + s), 0.5 * (y - s)}) {
                    // One Newton polish keeps the residual at rounding level.
                    const double deriv = 2.0 * x - y;
                    if (deriv != 0.0) x -= (x * x - y * x - c) / deriv;
                    if (std::abs(x * x - y * x - c) < 1e-9)
                        out.push_back({depth, static_cast<int>(idx), x, y});
                }
            }
        }
    }
    return out;
}

}  // namespace hanoi
