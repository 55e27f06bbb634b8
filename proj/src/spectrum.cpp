#include "hanoi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

#include "hanoi/matrices.hpp"

namespace hanoi {

namespace {

constexpr double kEnclosureWidthBound = 1e-12;

const Interval kOne{1.0, 1.0};
const Interval kFour{4.0, 4.0};
const Interval kThirteen{13.0, 13.0};

// Contract an enclosure of a backward-step root with interval Newton against
// f(x) in target.  The derivative 2x - 1 stays away from 0 on both branches.
Interval newton_refine(Interval x, const Interval& target) {
    for (int iter = 0; iter < 12; ++iter) {
        const double m = x.mid();
        const Interval fm = f_eval(interval_point(m));
        const Interval deriv = Interval{2.0, 2.0} * x - kOne;
        if (deriv.lo <= 0.0 && 0.0 <= deriv.hi) break;
        const Interval next = intersect(x, interval_point(m) - (fm - target) / deriv);
        if (next.width() >= x.width()) break;
        x = next;
    }
    if (!(x.width() <= kEnclosureWidthBound))
        throw std::logic_error("preimages: enclosure did not contract to width 1e-12");
    return x;
}

// The two preimages of parent under one backward step of f; bit 0 is the
// smaller root.
void backward_children(const AlgebraicEigenvalue& parent, AlgebraicEigenvalue& smaller,
                       AlgebraicEigenvalue& larger) {
    const Interval& t = parent.enclosure;
    const Interval disc = kThirteen + kFour * t;
    const Interval s = interval_sqrt(disc);
    // Halving is exact; the additions round outward.
    Interval minus{0.5 * detail::down(1.0 - s.hi), 0.5 * detail::up(1.0 - s.lo)};
    Interval plus{0.5 * detail::down(1.0 + s.lo), 0.5 * detail::up(1.0 + s.hi)};
    minus = newton_refine(minus, t);
    plus = newton_refine(plus, t);

    smaller.base = parent.base;
    smaller.depth = parent.depth + 1;
    smaller.path = parent.path;  // bit 0 at position parent.depth
    smaller.enclosure = minus;
    smaller.value = minus.mid();

    larger.base = parent.base;
    larger.depth = parent.depth + 1;
    larger.path = parent.path | (std::uint64_t{1} << parent.depth);
    larger.enclosure = plus;
    larger.value = plus.mid();
}

std::vector<AlgebraicEigenvalue> backward_step(const std::vector<AlgebraicEigenvalue>& level) {
    std::vector<AlgebraicEigenvalue> next(level.size() * 2);
    for (std::size_t i = 0; i < level.size(); ++i)
        backward_children(level[i], next[2 * i], next[2 * i + 1]);
    return next;
}

AlgebraicEigenvalue root_eigenvalue(double target) {
    AlgebraicEigenvalue e;
    e.base = static_cast<int>(target);
    e.depth = 0;
    e.path = 0;
    e.value = target;
    e.enclosure = interval_point(target);
    return e;
}

mpz_class pow3_z(int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
    return r;
}

mpz_class multiplicity_a_z(int m) { return (pow3_z(m - 1) + 3) / 2; }

}  // namespace

std::string AlgebraicEigenvalue::path_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(depth));
    for (int t = 0; t < depth; ++t) s.push_back((path >> t) & 1 ? '1' : '0');
    return s;
}

std::string AlgebraicEigenvalue::describe() const {
    std::ostringstream os;
    os.precision(15);
    if (depth == 0) {
        os << base;
    } else {
        os << "f^-" << depth << "(" << base << ") path " << path_string() << " ~ " << value;
    }
    return os.str();
}

std::vector<AlgebraicEigenvalue> preimages(double target, int depth,
                                           const ResourceLimits& caps) {
    if (!(target >= -2.0 && target <= 3.0))
        throw std::invalid_argument("preimages: target outside [-2, 3]");
    if (depth < 0 || depth > caps.max_preimage_depth)
        throw std::invalid_argument("preimages: depth out of range");
    if (depth >= 63 || (std::uint64_t{1} << depth) > caps.max_point_count)
        throw ResourceCapExceeded("preimages: 2^depth exceeds point cap");

    std::vector<AlgebraicEigenvalue> level{root_eigenvalue(target)};
    for (int step = 0; step < depth; ++step) level = backward_step(level);
    std::sort(level.begin(), level.end(),
              [](const AlgebraicEigenvalue& a, const AlgebraicEigenvalue& b) {
                  return a.value < b.value;
              });
    return level;
}

long long multiplicity_a(int m) {
    if (m < 1 || m > 39) throw std::invalid_argument("multiplicity_a: need 1 <= m <= 39");
    long long p = 1;
    for (int i = 1; i < m; ++i) p *= 3;
    return (p + 3) / 2;
}

long long multiplicity_b(int m) {
    if (m < 1 || m > 39) throw std::invalid_argument("multiplicity_b: need 1 <= m <= 39");
    long long p = 1;
    for (int i = 1; i < m; ++i) p *= 3;
    return (p - 1) / 2;
}

long long SpectrumTable::multiplicity_sum() const {
    long long sum = 0;
    for (const SpectrumEntry& e : entries) sum += e.multiplicity;
    return sum;
}

SpectrumTable level_spectrum(int n, const ResourceLimits& caps) {
    if (n < 1) throw std::invalid_argument("level_spectrum: n must be >= 1");
    if (n > 62 || (std::uint64_t{3} << (n - 1)) - 1 > caps.max_point_count)
        throw ResourceCapExceeded("level_spectrum: table exceeds point cap");

    SpectrumTable table;
    table.n = n;
    table.entries.reserve((std::size_t{3} << (n - 1)) - 1);

    table.entries.push_back({root_eigenvalue(3.0), 1});

    std::vector<AlgebraicEigenvalue> level{root_eigenvalue(0.0)};
    for (int i = 0; i < n; ++i) {
        for (const AlgebraicEigenvalue& e : level)
            table.entries.push_back({e, multiplicity_a(n - i)});
        if (i + 1 < n) level = backward_step(level);
    }

    if (n >= 2) {
        level = {root_eigenvalue(-2.0)};
        for (int j = 0; j <= n - 2; ++j) {
            for (const AlgebraicEigenvalue& e : level)
                table.entries.push_back({e, multiplicity_b(n - j)});
            if (j + 1 <= n - 2) level = backward_step(level);
        }
    }

    std::sort(table.entries.begin(), table.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  return a.eigenvalue.value < b.eigenvalue.value;
              });
    for (std::size_t t = 0; t + 1 < table.entries.size(); ++t) {
        if (!(table.entries[t].eigenvalue.enclosure.hi <
              table.entries[t + 1].eigenvalue.enclosure.lo))
            throw std::logic_error("level_spectrum: adjacent enclosures not disjoint");
    }
    return table;
}

SpectrumTable hecke_spectrum(int n, const ResourceLimits& caps) {
    SpectrumTable table = level_spectrum(n, caps);
    for (SpectrumEntry& e : table.entries) {
        Interval& enc = e.eigenvalue.enclosure;
        enc = {detail::down(enc.lo / 3.0), detail::up(enc.hi / 3.0)};
        e.eigenvalue.value = enc.mid();
    }
    return table;
}

std::vector<KNSAtom> kns_atoms(int depth, const ResourceLimits& caps) {
    if (depth < 0) throw std::invalid_argument("kns_atoms: depth must be >= 0");
    if (depth >= 62 || (std::uint64_t{4} << depth) > caps.max_point_count)
        throw ResourceCapExceeded("kns_atoms: atom count exceeds point cap");

    std::vector<KNSAtom> atoms;
    for (int i = 0; i <= depth; ++i) {
        const Rational mass(mpz_class(1), 6 * pow3_z(i));
        for (double base : {0.0, -2.0})
            for (const AlgebraicEigenvalue& e : preimages(base, i, caps))
                atoms.push_back({e, mass});
    }
    return atoms;
}

Rational kns_partial_mass(int depth) {
    if (depth < 0) throw std::invalid_argument("kns_partial_mass: depth must be >= 0");
    Rational total(0);
    for (int i = 0; i <= depth; ++i) {
        mpz_class count;
        mpz_ui_pow_ui(count.get_mpz_t(), 2, static_cast<unsigned long>(i + 1));
        total += Rational(count, 6 * pow3_z(i));
    }
    return total;
}

KNSLimitReport kns_limit_check(int i, int n_max) {
    if (i < 0 || n_max <= i) throw std::invalid_argument("kns_limit_check: need 0 <= i < n_max");
    KNSLimitReport report;
    report.i = i;
    report.limit = Rational(mpz_class(1), 6 * pow3_z(i));
    for (int n = i + 1; n <= n_max; ++n) {
        const Rational ratio(multiplicity_a_z(n - i), pow3_z(n));
        report.rows.push_back({n, ratio, abs(report.limit - ratio)});
    }
    return report;
}

std::vector<CharPolyFactor> char_poly_factored(int n) {
    if (n < 0) throw std::invalid_argument("char_poly_factored: n must be >= 0");
    std::vector<CharPolyFactor> factors;
    // -(x - 3)
    factors.push_back({UnivariatePoly(std::vector<Rational>{Rational(3), Rational(-1)}), 1});
    if (n == 0) return factors;

    factors.push_back({UnivariatePoly::variable(), multiplicity_a(n)});
    UnivariatePoly fi(std::vector<Rational>{Rational(-3), Rational(-1), Rational(1)});
    for (int i = 1; i <= n - 1; ++i) {
        factors.push_back({fi, multiplicity_a(n - i)});
        fi = fi * fi - fi - UnivariatePoly(3);
    }

    if (n >= 2) {
        factors.push_back(
            {UnivariatePoly(std::vector<Rational>{Rational(2), Rational(1)}), multiplicity_b(n)});
        // g^j(x+2) iterated as h <- h^2 - 5h + 5 from h = x + 2.
        UnivariatePoly h(std::vector<Rational>{Rational(2), Rational(1)});
        for (int j = 1; j <= n - 2; ++j) {
            h = h * h - UnivariatePoly(5) * h + UnivariatePoly(5);
            factors.push_back({h, multiplicity_b(n - j)});
        }
    }
    return factors;
}

UnivariatePoly char_poly_expanded(int n) {
    if (n > 7) throw std::invalid_argument("char_poly_expanded: degree 3^n too large to expand");
    UnivariatePoly acc(1);
    for (const CharPolyFactor& f : char_poly_factored(n))
        acc *= pow(f.poly, static_cast<unsigned long>(f.exponent));
    return acc;
}

long long char_poly_degree(const std::vector<CharPolyFactor>& factors) {
    long long deg = 0;
    for (const CharPolyFactor& f : factors) deg += f.poly.degree() * f.exponent;
    return deg;
}

bool conjugation_identity(int n) {
    // g(x) = x^2 - 5x + 5, the translate of f by 2.
    return conjugation_identity(
        n, UnivariatePoly(std::vector<Rational>{Rational(5), Rational(-5), Rational(1)}));
}

bool conjugation_identity(int n, const UnivariatePoly& g) {
    if (n < 1 || n > 16) throw std::invalid_argument("conjugation_identity: need 1 <= n <= 16");
    UnivariatePoly fside = UnivariatePoly::variable();
    UnivariatePoly gside(std::vector<Rational>{Rational(2), Rational(1)});  // x + 2
    for (int step = 0; step < n; ++step) {
        fside = fside * fside - fside - UnivariatePoly(3);
        gside = g.eval<UnivariatePoly>(gside);
    }
    return gside == fside + UnivariatePoly(2);
}

JuliaApproximation julia_approx(int depth, const ResourceLimits& caps) {
    if (depth < 0 || depth > 30) throw std::invalid_argument("julia_approx: need 0 <= depth <= 30");
    if ((std::uint64_t{1} << depth) > caps.max_point_count)
        throw ResourceCapExceeded("julia_approx: 2^depth exceeds point cap");

    std::vector<double> pts{3.0};
    for (int step = 0; step < depth; ++step) {
        std::vector<double> next;
        next.reserve(pts.size() * 2);
        for (double t : pts) {
            const double s = std::sqrt(13.0 + 4.0 * t);
            next.push_back(0.5 * (1.0 - s));
            next.push_back(0.5 * (1.0 + s));
        }
        pts.swap(next);
    }
    std::sort(pts.begin(), pts.end());

    JuliaApproximation j;
    j.depth = depth;
    j.min_value = pts.front();
    j.max_value = pts.back();
    if (pts.size() > 1) {
        double total = 0.0;
        j.min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t + 1 < pts.size(); ++t) {
            const double gap = pts[t + 1] - pts[t];
            total += gap;
            j.min_gap = std::min(j.min_gap, gap);
            j.max_gap = std::max(j.max_gap, gap);
        }
        j.mean_gap = total / static_cast<double>(pts.size() - 1);
    }
    j.points = std::move(pts);
    return j;
}

BoundaryReport boundary_spectrum_description(int isolated_depth, int julia_depth,
                                             const ResourceLimits& caps) {
    if (isolated_depth < 0)
        throw std::invalid_argument("boundary_spectrum_description: negative depth");

    BoundaryReport report;
    report.isolated_depth = isolated_depth;
    for (int i = 0; i <= isolated_depth; ++i)
        for (const AlgebraicEigenvalue& e : preimages(0.0, i, caps))
            report.isolated.push_back(e);
    std::sort(report.isolated.begin(), report.isolated.end(),
              [](const AlgebraicEigenvalue& a, const AlgebraicEigenvalue& b) {
                  return a.value < b.value;
              });

    report.julia = julia_approx(julia_depth, caps);

    double min_dist = std::numeric_limits<double>::infinity();
    const std::vector<double>& jp = report.julia.points;
    for (const AlgebraicEigenvalue& e : report.isolated) {
        auto it = std::lower_bound(jp.begin(), jp.end(), e.value);
        if (it != jp.end()) min_dist = std::min(min_dist, std::abs(*it - e.value));
        if (it != jp.begin()) min_dist = std::min(min_dist, std::abs(*(it - 1) - e.value));
    }
    report.min_isolated_to_julia = min_dist;

    report.classification =
        "backward orbit of 0: isolated points of the limit spectrum, accumulating on the "
        "Julia set of f; the limit spectrum is the closure of this orbit";
    report.conjugation_note =
        "f(x) = x^2 - x - 3 is conjugate to z -> z^2 - 15/4 by the shift x = z + 1/2, "
        "whose Julia set is a real Cantor set";
    report.hecke_note =
        "the averaged-generator operator on boundary functions has this spectrum "
        "rescaled by 1/3, contained in [-2/3, 1]";
    return report;
}

}  // namespace hanoi
