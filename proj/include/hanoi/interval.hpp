#pragma once

// Minimal interval arithmetic with outward rounding, enough to certify
// eigenvalue enclosures.  Every primitive rounds the computed endpoints one
// ulp outward, which over-encloses faithfully-rounded IEEE operations, so
// containment of the true value is preserved through compositions.

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace hanoi {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

namespace detail {

// One ulp toward +inf, branch-light (finite non-NaN inputs).
inline double up(double v) {
    if (v == 0.0) return std::numeric_limits<double>::denorm_min();
    if (std::isinf(v)) return v;
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    bits += (v > 0.0) ? 1 : std::uint64_t(-1);
    return std::bit_cast<double>(bits);
}

inline double down(double v) { return -up(-v); }

}  // namespace detail

inline Interval interval_point(double v) { return {v, v}; }

inline Interval operator+(const Interval& a, const Interval& b) {
    return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi)};
}
inline Interval operator-(const Interval& a, const Interval& b) {
    return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo)};
}
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {detail::down(lo), detail::up(hi)};
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo <= 0.0 && 0.0 <= b.hi) throw std::domain_error("Interval: division by interval containing 0");
    const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {detail::down(lo), detail::up(hi)};
}

inline Interval square(const Interval& a) {
    if (a.lo >= 0.0) return {detail::down(a.lo * a.lo), detail::up(a.hi * a.hi)};
    if (a.hi <= 0.0) return {detail::down(a.hi * a.hi), detail::up(a.lo * a.lo)};
    const double m = std::max(-a.lo, a.hi);
    return {0.0, detail::up(m * m)};
}

inline Interval interval_sqrt(const Interval& a) {
    if (a.lo < 0.0) throw std::domain_error("Interval: sqrt of negative interval");
    return {detail::down(std::sqrt(a.lo)), detail::up(std::sqrt(a.hi))};
}

inline Interval intersect(const Interval& a, const Interval& b) {
    Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r.lo > r.hi) throw std::logic_error("Interval: empty intersection");
    return r;
}

}  // namespace hanoi
