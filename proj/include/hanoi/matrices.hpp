#pragma once

// Level-n matrices of the three k=3 generators, built by the block
// recursion, the adjacency matrix as their sum, and the two-parameter
// pencil with the same block pattern.  Everything is templated on the
// scalar so the same construction serves exact rationals, integers and
// doubles.
//
// Block convention: vertex order is lexicographic on words with the first
// letter most significant, so the three diagonal blocks at level n+1
// correspond to first letter 0, 1, 2.  The recursion, with 1 and 0 the
// identity and zero blocks of size 3^n:
//
//   a_0 = b_0 = c_0 = [1]
//   a_{n+1} = [0 1 0; 1 0 0; 0 0 a_n]
//   b_{n+1} = [0 0 1; 0 b_n 0; 1 0 0]
//   c_{n+1} = [c_n 0 0; 0 0 1; 0 1 0]
//
// A generator fixed point contributes exactly 1 on the diagonal (a
// permutation-matrix fixed point), never 2.

#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

#include "hanoi/caps.hpp"

namespace hanoi {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline std::int64_t pow3(int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) v *= 3;
    return v;
}

template <class Scalar>
struct LevelGenerators {
    DenseMatrix<Scalar> a, b, c;
};

template <class Scalar>
LevelGenerators<Scalar> generator_matrices(int n, std::uint64_t max_dim = 2187) {
    if (n < 0) throw std::invalid_argument("generator_matrices: n must be >= 0");
    if (static_cast<std::uint64_t>(pow3(n)) > max_dim)
        throw ResourceCapExceeded("generator_matrices: 3^n exceeds dense cap");

    LevelGenerators<Scalar> g;
    g.a = g.b = g.c = DenseMatrix<Scalar>::Identity(1, 1);
    for (int level = 0; level < n; ++level) {
        const auto s = pow3(level);
        DenseMatrix<Scalar> id = DenseMatrix<Scalar>::Identity(s, s);
        DenseMatrix<Scalar> a1 = DenseMatrix<Scalar>::Zero(3 * s, 3 * s);
        DenseMatrix<Scalar> b1 = a1;
        DenseMatrix<Scalar> c1 = a1;
        a1.block(0, s, s, s) = id;
        a1.block(s, 0, s, s) = id;
        a1.block(2 * s, 2 * s, s, s) = g.a;
        b1.block(0, 2 * s, s, s) = id;
        b1.block(2 * s, 0, s, s) = id;
        b1.block(s, s, s, s) = g.b;
        c1.block(s, 2 * s, s, s) = id;
        c1.block(2 * s, s, s, s) = id;
        c1.block(0, 0, s, s) = g.c;
        g.a = std::move(a1);
        g.b = std::move(b1);
        g.c = std::move(c1);
    }
    return g;
}

// a_n + b_n + c_n, the adjacency matrix of the level-n graph for k = 3.
template <class Scalar>
DenseMatrix<Scalar> adjacency_from_generators(int n, std::uint64_t max_dim = 2187) {
    LevelGenerators<Scalar> g = generator_matrices<Scalar>(n, max_dim);
    return g.a + g.b + g.c;
}

// The pencil a_n + b_n + c_n - x + (y-1) d_n for n >= 1, assembled from the
// level n-1 generators as the 3x3 block matrix
//   [c-x  y   y ]
//   [ y  b-x  y ]
//   [ y   y  a-x]
// with y standing for y times the identity block.  At y = 1 this is the
// adjacency matrix minus x.
template <class Scalar>
DenseMatrix<Scalar> pencil_matrix(int n, const Scalar& x, const Scalar& y,
                                  std::uint64_t max_dim = 2187) {
    if (n < 1) throw std::invalid_argument("pencil_matrix: n must be >= 1");
    if (static_cast<std::uint64_t>(pow3(n)) > max_dim)
        throw ResourceCapExceeded("pencil_matrix: 3^n exceeds dense cap");

    const auto s = pow3(n - 1);
    LevelGenerators<Scalar> g = generator_matrices<Scalar>(n - 1, max_dim);
    DenseMatrix<Scalar> xid = DenseMatrix<Scalar>::Identity(s, s) * x;
    DenseMatrix<Scalar> yid = DenseMatrix<Scalar>::Identity(s, s) * y;

    DenseMatrix<Scalar> p = DenseMatrix<Scalar>::Zero(3 * s, 3 * s);
    p.block(0, 0, s, s) = g.c - xid;
    p.block(s, s, s, s) = g.b - xid;
    p.block(2 * s, 2 * s, s, s) = g.a - xid;
    p.block(0, s, s, s) = yid;
    p.block(0, 2 * s, s, s) = yid;
    p.block(s, 0, s, s) = yid;
    p.block(s, 2 * s, s, s) = yid;
    p.block(2 * s, 0, s, s) = yid;
    p.block(2 * s, s, s, s) = yid;
    return p;
}

}  // namespace hanoi
