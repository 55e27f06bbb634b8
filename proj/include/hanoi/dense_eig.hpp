#pragma once

// Independent numerical route: dense symmetric eigendecomposition
// (Householder tridiagonalization + implicit-shift iteration, via Eigen's
// self-adjoint solver), eigenvalue clustering, and the comparison of the
// numeric spectrum against the closed form.  Eigenvectors are used only to
// verify residuals on sampled columns and are not retained.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hanoi/caps.hpp"
#include "hanoi/spectrum.hpp"

namespace hanoi {

struct EigenCluster {
    double value;  // mean of merged eigenvalues
    long long count;
};

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending
    std::vector<EigenCluster> clusters;
    double cluster_gap = 0.0;
    double max_residual = 0.0;       // max |Mv - lambda v|_inf over sampled columns
    double max_orthogonality = 0.0;  // max |v_i . v_j - delta_ij| over sampled pairs
};

// Merge consecutive sorted values whose successive gaps are <= gap.
std::vector<EigenCluster> cluster(const std::vector<double>& sorted_values, double gap);

// Full spectrum of a symmetric matrix.  gap <= 0 selects the default
// 1e-6 * max|eigenvalue|.  Throws on asymmetry beyond 1e-12, on the dense
// size cap, and on solver non-convergence.
EigenResult dense_sym_eig(const Eigen::MatrixXd& m, double gap = -1.0,
                          const ResourceLimits& caps = {});

struct SpectrumComparison {
    int n = 0;
    bool pass = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> mismatches;  // offending eigenvalue paths
};

// Numeric spectrum of the level-n adjacency matrix (k = 3) against the
// closed form: cluster counts must equal multiplicities exactly and cluster
// representatives must match within tol.  The cluster gap is asserted to be
// smaller than half the minimal closed-form separation.
SpectrumComparison compare_with_closed_form(int n, double tol = 1e-8,
                                            const ResourceLimits& caps = {});

}  // namespace hanoi
