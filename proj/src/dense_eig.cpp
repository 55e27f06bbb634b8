#include "hanoi/dense_eig.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hanoi/matrices.hpp"
#include "hanoi/schreier_graph.hpp"

namespace hanoi {

std::vector<EigenCluster> cluster(const std::vector<double>& sorted_values, double gap) {
    std::vector<EigenCluster> out;
    if (sorted_values.empty()) return out;
    double sum = sorted_values[0];
    long long count = 1;
    for (std::size_t i = 1; i < sorted_values.size(); ++i) {
        if (sorted_values[i] - sorted_values[i - 1] <= gap) {
            sum += sorted_values[i];
            ++count;
        } else {
            out.push_back({sum / static_cast<double>(count), count});
            sum = sorted_values[i];
            count = 1;
        }
    }
    out.push_back({sum / static_cast<double>(count), count});
    return out;
}

EigenResult dense_sym_eig(const Eigen::MatrixXd& m, double gap, const ResourceLimits& caps) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dense_sym_eig: matrix not square");
    if (static_cast<std::uint64_t>(m.rows()) > caps.max_dense_dim)
        throw ResourceCapExceeded("dense_sym_eig: size exceeds dense cap");

    const Eigen::Index dim = m.rows();
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = r + 1; c < dim; ++c)
            if (std::abs(m(r, c) - m(c, r)) > 1e-12)
                throw std::invalid_argument("dense_sym_eig: matrix not symmetric within 1e-12");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense_sym_eig: implicit-shift iteration failed to converge");

    EigenResult result;
    result.eigenvalues.assign(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + dim);

    // Residual and orthogonality spot checks on sampled columns; the vectors
    // are dropped afterwards.
    if (dim > 0) {
        const Eigen::Index samples = std::min<Eigen::Index>(dim, 16);
        std::vector<Eigen::Index> idx(static_cast<std::size_t>(samples));
        for (Eigen::Index s = 0; s < samples; ++s) idx[s] = s * (dim - 1) / std::max<Eigen::Index>(samples - 1, 1);
        for (Eigen::Index s : idx) {
            const auto v = solver.eigenvectors().col(s);
            const double r = (m * v - result.eigenvalues[static_cast<std::size_t>(s)] * v)
                                 .lpNorm<Eigen::Infinity>();
            result.max_residual = std::max(result.max_residual, r);
        }
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a; b < idx.size(); ++b) {
                const double dot =
                    solver.eigenvectors().col(idx[a]).dot(solver.eigenvectors().col(idx[b]));
                const double defect = std::abs(dot - (a == b ? 1.0 : 0.0));
                result.max_orthogonality = std::max(result.max_orthogonality, defect);
            }
    }

    double radius = 0.0;
    for (double v : result.eigenvalues) radius = std::max(radius, std::abs(v));
    result.cluster_gap = gap > 0.0 ? gap : 1e-6 * radius;
    result.clusters = cluster(result.eigenvalues, result.cluster_gap);
    return result;
}

SpectrumComparison compare_with_closed_form(int n, double tol, const ResourceLimits& caps) {
    if (n < 1) throw std::invalid_argument("compare_with_closed_form: n must be >= 1");

    const SpectrumTable closed = level_spectrum(n, caps);
    const SchreierGraph graph = SchreierGraph::build(3, n, caps);
    const Eigen::MatrixXd delta = adjacency(graph, caps).cast<double>();
    const EigenResult numeric = dense_sym_eig(delta, -1.0, caps);

    // The clustering gap must be safely below the closed-form separation.
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t + 1 < closed.entries.size(); ++t)
        min_sep = std::min(min_sep, closed.entries[t + 1].eigenvalue.value -
                                        closed.entries[t].eigenvalue.value);
    if (closed.entries.size() > 1 && !(numeric.cluster_gap < 0.5 * min_sep))
        throw std::logic_error("compare_with_closed_form: cluster gap too coarse for this level");

    SpectrumComparison report;
    report.n = n;
    report.tolerance = tol;
    report.pass = true;

    if (numeric.clusters.size() != closed.entries.size()) {
        report.pass = false;
        std::ostringstream os;
        os << "cluster count " << numeric.clusters.size() << " != distinct count "
           << closed.entries.size();
        report.mismatches.push_back(os.str());
        return report;
    }

    for (std::size_t t = 0; t < closed.entries.size(); ++t) {
        const SpectrumEntry& want = closed.entries[t];
        const EigenCluster& got = numeric.clusters[t];
        const double dev = std::abs(got.value - want.eigenvalue.value);
        report.max_deviation = std::max(report.max_deviation, dev);
        if (got.count != want.multiplicity) {
            report.pass = false;
            std::ostringstream os;
            os << "multiplicity of " << want.eigenvalue.describe() << ": closed form "
               << want.multiplicity << ", numeric " << got.count;
            report.mismatches.push_back(os.str());
        }
        if (dev > tol) {
            report.pass = false;
            std::ostringstream os;
            os << "value of " << want.eigenvalue.describe() << " deviates by " << dev;
            report.mismatches.push_back(os.str());
        }
    }
    return report;
}

}  // namespace hanoi
