#include "graphaudit/spectra.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace graphaudit {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.node_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Eigen::MatrixXd normalized_laplacian_matrix(const Graph& g) {
    const int n = g.node_count();
    Eigen::VectorXd inv_sqrt_deg(n);
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        inv_sqrt_deg(v) = d > 0 ? 1.0 / std::sqrt(static_cast<double>(d)) : 0.0;
    }
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) l(v, v) = 1.0;
    for (const auto& [u, v] : g.edges()) {
        const double w = -inv_sqrt_deg(u) * inv_sqrt_deg(v);
        l(u, v) = w;
        l(v, u) = w;
    }
    return l;
}

namespace {

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return Eigen::VectorXd(0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();  // ascending
}

}  // namespace

Eigen::VectorXd adjacency_spectrum(const Graph& g) {
    return symmetric_eigenvalues(adjacency_matrix(g));
}

Eigen::VectorXd normalized_laplacian_spectrum(const Graph& g) {
    return symmetric_eigenvalues(normalized_laplacian_matrix(g));
}

}  // namespace graphaudit
