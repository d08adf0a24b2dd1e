#pragma once

#include <Eigen/Dense>

#include "graphaudit/graph.hpp"

namespace graphaudit {

/// Dense symmetric 0/1 adjacency matrix of g.
Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Symmetric normalized Laplacian I - D^{-1/2} A D^{-1/2}. Degree-0 nodes get
/// an all-zero row/column, contributing eigenvalue 0.
Eigen::MatrixXd normalized_laplacian_matrix(const Graph& g);

/// Eigenvalues of the adjacency matrix, sorted ascending.
Eigen::VectorXd adjacency_spectrum(const Graph& g);

/// Eigenvalues of the normalized Laplacian, sorted ascending. All values lie
/// in [0, 2] up to solver tolerance; the multiplicity of 0 equals the number
/// of connected components.
Eigen::VectorXd normalized_laplacian_spectrum(const Graph& g);

}  // namespace graphaudit
