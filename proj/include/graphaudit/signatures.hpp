#pragma once

#include <Eigen/Dense>

#include "graphaudit/graph.hpp"

namespace graphaudit {

enum class SignatureNormalization { None, EmptyGraph, CompleteGraph };

/// 250 logarithmically spaced timescales in [1e-2, 1e2] (reference defaults).
Eigen::VectorXd netlsd_default_timescales();

/// Heat-trace signature h(t) = sum_i exp(-lambda_i t) over the normalized
/// Laplacian spectrum, sampled on a timescale grid.
struct HeatSignature {
    Eigen::VectorXd timescales;
    Eigen::VectorXd values;
};

/// Signature of g on the given grid. Unnormalized by default; the
/// empty-graph and complete-graph normalizations divide by the closed-form
/// trace of the corresponding reference graph on the same node count.
/// Throws std::invalid_argument for the empty graph.
HeatSignature heat_trace_signature(const Graph& g,
                                   const Eigen::VectorXd& timescales = netlsd_default_timescales(),
                                   SignatureNormalization normalization = SignatureNormalization::None);

/// l2 distance between signature value vectors. Throws
/// std::invalid_argument when the timescale grids differ.
double signature_distance(const HeatSignature& a, const HeatSignature& b);

}  // namespace graphaudit
