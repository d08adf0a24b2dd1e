#include "graphaudit/signatures.hpp"

#include <cmath>
#include <stdexcept>

#include "graphaudit/spectra.hpp"

namespace graphaudit {

Eigen::VectorXd netlsd_default_timescales() {
    constexpr int kPoints = 250;
    Eigen::VectorXd t(kPoints);
    for (int i = 0; i < kPoints; ++i)
        t(i) = std::pow(10.0, -2.0 + 4.0 * i / (kPoints - 1));
    return t;
}

HeatSignature heat_trace_signature(const Graph& g, const Eigen::VectorXd& timescales,
                                   SignatureNormalization normalization) {
    const int n = g.node_count();
    if (n < 1) throw std::invalid_argument("heat_trace_signature: graph must have at least one node");

    // The normalized Laplacian is positive semidefinite; clamp solver noise
    // below zero so h stays nonincreasing.
    Eigen::VectorXd lambda = normalized_laplacian_spectrum(g).cwiseMax(0.0);

    HeatSignature sig;
    sig.timescales = timescales;
    sig.values.resize(timescales.size());
    for (Eigen::Index i = 0; i < timescales.size(); ++i) {
        const double t = timescales(i);
        double h = (-t * lambda.array()).exp().sum();
        switch (normalization) {
            case SignatureNormalization::None:
                break;
            case SignatureNormalization::EmptyGraph:
                h /= static_cast<double>(n);
                break;
            case SignatureNormalization::CompleteGraph: {
                // K_n spectrum: 0 once, n/(n-1) with multiplicity n-1.
                const double reference =
                    n > 1 ? 1.0 + (n - 1) * std::exp(-t * n / (n - 1.0)) : 1.0;
                h /= reference;
                break;
            }
        }
        sig.values(i) = h;
    }
    return sig;
}

double signature_distance(const HeatSignature& a, const HeatSignature& b) {
    if (a.timescales.size() != b.timescales.size() ||
        (a.timescales.array() != b.timescales.array()).any())
        throw std::invalid_argument("signature_distance: timescale grids differ");
    return (a.values - b.values).norm();
}

}  // namespace graphaudit
