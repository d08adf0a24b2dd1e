#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphaudit/ged.hpp"
#include "graphaudit/graph.hpp"

namespace graphaudit {

/// Mean and population standard deviation of exact edit distances against a
/// set of atlas reference graphs.
struct GadScore {
    std::map<int, GedResult> per_graph;
    double mean = 0.0;
    double stddev = 0.0;  // population convention
    int resolution = 0;
};

/// Edit distance per atlas index, averaged. Both maps must carry exactly the
/// same keys; missing outputs are a precondition violation, never silently
/// skipped. Throws std::invalid_argument on key mismatch.
GadScore gad(const std::map<int, Graph>& outputs, const std::map<int, Graph>& truths,
             const GedOptions& options = {});

/// l2 distance between adjacency spectra, both sorted descending, the shorter
/// padded with trailing zeros. Symmetric; zero on isomorphic pairs.
double spectral_distance(const Graph& g1, const Graph& g2);

/// Edge sets over aligned labels: present in both, hallucinated (added), and
/// forgotten (missing) relative to the reference.
struct DiffReport {
    std::vector<std::pair<std::string, std::string>> intersection;
    std::vector<std::pair<std::string, std::string>> added;
    std::vector<std::pair<std::string, std::string>> missing;
    std::map<std::string, std::string> alignment;
};

/// Compares an output graph against a reference after applying an injective
/// label alignment (labels without a mapping stay as-is). Throws
/// std::invalid_argument when the alignment is not injective.
DiffReport graph_diff(const Graph& out, const Graph& ref,
                      const std::map<std::string, std::string>& alignment);

/// Default alignment: integer labels shifted by whichever of {0, -1, +1}
/// maximizes the diff intersection (0- vs 1-indexed outputs).
std::map<std::string, std::string> integer_shift_alignment(const Graph& out, const Graph& ref);

/// Spearman rank correlation of two orderings of the same id set (no ties).
/// Throws std::invalid_argument when the id sets differ or size < 2.
double spearman_rank_correlation(const std::vector<std::string>& rank_a,
                                 const std::vector<std::string>& rank_b);

/// Orders label pairs numerically when both parse as integers, else
/// lexicographically; used for stable report output.
bool label_less(const std::string& a, const std::string& b);

}  // namespace graphaudit
