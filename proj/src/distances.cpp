#include "graphaudit/distances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>

#include "graphaudit/spectra.hpp"

namespace graphaudit {

GadScore gad(const std::map<int, Graph>& outputs, const std::map<int, Graph>& truths,
             const GedOptions& options) {
    if (outputs.size() != truths.size() ||
        !std::equal(outputs.begin(), outputs.end(), truths.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
        std::string msg = "gad: output and truth key sets differ; outputs:";
        for (const auto& [k, g] : outputs) msg += " " + std::to_string(k);
        msg += "; truths:";
        for (const auto& [k, g] : truths) msg += " " + std::to_string(k);
        throw std::invalid_argument(msg);
    }
    GadScore score;
    score.resolution = static_cast<int>(truths.size());
    double sum = 0.0;
    for (const auto& [index, truth] : truths) {
        GedResult r = graph_edit_distance(outputs.at(index), truth, options);
        sum += r.distance;
        score.per_graph.emplace(index, std::move(r));
    }
    const double n = static_cast<double>(score.per_graph.size());
    score.mean = n > 0 ? sum / n : 0.0;
    double var = 0.0;
    for (const auto& [index, r] : score.per_graph) {
        const double d = r.distance - score.mean;
        var += d * d;
    }
    score.stddev = n > 0 ? std::sqrt(var / n) : 0.0;
    return score;
}

double spectral_distance(const Graph& g1, const Graph& g2) {
    Eigen::VectorXd s1 = adjacency_spectrum(g1).reverse();
    Eigen::VectorXd s2 = adjacency_spectrum(g2).reverse();
    const Eigen::Index len = std::max(s1.size(), s2.size());
    Eigen::VectorXd a = Eigen::VectorXd::Zero(len);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(len);
    a.head(s1.size()) = s1;
    b.head(s2.size()) = s2;
    return (a - b).norm();
}

namespace {

std::optional<long long> parse_int_label(const std::string& s) {
    long long value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

using LabelPair = std::pair<std::string, std::string>;

LabelPair canonical_pair(std::string a, std::string b) {
    if (label_less(b, a)) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

std::set<LabelPair> label_edges(const Graph& g, const std::map<std::string, std::string>* alignment) {
    std::set<LabelPair> out;
    for (const auto& [u, v] : g.edges()) {
        std::string a = g.label_or_id(u);
        std::string b = g.label_or_id(v);
        if (alignment) {
            if (auto it = alignment->find(a); it != alignment->end()) a = it->second;
            if (auto it = alignment->find(b); it != alignment->end()) b = it->second;
        }
        out.insert(canonical_pair(std::move(a), std::move(b)));
    }
    return out;
}

}  // namespace

bool label_less(const std::string& a, const std::string& b) {
    const auto ia = parse_int_label(a);
    const auto ib = parse_int_label(b);
    if (ia && ib) return *ia < *ib;
    if (ia != ib) return ia.has_value();  // numeric labels sort before names
    return a < b;
}

DiffReport graph_diff(const Graph& out, const Graph& ref,
                      const std::map<std::string, std::string>& alignment) {
    std::set<std::string> targets;
    for (const auto& [from, to] : alignment)
        if (!targets.insert(to).second)
            throw std::invalid_argument("graph_diff: alignment is not injective at `" + to + "`");

    const std::set<LabelPair> out_edges = label_edges(out, &alignment);
    const std::set<LabelPair> ref_edges = label_edges(ref, nullptr);

    DiffReport report;
    report.alignment = alignment;
    for (const auto& e : out_edges) {
        if (ref_edges.count(e))
            report.intersection.push_back(e);
        else
            report.added.push_back(e);
    }
    for (const auto& e : ref_edges)
        if (!out_edges.count(e)) report.missing.push_back(e);

    auto pair_less = [](const LabelPair& x, const LabelPair& y) {
        if (x.first != y.first) return label_less(x.first, y.first);
        return label_less(x.second, y.second);
    };
    std::sort(report.intersection.begin(), report.intersection.end(), pair_less);
    std::sort(report.added.begin(), report.added.end(), pair_less);
    std::sort(report.missing.begin(), report.missing.end(), pair_less);
    return report;
}

std::map<std::string, std::string> integer_shift_alignment(const Graph& out, const Graph& ref) {
    const std::set<LabelPair> ref_edges = label_edges(ref, nullptr);

    std::map<std::string, std::string> best_map;
    size_t best_hits = 0;
    bool first = true;
    for (const long long shift : {0LL, -1LL, +1LL}) {
        std::map<std::string, std::string> candidate;
        for (int v = 0; v < out.node_count(); ++v) {
            const std::string label = out.label_or_id(v);
            if (auto value = parse_int_label(label))
                candidate.emplace(label, std::to_string(*value + shift));
        }
        const std::set<LabelPair> aligned = label_edges(out, &candidate);
        size_t hits = 0;
        for (const auto& e : aligned) hits += ref_edges.count(e);
        if (first || hits > best_hits) {
            best_hits = hits;
            best_map = std::move(candidate);
            first = false;
        }
    }
    return best_map;
}

double spearman_rank_correlation(const std::vector<std::string>& rank_a,
                                 const std::vector<std::string>& rank_b) {
    if (rank_a.size() != rank_b.size() || rank_a.size() < 2)
        throw std::invalid_argument("spearman: need two orderings of the same ids, size >= 2");
    std::map<std::string, size_t> pos_a;
    for (size_t i = 0; i < rank_a.size(); ++i)
        if (!pos_a.emplace(rank_a[i], i).second)
            throw std::invalid_argument("spearman: duplicate id `" + rank_a[i] + "`");
    double sum_sq = 0.0;
    std::set<std::string> seen_b;
    for (size_t i = 0; i < rank_b.size(); ++i) {
        if (!seen_b.insert(rank_b[i]).second)
            throw std::invalid_argument("spearman: duplicate id `" + rank_b[i] + "`");
        auto it = pos_a.find(rank_b[i]);
        if (it == pos_a.end())
            throw std::invalid_argument("spearman: id `" + rank_b[i] + "` missing from first ranking");
        const double d = static_cast<double>(i) - static_cast<double>(it->second);
        sum_sq += d * d;
    }
    const double n = static_cast<double>(rank_a.size());
    return 1.0 - 6.0 * sum_sq / (n * (n * n - 1.0));
}

}  // namespace graphaudit
