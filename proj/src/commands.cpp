#include "graphaudit/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "graphaudit/client.hpp"
#include "graphaudit/config.hpp"
#include "graphaudit/distances.hpp"
#include "graphaudit/edgelist_io.hpp"
#include "graphaudit/ged.hpp"
#include "graphaudit/ground_truth.hpp"
#include "graphaudit/metrics.hpp"
#include "graphaudit/numfmt.hpp"
#include "graphaudit/parser.hpp"
#include "graphaudit/signatures.hpp"
#include "graphaudit/spectra.hpp"
#include "graphaudit/transcript.hpp"
#include "graphaudit/version.hpp"

namespace graphaudit {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Workspace {
    Catalog catalog;
    ToolkitConfig config;
    TranscriptStore store;
};

Workspace open_workspace(const CommandContext& ctx) {
    Workspace ws{Catalog::load(ctx.data_dir), {}, TranscriptStore::open(ctx.store_dir)};
    if (ctx.config_file) ws.config = load_config(*ctx.config_file);
    return ws;
}

void write_text_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string reference_row_label(const std::string& key) {
    return "reference:" + key;
}

/// Model ids having a stored transcript for the given prompt, ascending.
std::vector<std::string> models_in_store(const TranscriptStore& store, const std::string& prompt) {
    std::set<std::string> models;
    for (const auto& [key, t] : store.all())
        if (t.prompt == prompt) models.insert(t.model_id);
    return {models.begin(), models.end()};
}

const Transcript* transcript_for(const TranscriptStore& store, const std::string& model,
                                 const std::string& prompt) {
    return store.find(cache_key(model, prompt));
}

std::string csv_number(const std::optional<double>& value) {
    return value ? format_round2(*value) : "NA";
}

json json_number(const std::optional<double>& value) {
    return value ? json(*value) : json(nullptr);
}

struct ModelGraph {
    std::string model_id;
    Graph graph;
    ParseResult parse;
    CleanupReport cleanup;
};

struct SkippedModel {
    std::string model_id;
    ResponseClass classification;
};

struct FailedModel {
    std::string model_id;
    std::string reason;
};

/// Parses every candidate model's transcript for a prompt, splitting into
/// usable graphs, skipped (non-edge-list) models, and failures.
void collect_model_graphs(const Workspace& ws, const std::string& prompt,
                          const std::vector<std::string>& requested,
                          std::vector<ModelGraph>& graphs, std::vector<SkippedModel>& skipped,
                          std::vector<FailedModel>& failed) {
    std::vector<std::string> models = requested;
    if (models.empty()) models = models_in_store(ws.store, prompt);
    for (const auto& model : models) {
        const Transcript* t = transcript_for(ws.store, model, prompt);
        if (t == nullptr) {
            failed.push_back({model, "no transcript in store"});
            continue;
        }
        ParseResult parse = extract_edge_list(t->response_text, ws.config.parser);
        if (parse.classification != ResponseClass::EdgeList) {
            skipped.push_back({model, parse.classification});
            continue;
        }
        FromEdgeListResult built = from_edge_list(parse.edges);
        graphs.push_back({model, std::move(built.graph), std::move(parse), built.report});
    }
}

json warnings_json(const ParseResult& parse) {
    json out = json::object();
    for (const auto& w : parse.warnings) out[std::string(to_string(w.kind))] = w.count;
    return out;
}

std::string skipped_comment_lines(const std::vector<SkippedModel>& skipped,
                                  const std::vector<FailedModel>& failed) {
    std::string out;
    for (const auto& s : skipped)
        out += "# skipped: " + s.model_id + " (" + std::string(to_string(s.classification)) + ")\n";
    for (const auto& f : failed) out += "# failed: " + f.model_id + " (" + f.reason + ")\n";
    return out;
}

}  // namespace

int cmd_fetch(const CommandContext& ctx, const std::vector<std::string>& models,
              const std::vector<std::string>& targets, bool replay) {
    Workspace ws = open_workspace(ctx);
    const FetchMode mode = replay ? FetchMode::Replay : FetchMode::Live;

    struct Entry {
        std::string model_id, target, key, classification, error;
        bool cached = false;
        int retries = 0;
    };
    std::vector<Entry> entries;
    int failures = 0;
    int new_fetches = 0;

    for (const auto& model : models) {
        std::optional<LlmClient> client;
        std::string client_error;
        if (replay) {
            EndpointConfig ep;
            ep.model_id = model;
            ep.base_url = "replay://";
            client.emplace(std::move(ep));
        } else {
            try {
                client.emplace(endpoint_for(ws.config, model));
            } catch (const std::exception& e) {
                client_error = e.what();
            }
        }
        for (const auto& target : targets) {
            Entry entry;
            entry.model_id = model;
            entry.target = target;
            try {
                if (!client) throw FetchError(client_error);
                const std::string prompt = render_prompt(ws.catalog, target);
                entry.key = cache_key(model, prompt);
                FetchResult r = client->fetch(ws.store, prompt, mode);
                entry.cached = r.cache_hit;
                entry.retries = r.retries;
                if (!r.cache_hit) ++new_fetches;
                entry.classification =
                    to_string(classify_response(r.transcript.response_text, ws.config.parser));
                std::cout << model << " / " << target << ": " << entry.classification
                          << (r.cache_hit ? " (cached)" : "") << "\n";
            } catch (const std::exception& e) {
                entry.error = e.what();
                ++failures;
                std::cerr << model << " / " << target << ": error: " << entry.error << "\n";
            }
            entries.push_back(std::move(entry));
        }
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.model_id, a.target) < std::tie(b.model_id, b.target);
    });

    json manifest = {
        {"version", kVersion},
        {"seed", ctx.seed},
        {"replay", replay},
        {"models", models},
        {"targets", targets},
        {"new_fetches", new_fetches},
        {"entries", json::array()},
    };
    if (!replay) {
        json endpoints = json::array();
        for (const auto& model : models) {
            for (const auto& ep : ws.config.endpoints) {
                if (ep.model_id != model) continue;
                json snapshot = {{"model_id", ep.model_id},
                                 {"base_url", ep.base_url},
                                 {"api_key_env", ep.api_key_env},
                                 {"request_timeout_s", ep.request_timeout_s},
                                 {"max_retries", ep.max_retries},
                                 {"min_request_interval_s", ep.min_request_interval_s}};
                if (ep.temperature) snapshot["temperature"] = *ep.temperature;
                if (ep.max_tokens) snapshot["max_tokens"] = *ep.max_tokens;
                endpoints.push_back(std::move(snapshot));
            }
        }
        manifest["endpoints"] = std::move(endpoints);
    }
    for (const auto& e : entries) {
        json item = {{"model_id", e.model_id}, {"target", e.target}};
        if (e.error.empty()) {
            item["cache_key"] = e.key;
            item["cached"] = e.cached;
            item["retries"] = e.retries;
            item["classification"] = e.classification;
        } else {
            item["error"] = e.error;
        }
        manifest["entries"].push_back(std::move(item));
    }
    write_text_file(ctx.out_dir / "manifest.json", manifest.dump(2) + "\n");
    std::cout << (failures == 0 ? "fetch complete" : "fetch finished with errors") << "; "
              << new_fetches << " new, manifest: " << (ctx.out_dir / "manifest.json").string()
              << "\n";
    return failures == 0 ? 0 : 1;
}

int cmd_stats(const CommandContext& ctx, const std::string& reference,
              const std::vector<std::string>& models) {
    Workspace ws = open_workspace(ctx);
    const Graph& ref = ws.catalog.get(reference);
    const std::string prompt = render_prompt(ws.catalog, reference);

    std::vector<ModelGraph> graphs;
    std::vector<SkippedModel> skipped;
    std::vector<FailedModel> failed;
    collect_model_graphs(ws, prompt, models, graphs, skipped, failed);

    struct Row {
        std::string label;
        MetricsRecord record;
        const ModelGraph* source = nullptr;
    };
    std::vector<Row> rows;
    rows.push_back({reference_row_label(reference), compute_metrics(ref, ref, ctx.seed), nullptr});
    for (const auto& mg : graphs)
        rows.push_back({mg.model_id, compute_metrics(mg.graph, ref, ctx.seed), &mg});
    std::sort(rows.begin() + 1, rows.end(), [](const Row& a, const Row& b) {
        if (a.record.degseq_distance != b.record.degseq_distance)
            return a.record.degseq_distance < b.record.degseq_distance;
        return a.label < b.label;
    });

    std::string csv = "model,nodes,edges,density,assortativity,modularity,degseq_distance\n";
    for (const auto& row : rows) {
        const MetricsRecord& r = row.record;
        csv += row.label + ',' + std::to_string(r.node_count) + ',' + std::to_string(r.edge_count) +
               ',' + format_round2(r.density) + ',' + csv_number(r.assortativity) + ',' +
               csv_number(r.modularity) + ',' + format_round2(r.degseq_distance) + '\n';
    }
    csv += skipped_comment_lines(skipped, failed);
    write_text_file(ctx.out_dir / "stats.csv", csv);

    json out = {{"reference", reference}, {"seed", ctx.seed}, {"rows", json::array()},
                {"skipped", json::array()}, {"failed", json::array()}};
    for (const auto& row : rows) {
        const MetricsRecord& r = row.record;
        json item = {{"model_id", row.label},
                     {"node_count", r.node_count},
                     {"edge_count", r.edge_count},
                     {"density", r.density},
                     {"assortativity", json_number(r.assortativity)},
                     {"modularity", json_number(r.modularity)},
                     {"degseq_distance", r.degseq_distance}};
        if (row.source != nullptr) {
            item["parse_warnings"] = warnings_json(row.source->parse);
            item["cleanup"] = {{"self_loops", row.source->cleanup.self_loops},
                               {"duplicate_edges", row.source->cleanup.duplicate_edges}};
        }
        out["rows"].push_back(std::move(item));
    }
    for (const auto& s : skipped)
        out["skipped"].push_back(
            {{"model_id", s.model_id}, {"classification", std::string(to_string(s.classification))}});
    for (const auto& f : failed)
        out["failed"].push_back({{"model_id", f.model_id}, {"reason", f.reason}});
    write_text_file(ctx.out_dir / "stats.json", out.dump(2) + "\n");

    std::cout << csv;
    return failed.empty() ? 0 : 1;
}

int cmd_diff(const CommandContext& ctx, const std::string& model, const std::string& reference) {
    Workspace ws = open_workspace(ctx);
    const Graph& ref = ws.catalog.get(reference);
    const std::string prompt = render_prompt(ws.catalog, reference);

    const Transcript* t = transcript_for(ws.store, model, prompt);
    if (t == nullptr) {
        std::cerr << "diff: no transcript for model `" << model << "` and reference `" << reference
                  << "`\n";
        return 1;
    }
    ParseResult parse = extract_edge_list(t->response_text, ws.config.parser);
    if (parse.classification != ResponseClass::EdgeList) {
        std::cerr << "diff: transcript for `" << model << "` is " << to_string(parse.classification)
                  << ", not an edge list\n";
        return 1;
    }
    const Graph out = from_edge_list(parse.edges).graph;
    const auto alignment = integer_shift_alignment(out, ref);
    const DiffReport report = graph_diff(out, ref, alignment);

    auto edges_text = [](const std::vector<std::pair<std::string, std::string>>& edges) {
        std::string text;
        for (const auto& [a, b] : edges) text += a + ' ' + b + '\n';
        return text;
    };
    write_text_file(ctx.out_dir / "diff_intersection.edges", edges_text(report.intersection));
    write_text_file(ctx.out_dir / "diff_added.edges", edges_text(report.added));
    write_text_file(ctx.out_dir / "diff_missing.edges", edges_text(report.missing));

    std::string dot = "graph diff {\n";
    dot += "  // model: " + model + " vs reference: " + reference + "\n";
    dot += "  node [shape=circle fontsize=10];\n";
    for (const auto& [a, b] : report.intersection)
        dot += "  \"" + a + "\" -- \"" + b + "\";\n";
    for (const auto& [a, b] : report.added)
        dot += "  \"" + a + "\" -- \"" + b + "\" [color=red penwidth=2.0];\n";
    for (const auto& [a, b] : report.missing)
        dot += "  \"" + a + "\" -- \"" + b + "\" [style=dashed color=gray50];\n";
    dot += "}\n";
    write_text_file(ctx.out_dir / "diff.dot", dot);

    std::cout << "intersection: " << report.intersection.size() << ", added: " << report.added.size()
              << ", missing: " << report.missing.size() << "\n";
    return 0;
}

int cmd_gad(const CommandContext& ctx, const std::vector<std::string>& models, int resolution,
            std::uint64_t expansion_budget) {
    Workspace ws = open_workspace(ctx);
    const std::vector<int> indices = ws.catalog.atlas_selection(resolution);

    std::map<int, Graph> truths;
    std::map<int, std::string> prompts;
    for (int index : indices) {
        truths.emplace(index, ws.catalog.get("atlas:" + std::to_string(index)));
        prompts.emplace(index, render_prompt(ws.catalog, "atlas:" + std::to_string(index)));
    }

    std::vector<std::string> candidates = models;
    if (candidates.empty()) {
        std::set<std::string> discovered;
        for (const auto& [index, prompt] : prompts)
            for (const auto& m : models_in_store(ws.store, prompt)) discovered.insert(m);
        candidates.assign(discovered.begin(), discovered.end());
    }

    struct Scored {
        std::string model_id;
        GadScore score;
    };
    std::vector<Scored> scores;
    std::vector<FailedModel> failed;
    const GedOptions ged_options{expansion_budget};
    for (const auto& model : candidates) {
        std::map<int, Graph> outputs;
        std::string reason;
        for (const auto& [index, prompt] : prompts) {
            const Transcript* t = transcript_for(ws.store, model, prompt);
            if (t == nullptr) {
                reason = "no transcript for atlas:" + std::to_string(index);
                break;
            }
            ParseResult parse = extract_edge_list(t->response_text, ws.config.parser);
            if (parse.classification != ResponseClass::EdgeList) {
                reason = "atlas:" + std::to_string(index) + " response is " +
                         std::string(to_string(parse.classification));
                break;
            }
            outputs.emplace(index, from_edge_list(parse.edges).graph);
        }
        if (!reason.empty()) {
            failed.push_back({model, reason});
            continue;
        }
        scores.push_back({model, gad(outputs, truths, ged_options)});
    }

    std::sort(scores.begin(), scores.end(), [](const Scored& a, const Scored& b) {
        if (a.score.mean != b.score.mean) return a.score.mean < b.score.mean;
        return a.model_id < b.model_id;
    });

    std::string csv = "rank,model_id,mean,std\n";
    for (size_t i = 0; i < scores.size(); ++i) {
        csv += std::to_string(i + 1) + ',' + scores[i].model_id + ',' +
               format_round2(scores[i].score.mean) + ',' + format_round2(scores[i].score.stddev) +
               '\n';
    }
    csv += skipped_comment_lines({}, failed);
    write_text_file(ctx.out_dir / "gad_ranking.csv", csv);

    json out = {{"resolution", resolution},
                {"indices", indices},
                {"expansion_budget", expansion_budget},
                {"std_kind", "population"},
                {"scores", json::array()},
                {"failed", json::array()}};
    std::vector<Scored> by_model = scores;
    std::sort(by_model.begin(), by_model.end(),
              [](const Scored& a, const Scored& b) { return a.model_id < b.model_id; });
    for (const auto& s : by_model) {
        json per_graph = json::object();
        for (const auto& [index, r] : s.score.per_graph)
            per_graph[std::to_string(index)] = {{"distance", r.distance}, {"exact", r.exact}};
        out["scores"].push_back({{"model_id", s.model_id},
                                 {"resolution", s.score.resolution},
                                 {"per_graph", std::move(per_graph)},
                                 {"mean", s.score.mean},
                                 {"std", s.score.stddev}});
    }
    for (const auto& f : failed)
        out["failed"].push_back({{"model_id", f.model_id}, {"reason", f.reason}});
    write_text_file(ctx.out_dir / "gad_scores.json", out.dump(2) + "\n");

    std::cout << csv;
    return failed.empty() ? 0 : 1;
}

namespace {

/// Minimal CSV reader for ranking files: returns the model_id column in row
/// order, ignoring `#` comment lines.
std::vector<std::string> read_ranking_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open ranking CSV: " + path.string());
    std::string line;
    std::vector<std::string> header;
    std::vector<std::string> models;
    size_t model_col = std::string::npos;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (header.empty()) {
            header = fields;
            for (size_t i = 0; i < header.size(); ++i)
                if (header[i] == "model_id" || header[i] == "model") model_col = i;
            if (model_col == std::string::npos)
                throw std::invalid_argument("ranking CSV " + path.string() +
                                            " needs a model_id column");
            continue;
        }
        if (model_col < fields.size()) models.push_back(fields[model_col]);
    }
    return models;
}

}  // namespace

int cmd_rank_compare(const CommandContext& ctx, const std::filesystem::path& ranking_csv,
                     const std::filesystem::path& reference_csv) {
    const std::vector<std::string> ranking = read_ranking_csv(ranking_csv);
    const std::vector<std::string> reference = read_ranking_csv(reference_csv);

    const std::set<std::string> set_a(ranking.begin(), ranking.end());
    const std::set<std::string> set_b(reference.begin(), reference.end());
    if (set_a != set_b) {
        std::string msg = "rank-compare: model id sets differ;";
        msg += " only in ranking:";
        for (const auto& m : set_a)
            if (!set_b.count(m)) msg += " " + m;
        msg += "; only in reference:";
        for (const auto& m : set_b)
            if (!set_a.count(m)) msg += " " + m;
        throw std::invalid_argument(msg);
    }

    const double rho = spearman_rank_correlation(ranking, reference);
    json out = {{"spearman", rho}, {"ranking", ranking}, {"reference", reference}};
    write_text_file(ctx.out_dir / "rank_compare.json", out.dump(2) + "\n");

    std::cout << "spearman rho = " << format_full(rho) << "\n";
    std::cout << "rank,ranking,reference\n";
    for (size_t i = 0; i < ranking.size(); ++i)
        std::cout << (i + 1) << ',' << ranking[i] << ',' << reference[i] << '\n';
    return 0;
}

int cmd_spectral(const CommandContext& ctx, const std::string& reference,
                 const std::vector<std::string>& models) {
    Workspace ws = open_workspace(ctx);
    const Graph& ref = ws.catalog.get(reference);
    const std::string prompt = render_prompt(ws.catalog, reference);

    std::vector<ModelGraph> graphs;
    std::vector<SkippedModel> skipped;
    std::vector<FailedModel> failed;
    collect_model_graphs(ws, prompt, models, graphs, skipped, failed);

    struct Row {
        std::string label;
        double distance;
    };
    std::vector<Row> rows;
    for (const auto& mg : graphs) rows.push_back({mg.model_id, spectral_distance(mg.graph, ref)});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return a.label < b.label;
    });
    rows.insert(rows.begin(), {reference_row_label(reference), 0.0});

    std::string csv = "model,spectral_distance\n";
    for (const auto& row : rows) csv += row.label + ',' + format_round2(row.distance) + '\n';
    csv += skipped_comment_lines(skipped, failed);
    write_text_file(ctx.out_dir / "spectral.csv", csv);

    json out = {{"reference", reference},
                {"metadata",
                 {{"matrix", "adjacency"}, {"ordering", "descending"}, {"padding", "trailing_zeros"}}},
                {"rows", json::array()},
                {"skipped", json::array()},
                {"failed", json::array()}};
    for (const auto& row : rows)
        out["rows"].push_back({{"model_id", row.label}, {"spectral_distance", row.distance}});
    for (const auto& s : skipped)
        out["skipped"].push_back(
            {{"model_id", s.model_id}, {"classification", std::string(to_string(s.classification))}});
    for (const auto& f : failed)
        out["failed"].push_back({{"model_id", f.model_id}, {"reason", f.reason}});
    write_text_file(ctx.out_dir / "spectral.json", out.dump(2) + "\n");

    std::cout << csv;
    return failed.empty() ? 0 : 1;
}

int cmd_embed(const CommandContext& ctx, const std::string& reference,
              const std::vector<std::string>& models) {
    Workspace ws = open_workspace(ctx);
    const Graph& ref = ws.catalog.get(reference);
    const std::string prompt = render_prompt(ws.catalog, reference);

    std::vector<ModelGraph> graphs;
    std::vector<SkippedModel> skipped;
    std::vector<FailedModel> failed;
    collect_model_graphs(ws, prompt, models, graphs, skipped, failed);

    const Eigen::VectorXd grid = netlsd_default_timescales();
    struct Row {
        std::string label;
        HeatSignature signature;
    };
    std::vector<Row> rows;
    rows.push_back({reference_row_label(reference),
                    heat_trace_signature(ref, grid, ws.config.signature_normalization)});
    for (const auto& mg : graphs)
        rows.push_back(
            {mg.model_id, heat_trace_signature(mg.graph, grid, ws.config.signature_normalization)});
    std::sort(rows.begin() + 1, rows.end(),
              [](const Row& a, const Row& b) { return a.label < b.label; });

    std::string sig_csv = "graph";
    for (Eigen::Index i = 0; i < grid.size(); ++i) sig_csv += ',' + format_full(grid(i));
    sig_csv += '\n';
    for (const auto& row : rows) {
        sig_csv += row.label;
        for (Eigen::Index i = 0; i < row.signature.values.size(); ++i)
            sig_csv += ',' + format_full(row.signature.values(i));
        sig_csv += '\n';
    }
    write_text_file(ctx.out_dir / "signatures.csv", sig_csv);

    std::string dist_csv = "graph";
    for (const auto& row : rows) dist_csv += ',' + row.label;
    dist_csv += '\n';
    for (const auto& a : rows) {
        dist_csv += a.label;
        for (const auto& b : rows)
            dist_csv += ',' + format_full(signature_distance(a.signature, b.signature));
        dist_csv += '\n';
    }
    write_text_file(ctx.out_dir / "signature_distances.csv", dist_csv);

    json out = {{"reference", reference},
                {"normalization", std::string(to_string(ws.config.signature_normalization))},
                {"timescales", {{"points", grid.size()}, {"min", grid(0)}, {"max", grid(grid.size() - 1)}}},
                {"graphs", json::array()},
                {"skipped", json::array()},
                {"failed", json::array()}};
    for (const auto& row : rows) out["graphs"].push_back(row.label);
    for (const auto& s : skipped)
        out["skipped"].push_back(
            {{"model_id", s.model_id}, {"classification", std::string(to_string(s.classification))}});
    for (const auto& f : failed)
        out["failed"].push_back({{"model_id", f.model_id}, {"reason", f.reason}});
    write_text_file(ctx.out_dir / "embed.json", out.dump(2) + "\n");

    std::cout << "embedded " << rows.size() << " graphs (" << skipped.size() << " skipped)\n";
    return failed.empty() ? 0 : 1;
}

}  // namespace graphaudit
