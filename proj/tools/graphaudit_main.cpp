#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graphaudit/commands.hpp"
#include "graphaudit/version.hpp"

#ifndef GRAPHAUDIT_DATA_DIR_DEFAULT
#define GRAPHAUDIT_DATA_DIR_DEFAULT "data/ground_truth"
#endif

int main(int argc, char** argv) {
    using graphaudit::CommandContext;

    CLI::App app{"graphaudit: prompt LLM endpoints for well-known graphs and quantify the hallucinations"};
    app.set_version_flag("--version", graphaudit::kVersion);
    app.require_subcommand(1);

    CommandContext ctx;
    ctx.data_dir = GRAPHAUDIT_DATA_DIR_DEFAULT;
    std::string config_file;
    app.add_option("--store", ctx.store_dir, "Transcript store directory")->capture_default_str();
    app.add_option("--out", ctx.out_dir, "Report output directory")->capture_default_str();
    app.add_option("--data", ctx.data_dir, "Ground-truth data directory")->capture_default_str();
    app.add_option("--seed", ctx.seed, "Seed for seeded algorithms")->capture_default_str();
    app.add_option("--config", config_file, "Toolkit config file (JSON)");

    std::vector<std::string> models;
    std::vector<std::string> targets;
    bool replay = false;
    auto* fetch = app.add_subcommand("fetch", "Fetch one transcript per (model, target)");
    fetch->add_option("--models", models, "Model ids")->required()->delimiter(',');
    fetch->add_option("--targets", targets, "Catalog targets (e.g. karate, lesmis, atlas:3)")
        ->required()
        ->delimiter(',');
    fetch->add_flag("--replay", replay, "Offline mode: serve cached transcripts only");

    std::string reference = "karate";
    std::vector<std::string> stats_models;
    auto* stats = app.add_subcommand("stats", "Topology statistics vs a reference graph");
    stats->add_option("--reference", reference, "Reference catalog key")->capture_default_str();
    stats->add_option("--models", stats_models, "Restrict to these models")->delimiter(',');

    std::string diff_model;
    std::string diff_reference = "karate";
    auto* diff = app.add_subcommand("diff", "Edge diff of one model output vs a reference");
    diff->add_option("--model", diff_model, "Model id")->required();
    diff->add_option("--reference", diff_reference, "Reference catalog key")->capture_default_str();

    std::vector<std::string> gad_models;
    int resolution = 5;
    std::uint64_t budget = 10'000'000;
    auto* gad = app.add_subcommand("gad", "Graph Atlas Distance ranking");
    gad->add_option("--models", gad_models, "Model ids (default: all in store)")->delimiter(',');
    gad->add_option("--resolution", resolution, "Number of atlas graphs")->capture_default_str();
    gad->add_option("--budget", budget, "Edit-distance search expansion budget")
        ->capture_default_str();

    std::string ranking_csv;
    std::string reference_csv;
    auto* rank = app.add_subcommand("rank-compare", "Spearman correlation vs a reference ranking");
    rank->add_option("--ranking", ranking_csv, "Computed ranking CSV (default: <out>/gad_ranking.csv)");
    rank->add_option("--reference", reference_csv, "Reference ranking CSV")->required();

    std::string spectral_reference = "karate";
    std::vector<std::string> spectral_models;
    auto* spectral = app.add_subcommand("spectral", "Spectral distances to a reference graph");
    spectral->add_option("--reference", spectral_reference, "Reference catalog key")
        ->capture_default_str();
    spectral->add_option("--models", spectral_models, "Restrict to these models")->delimiter(',');

    std::string embed_reference = "karate";
    std::vector<std::string> embed_models;
    auto* embed = app.add_subcommand("embed", "Heat-trace signatures and pairwise distances");
    embed->add_option("--reference", embed_reference, "Reference catalog key")
        ->capture_default_str();
    embed->add_option("--models", embed_models, "Restrict to these models")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (!config_file.empty()) ctx.config_file = config_file;

    try {
        if (fetch->parsed()) return graphaudit::cmd_fetch(ctx, models, targets, replay);
        if (stats->parsed()) return graphaudit::cmd_stats(ctx, reference, stats_models);
        if (diff->parsed()) return graphaudit::cmd_diff(ctx, diff_model, diff_reference);
        if (gad->parsed()) return graphaudit::cmd_gad(ctx, gad_models, resolution, budget);
        if (rank->parsed()) {
            std::filesystem::path ranking =
                ranking_csv.empty() ? ctx.out_dir / "gad_ranking.csv" : std::filesystem::path(ranking_csv);
            return graphaudit::cmd_rank_compare(ctx, ranking, reference_csv);
        }
        if (spectral->parsed())
            return graphaudit::cmd_spectral(ctx, spectral_reference, spectral_models);
        if (embed->parsed()) return graphaudit::cmd_embed(ctx, embed_reference, embed_models);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
