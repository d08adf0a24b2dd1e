#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "graphaudit/commands.hpp"
#include "graphaudit/ground_truth.hpp"
#include "graphaudit/transcript.hpp"
#include "fixture_store.hpp"

using namespace graphaudit;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

struct Env {
    fs::path root;
    CommandContext ctx;

    explicit Env(const std::string& name) {
        root = fs::temp_directory_path() / "graphaudit_cmd_tests" / name;
        fs::remove_all(root);
        fs::create_directories(root);
        ctx.store_dir = root / "store";
        ctx.out_dir = root / "out";
        ctx.data_dir = GRAPHAUDIT_DATA_DIR;
        ctx.seed = 0;

        Catalog catalog = Catalog::load(ctx.data_dir);
        TranscriptStore store = TranscriptStore::open(ctx.store_dir);
        fixture_store::build_standard_store(store, catalog);
    }
};

}  // namespace

TEST_CASE("stats: reference row first, rows sorted by degseq distance, skipped listed") {
    Env env("stats");
    const int rc = cmd_stats(env.ctx, "karate",
                             {"model-exact", "model-plus2", "model-refusal", "model-codeonly"});
    CHECK(rc == 0);

    const auto lines = lines_of(slurp(env.ctx.out_dir / "stats.csv"));
    REQUIRE(lines.size() >= 4);
    CHECK(lines[0] == "model,nodes,edges,density,assortativity,modularity,degseq_distance");
    CHECK(lines[1].rfind("reference:karate,34,78,0.14,-0.48,", 0) == 0);
    CHECK(lines[1].find(",0.00") != std::string::npos);
    CHECK(lines[2].rfind("model-exact,34,78,0.14,-0.48,", 0) == 0);
    CHECK(lines[3].rfind("model-plus2,34,80,", 0) == 0);
    CHECK(lines[3].find(",2.00") != std::string::npos);

    // skipped models are reported, not silently dropped
    const std::string csv = slurp(env.ctx.out_dir / "stats.csv");
    CHECK(csv.find("# skipped: model-codeonly (code_only)") != std::string::npos);
    CHECK(csv.find("# skipped: model-refusal (refusal)") != std::string::npos);

    const auto j = nlohmann::json::parse(slurp(env.ctx.out_dir / "stats.json"));
    CHECK(j.at("rows").at(0).at("model_id") == "reference:karate");
    CHECK(j.at("rows").at(1).at("degseq_distance").get<double>() == 0.0);
    CHECK(j.at("skipped").size() == 2);
}

TEST_CASE("stats: empty model set gives a header-only table") {
    Env env("stats_empty");
    const int rc = cmd_stats(env.ctx, "atlas:50");
    CHECK(rc == 0);
    const auto lines = lines_of(slurp(env.ctx.out_dir / "stats.csv"));
    REQUIRE(lines.size() == 2);  // header + reference row
    CHECK(lines[1].rfind("reference:atlas:50,5,8,0.80,", 0) == 0);
}

TEST_CASE("stats: explicitly requested model without transcript fails partially") {
    Env env("stats_missing");
    const int rc = cmd_stats(env.ctx, "karate", {"model-exact", "model-ghost"});
    CHECK(rc == 1);
    const std::string csv = slurp(env.ctx.out_dir / "stats.csv");
    CHECK(csv.find("# failed: model-ghost") != std::string::npos);
    CHECK(csv.find("model-exact,34,78") != std::string::npos);
}

TEST_CASE("stats output is deterministic") {
    Env env("stats_det");
    CommandContext ctx1 = env.ctx, ctx2 = env.ctx;
    ctx1.out_dir = env.root / "out1";
    ctx2.out_dir = env.root / "out2";
    REQUIRE(cmd_stats(ctx1, "karate") == 0);
    REQUIRE(cmd_stats(ctx2, "karate") == 0);
    CHECK(slurp(ctx1.out_dir / "stats.csv") == slurp(ctx2.out_dir / "stats.csv"));
    CHECK(slurp(ctx1.out_dir / "stats.json") == slurp(ctx2.out_dir / "stats.json"));
}

TEST_CASE("diff: identity, one-indexed alignment, added and missing edges") {
    Env env("diff");

    // identity fixture: all empty diffs
    REQUIRE(cmd_diff(env.ctx, "model-exact", "karate") == 0);
    CHECK(slurp(env.ctx.out_dir / "diff_added.edges").empty());
    CHECK(slurp(env.ctx.out_dir / "diff_missing.edges").empty());
    CHECK(lines_of(slurp(env.ctx.out_dir / "diff_intersection.edges")).size() == 78);

    // 1-indexed output aligns onto the 0-indexed reference
    CommandContext ctx1 = env.ctx;
    ctx1.out_dir = env.root / "out_oneidx";
    REQUIRE(cmd_diff(ctx1, "model-oneidx", "karate") == 0);
    CHECK(slurp(ctx1.out_dir / "diff_added.edges").empty());
    CHECK(slurp(ctx1.out_dir / "diff_missing.edges").empty());

    // plus-two fixture: two added lines
    CommandContext ctx2 = env.ctx;
    ctx2.out_dir = env.root / "out_plus2";
    REQUIRE(cmd_diff(ctx2, "model-plus2", "karate") == 0);
    CHECK(lines_of(slurp(ctx2.out_dir / "diff_added.edges")).size() == 2);
    CHECK(slurp(ctx2.out_dir / "diff_missing.edges").empty());

    // minus-one fixture: one missing line
    CommandContext ctx3 = env.ctx;
    ctx3.out_dir = env.root / "out_minus1";
    REQUIRE(cmd_diff(ctx3, "model-minus1", "karate") == 0);
    CHECK(slurp(ctx3.out_dir / "diff_added.edges").empty());
    CHECK(lines_of(slurp(ctx3.out_dir / "diff_missing.edges")).size() == 1);

    // DOT file styles added edges distinctly
    const std::string dot = slurp(ctx2.out_dir / "diff.dot");
    CHECK(dot.find("graph diff {") != std::string::npos);
    CHECK(dot.find("color=red") != std::string::npos);

    // unusable transcript is an error
    CHECK(cmd_diff(env.ctx, "model-refusal", "karate") == 1);
    CHECK(cmd_diff(env.ctx, "model-ghost", "karate") == 1);
}

TEST_CASE("gad: exact fixtures rank first with (0, 0); one-edit fixtures score (1, 0)") {
    Env env("gad");
    const int rc = cmd_gad(env.ctx, {"atlas-exact", "atlas-oneedit"}, 5);
    CHECK(rc == 0);

    const auto lines = lines_of(slurp(env.ctx.out_dir / "gad_ranking.csv"));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "rank,model_id,mean,std");
    CHECK(lines[1] == "1,atlas-exact,0.00,0.00");
    CHECK(lines[2] == "2,atlas-oneedit,1.00,0.00");

    const auto j = nlohmann::json::parse(slurp(env.ctx.out_dir / "gad_scores.json"));
    CHECK(j.at("indices") == nlohmann::json({3, 6, 7, 13, 15}));
    CHECK(j.at("std_kind") == "population");
    for (const auto& score : j.at("scores")) {
        CHECK(score.at("resolution") == 5);
        for (const auto& [index, r] : score.at("per_graph").items()) {
            CHECK(r.at("exact") == true);
            if (score.at("model_id") == "atlas-oneedit") CHECK(r.at("distance") == 1);
        }
    }
}

TEST_CASE("gad: ranking ties break on model id") {
    Env env("gad_tie");
    REQUIRE(cmd_gad(env.ctx, {"atlas-exact-b", "atlas-exact"}, 5) == 0);
    const auto lines = lines_of(slurp(env.ctx.out_dir / "gad_ranking.csv"));
    REQUIRE(lines.size() == 3);
    CHECK(lines[1] == "1,atlas-exact,0.00,0.00");
    CHECK(lines[2] == "2,atlas-exact-b,0.00,0.00");
}

TEST_CASE("gad: a starved search budget yields flagged inexact upper bounds") {
    Env env("gad_budget");
    REQUIRE(cmd_gad(env.ctx, {"atlas-exact"}, 5, 1) == 0);
    const auto j = nlohmann::json::parse(slurp(env.ctx.out_dir / "gad_scores.json"));
    CHECK(j.at("expansion_budget") == 1);
    bool any_inexact = false;
    for (const auto& [index, r] : j.at("scores").at(0).at("per_graph").items())
        any_inexact |= (r.at("exact") == false);
    CHECK(any_inexact);
    CHECK(j.at("scores").at(0).at("mean").get<double>() > 0.0);  // trivial upper bounds
}

TEST_CASE("gad: resolution 1 gives a single-distance score with zero std") {
    Env env("gad_res1");
    REQUIRE(cmd_gad(env.ctx, {"atlas-oneedit"}, 1) == 0);
    const auto j = nlohmann::json::parse(slurp(env.ctx.out_dir / "gad_scores.json"));
    CHECK(j.at("indices") == nlohmann::json({3}));
    CHECK(j.at("scores").at(0).at("mean") == 1.0);
    CHECK(j.at("scores").at(0).at("std") == 0.0);
}

TEST_CASE("gad: models with missing transcripts fail; others proceed") {
    Env env("gad_partial");
    const int rc = cmd_gad(env.ctx, {"atlas-exact", "atlas-partial"}, 5);
    CHECK(rc == 1);
    const std::string csv = slurp(env.ctx.out_dir / "gad_ranking.csv");
    CHECK(csv.find("1,atlas-exact,0.00,0.00") != std::string::npos);
    CHECK(csv.find("# failed: atlas-partial") != std::string::npos);
}

TEST_CASE("rank-compare: identity, reversal, and id mismatch") {
    Env env("rank");
    const fs::path a = env.root / "a.csv";
    const fs::path b = env.root / "b.csv";
    const fs::path c = env.root / "c.csv";
    std::ofstream(a) << "rank,model_id,mean\n1,m1,0.0\n2,m2,1.0\n3,m3,2.0\n";
    std::ofstream(b) << "model_id\nm3\nm2\nm1\n";
    std::ofstream(c) << "model_id\nm1\nm4\nm3\n";

    REQUIRE(cmd_rank_compare(env.ctx, a, a) == 0);
    auto j = nlohmann::json::parse(slurp(env.ctx.out_dir / "rank_compare.json"));
    CHECK(j.at("spearman") == 1.0);

    REQUIRE(cmd_rank_compare(env.ctx, a, b) == 0);
    j = nlohmann::json::parse(slurp(env.ctx.out_dir / "rank_compare.json"));
    CHECK(j.at("spearman") == -1.0);

    CHECK_THROWS_AS(cmd_rank_compare(env.ctx, a, c), std::invalid_argument);
}

TEST_CASE("spectral: identity first at 0.0, others strictly positive, sorted") {
    Env env("spectral");
    REQUIRE(cmd_spectral(env.ctx, "karate", {"model-exact", "model-minus1", "model-plus2"}) == 0);
    const auto lines = lines_of(slurp(env.ctx.out_dir / "spectral.csv"));
    REQUIRE(lines.size() >= 5);
    CHECK(lines[0] == "model,spectral_distance");
    CHECK(lines[1] == "reference:karate,0.00");
    CHECK(lines[2] == "model-exact,0.00");

    const auto j = nlohmann::json::parse(slurp(env.ctx.out_dir / "spectral.json"));
    double prev = -1.0;
    for (size_t i = 1; i < j.at("rows").size(); ++i) {
        const double d = j.at("rows").at(i).at("spectral_distance").get<double>();
        CHECK(d >= prev);
        prev = d;
    }
    CHECK(j.at("rows").at(1).at("spectral_distance").get<double>() == 0.0);
    CHECK(j.at("rows").at(2).at("spectral_distance").get<double>() > 0.0);
    CHECK(j.at("metadata").at("matrix") == "adjacency");
}

TEST_CASE("embed: signature rows and pairwise distances") {
    Env env("embed");
    REQUIRE(cmd_embed(env.ctx, "karate", {"model-exact", "model-exact-copy", "model-tiny"}) == 0);

    const auto sig_lines = lines_of(slurp(env.ctx.out_dir / "signatures.csv"));
    REQUIRE(sig_lines.size() == 5);  // header + reference + 3 models
    CHECK(sig_lines[0].rfind("graph,0.01,", 0) == 0);
    CHECK(sig_lines[1].rfind("reference:karate,", 0) == 0);

    const auto dist_lines = lines_of(slurp(env.ctx.out_dir / "signature_distances.csv"));
    REQUIRE(dist_lines.size() == 5);
    CHECK(dist_lines[0] == "graph,reference:karate,model-exact,model-exact-copy,model-tiny");

    // duplicated graph: zero distance; reference vs single node: positive
    const auto row = [&](const std::string& label) -> std::vector<std::string> {
        for (const auto& line : dist_lines)
            if (line.rfind(label + ",", 0) == 0) {
                std::vector<std::string> fields;
                std::stringstream ss(line);
                std::string f;
                while (std::getline(ss, f, ',')) fields.push_back(f);
                return fields;
            }
        REQUIRE(false);
        return {};
    };
    const auto exact_row = row("model-exact");
    CHECK(exact_row.at(2) == "0");   // vs itself
    CHECK(exact_row.at(3) == "0");   // vs identical copy
    const auto ref_row = row("reference:karate");
    CHECK(std::stod(ref_row.at(4)) > 0.0);  // vs single-node graph
}

TEST_CASE("embed: single graph gives one signature row") {
    Env env("embed_single");
    REQUIRE(cmd_embed(env.ctx, "atlas:50") == 0);
    const auto sig_lines = lines_of(slurp(env.ctx.out_dir / "signatures.csv"));
    REQUIRE(sig_lines.size() == 2);
    CHECK(sig_lines[1].rfind("reference:atlas:50,", 0) == 0);
}

TEST_CASE("fetch --replay over the fixture store touches no network") {
    Env env("fetch_replay");
    const int rc = cmd_fetch(env.ctx, {"model-exact"}, {"karate"}, true);
    CHECK(rc == 0);
    const auto manifest = nlohmann::json::parse(slurp(env.ctx.out_dir / "manifest.json"));
    CHECK(manifest.at("replay") == true);
    CHECK(manifest.at("new_fetches") == 0);
    REQUIRE(manifest.at("entries").size() == 1);
    CHECK(manifest.at("entries").at(0).at("cached") == true);
    CHECK(manifest.at("entries").at(0).at("classification") == "edge_list");
    CHECK(manifest.at("entries").at(0).at("cache_key") ==
          cache_key("model-exact", render_prompt(Catalog::load(env.ctx.data_dir), "karate")));
}

TEST_CASE("fetch: unknown target recorded per-pair, batch continues") {
    Env env("fetch_unknown");
    const int rc = cmd_fetch(env.ctx, {"model-exact"}, {"nope", "karate"}, true);
    CHECK(rc == 1);
    const auto manifest = nlohmann::json::parse(slurp(env.ctx.out_dir / "manifest.json"));
    REQUIRE(manifest.at("entries").size() == 2);
    // entries are sorted by (model, target); karate precedes nope
    CHECK(manifest.at("entries").at(0).at("classification") == "edge_list");
    CHECK(manifest.at("entries").at(1).contains("error"));
}

TEST_CASE("fetch: replay miss is a per-pair error") {
    Env env("fetch_miss");
    const int rc = cmd_fetch(env.ctx, {"model-ghost"}, {"karate"}, true);
    CHECK(rc == 1);
    const auto manifest = nlohmann::json::parse(slurp(env.ctx.out_dir / "manifest.json"));
    CHECK(manifest.at("entries").at(0).contains("error"));
}
