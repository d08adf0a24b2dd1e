#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace graphaudit {

/// Options shared by every subcommand. Analysis commands read only the
/// transcript store and the bundled data; fetch is the single writer.
struct CommandContext {
    std::filesystem::path store_dir = "store";
    std::filesystem::path out_dir = "out";
    std::filesystem::path data_dir;
    std::optional<std::filesystem::path> config_file;
    std::uint64_t seed = 0;
};

// Exit codes: 0 success, 1 partial (some models failed), 2 usage/config
// error (thrown as std::invalid_argument / std::out_of_range and mapped by
// the CLI).

/// One transcript per (model, target), cache-first; per-pair errors are
/// recorded in the manifest without aborting the batch.
int cmd_fetch(const CommandContext& ctx, const std::vector<std::string>& models,
              const std::vector<std::string>& targets, bool replay);

/// Per-model topology statistics against a reference graph, sorted ascending
/// by degree-sequence distance with the reference row first. Non-edge-list
/// transcripts land in a skipped section.
int cmd_stats(const CommandContext& ctx, const std::string& reference,
              const std::vector<std::string>& models = {});

/// Intersection / added / missing edge files plus a DOT rendering for one
/// model against a reference.
int cmd_diff(const CommandContext& ctx, const std::string& model, const std::string& reference);

/// Graph-atlas distance per model over the first `resolution` connected
/// atlas graphs, plus the ranking table.
int cmd_gad(const CommandContext& ctx, const std::vector<std::string>& models, int resolution,
            std::uint64_t expansion_budget = 10'000'000);

/// Spearman rank correlation between a computed ranking CSV and a reference
/// ranking CSV over the same model ids.
int cmd_rank_compare(const CommandContext& ctx, const std::filesystem::path& ranking_csv,
                     const std::filesystem::path& reference_csv);

/// Spectral distances of model outputs to a reference, sorted ascending.
int cmd_spectral(const CommandContext& ctx, const std::string& reference,
                 const std::vector<std::string>& models = {});

/// Heat-trace signature matrix and pairwise signature distances for the
/// reference graph plus model outputs.
int cmd_embed(const CommandContext& ctx, const std::string& reference,
              const std::vector<std::string>& models = {});

}  // namespace graphaudit
