#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "graphaudit/graph.hpp"

namespace graphaudit {

/// Bundled reference graphs: named datasets plus graph-atlas entries, loaded
/// from a data directory laid out as `<name>.edges` and `atlas/<index>.edges`.
/// Read-only after load; safe to share.
class Catalog {
public:
    static Catalog load(const std::filesystem::path& data_dir);

    bool has(const std::string& key) const;

    /// Catalog keys are dataset names ("karate", "lesmis") or "atlas:<index>".
    /// Throws std::out_of_range listing the available keys on unknown names.
    const Graph& get(const std::string& key) const;

    /// Quoted graph name used when prompting for a named dataset.
    const std::string& display_name(const std::string& key) const;

    /// Bundled atlas indices, ascending.
    std::vector<int> atlas_indices() const;

    /// First `resolution` connected atlas graphs in atlas-index order.
    /// Throws std::invalid_argument when resolution is < 1 or exceeds the
    /// bundled connected entries.
    std::vector<int> atlas_selection(int resolution) const;

    std::vector<std::string> keys() const;

private:
    std::map<std::string, Graph> named_;
    std::map<std::string, std::string> display_names_;
    std::map<int, Graph> atlas_;
};

}  // namespace graphaudit
