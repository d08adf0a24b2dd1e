#include "graphaudit/ground_truth.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphaudit/edgelist_io.hpp"

namespace graphaudit {

namespace {

const std::map<std::string, std::string> kDisplayNames = {
    {"karate", "Zachary's karate club"},
    {"lesmis", "Les Misérables"},
};

}  // namespace

Catalog Catalog::load(const std::filesystem::path& data_dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(data_dir))
        throw std::runtime_error("ground-truth data directory not found: " + data_dir.string());

    Catalog catalog;
    for (const auto& entry : fs::directory_iterator(data_dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".edges") continue;
        const std::string name = entry.path().stem().string();
        catalog.named_.emplace(name, from_edge_list(read_edge_list_file(entry.path())).graph);
        auto it = kDisplayNames.find(name);
        catalog.display_names_.emplace(name, it != kDisplayNames.end() ? it->second : name);
    }
    const fs::path atlas_dir = data_dir / "atlas";
    if (fs::is_directory(atlas_dir)) {
        for (const auto& entry : fs::directory_iterator(atlas_dir)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".edges") continue;
            const int index = std::stoi(entry.path().stem().string());
            catalog.atlas_.emplace(index, from_edge_list(read_edge_list_file(entry.path())).graph);
        }
    }
    return catalog;
}

bool Catalog::has(const std::string& key) const {
    if (key.rfind("atlas:", 0) == 0) {
        try {
            return atlas_.count(std::stoi(key.substr(6))) > 0;
        } catch (const std::exception&) {
            return false;
        }
    }
    return named_.count(key) > 0;
}

const Graph& Catalog::get(const std::string& key) const {
    if (key.rfind("atlas:", 0) == 0) {
        try {
            auto it = atlas_.find(std::stoi(key.substr(6)));
            if (it != atlas_.end()) return it->second;
        } catch (const std::exception&) {
        }
    } else {
        auto it = named_.find(key);
        if (it != named_.end()) return it->second;
    }
    std::string msg = "unknown ground-truth key `" + key + "`; available:";
    for (const auto& k : keys()) msg += " " + k;
    throw std::out_of_range(msg);
}

const std::string& Catalog::display_name(const std::string& key) const {
    auto it = display_names_.find(key);
    if (it == display_names_.end())
        throw std::out_of_range("no display name for key `" + key + "`");
    return it->second;
}

std::vector<int> Catalog::atlas_indices() const {
    std::vector<int> indices;
    indices.reserve(atlas_.size());
    for (const auto& [index, g] : atlas_) indices.push_back(index);
    return indices;
}

std::vector<int> Catalog::atlas_selection(int resolution) const {
    std::vector<int> connected;
    for (const auto& [index, g] : atlas_)
        if (connected_components(g).size() == 1) connected.push_back(index);
    if (resolution < 1 || resolution > static_cast<int>(connected.size()))
        throw std::invalid_argument("atlas resolution must be in 1.." +
                                    std::to_string(connected.size()) + ", got " +
                                    std::to_string(resolution));
    connected.resize(static_cast<size_t>(resolution));
    return connected;
}

std::vector<std::string> Catalog::keys() const {
    std::vector<std::string> out;
    for (const auto& [name, g] : named_) out.push_back(name);
    for (const auto& [index, g] : atlas_) out.push_back("atlas:" + std::to_string(index));
    return out;
}

}  // namespace graphaudit
