#include "graphaudit/config.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace graphaudit {

std::string_view to_string(SignatureNormalization n) {
    switch (n) {
        case SignatureNormalization::None: return "none";
        case SignatureNormalization::EmptyGraph: return "empty";
        case SignatureNormalization::CompleteGraph: return "complete";
    }
    return "?";
}

ToolkitConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error("config " + path.string() + ": " + e.what());
    }

    ToolkitConfig config;
    for (const auto& e : j.value("endpoints", nlohmann::json::array())) {
        EndpointConfig ep;
        ep.model_id = e.at("model_id").get<std::string>();
        ep.base_url = e.at("base_url").get<std::string>();
        if (ep.base_url.rfind("http://", 0) != 0 && ep.base_url.rfind("https://", 0) != 0)
            throw std::runtime_error("config: base_url for `" + ep.model_id + "` must be absolute");
        ep.api_key_env = e.value("api_key_env", std::string{});
        if (e.contains("temperature")) ep.temperature = e.at("temperature").get<double>();
        if (e.contains("max_tokens")) ep.max_tokens = e.at("max_tokens").get<int>();
        ep.request_timeout_s = e.value("request_timeout_s", ep.request_timeout_s);
        ep.max_retries = e.value("max_retries", ep.max_retries);
        if (ep.max_retries < 0) throw std::runtime_error("config: max_retries must be >= 0");
        ep.min_request_interval_s = e.value("min_request_interval_s", ep.min_request_interval_s);
        ep.backoff_base_s = e.value("backoff_base_s", ep.backoff_base_s);
        config.endpoints.push_back(std::move(ep));
    }
    if (j.contains("parser")) {
        const auto& p = j.at("parser");
        if (p.contains("refusal_cues"))
            config.parser.refusal_cues = p.at("refusal_cues").get<std::vector<std::string>>();
        if (p.contains("code_only_patterns"))
            config.parser.code_only_patterns =
                p.at("code_only_patterns").get<std::vector<std::string>>();
    }
    if (j.contains("signatures")) {
        const std::string norm = j.at("signatures").value("normalization", "none");
        if (norm == "none")
            config.signature_normalization = SignatureNormalization::None;
        else if (norm == "empty")
            config.signature_normalization = SignatureNormalization::EmptyGraph;
        else if (norm == "complete")
            config.signature_normalization = SignatureNormalization::CompleteGraph;
        else
            throw std::runtime_error("config: unknown signature normalization `" + norm + "`");
    }
    return config;
}

const EndpointConfig& endpoint_for(const ToolkitConfig& config, const std::string& model_id) {
    for (const auto& ep : config.endpoints)
        if (ep.model_id == model_id) return ep;
    throw std::runtime_error("no endpoint configured for model `" + model_id + "`");
}

}  // namespace graphaudit
