#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

#include "graphaudit/ground_truth.hpp"
#include "graphaudit/transcript.hpp"

namespace graphaudit {

struct EndpointConfig {
    std::string base_url;      // absolute, e.g. https://api.example.com/v1
    std::string model_id;
    std::string api_key_env;   // name of the environment variable holding the key
    std::optional<double> temperature;  // absent = provider default
    std::optional<int> max_tokens;
    double request_timeout_s = 60.0;
    int max_retries = 3;
    double min_request_interval_s = 0.0;
    double backoff_base_s = 1.0;  // exponential backoff: base * 2^attempt
};

/// Renders the prompt for a catalog target: named graphs use the quoted-name
/// form, atlas targets the atlas-index form. Throws on unknown targets.
std::string render_prompt(const Catalog& catalog, const std::string& target_key);

struct FetchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FetchMode { Live, Replay };

struct FetchResult {
    Transcript transcript;
    bool cache_hit = false;
    int retries = 0;
};

/// Chat-completions client for one endpoint. Sends a single user message per
/// request, stores the raw content byte-exact, retries throttling and
/// transport errors with exponential backoff, and serializes its own requests
/// by min_request_interval. Replay mode never touches the network.
class LlmClient {
public:
    explicit LlmClient(EndpointConfig config) : config_(std::move(config)) {}

    /// Cache-first fetch: a stored (model, prompt) transcript is returned
    /// as-is with zero network calls.
    FetchResult fetch(TranscriptStore& store, const std::string& prompt, FetchMode mode);

    const EndpointConfig& config() const { return config_; }

private:
    EndpointConfig config_;
    std::chrono::steady_clock::time_point last_request_{};
    bool request_sent_ = false;
};

}  // namespace graphaudit
