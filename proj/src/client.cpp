#include "graphaudit/client.hpp"

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <thread>

#include "graphaudit/http.hpp"
#include "json.hpp"

namespace graphaudit {

std::string render_prompt(const Catalog& catalog, const std::string& target_key) {
    if (target_key.rfind("atlas:", 0) == 0) {
        if (!catalog.has(target_key)) catalog.get(target_key);  // throws with key listing
        return "Provide me with graph " + target_key.substr(6) +
               " from the Graph Atlas, as a python edge list; print it";
    }
    catalog.get(target_key);
    return "Provide me the so called \"" + catalog.display_name(target_key) +
           "\" graph as a python edge list; print it";
}

namespace {

std::string now_iso8601_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Splits an absolute URL into origin (scheme://host[:port]) and path prefix.
std::pair<std::string, std::string> split_url(const std::string& url) {
    const size_t scheme = url.find("://");
    if (scheme == std::string::npos)
        throw FetchError("base_url must be absolute (http:// or https://): " + url);
    const size_t path = url.find('/', scheme + 3);
    if (path == std::string::npos) return {url, ""};
    std::string prefix = url.substr(path);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    return {url.substr(0, path), prefix};
}

bool retryable_status(int status) {
    return status == 429 || status >= 500;
}

}  // namespace

FetchResult LlmClient::fetch(TranscriptStore& store, const std::string& prompt, FetchMode mode) {
    const std::string key = cache_key(config_.model_id, prompt);
    if (const Transcript* cached = store.find(key)) return {*cached, true, 0};
    if (mode == FetchMode::Replay)
        throw FetchError("replay miss: no cached transcript for model `" + config_.model_id +
                         "` and this prompt");

    const char* api_key = config_.api_key_env.empty() ? nullptr : std::getenv(config_.api_key_env.c_str());
    if (api_key == nullptr || *api_key == '\0')
        throw FetchError("auth: environment variable `" + config_.api_key_env +
                         "` is not set for model `" + config_.model_id + "`");

    auto [origin, path_prefix] = split_url(config_.base_url);
    httplib::Client http(origin);
    const auto timeout = std::chrono::duration<double>(config_.request_timeout_s);
    http.set_connection_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(timeout));
    http.set_read_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(timeout));
    http.set_write_timeout(std::chrono::duration_cast<std::chrono::milliseconds>(timeout));

    nlohmann::json body = {
        {"model", config_.model_id},
        {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
    };
    if (config_.temperature) body["temperature"] = *config_.temperature;
    if (config_.max_tokens) body["max_tokens"] = *config_.max_tokens;
    const std::string payload = body.dump();
    const httplib::Headers headers = {{"Authorization", "Bearer " + std::string(api_key)}};
    const std::string path = path_prefix + "/chat/completions";

    int retries = 0;
    for (;;) {
        if (request_sent_ && config_.min_request_interval_s > 0) {
            const auto min_gap = std::chrono::duration<double>(config_.min_request_interval_s);
            const auto elapsed = std::chrono::steady_clock::now() - last_request_;
            if (elapsed < min_gap)
                std::this_thread::sleep_for(min_gap - elapsed);
        }
        last_request_ = std::chrono::steady_clock::now();
        request_sent_ = true;

        httplib::Result res = http.Post(path, headers, payload, "application/json");
        std::string failure;
        if (!res) {
            failure = "transport error: " + httplib::to_string(res.error());
        } else if (res->status == 401 || res->status == 403) {
            throw FetchError("auth failure (HTTP " + std::to_string(res->status) + ") for model `" +
                             config_.model_id + "`");
        } else if (res->status == 200) {
            std::string content;
            try {
                nlohmann::json reply = nlohmann::json::parse(res->body);
                content = reply.at("choices").at(0).at("message").at("content").get<std::string>();
            } catch (const std::exception& e) {
                throw FetchError("malformed endpoint reply (missing content field): " +
                                 std::string(e.what()));
            }
            Transcript t;
            t.model_id = config_.model_id;
            t.prompt = prompt;
            t.response_text = std::move(content);
            t.fetched_at = now_iso8601_utc();
            t.source = Transcript::Source::Live;
            store.append(t);
            return {std::move(t), false, retries};
        } else if (retryable_status(res->status)) {
            failure = "throttled or server error: HTTP " + std::to_string(res->status);
        } else {
            throw FetchError("HTTP " + std::to_string(res->status) + " from endpoint for model `" +
                             config_.model_id + "`");
        }

        if (retries >= config_.max_retries)
            throw FetchError("retries exhausted after " + std::to_string(retries) +
                             " retries; last failure: " + failure);
        const double delay_s = config_.backoff_base_s * std::pow(2.0, retries);
        std::this_thread::sleep_for(std::chrono::duration<double>(delay_s));
        ++retries;
    }
}

}  // namespace graphaudit
