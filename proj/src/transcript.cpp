#include "graphaudit/transcript.hpp"

#include <fstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "json.hpp"

namespace graphaudit {

std::string_view to_string(Transcript::Source s) {
    return s == Transcript::Source::Live ? "live" : "replay";
}

std::string cache_key(const std::string& model_id, const std::string& prompt) {
    // Length-prefixed concatenation keeps (ab, c) and (a, bc) distinct.
    std::string payload = std::to_string(model_id.size()) + ':' + model_id + ':' + prompt;
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("cache_key: SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

namespace {

nlohmann::json to_json(const Transcript& t) {
    return {
        {"model_id", t.model_id},
        {"prompt", t.prompt},
        {"response_text", t.response_text},
        {"fetched_at", t.fetched_at},
        {"source", std::string(to_string(t.source))},
    };
}

Transcript from_json(const nlohmann::json& j) {
    Transcript t;
    t.model_id = j.at("model_id").get<std::string>();
    t.prompt = j.at("prompt").get<std::string>();
    t.response_text = j.at("response_text").get<std::string>();
    t.fetched_at = j.at("fetched_at").get<std::string>();
    const std::string source = j.at("source").get<std::string>();
    if (source == "live")
        t.source = Transcript::Source::Live;
    else if (source == "replay")
        t.source = Transcript::Source::Replay;
    else
        throw std::runtime_error("transcript: unknown source `" + source + "`");
    return t;
}

}  // namespace

TranscriptStore TranscriptStore::open(const std::filesystem::path& dir) {
    TranscriptStore store;
    store.dir_ = dir;
    std::ifstream in(store.file(), std::ios::binary);
    if (!in) return store;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            Transcript t = from_json(nlohmann::json::parse(line));
            store.by_key_[cache_key(t.model_id, t.prompt)] = std::move(t);
        } catch (const std::exception& e) {
            throw std::runtime_error("transcript store " + store.file().string() + " line " +
                                     std::to_string(line_no) + ": " + e.what());
        }
    }
    return store;
}

const Transcript* TranscriptStore::find(const std::string& key) const {
    auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : &it->second;
}

void TranscriptStore::append(const Transcript& t) {
    std::filesystem::create_directories(dir_);
    std::ofstream out(file(), std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot append to transcript store: " + file().string());
    out << to_json(t).dump() << '\n';
    out.flush();
    by_key_[cache_key(t.model_id, t.prompt)] = t;
}

}  // namespace graphaudit
