#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace graphaudit {

/// One model/prompt/response record. response_text is kept byte-exact as
/// received.
struct Transcript {
    std::string model_id;
    std::string prompt;
    std::string response_text;
    std::string fetched_at;  // ISO 8601 UTC
    enum class Source { Live, Replay } source = Source::Live;

    friend bool operator==(const Transcript&, const Transcript&) = default;
};

std::string_view to_string(Transcript::Source s);

/// Collision-resistant digest of (model_id, prompt); byte-exact hashing, so
/// whitespace differences produce distinct keys.
std::string cache_key(const std::string& model_id, const std::string& prompt);

/// JSON-lines transcript store under a directory: one Transcript object per
/// line of transcripts.jsonl, indexed in memory by cache key. Appends go
/// straight to disk (single-writer discipline).
class TranscriptStore {
public:
    /// Opens a store, loading transcripts.jsonl when present. The directory
    /// is created lazily on first append.
    static TranscriptStore open(const std::filesystem::path& dir);

    bool has(const std::string& key) const { return by_key_.count(key) > 0; }
    const Transcript* find(const std::string& key) const;

    /// Appends and indexes one transcript; the key must match
    /// cache_key(model_id, prompt).
    void append(const Transcript& t);

    /// All transcripts keyed by cache key, in key order.
    const std::map<std::string, Transcript>& all() const { return by_key_; }

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path file() const { return dir_ / "transcripts.jsonl"; }

private:
    std::filesystem::path dir_;
    std::map<std::string, Transcript> by_key_;
};

}  // namespace graphaudit
