#include "graphaudit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace graphaudit {

std::string_view to_string(ResponseClass c) {
    switch (c) {
        case ResponseClass::EdgeList: return "edge_list";
        case ResponseClass::Refusal: return "refusal";
        case ResponseClass::CodeOnly: return "code_only";
        case ResponseClass::Empty: return "empty";
    }
    return "?";
}

std::string_view to_string(WarningKind k) {
    switch (k) {
        case WarningKind::Duplicate: return "duplicate";
        case WarningKind::SelfLoop: return "self_loop";
        case WarningKind::TruncatedTail: return "truncated_tail";
        case WarningKind::MixedLabelTypes: return "mixed_label_types";
    }
    return "?";
}

bool ParseResult::has_warning(WarningKind kind) const {
    return warning_count(kind) > 0;
}

int ParseResult::warning_count(WarningKind kind) const {
    for (const auto& w : warnings)
        if (w.kind == kind) return w.count;
    return 0;
}

namespace {

struct Token {
    std::string value;
    bool quoted = false;
    size_t end = 0;  // index one past the token in the source text
};

size_t skip_space(std::string_view text, size_t i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return i;
}

// An integer (optional sign) or a quoted string; labels are opaque.
std::optional<Token> parse_token(std::string_view text, size_t i) {
    if (i >= text.size()) return std::nullopt;
    const char c = text[i];
    if (c == '\'' || c == '"') {
        size_t close = text.find(c, i + 1);
        if (close == std::string_view::npos || text.substr(i + 1, close - i - 1).find('\n') != std::string_view::npos)
            return std::nullopt;
        return Token{std::string(text.substr(i + 1, close - i - 1)), true, close + 1};
    }
    size_t j = i;
    if (j < text.size() && text[j] == '-') ++j;
    size_t digits_start = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == digits_start) return std::nullopt;
    return Token{std::string(text.substr(i, j - i)), false, j};
}

struct Tuple {
    Token first;
    Token second;
    size_t end = 0;
};

// `( token , token )` with arbitrary interior whitespace (newlines included).
std::optional<Tuple> parse_tuple(std::string_view text, size_t open) {
    size_t i = skip_space(text, open + 1);
    auto a = parse_token(text, i);
    if (!a) return std::nullopt;
    i = skip_space(text, a->end);
    if (i >= text.size() || text[i] != ',') return std::nullopt;
    i = skip_space(text, i + 1);
    auto b = parse_token(text, i);
    if (!b) return std::nullopt;
    i = skip_space(text, b->end);
    if (i >= text.size() || text[i] != ')') return std::nullopt;
    return Tuple{*a, *b, i + 1};
}

// True when the text from `open` to EOF still looks like the prefix of a
// tuple: an opening paren followed only by token material and a comma.
bool is_dangling_tuple(std::string_view text, size_t open) {
    size_t i = skip_space(text, open + 1);
    if (i >= text.size()) return true;
    auto a = parse_token(text, i);
    if (!a) {
        // allow an unterminated quoted token at EOF
        const char c = text[i];
        if ((c == '\'' || c == '"') && text.find(c, i + 1) == std::string_view::npos) return true;
        return false;
    }
    i = skip_space(text, a->end);
    if (i >= text.size()) return true;
    if (text[i] != ',') return false;
    i = skip_space(text, i + 1);
    if (i >= text.size()) return true;
    auto b = parse_token(text, i);
    if (!b) return false;
    return skip_space(text, b->end) >= text.size();
}

// Marks positions inside fenced code blocks (``` ... ```). An unclosed fence
// extends to end of text.
std::vector<char> fence_mask(std::string_view text) {
    std::vector<char> mask(text.size(), 0);
    bool in_fence = false;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        size_t line_end = eol == std::string_view::npos ? text.size() : eol;
        std::string_view line = text.substr(pos, line_end - pos);
        size_t first = line.find_first_not_of(" \t");
        bool fence_line = first != std::string_view::npos && line.substr(first).rfind("```", 0) == 0;
        if (fence_line) {
            in_fence = !in_fence;
        } else if (in_fence) {
            std::fill(mask.begin() + static_cast<long>(pos), mask.begin() + static_cast<long>(line_end), 1);
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return mask;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return false;
    auto lower = [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); };
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end(),
                          [&](char a, char b) { return lower(a) == lower(b); });
    return it != haystack.end();
}

bool is_blank(std::string_view text) {
    return std::all_of(text.begin(), text.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

ParseResult extract_edge_list(std::string_view text, const ParserConfig& config) {
    ParseResult result;
    const std::vector<char> in_fence = fence_mask(text);

    int duplicates = 0;
    int self_loops = 0;
    bool truncated = false;
    bool saw_plain = false;
    bool saw_quoted = false;

    std::set<std::pair<std::string, std::string>> seen;
    int bracket_depth = 0;
    size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '[') {
            ++bracket_depth;
            ++i;
            continue;
        }
        if (c == ']') {
            bracket_depth = std::max(0, bracket_depth - 1);
            ++i;
            continue;
        }
        const bool in_context = bracket_depth > 0 || in_fence[i];
        if (c == '(' && in_context) {
            if (auto tuple = parse_tuple(text, i)) {
                const std::string& a = tuple->first.value;
                const std::string& b = tuple->second.value;
                saw_plain |= !tuple->first.quoted || !tuple->second.quoted;
                saw_quoted |= tuple->first.quoted || tuple->second.quoted;
                auto key = std::minmax(a, b);
                if (!seen.insert(key).second) {
                    ++duplicates;
                } else {
                    if (a == b) ++self_loops;
                    result.edges.push_back({a, b});
                }
                i = tuple->end;
                continue;
            }
            if (is_dangling_tuple(text, i)) {
                truncated = true;
                break;
            }
        }
        ++i;
    }
    if (duplicates > 0) result.warnings.push_back({WarningKind::Duplicate, duplicates});
    if (self_loops > 0) result.warnings.push_back({WarningKind::SelfLoop, self_loops});
    if (truncated) result.warnings.push_back({WarningKind::TruncatedTail, 1});
    if (saw_plain && saw_quoted && !result.edges.empty())
        result.warnings.push_back({WarningKind::MixedLabelTypes, 1});

    if (!result.edges.empty()) {
        result.classification = ResponseClass::EdgeList;
        return result;
    }
    if (is_blank(text)) {
        result.classification = ResponseClass::Empty;
        return result;
    }
    for (const auto& pattern : config.code_only_patterns) {
        if (text.find(pattern) != std::string_view::npos) {
            result.classification = ResponseClass::CodeOnly;
            return result;
        }
    }
    for (const auto& cue : config.refusal_cues) {
        if (contains_ci(text, cue)) {
            result.classification = ResponseClass::Refusal;
            return result;
        }
    }
    // Non-empty text with no extractable list and no recognized cue: nothing
    // usable was found.
    result.classification = ResponseClass::Empty;
    return result;
}

ResponseClass classify_response(std::string_view text, const ParserConfig& config) {
    return extract_edge_list(text, config).classification;
}

}  // namespace graphaudit
