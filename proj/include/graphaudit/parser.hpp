#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphaudit/graph.hpp"

namespace graphaudit {

enum class ResponseClass { EdgeList, Refusal, CodeOnly, Empty };

std::string_view to_string(ResponseClass c);

enum class WarningKind { Duplicate, SelfLoop, TruncatedTail, MixedLabelTypes };

std::string_view to_string(WarningKind k);

struct ParseWarning {
    WarningKind kind;
    int count = 0;

    friend bool operator==(const ParseWarning&, const ParseWarning&) = default;
};

/// Detection cue lists are configuration, not code: the behavior classes are
/// fixed but the phrases that signal them vary by provider.
struct ParserConfig {
    std::vector<std::string> refusal_cues = {
        "I don't have access",
        "I cannot provide",
        "as an AI",
    };
    std::vector<std::string> code_only_patterns = {
        "karate_club_graph(",
        "les_miserables_graph(",
        "graph_atlas(",
    };
};

struct ParseResult {
    ResponseClass classification = ResponseClass::Empty;
    LabeledEdgeList edges;
    std::vector<ParseWarning> warnings;

    bool has_warning(WarningKind kind) const;
    int warning_count(WarningKind kind) const;
};

/// Extracts an edge list from free-form model output. Tuples `(a, b)` with
/// integer or quoted-string tokens count only inside a bracket list or a
/// fenced code block; duplicates collapse (unordered) with a warning, a
/// dangling tuple at end of text is dropped with a truncated_tail warning,
/// and order of first occurrence is preserved. Never fails: unusable text
/// yields a non-EdgeList classification instead.
ParseResult extract_edge_list(std::string_view text, const ParserConfig& config = {});

/// Classification only; agrees with extract_edge_list on the same input.
ResponseClass classify_response(std::string_view text, const ParserConfig& config = {});

}  // namespace graphaudit
