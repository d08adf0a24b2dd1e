#pragma once

#include <filesystem>
#include <vector>

#include "graphaudit/client.hpp"
#include "graphaudit/parser.hpp"
#include "graphaudit/signatures.hpp"

namespace graphaudit {

struct ToolkitConfig {
    std::vector<EndpointConfig> endpoints;
    ParserConfig parser;
    SignatureNormalization signature_normalization = SignatureNormalization::None;
};

/// Loads a JSON config file: an `endpoints` array of endpoint objects plus
/// optional `parser` cue lists and a `signatures.normalization` knob.
/// API keys are never read from the file, only the names of environment
/// variables that hold them.
ToolkitConfig load_config(const std::filesystem::path& path);

/// Endpoint entry for a model id; throws when the config has none.
const EndpointConfig& endpoint_for(const ToolkitConfig& config, const std::string& model_id);

std::string_view to_string(SignatureNormalization n);

}  // namespace graphaudit
