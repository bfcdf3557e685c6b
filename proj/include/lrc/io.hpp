#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/builder.hpp"
#include "lrc/codec.hpp"

namespace lrc::io {

using Json = nlohmann::ordered_json;

Json code_to_json(const LrcCode& code);
/// Throws InvalidConfig on malformed input.
LrcCode code_from_json(const Json& j);

/// One row per line, integer encodings separated by commas.
std::string matrix_csv(const Matrix& M);

Json report_to_json(const CodeReport& report);

std::string codeword_csv(std::span<const FieldElement> word);
/// Reads the first non-empty line; `?` marks an erasure.
ErasedWord parse_codeword_csv(const Field& F, const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string backend_name(BackendKind kind);
BackendKind parse_backend(const std::string& name);
/// Accepts simple-poles / high-degree and the short aliases sec3 / sec4.
Construction parse_construction(const std::string& name);

}  // namespace lrc::io
