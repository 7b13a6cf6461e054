#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace bias {

using json = nlohmann::json;

std::vector<json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path, const std::vector<json>& records);
void append_jsonl(const std::filesystem::path& path, const json& record);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

// FNV hash of a file's bytes, for dataset/config fingerprints in manifests.
std::string file_digest(const std::filesystem::path& path);

} // namespace bias
