#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace pacman::cli {

struct OutputDigest {
    std::string path;
    std::string sha256;
    std::uintmax_t bytes = 0;

    friend bool operator==(const OutputDigest&, const OutputDigest&) = default;
};

// Provenance record written next to a run's outputs.
struct RunManifest {
    std::string subcommand;
    nlohmann::json parameters = nlohmann::json::object();
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::string tool_version;
    std::string started_at;   // ISO 8601, UTC
    std::string finished_at;
    std::vector<OutputDigest> outputs;

    friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

void to_json(nlohmann::json& j, const OutputDigest& d);
void from_json(const nlohmann::json& j, OutputDigest& d);
void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

std::string sha256_hex(std::string_view bytes);
std::string utc_timestamp();
OutputDigest digest_file(const std::filesystem::path& path);

}  // namespace pacman::cli
