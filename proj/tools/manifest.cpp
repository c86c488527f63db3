#include "manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <memory>
#include <stdexcept>

#include "pacman/csv.hpp"

namespace pacman::cli {

void to_json(nlohmann::json& j, const OutputDigest& d) {
    j = {{"path", d.path}, {"sha256", d.sha256}, {"bytes", d.bytes}};
}

void from_json(const nlohmann::json& j, OutputDigest& d) {
    j.at("path").get_to(d.path);
    j.at("sha256").get_to(d.sha256);
    j.at("bytes").get_to(d.bytes);
}

void to_json(nlohmann::json& j, const RunManifest& m) {
    j = {{"subcommand", m.subcommand}, {"parameters", m.parameters}, {"tool_version", m.tool_version},
         {"started_at", m.started_at}, {"finished_at", m.finished_at}, {"outputs", m.outputs}};
    j["seed"] = m.has_seed ? nlohmann::json(m.seed) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, RunManifest& m) {
    j.at("subcommand").get_to(m.subcommand);
    m.parameters = j.at("parameters");
    j.at("tool_version").get_to(m.tool_version);
    j.at("started_at").get_to(m.started_at);
    j.at("finished_at").get_to(m.finished_at);
    j.at("outputs").get_to(m.outputs);
    m.has_seed = !j.at("seed").is_null();
    m.seed = m.has_seed ? j.at("seed").get<std::uint64_t>() : 0;
}

std::string sha256_hex(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xF];
    }
    return out;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

OutputDigest digest_file(const std::filesystem::path& path) {
    const std::string content = read_file(path);
    return {path.string(), sha256_hex(content), content.size()};
}

}  // namespace pacman::cli
