#include "fsrec/cache.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "fsrec/errors.hpp"

namespace fsrec {

std::string sha256_hex(const std::string& data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    return dir_ / (sha256_hex(key) + ".json");
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto doc = nlohmann::json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    const auto k = doc.find("key");
    const auto p = doc.find("payload");
    const auto c = doc.find("checksum");
    if (k == doc.end() || p == doc.end() || c == doc.end()) return std::nullopt;
    if (!k->is_string() || !p->is_string() || !c->is_string()) return std::nullopt;
    if (k->get<std::string>() != key) return std::nullopt;
    auto payload = p->get<std::string>();
    if (sha256_hex(payload) != c->get<std::string>()) return std::nullopt;
    return payload;
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
    std::filesystem::create_directories(dir_);
    const nlohmann::json doc{{"key", key}, {"payload", payload}, {"checksum", sha256_hex(payload)}};
    const auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp.string());
        out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, target);
}

} // namespace fsrec
