#ifndef FSREC_CACHE_HPP
#define FSREC_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

namespace fsrec {

/// SHA-256 of `data` as lowercase hex.
std::string sha256_hex(const std::string& data);

/// One file per entry, named by the digest of the key string. Each file
/// carries the key and a checksum of the payload; a mismatch on either
/// reads as a miss.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;

    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& payload) const;

private:
    std::filesystem::path dir_;
};

} // namespace fsrec

#endif
