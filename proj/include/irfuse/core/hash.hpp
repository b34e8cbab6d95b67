#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace irfuse::core {

// SHA-1 over "blob <len>\0" + content, like git's object ids.
std::string sha1_hex(const void* data, std::size_t len);
std::string git_blob_hash(const std::string& content);
std::string git_blob_hash_file(const std::filesystem::path& path);

}  // namespace irfuse::core
