#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fairpeano/errors.hpp"

namespace fairpeano {

// All file output goes through here: write the full content to a sibling
// temp file, then rename over the target, so a crash or error mid-write
// never leaves a truncated file at the destination.
inline void write_text_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot open for writing: " + tmp.string());
        out.write(content.data(), (std::streamsize)content.size());
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw InputError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw InputError("cannot move output into place: " + path);
    }
}

inline std::string read_file_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace fairpeano
