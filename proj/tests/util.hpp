#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tg {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string fixture_path(const std::string& rel) {
    return std::string(FIXTURE_DIR) + "/" + rel;
}

}  // namespace tg
