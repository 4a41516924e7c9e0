#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Compare a computed value against a checked-in golden file. Set
// GEOLIFT_UPDATE_GOLDEN=1 to (re)record.
inline bool golden_check(const std::string& name, const std::string& value,
                         std::string* stored_out = nullptr) {
    const std::string path = std::string(GEOLIFT_GOLDEN_DIR) + "/" + name;
    if (std::getenv("GEOLIFT_UPDATE_GOLDEN")) {
        std::ofstream out(path, std::ios::binary);
        out << value;
        if (stored_out) *stored_out = value;
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (stored_out) *stored_out = buf.str();
    return buf.str() == value;
}
