#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "iotscompat/format.hpp"
#include "iotscompat/model.hpp"

inline iotscompat::Iots load_fixture(const std::string& name) {
    return iotscompat::load_iots(std::string(FIXTURES_DIR) + "/" + name + ".iots");
}

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name + ".iots";
}
