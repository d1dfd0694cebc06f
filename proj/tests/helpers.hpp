#pragma once

#include <string>

#include "epvote/profile_io.hpp"
#include "epvote/rational.hpp"

namespace helpers {

inline std::string fixture_path(const std::string& name) {
    return std::string(EPVOTE_FIXTURE_DIR) + "/" + name;
}

inline epvote::Profile load_fixture(const std::string& name) {
    return epvote::parse_profile_file(fixture_path(name));
}

inline epvote::Rational rat(const std::string& text) {
    return epvote::parse_rational(text);
}

}  // namespace helpers
