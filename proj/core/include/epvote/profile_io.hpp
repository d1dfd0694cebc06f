#pragma once

#include <iosfwd>
#include <string>

#include "epvote/profile.hpp"

namespace epvote {

// Text format:
//   # comment line
//   candidates: a b(3) C(*)
//   21: a b x
//   1/2: a c
// Candidate capacity defaults to 1; (m) sets a finite capacity, (*) a party
// list with unlimited capacity. Ballot weights are nonnegative decimals or
// fractions. parse -> serialize -> parse is the identity.
Profile parse_profile(std::istream& in);
Profile parse_profile_string(const std::string& text);
Profile parse_profile_file(const std::string& path);

std::string serialize_profile(const Profile& profile);

}  // namespace epvote
