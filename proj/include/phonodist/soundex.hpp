#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phonodist/errors.hpp"

namespace phonodist {
namespace soundex {

constexpr int kIgnored = 0;

/// Letter-to-digit table. Injectable so variants (e.g. Daitch-Motokoff)
/// can be registered; only the Russell table ships.
struct Table {
    std::array<int, 26> digit{};  // 0 = ignored, otherwise 1..6

    int digit_for(char letter) const;
};

// The Russell coding: B,P,F,V=1; C,S,G,J,K,Q,X,Z=2; D,T=3; L=4; M,N=5;
// R=6; A,E,I,O,U,Y,W,H ignored.
const Table& russell_table();

/// Four characters: an uppercase initial plus three digits in 0..6,
/// zero-padded as a suffix.
struct Code {
    std::string value;  // e.g. "J400"

    bool operator==(const Code&) const = default;
    auto operator<=>(const Code&) const = default;
};

// True iff s matches [A-Z][0-6]{3} and every '0' digit is followed only
// by '0' digits.
bool is_well_formed(std::string_view s);

// Encodes a name. Case-insensitive; ASCII non-letters are stripped
// first. Throws ParseError if no letters remain or on non-ASCII bytes.
Code encode(std::string_view name, const Table& table = russell_table());

// Number of distinct four-character codes [A-Z][0-6]{3}, counted by
// enumeration.
long code_space_size();

struct CollisionClass {
    Code code;
    std::vector<std::string> members;  // insertion order, deduplicated
};

// Groups names by code, largest class first (ties by code).
std::vector<CollisionClass> collisions(const std::vector<std::string>& names,
                                       const Table& table = russell_table());

}  // namespace soundex
}  // namespace phonodist
