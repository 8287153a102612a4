#include "phonodist/soundex.hpp"

#include <algorithm>
#include <cctype>

namespace phonodist {
namespace soundex {

int Table::digit_for(char letter) const {
    return digit[static_cast<unsigned char>(letter) - 'A'];
}

const Table& russell_table() {
    static const Table table = [] {
        Table t{};
        auto set = [&t](std::string_view letters, int d) {
            for (char c : letters) t.digit[c - 'A'] = d;
        };
        set("BPFV", 1);
        set("CSGJKQXZ", 2);
        set("DT", 3);
        set("L", 4);
        set("MN", 5);
        set("R", 6);
        // A,E,I,O,U,Y,W,H stay 0 (ignored)
        return t;
    }();
    return table;
}

bool is_well_formed(std::string_view s) {
    if (s.size() != 4) return false;
    if (s[0] < 'A' || s[0] > 'Z') return false;
    bool padding = false;
    for (std::size_t i = 1; i < 4; ++i) {
        char c = s[i];
        if (c < '0' || c > '6') return false;
        if (c == '0') padding = true;
        else if (padding) return false;  // digit after a pad zero
    }
    return true;
}

Code encode(std::string_view name, const Table& table) {
    std::string letters;
    for (char c : name) {
        auto uc = static_cast<unsigned char>(c);
        if (uc >= 0x80) {
            throw ParseError("non-ASCII letter in name: '" + std::string(name) + "'");
        }
        if (std::isalpha(uc)) letters.push_back(static_cast<char>(std::toupper(uc)));
    }
    if (letters.empty()) {
        throw ParseError("no letters to encode in '" + std::string(name) + "'");
    }
    std::string out(1, letters[0]);
    // The initial letter participates in run collapsing; an ignored
    // letter breaks the run, so both surrounding letters code.
    int prev = table.digit_for(letters[0]);
    for (std::size_t i = 1; i < letters.size() && out.size() < 4; ++i) {
        int d = table.digit_for(letters[i]);
        if (d == kIgnored) {
            prev = kIgnored;
            continue;
        }
        if (d != prev) out.push_back(static_cast<char>('0' + d));
        prev = d;
    }
    out.resize(4, '0');
    return Code{out};
}

long code_space_size() {
    long count = 0;
    for (char initial = 'A'; initial <= 'Z'; ++initial) {
        for (char d1 = '0'; d1 <= '6'; ++d1) {
            for (char d2 = '0'; d2 <= '6'; ++d2) {
                for (char d3 = '0'; d3 <= '6'; ++d3) {
                    (void)initial;
                    ++count;
                }
            }
        }
    }
    return count;
}

std::vector<CollisionClass> collisions(const std::vector<std::string>& names,
                                       const Table& table) {
    std::map<Code, std::vector<std::string>> groups;
    for (const auto& name : names) {
        Code code;
        try {
            code = encode(name, table);
        } catch (const ParseError& e) {
            throw ParseError("cannot encode '" + name + "': " + e.what());
        }
        auto& members = groups[code];
        if (std::find(members.begin(), members.end(), name) == members.end()) {
            members.push_back(name);
        }
    }
    std::vector<CollisionClass> classes;
    classes.reserve(groups.size());
    for (auto& [code, members] : groups) {
        classes.push_back(CollisionClass{code, std::move(members)});
    }
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return a.code < b.code;
    });
    return classes;
}

}  // namespace soundex
}  // namespace phonodist
