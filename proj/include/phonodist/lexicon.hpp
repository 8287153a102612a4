#pragma once

#include <string>
#include <vector>

#include "phonodist/phoneme.hpp"

namespace phonodist {

struct LexiconEntry {
    std::string word;      // orthographic form
    PhonemeSequence pron;  // pronunciation
};

using Lexicon = std::vector<LexiconEntry>;

// Lexicon TSV: `word<TAB>phoneme-sequence-notation` per line, `#`
// comments. Throws ParseError with a line number.
Lexicon load_lexicon(const std::string& path, InventoryPtr inventory);
Lexicon parse_lexicon(std::string_view text, InventoryPtr inventory);

// Name-list file: one name per line, UTF-8, `#` comments, blanks skipped.
std::vector<std::string> load_name_list(const std::string& path);
std::vector<std::string> parse_name_list(std::string_view text);

}  // namespace phonodist
