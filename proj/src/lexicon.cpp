#include "phonodist/lexicon.hpp"

#include <fstream>
#include <sstream>

namespace phonodist {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Lexicon parse_lexicon(std::string_view text, InventoryPtr inventory) {
    Lexicon lex;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError("lexicon line " + std::to_string(line_no) +
                             ": expected word<TAB>pronunciation");
        }
        std::string word = line.substr(0, tab);
        std::string notation = line.substr(tab + 1);
        try {
            lex.push_back({std::move(word), PhonemeSequence::parse(notation, inventory)});
        } catch (const ParseError& e) {
            throw ParseError("lexicon line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return lex;
}

Lexicon load_lexicon(const std::string& path, InventoryPtr inventory) {
    return parse_lexicon(slurp(path), std::move(inventory));
}

std::vector<std::string> parse_name_list(std::string_view text) {
    std::vector<std::string> names;
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        names.push_back(line);
    }
    return names;
}

std::vector<std::string> load_name_list(const std::string& path) {
    return parse_name_list(slurp(path));
}

}  // namespace phonodist
