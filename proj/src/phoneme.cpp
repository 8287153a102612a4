#include "phonodist/phoneme.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace phonodist {

namespace {

const std::unordered_map<std::string, Place> kPlaceNames = {
    {"bilabial", Place::Bilabial},   {"labiodental", Place::Labiodental},
    {"dental", Place::Dental},       {"alveolar", Place::Alveolar},
    {"postalveolar", Place::Postalveolar}, {"palatal", Place::Palatal},
    {"velar", Place::Velar},         {"glottal", Place::Glottal},
    {"-", Place::None},
};

const std::unordered_map<std::string, Manner> kMannerNames = {
    {"stop", Manner::Stop},
    {"fricative", Manner::Fricative},
    {"affricate", Manner::Affricate},
    {"approximant", Manner::Approximant},
    {"vowel", Manner::Vowel},
};

const std::unordered_map<std::string, Height> kHeightNames = {
    {"high", Height::High},   {"mid-high", Height::MidHigh},
    {"mid", Height::Mid},     {"mid-low", Height::MidLow},
    {"low", Height::Low},     {"-", Height::None},
};

// Shipped in the repo as data/inventory.tsv; embedded here so the
// default needs no file path.
constexpr const char* kDefaultInventoryTsv = R"(# General American English, ARPAbet symbols
# symbol	place	manner	height	voicing	syllabic	nasal	lateral	rounded	sibilant
P	bilabial	stop	-	0	0	0	0	0	0
B	bilabial	stop	-	1	0	0	0	0	0
M	bilabial	stop	-	1	0	1	0	0	0
F	labiodental	fricative	-	0	0	0	0	0	0
V	labiodental	fricative	-	1	0	0	0	0	0
TH	dental	fricative	-	0	0	0	0	0	0
DH	dental	fricative	-	1	0	0	0	0	0
T	alveolar	stop	-	0	0	0	0	0	0
D	alveolar	stop	-	1	0	0	0	0	0
N	alveolar	stop	-	1	0	1	0	0	0
S	alveolar	fricative	-	0	0	0	0	0	1
Z	alveolar	fricative	-	1	0	0	0	0	1
L	alveolar	approximant	-	1	0	0	1	0	0
R	alveolar	approximant	-	1	0	0	0	0	0
SH	postalveolar	fricative	-	0	0	0	0	0	1
ZH	postalveolar	fricative	-	1	0	0	0	0	1
CH	postalveolar	affricate	-	0	0	0	0	0	1
JH	postalveolar	affricate	-	1	0	0	0	0	1
Y	palatal	approximant	-	1	0	0	0	0	0
K	velar	stop	-	0	0	0	0	0	0
G	velar	stop	-	1	0	0	0	0	0
NG	velar	stop	-	1	0	1	0	0	0
W	velar	approximant	-	1	0	0	0	1	0
HH	glottal	fricative	-	0	0	0	0	0	0
IY	-	vowel	high	1	1	0	0	0	0
IH	-	vowel	mid-high	1	1	0	0	0	0
EY	-	vowel	mid	1	1	0	0	0	0
EH	-	vowel	mid-low	1	1	0	0	0	0
AE	-	vowel	low	1	1	0	0	0	0
AA	-	vowel	low	1	1	0	0	0	0
AH	-	vowel	mid	1	1	0	0	0	0
ER	-	vowel	mid-high	1	1	0	0	0	0
AO	-	vowel	mid-low	1	1	0	0	1	0
OW	-	vowel	mid	1	1	0	0	1	0
UH	-	vowel	mid-high	1	1	0	0	1	0
UW	-	vowel	high	1	1	0	0	1	0
)";

bool parse_bool(const std::string& token, int line_no, const char* field) {
    if (token == "0") return false;
    if (token == "1") return true;
    throw ParseError("line " + std::to_string(line_no) + ": bad boolean '" + token +
                     "' for " + field);
}

template <typename Map>
typename Map::mapped_type parse_enum(const Map& names, const std::string& token,
                                     int line_no, const char* field) {
    auto it = names.find(token);
    if (it == names.end()) {
        throw ParseError("line " + std::to_string(line_no) + ": unknown " + field +
                         " '" + token + "'");
    }
    return it->second;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

}  // namespace

void FeatureBundle::validate(std::string_view context) const {
    const std::string ctx(context);
    const bool is_vowel = manner == Manner::Vowel;
    if (is_vowel != syllabic) {
        throw ValidationError(ctx + ": manner=vowel and syllabic must agree");
    }
    if (is_vowel != (height != Height::None)) {
        throw ValidationError(ctx + (is_vowel ? ": vowel requires a height value"
                                              : ": consonant must have height '-'"));
    }
    if (is_vowel && place != Place::None) {
        throw ValidationError(ctx + ": vowel must have place '-'");
    }
    if (!is_vowel && place == Place::None) {
        throw ValidationError(ctx + ": consonant requires a place value");
    }
    if (nasal && manner != Manner::Stop) {
        throw ValidationError(ctx + ": nasal segments must have manner=stop");
    }
}

std::shared_ptr<const Inventory> Inventory::from_tsv(std::string_view text) {
    auto inv = std::shared_ptr<Inventory>(new Inventory());
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (fields.size() != 10) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 10 fields, got " +
                             std::to_string(fields.size()));
        }
        Phoneme p;
        p.symbol = fields[0];
        if (p.symbol.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty symbol");
        }
        if (inv->contains(p.symbol)) {
            throw ValidationError("line " + std::to_string(line_no) + ": duplicate symbol '" +
                                  p.symbol + "'");
        }
        p.features.place = parse_enum(kPlaceNames, fields[1], line_no, "place");
        p.features.manner = parse_enum(kMannerNames, fields[2], line_no, "manner");
        p.features.height = parse_enum(kHeightNames, fields[3], line_no, "height");
        p.features.voicing = parse_bool(fields[4], line_no, "voicing");
        p.features.syllabic = parse_bool(fields[5], line_no, "syllabic");
        p.features.nasal = parse_bool(fields[6], line_no, "nasal");
        p.features.lateral = parse_bool(fields[7], line_no, "lateral");
        p.features.rounded = parse_bool(fields[8], line_no, "rounded");
        p.features.sibilant = parse_bool(fields[9], line_no, "sibilant");
        p.features.validate("line " + std::to_string(line_no) + " ('" + p.symbol + "')");
        inv->phonemes_.push_back(std::move(p));
    }
    if (inv->phonemes_.empty()) {
        throw ParseError("empty inventory");
    }
    return inv;
}

std::shared_ptr<const Inventory> Inventory::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open inventory file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_tsv(buf.str());
}

std::shared_ptr<const Inventory> Inventory::default_inventory() {
    static const std::shared_ptr<const Inventory> inv = from_tsv(kDefaultInventoryTsv);
    return inv;
}

std::optional<std::size_t> Inventory::find(std::string_view symbol) const {
    for (std::size_t i = 0; i < phonemes_.size(); ++i) {
        if (phonemes_[i].symbol == symbol) return i;
    }
    return std::nullopt;
}

const Phoneme& Inventory::lookup(std::string_view symbol) const {
    auto idx = find(symbol);
    if (!idx) throw Error("unknown phoneme symbol '" + std::string(symbol) + "'");
    return phonemes_[*idx];
}

PhonemeSequence::PhonemeSequence(InventoryPtr inventory, std::vector<SequenceEntry> entries)
    : inventory_(std::move(inventory)), entries_(std::move(entries)) {
    if (!inventory_) throw Error("sequence requires an inventory");
    for (const auto& e : entries_) {
        if (e.phoneme >= inventory_->size()) throw Error("sequence entry out of range");
        if (e.stressed && !inventory_->at(e.phoneme).features.syllabic) {
            throw ValidationError("stress mark on non-syllabic segment '" +
                                  inventory_->at(e.phoneme).symbol + "'");
        }
    }
}

PhonemeSequence PhonemeSequence::parse(std::string_view text, InventoryPtr inventory) {
    if (!inventory) throw Error("sequence requires an inventory");
    std::vector<SequenceEntry> entries;
    std::istringstream stream{std::string(text)};
    std::string token;
    int position = 0;
    while (stream >> token) {
        ++position;
        SequenceEntry e{};
        std::string_view sym = token;
        while (!sym.empty() && (sym.front() == '\'' || sym.front() == '+')) {
            if (sym.front() == '\'') e.stressed = true;
            else e.onset = true;
            sym.remove_prefix(1);
        }
        auto idx = inventory->find(sym);
        if (!idx) {
            throw ParseError("unknown symbol '" + std::string(sym) + "' at position " +
                             std::to_string(position));
        }
        if (e.stressed && !inventory->at(*idx).features.syllabic) {
            throw ParseError("stress mark on non-syllabic '" + std::string(sym) +
                             "' at position " + std::to_string(position));
        }
        e.phoneme = *idx;
        entries.push_back(e);
    }
    return PhonemeSequence(std::move(inventory), std::move(entries));
}

std::string PhonemeSequence::format() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ' ';
        if (entries_[i].stressed) out += '\'';
        if (entries_[i].onset) out += '+';
        out += inventory_->at(entries_[i].phoneme).symbol;
    }
    return out;
}

bool PhonemeSequence::operator==(const PhonemeSequence& other) const {
    if (inventory_ != other.inventory_ || entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].phoneme != other.entries_[i].phoneme ||
            entries_[i].stressed != other.entries_[i].stressed ||
            entries_[i].onset != other.entries_[i].onset) {
            return false;
        }
    }
    return true;
}

bool PhonemeSequence::same_bundles(const PhonemeSequence& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!(phoneme(i).features == other.phoneme(i).features)) return false;
    }
    return true;
}

std::string to_string(Place p) {
    for (const auto& [name, value] : kPlaceNames) {
        if (value == p) return name;
    }
    return "?";
}

std::string to_string(Manner m) {
    for (const auto& [name, value] : kMannerNames) {
        if (value == m) return name;
    }
    return "?";
}

std::string to_string(Height h) {
    for (const auto& [name, value] : kHeightNames) {
        if (value == h) return name;
    }
    return "?";
}

}  // namespace phonodist
