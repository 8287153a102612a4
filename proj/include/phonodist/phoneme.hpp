#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonodist/errors.hpp"

namespace phonodist {

enum class Place : std::uint8_t {
    Bilabial,
    Labiodental,
    Dental,
    Alveolar,
    Postalveolar,
    Palatal,
    Velar,
    Glottal,
    None,  // vowels
};

enum class Manner : std::uint8_t {
    Stop,
    Fricative,
    Affricate,
    Approximant,
    Vowel,
};

enum class Height : std::uint8_t {
    High,
    MidHigh,
    Mid,
    MidLow,
    Low,
    None,  // consonants
};

/// Articulatory description of one segment. Nasals are stops with the
/// nasal flag set, so /n/ and /d/ differ in exactly one feature.
struct FeatureBundle {
    Place place = Place::None;
    Manner manner = Manner::Vowel;
    Height height = Height::None;
    bool voicing = false;
    bool syllabic = false;
    bool nasal = false;
    bool lateral = false;
    bool rounded = false;
    bool sibilant = false;

    bool operator==(const FeatureBundle&) const = default;

    // Throws ValidationError unless:
    //   manner == Vowel  <=>  syllabic  <=>  height != None,
    //   vowels have place None, and nasal implies manner == Stop.
    void validate(std::string_view context) const;
};

struct Phoneme {
    std::string symbol;  // ARPAbet-style uppercase token
    FeatureBundle features;
};

/// Immutable ordered set of phonemes keyed by symbol.
class Inventory {
public:
    // Parses the TSV inventory format. Throws ParseError/ValidationError
    // with a line number on bad input; "empty inventory" if no rows.
    static std::shared_ptr<const Inventory> from_tsv(std::string_view text);
    static std::shared_ptr<const Inventory> from_file(const std::string& path);

    // Built-in General American English consonants and vowels. The same
    // table ships as data/inventory.tsv.
    static std::shared_ptr<const Inventory> default_inventory();

    std::size_t size() const { return phonemes_.size(); }
    const Phoneme& at(std::size_t index) const { return phonemes_[index]; }
    const std::vector<Phoneme>& phonemes() const { return phonemes_; }

    std::optional<std::size_t> find(std::string_view symbol) const;
    bool contains(std::string_view symbol) const { return find(symbol).has_value(); }

    // Throws Error if symbol is unknown.
    const Phoneme& lookup(std::string_view symbol) const;

private:
    Inventory() = default;
    std::vector<Phoneme> phonemes_;
};

using InventoryPtr = std::shared_ptr<const Inventory>;

/// One position in a parsed sequence: an inventory index plus the
/// suprasegmental annotations carried by the notation.
struct SequenceEntry {
    std::size_t phoneme;  // index into the inventory
    bool stressed = false;
    bool onset = false;
};

/// An ordered list of phonemes from one inventory, with optional stress
/// and onset marks. Immutable after construction.
class PhonemeSequence {
public:
    PhonemeSequence(InventoryPtr inventory, std::vector<SequenceEntry> entries);

    // Parses space-separated symbols; "'" prefixes a stressed syllabic
    // segment, "+" prefixes an onset consonant. Throws ParseError naming
    // the offending token and its 1-based position.
    static PhonemeSequence parse(std::string_view text, InventoryPtr inventory);

    // Canonical notation; parse(format(s)) == s.
    std::string format() const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const SequenceEntry& entry(std::size_t i) const { return entries_[i]; }
    const Phoneme& phoneme(std::size_t i) const { return inventory_->at(entries_[i].phoneme); }
    const InventoryPtr& inventory() const { return inventory_; }

    bool operator==(const PhonemeSequence& other) const;

    // True iff the two sequences have positionwise-identical feature
    // bundles (symbols may differ when bundles coincide).
    bool same_bundles(const PhonemeSequence& other) const;

private:
    InventoryPtr inventory_;
    std::vector<SequenceEntry> entries_;
};

std::string to_string(Place p);
std::string to_string(Manner m);
std::string to_string(Height h);

}  // namespace phonodist
