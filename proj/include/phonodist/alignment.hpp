#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phonodist/feature_metric.hpp"
#include "phonodist/lexicon.hpp"
#include "phonodist/phoneme.hpp"

namespace phonodist {

enum class StepKind { Match, Subst, Insert, Delete };

struct AlignmentStep {
    StepKind kind;
    // Indices into the two sequences; npos when not applicable (Insert
    // has no i, Delete has no j).
    std::size_t i;
    std::size_t j;
    double cost;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// A monotone, complete traversal of both sequences with per-step costs.
struct Alignment {
    std::vector<AlignmentStep> steps;
    double total_cost = 0;
};

struct WordDistanceResult {
    double distance;
    Alignment alignment;
};

// Minimum-cost alignment by dynamic programming in O(len(a) * len(b)).
// Substitution cost is the position-reweighted phoneme distance (Match
// when the bundles are identical), insert/delete cost is the reweighted
// indel cost. Traceback ties prefer Match/Subst over Delete over Insert.
// Throws MixedInventoryError on mixed inventories.
WordDistanceResult word_distance(const PhonemeSequence& a, const PhonemeSequence& b,
                                 const WeightProfile& w);

struct Neighbor {
    LexiconEntry entry;
    double distance;
};

// The k lexicon entries nearest to query by word_distance, ascending;
// ties broken lexicographically by pronunciation notation, then word.
// Returns the whole lexicon sorted when k exceeds its size. Throws
// Error if k < 1 or the lexicon is empty.
std::vector<Neighbor> knn(const PhonemeSequence& query, const Lexicon& lexicon,
                          std::size_t k, const WeightProfile& w);

// Two-row textual rendering of an alignment.
std::string render_alignment(const PhonemeSequence& a, const PhonemeSequence& b,
                             const Alignment& al);

}  // namespace phonodist
