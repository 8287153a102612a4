#pragma once

#include <string>
#include <string_view>

#include "phonodist/phoneme.hpp"

namespace phonodist {

/// Per-feature salience weights plus the alignment indel cost and the
/// suprasegmental position multipliers. Defaults carry the published
/// PGPfone-style weighting; sibilant is unused (weight 0).
struct WeightProfile {
    double place = 7;
    double manner = 6;
    double height = 5;
    double voicing = 4;
    double syllabic = 1;
    double nasal = 1;
    double lateral = 1;
    double rounded = 1;
    double sibilant = 0;
    double indel_cost = 8;
    double onset_multiplier = 1;
    double stress_multiplier = 1;

    // Throws ValidationError if any weight is negative or a multiplier
    // is not positive.
    void validate() const;

    // Flat key=value text, one per line; missing keys keep defaults,
    // unknown keys are errors.
    static WeightProfile from_text(std::string_view text);
    static WeightProfile from_file(const std::string& path);
    std::string to_text() const;
};

// Weighted Hamming distance over the feature coordinates: the sum of the
// weights of features whose values differ. Symmetric; zero iff the
// bundles are equal (given positive weights).
double phoneme_distance(const FeatureBundle& a, const FeatureBundle& b,
                        const WeightProfile& w);
double phoneme_distance(const Phoneme& a, const Phoneme& b, const WeightProfile& w);

// Multiplier applied at position i: onset_multiplier if either sequence
// marks the position as onset, times stress_multiplier if either marks
// it stressed.
double position_multiplier(const PhonemeSequence& a, const PhonemeSequence& b,
                           std::size_t i, const WeightProfile& w);

// Fixed-length positionwise distance. Throws Error on length mismatch
// (use word_distance for unequal lengths) and MixedInventoryError on
// mixed inventories. If normalize, divides by the common length.
double template_distance(const PhonemeSequence& a, const PhonemeSequence& b,
                         const WeightProfile& w, bool normalize = false);

}  // namespace phonodist
