#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "phonodist/lexicon.hpp"
#include "phonodist/phoneme.hpp"

namespace phonodist {
namespace harness {

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

struct DesideratumResult {
    std::string name;
    Verdict verdict;
    std::string evidence;
};

/// One row of the comparative report. Desiderata appear in a fixed
/// order: contrast accuracy, reversibility, efficiency,
/// speaker-independence, modularity, decomposability, distance-metric
/// availability.
struct DesiderataReport {
    std::string scheme;
    std::vector<DesideratumResult> desiderata;
    // Measured operation counts at scale factors 2..5 (scheme-specific
    // units) and their growth factor ops(last)/ops(first).
    std::vector<std::uint64_t> cost_ops;
    double cost_growth = 0;
    std::vector<std::string> notes;

    const DesideratumResult& find(const std::string& name) const;
};

struct MetricViolationSummary {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t nonnegativity = 0;
    std::size_t identity = 0;
    std::size_t symmetry = 0;
    std::size_t triangle = 0;
    bool triangle_checked = true;  // false when the sample is too small

    std::size_t total() const { return nonnegativity + identity + symmetry + triangle; }
};

using DistanceFn = std::function<double(const PhonemeSequence&, const PhonemeSequence&)>;

// Samples seeded random triples from the lexicon pronunciations and
// counts metric-axiom violations. Identity is checked at the
// feature-bundle level: distance 0 with differing bundles counts as a
// violation, equal bundles with distinct symbols do not. The triangle
// check is skipped when the sample has fewer than 3 entries.
MetricViolationSummary check_metric_axioms(const DistanceFn& distance,
                                           const std::vector<PhonemeSequence>& sample,
                                           std::size_t trials, std::uint64_t seed);

struct GoldPair {
    std::string name1;
    std::string name2;
    bool same;
};

// Gold-pair file: `name1<TAB>name2<TAB>same|different`.
std::vector<GoldPair> load_gold_pairs(const std::string& path);
std::vector<GoldPair> parse_gold_pairs(std::string_view text);

struct ConfusionCounts {
    std::size_t true_positive = 0;
    std::size_t false_positive = 0;
    std::size_t true_negative = 0;
    std::size_t false_negative = 0;
};

// "Positive" means identical codes. Throws Error when a gold pair names
// something outside the lexicon.
ConfusionCounts soundex_discrimination(const std::vector<std::string>& lexicon,
                                       const std::vector<GoldPair>& gold);

struct HarnessConfig {
    std::uint64_t seed = 0;
    std::size_t metric_trials = 10000;
    std::vector<int> profile_tiers = {2, 3, 4, 5};
    int profile_states = 8;
    std::size_t state_budget = 1'000'000;
    bool include_timings = false;  // timings break byte-for-byte determinism
};

// One report per scheme: soundex, feature_metric+alignment, autoseg_fsa.
// Throws Error on an empty lexicon; per-scheme component errors are
// recorded in that scheme's report without aborting the others.
std::vector<DesiderataReport> compare_schemes(const Lexicon& lexicon,
                                              const HarnessConfig& config);

std::string report_to_json(const std::vector<DesiderataReport>& reports,
                           const HarnessConfig& config);
std::string report_to_text(const std::vector<DesiderataReport>& reports,
                           const HarnessConfig& config);

}  // namespace harness
}  // namespace phonodist
