#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "phonodist/errors.hpp"

namespace phonodist {
namespace autoseg {

/// Nondeterministic finite-state automaton for one tier. States are
/// numbered 0..num_states-1; no epsilon transitions.
struct TierAutomaton {
    std::string tier;
    std::vector<std::string> alphabet;
    int num_states = 0;
    int start = 0;
    std::set<int> accepting;
    // transitions[state][symbol_index] = successor states (sorted)
    std::vector<std::vector<std::vector<int>>> transitions;

    void add_transition(int from, std::string_view symbol, int to);
    int symbol_index(std::string_view symbol) const;  // -1 if absent

    // Throws ValidationError on out-of-range states or empty alphabet.
    void validate() const;
};

/// One cross-tier state association: any product state containing
/// state_a of tier_a must contain state_b of tier_b, and vice versa.
struct Pinning {
    std::string tier_a;
    int state_a;
    std::string tier_b;
    int state_b;
};

struct AutosegWord {
    std::map<std::string, TierAutomaton> tiers;
    std::vector<Pinning> pinnings;

    // Throws ValidationError if a pinning references a missing tier or
    // state.
    void validate() const;
};

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

// Linear automaton accepting exactly the given string: len+1 states in
// a chain. Throws Error on an empty sequence.
TierAutomaton from_sequence(std::string_view tier, const std::vector<std::string>& symbols);

// NFA membership test.
bool accepts(const TierAutomaton& a, const std::vector<std::string>& word);

struct IntersectStats {
    std::size_t product_states_visited = 0;
};

// Product construction over >= 2 automata sharing one alphabet. Tuples
// violating a pinning are removed before the reachability search; states
// unreachable from start are pruned. Pinnings reference the automata by
// tier name (names must be unique within the call). Throws on alphabet
// mismatch, dangling pinnings, or when the visited-state budget is
// exceeded (ResourceLimitError).
TierAutomaton intersect(const std::vector<TierAutomaton>& automata,
                        const std::vector<Pinning>& pinnings = {},
                        std::size_t state_budget = kDefaultStateBudget,
                        IntersectStats* stats = nullptr);

// True iff no accepting state is reachable from start.
bool is_empty(const TierAutomaton& a);

// Caller-supplied pinning between corresponding tiers of the two words
// being compared.
struct CrossPinning {
    std::string tier;
    int state_w1;
    int state_w2;
};

// Bird-Ellison style compatibility: for every tier name (the words must
// agree on tier names and alphabets) the pinning-constrained
// intersection of the two tier automata is non-empty. Word-internal
// pinnings between same-alphabet tiers are enforced within their word;
// others are validated structurally only.
bool compatible(const AutosegWord& w1, const AutosegWord& w2,
                const std::vector<CrossPinning>& cross_pinnings = {},
                std::size_t state_budget = kDefaultStateBudget);

struct ProfileRow {
    int tiers;
    int states_per_tier;
    std::size_t product_states_visited;
    double wall_ms;
};

// Empirical intersection-cost table over seeded random chain-like
// automata. tier_counts must be ascending. Trials run sequentially.
std::vector<ProfileRow> intersection_cost_profile(const std::vector<int>& tier_counts,
                                                  int states_per_tier,
                                                  std::uint64_t seed = 0,
                                                  std::size_t state_budget = kDefaultStateBudget);

// Text format: `tier <name> alphabet <sym>...`, `state <n> [start]
// [accept]`, `trans <from> <sym> <to>`, `pin <tierA>:<s> <tierB>:<s>`.
AutosegWord parse_word(std::string_view text);
AutosegWord load_word(const std::string& path);
std::string format_word(const AutosegWord& word);

}  // namespace autoseg
}  // namespace phonodist
