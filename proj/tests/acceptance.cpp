// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Expected values are frozen from the published worked
// examples or computed by independent brute-force oracles in this file.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "phonodist/alignment.hpp"
#include "phonodist/autoseg.hpp"
#include "phonodist/feature_metric.hpp"
#include "phonodist/harness.hpp"
#include "phonodist/lexicon.hpp"
#include "phonodist/soundex.hpp"

using namespace phonodist;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string description, double budget_seconds)
        : number_(number),
          description_(std::move(description)),
          budget_seconds_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string& detail = "") {
        if (!ok) {
            failed_ = true;
            if (!detail.empty()) details_.push_back(detail);
        }
    }

    void finish() {
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       start_)
                             .count();
        if (budget_seconds_ > 0 && elapsed >= budget_seconds_) {
            failed_ = true;
            details_.push_back("runtime " + std::to_string(elapsed) + "s exceeds budget of " +
                               std::to_string(budget_seconds_) + "s");
        }
        std::ostringstream line;
        line << (failed_ ? "FAIL" : "PASS") << " criterion " << number_ << ": " << description_
             << " [" << elapsed << " s]";
        std::cout << line.str() << "\n";
        for (const auto& d : details_) std::cout << "      " << d << "\n";
        if (failed_) ++g_failures;
    }

private:
    int number_;
    std::string description_;
    double budget_seconds_;
    std::chrono::steady_clock::time_point start_;
    bool failed_ = false;
    std::vector<std::string> details_;
};

Lexicon toy_lexicon() {
    return load_lexicon(std::string(PHONODIST_DATA_DIR) + "/toy_lexicon.tsv",
                        Inventory::default_inventory());
}

// ---------------------------------------------------------------- 1, 2

void criterion_soundex_examples() {
    Criterion c(1, "SOUNDEX worked-example suite is exact", 1.0);
    const std::pair<const char*, const char*> cases[] = {
        {"Juola", "J400"},        {"Krumplestater", "K651"}, {"Kruempelstaedter", "K651"},
        {"Bonner", "B560"},       {"Baymore", "B560"},       {"Van Hoesen", "V525"},
        {"Vincenzo", "V525"},
    };
    for (const auto& [name, expected] : cases) {
        auto got = soundex::encode(name).value;
        c.check(got == expected, std::string(name) + " -> " + got + ", expected " + expected);
    }
    c.finish();
}

void criterion_code_space() {
    Criterion c(2, "enumerated code space is 8918, under 9000 classes", 1.0);
    long n = soundex::code_space_size();
    c.check(n == 8918, "got " + std::to_string(n));
    c.check(n < 9000);
    c.finish();
}

// ------------------------------------------------------------------- 3

void criterion_feature_weights() {
    Criterion c(3, "published weight suite, symmetry and triangle exhaustive", 10.0);
    auto inv = Inventory::default_inventory();
    const WeightProfile w;
    auto d = [&](const char* a, const char* b) {
        return phoneme_distance(inv->lookup(a), inv->lookup(b), w);
    };
    c.check(d("D", "G") == 7, "d(D,G) != 7");
    c.check(d("Z", "S") == 4, "d(Z,S) != 4");
    c.check(d("L", "R") == 1, "d(L,R) != 1");
    c.check(d("N", "D") == 1, "d(N,D) != 1");
    for (const auto& p : inv->phonemes()) {
        c.check(phoneme_distance(p, p, w) == 0, "d(" + p.symbol + ",=) != 0");
    }
    const auto& ph = inv->phonemes();
    std::size_t symmetry_bad = 0, triangle_bad = 0;
    for (const auto& a : ph) {
        for (const auto& b : ph) {
            double ab = phoneme_distance(a, b, w);
            if (ab != phoneme_distance(b, a, w)) ++symmetry_bad;
            for (const auto& x : ph) {
                if (phoneme_distance(a, x, w) > ab + phoneme_distance(b, x, w)) ++triangle_bad;
            }
        }
    }
    c.check(symmetry_bad == 0, std::to_string(symmetry_bad) + " symmetry violations");
    c.check(triangle_bad == 0, std::to_string(triangle_bad) + " triangle violations");
    c.finish();
}

// ------------------------------------------------------------------- 4

void criterion_salience_tension() {
    Criterion c(4, "salience tension d(B,G)=7 > d(B,P)=4 is exhibited and reported", 0);
    auto inv = Inventory::default_inventory();
    const WeightProfile w;
    double bg = phoneme_distance(inv->lookup("B"), inv->lookup("G"), w);
    double bp = phoneme_distance(inv->lookup("B"), inv->lookup("P"), w);
    c.check(bg == 7, "d(B,G) = " + std::to_string(bg));
    c.check(bp == 4, "d(B,P) = " + std::to_string(bp));
    c.check(bg > bp);
    harness::HarnessConfig config;
    config.metric_trials = 200;
    config.profile_tiers = {2, 3};
    config.profile_states = 4;
    auto reports = harness::compare_schemes(toy_lexicon(), config);
    bool flagged = false;
    for (const auto& r : reports) {
        for (const auto& note : r.notes) {
            if (note.find("salience tension") != std::string::npos &&
                note.find("d(/b/,/g/)=7") != std::string::npos &&
                note.find("d(/b/,/p/)=4") != std::string::npos) {
                flagged = true;
            }
        }
    }
    c.check(flagged, "no report note flags the tension with both values");
    c.finish();
}

// ------------------------------------------------------------------- 5
//
// Brute-force oracle: the minimum alignment cost equals the minimum
// over all monotone matchings M of
//     indel_cost * (len_a + len_b - 2|M|) + sum dist(a_i, b_j),
// enumerated via precomputed index combinations. Independent of the DP.

struct SmallSeq {
    std::uint8_t len;
    std::array<std::uint8_t, 5> sym;
};

void criterion_alignment_oracle() {
    Criterion c(5, "DP word distance equals brute force on all pairs up to length 5", 60.0);
    auto inv = Inventory::default_inventory();
    const WeightProfile w;
    const char* sub[] = {"B", "T", "S", "N", "EH", "AH"};
    const int kSub = 6;

    int dist[kSub][kSub];
    for (int i = 0; i < kSub; ++i) {
        for (int j = 0; j < kSub; ++j) {
            dist[i][j] = static_cast<int>(
                phoneme_distance(inv->lookup(sub[i]), inv->lookup(sub[j]), w));
        }
    }
    const int indel = static_cast<int>(w.indel_cost);

    // all sequences of length 0..5 over the sub-inventory
    std::vector<SmallSeq> seqs;
    seqs.push_back({0, {}});
    std::size_t first_of_prev = 0;
    for (int len = 1; len <= 5; ++len) {
        std::size_t end = seqs.size();
        for (std::size_t s = first_of_prev; s < end; ++s) {
            if (seqs[s].len != len - 1) continue;
            for (std::uint8_t x = 0; x < kSub; ++x) {
                SmallSeq next = seqs[s];
                next.sym[next.len] = x;
                ++next.len;
                seqs.push_back(next);
            }
        }
        first_of_prev = end;
    }

    // index combinations: combos[n][k] lists the k-subsets of 0..n-1
    std::vector<std::array<std::uint8_t, 5>> combos[6][6];
    int combo_count[6][6] = {};
    for (int n = 0; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::array<std::uint8_t, 5> pick{};
            std::vector<int> idx(k);
            for (int i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                for (int i = 0; i < k; ++i) pick[i] = static_cast<std::uint8_t>(idx[i]);
                combos[n][k].push_back(pick);
                int i = k - 1;
                while (i >= 0 && idx[i] == n - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
            combo_count[n][k] = static_cast<int>(combos[n][k].size());
        }
    }

    auto oracle = [&](const SmallSeq& a, const SmallSeq& b) -> int {
        int best = indel * (a.len + b.len);
        int max_k = std::min(a.len, b.len);
        for (int k = 1; k <= max_k; ++k) {
            int base = indel * (a.len + b.len - 2 * k);
            if (base >= best) continue;  // matches only lower the indel part
            const auto& ca = combos[a.len][k];
            const auto& cb = combos[b.len][k];
            for (int ia = 0; ia < combo_count[a.len][k]; ++ia) {
                for (int ib = 0; ib < combo_count[b.len][k]; ++ib) {
                    int cost = base;
                    for (int r = 0; r < k; ++r) {
                        cost += dist[a.sym[ca[ia][r]]][b.sym[cb[ib][r]]];
                    }
                    if (cost < best) best = cost;
                }
            }
        }
        return best;
    };

    auto dp = [&](const SmallSeq& a, const SmallSeq& b) -> int {
        int cells[6][6];
        for (int j = 0; j <= b.len; ++j) cells[0][j] = indel * j;
        for (int i = 1; i <= a.len; ++i) {
            cells[i][0] = indel * i;
            for (int j = 1; j <= b.len; ++j) {
                int best = cells[i - 1][j - 1] + dist[a.sym[i - 1]][b.sym[j - 1]];
                best = std::min(best, cells[i - 1][j] + indel);
                best = std::min(best, cells[i][j - 1] + indel);
                cells[i][j] = best;
            }
        }
        return cells[a.len][b.len];
    };

    // the in-repo DP must agree with this local DP on a sample; the
    // local DP then stands in for it in the exhaustive sweep
    std::mt19937_64 rng(1);
    auto to_sequence = [&](const SmallSeq& s) {
        std::vector<SequenceEntry> entries;
        for (int i = 0; i < s.len; ++i) entries.push_back({*inv->find(sub[s.sym[i]]), false, false});
        return PhonemeSequence(inv, std::move(entries));
    };
    std::size_t bridge_bad = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const auto& a = seqs[rng() % seqs.size()];
        const auto& b = seqs[rng() % seqs.size()];
        double lib = word_distance(to_sequence(a), to_sequence(b), w).distance;
        if (lib != static_cast<double>(dp(a, b))) ++bridge_bad;
    }
    c.check(bridge_bad == 0,
            std::to_string(bridge_bad) + " disagreements between library DP and local DP");

    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = i; j < seqs.size(); ++j) {
            int expected = oracle(seqs[i], seqs[j]);
            if (dp(seqs[i], seqs[j]) != expected || dp(seqs[j], seqs[i]) != expected) {
                ++mismatches;
                if (mismatches < 4) {
                    c.check(false, "mismatch at pair (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
                }
            }
        }
    }
    c.check(mismatches == 0, std::to_string(mismatches) + " DP/oracle mismatches");
    c.finish();
}

// ------------------------------------------------------------------- 6

void criterion_metric_axioms() {
    Criterion c(6, "zero metric-axiom violations over 10^4 seeded lexicon triples", 60.0);
    auto lex = toy_lexicon();
    c.check(lex.size() == 50, "toy lexicon holds " + std::to_string(lex.size()) + " words");
    std::vector<PhonemeSequence> sample;
    for (const auto& e : lex) sample.push_back(e.pron);
    const WeightProfile w;
    auto summary = harness::check_metric_axioms(
        [&](const PhonemeSequence& a, const PhonemeSequence& b) {
            return word_distance(a, b, w).distance;
        },
        sample, 10000, 0);
    c.check(summary.nonnegativity == 0,
            std::to_string(summary.nonnegativity) + " non-negativity violations");
    c.check(summary.identity == 0, std::to_string(summary.identity) + " identity violations");
    c.check(summary.symmetry == 0, std::to_string(summary.symmetry) + " symmetry violations");
    c.check(summary.triangle == 0, std::to_string(summary.triangle) + " triangle violations");
    c.check(summary.triangle_checked);
    c.finish();
}

// ------------------------------------------------------------------- 7

std::vector<std::vector<std::string>> strings_up_to(const std::vector<std::string>& alphabet,
                                                    std::size_t max_len) {
    std::vector<std::vector<std::string>> out = {{}};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (const auto& sym : alphabet) {
                auto s = out[i];
                s.push_back(sym);
                out.push_back(std::move(s));
            }
        }
        level_start = level_end;
    }
    return out;
}

void criterion_fsa_correctness() {
    Criterion c(7, "intersection equals membership conjunction; emptiness by enumeration", 60.0);
    const std::vector<std::string> alphabet = {"a", "b", "c"};
    std::mt19937_64 rng(0);

    auto random_nfa = [&](int max_states, const std::string& name) {
        autoseg::TierAutomaton a;
        a.tier = name;
        a.alphabet = alphabet;
        a.num_states = 1 + static_cast<int>(rng() % max_states);
        a.start = static_cast<int>(rng() % a.num_states);
        a.transitions.assign(a.num_states,
                             std::vector<std::vector<int>>(alphabet.size()));
        for (int s = 0; s < a.num_states; ++s) {
            if (rng() % 3 == 0) a.accepting.insert(s);
            for (const auto& sym : alphabet) {
                int fanout = static_cast<int>(rng() % 3);
                for (int e = 0; e < fanout; ++e) {
                    a.add_transition(s, sym, static_cast<int>(rng() % a.num_states));
                }
            }
        }
        return a;
    };

    // structured automata plus a seeded random family, all <= 4 states
    std::vector<autoseg::TierAutomaton> pool;
    pool.push_back(autoseg::from_sequence("chain_ab", {"a", "b"}));
    pool.push_back(autoseg::from_sequence("chain_abc", {"a", "b", "c"}));
    {
        autoseg::TierAutomaton star;
        star.tier = "star";
        star.alphabet = alphabet;
        star.num_states = 1;
        star.start = 0;
        star.accepting = {0};
        star.transitions.assign(1, std::vector<std::vector<int>>(alphabet.size()));
        for (const auto& sym : alphabet) star.add_transition(0, sym, 0);
        pool.push_back(star);
        autoseg::TierAutomaton dead = star;
        dead.tier = "dead";
        dead.accepting.clear();
        pool.push_back(dead);
    }
    for (int i = 0; i < 36; ++i) pool.push_back(random_nfa(4, "r" + std::to_string(i)));
    // chains above use sub-alphabets; widen them
    for (auto& a : pool) {
        if (a.alphabet != alphabet) {
            std::vector<std::vector<std::vector<int>>> widened(
                a.num_states, std::vector<std::vector<int>>(alphabet.size()));
            for (int s = 0; s < a.num_states; ++s) {
                for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
                    std::size_t at = 0;
                    while (alphabet[at] != a.alphabet[sym]) ++at;
                    widened[s][at] = a.transitions[s][sym];
                }
            }
            a.alphabet = alphabet;
            a.transitions = std::move(widened);
        }
    }

    auto universe = strings_up_to(alphabet, 6);
    std::size_t membership_bad = 0, empties_checked = 0, empty_bad = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i; j < pool.size(); ++j) {
            auto left = pool[i];
            left.tier = "L";
            auto right = pool[j];
            right.tier = "R";
            auto product = autoseg::intersect({left, right});
            for (const auto& s : universe) {
                bool both = autoseg::accepts(left, s) && autoseg::accepts(right, s);
                if (autoseg::accepts(product, s) != both) ++membership_bad;
            }
            if (product.num_states > left.num_states * right.num_states) ++membership_bad;
            // emptiness against exhaustive search up to the pumping
            // bound (shortest accepted word < number of states)
            if (product.num_states <= 7) {
                auto bound = strings_up_to(alphabet, product.num_states - 1);
                bool any = false;
                for (const auto& s : bound) {
                    if (autoseg::accepts(product, s)) {
                        any = true;
                        break;
                    }
                }
                ++empties_checked;
                if (autoseg::is_empty(product) != !any) ++empty_bad;
            }
        }
    }
    for (const auto& a : pool) {
        auto bound = strings_up_to(alphabet, static_cast<std::size_t>(a.num_states) - 1);
        bool any = false;
        for (const auto& s : bound) {
            if (autoseg::accepts(a, s)) {
                any = true;
                break;
            }
        }
        ++empties_checked;
        if (autoseg::is_empty(a) != !any) ++empty_bad;
    }
    c.check(membership_bad == 0, std::to_string(membership_bad) + " membership disagreements");
    c.check(empty_bad == 0, std::to_string(empty_bad) + " emptiness disagreements");
    c.check(empties_checked > 100);
    c.finish();
}

// ------------------------------------------------------------------- 8

void criterion_cost_profile() {
    Criterion c(8, "product growth for 2..5 tiers of 8 states is monotone, bounded by 8^k", 0);
    auto rows = autoseg::intersection_cost_profile({2, 3, 4, 5}, 8, 0);
    c.check(rows.size() == 4);
    std::size_t bound = 1;
    std::size_t prev = 0;
    for (const auto& row : rows) {
        bound = 1;
        for (int i = 0; i < row.tiers; ++i) bound *= 8;
        c.check(row.product_states_visited <= bound,
                std::to_string(row.tiers) + " tiers visited " +
                    std::to_string(row.product_states_visited) + " > 8^k");
        c.check(row.product_states_visited > prev,
                "growth not monotone at " + std::to_string(row.tiers) + " tiers");
        prev = row.product_states_visited;
    }
    c.finish();
}

// ------------------------------------------------------------------- 9

void criterion_desiderata_report() {
    Criterion c(9, "comparative report reproduces the three-way triage structurally", 0);
    harness::HarnessConfig config;
    config.metric_trials = 10000;
    auto reports = harness::compare_schemes(toy_lexicon(), config);
    c.check(reports.size() == 3, "expected 3 scheme reports");
    const auto& sx = reports[0];
    const auto& al = reports[1];
    const auto& as = reports[2];
    c.check(sx.scheme == "soundex");
    c.check(sx.find("reversibility").verdict == harness::Verdict::Fail,
            "soundex not marked non-invertible");
    c.check(sx.find("distance_metric").verdict == harness::Verdict::Fail,
            "soundex not marked distance-free");
    c.check(al.find("distance_metric").verdict == harness::Verdict::Pass,
            "alignment distance does not pass the metric axioms");
    c.check(as.cost_growth > sx.cost_growth && as.cost_growth > al.cost_growth,
            "autoseg does not show the largest measured cost growth");

    // not hard-coded: a collision-free lexicon flips the soundex verdicts
    auto inv = Inventory::default_inventory();
    Lexicon distinct = {
        {"Adams", PhonemeSequence::parse("AE D AH M S", inv)},
        {"Miller", PhonemeSequence::parse("M IH L ER", inv)},
        {"Ruiz", PhonemeSequence::parse("R UW IY Z", inv)},
    };
    auto clean = harness::compare_schemes(distinct, config);
    c.check(clean[0].find("reversibility").verdict == harness::Verdict::Pass,
            "soundex invertibility verdict appears hard-coded");
    c.finish();
}

}  // namespace

int main() {
    criterion_soundex_examples();
    criterion_code_space();
    criterion_feature_weights();
    criterion_salience_tension();
    criterion_alignment_oracle();
    criterion_metric_axioms();
    criterion_fsa_correctness();
    criterion_cost_profile();
    criterion_desiderata_report();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
