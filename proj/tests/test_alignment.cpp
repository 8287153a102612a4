#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "phonodist/alignment.hpp"

using namespace phonodist;
using phonodist_test::oracle_word_distance;

namespace {

const WeightProfile kDefault;

PhonemeSequence seq(const char* text) {
    return PhonemeSequence::parse(text, Inventory::default_inventory());
}

// Random sequence over a restricted symbol set.
PhonemeSequence random_seq(const std::vector<std::string>& symbols, std::size_t max_len,
                           std::mt19937_64& rng) {
    auto inv = Inventory::default_inventory();
    std::vector<SequenceEntry> entries;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        entries.push_back({*inv->find(symbols[rng() % symbols.size()]), false, false});
    }
    return PhonemeSequence(inv, std::move(entries));
}

const std::vector<std::string> kSubInventory = {"B", "T", "S", "N", "EH", "AH"};

}  // namespace

TEST_CASE("identical sequences align with all matches at zero cost") {
    auto [dist, al] = word_distance(seq("B EH T"), seq("B EH T"), kDefault);
    CHECK(dist == 0);
    REQUIRE(al.steps.size() == 3);
    for (const auto& step : al.steps) {
        CHECK(step.kind == StepKind::Match);
        CHECK(step.cost == 0);
    }
}

TEST_CASE("bet vs bets costs one insertion") {
    auto [dist, al] = word_distance(seq("B EH T"), seq("B EH T S"), kDefault);
    CHECK(dist == 8);
    REQUIRE(al.steps.size() == 4);
    int inserts = 0;
    for (const auto& step : al.steps) {
        if (step.kind == StepKind::Insert) {
            ++inserts;
            CHECK(step.cost == 8);
        }
    }
    CHECK(inserts == 1);
    CHECK(al.total_cost == dist);
}

TEST_CASE("empty sequence aligns with pure indels") {
    auto inv = Inventory::default_inventory();
    PhonemeSequence empty(inv, {});
    CHECK(word_distance(empty, seq("B EH T"), kDefault).distance == 24);
    CHECK(word_distance(seq("B EH T"), empty, kDefault).distance == 24);
    CHECK(word_distance(empty, empty, kDefault).distance == 0);
}

TEST_CASE("the bet/bets/best/Bess ranking is a consequence of the costs") {
    auto bet = seq("B EH T");
    // expected values frozen from the brute-force oracle
    std::vector<std::pair<std::string, double>> ranked;
    for (const char* text : {"B EH T S", "B EH S T", "B EH S"}) {
        double oracle = oracle_word_distance(bet, seq(text), kDefault);
        double dp = word_distance(bet, seq(text), kDefault).distance;
        CHECK(dp == oracle);
        ranked.emplace_back(text, dp);
    }
    CHECK(ranked[0].second == 8);  // bets: insert the final S
    CHECK(ranked[1].second == 8);  // best: insert S, the T still matches
    CHECK(ranked[2].second == 6);  // Bess: substitute T -> S (manner mismatch)
}

TEST_CASE("alignment steps traverse both sequences completely") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_seq(kSubInventory, 6, rng);
        auto b = random_seq(kSubInventory, 6, rng);
        auto [dist, al] = word_distance(a, b, kDefault);
        std::size_t i = 0, j = 0;
        double total = 0;
        for (const auto& step : al.steps) {
            switch (step.kind) {
                case StepKind::Match:
                case StepKind::Subst:
                    CHECK(step.i == i);
                    CHECK(step.j == j);
                    ++i;
                    ++j;
                    break;
                case StepKind::Delete:
                    CHECK(step.i == i);
                    ++i;
                    break;
                case StepKind::Insert:
                    CHECK(step.j == j);
                    ++j;
                    break;
            }
            total += step.cost;
        }
        CHECK(i == a.size());
        CHECK(j == b.size());
        CHECK(total == doctest::Approx(al.total_cost));
        CHECK(al.total_cost == dist);
    }
}

TEST_CASE("DP equals the brute-force oracle at small sizes") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 400; ++trial) {
        auto a = random_seq(kSubInventory, 4, rng);
        auto b = random_seq(kSubInventory, 4, rng);
        CHECK(word_distance(a, b, kDefault).distance == oracle_word_distance(a, b, kDefault));
    }
}

TEST_CASE("DP equals the oracle with multipliers and odd weights") {
    WeightProfile w;
    w.indel_cost = 5.5;
    w.onset_multiplier = 2;
    w.stress_multiplier = 3;
    auto inv = Inventory::default_inventory();
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<SequenceEntry> ea, eb;
        for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
            std::size_t p = *inv->find(kSubInventory[rng() % kSubInventory.size()]);
            bool syl = inv->at(p).features.syllabic;
            ea.push_back({p, syl && rng() % 2 == 0, !syl && rng() % 2 == 0});
        }
        for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
            std::size_t p = *inv->find(kSubInventory[rng() % kSubInventory.size()]);
            bool syl = inv->at(p).features.syllabic;
            eb.push_back({p, syl && rng() % 2 == 0, !syl && rng() % 2 == 0});
        }
        PhonemeSequence a(inv, ea), b(inv, eb);
        CHECK(word_distance(a, b, w).distance ==
              doctest::Approx(oracle_word_distance(a, b, w)));
    }
}

TEST_CASE("symmetry and identity over random pairs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_seq(kSubInventory, 6, rng);
        auto b = random_seq(kSubInventory, 6, rng);
        CHECK(word_distance(a, b, kDefault).distance == word_distance(b, a, kDefault).distance);
        CHECK(word_distance(a, a, kDefault).distance == 0);
    }
}

TEST_CASE("zero distance implies positionwise-identical bundles") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_seq(kSubInventory, 5, rng);
        auto b = random_seq(kSubInventory, 5, rng);
        if (word_distance(a, b, kDefault).distance == 0) CHECK(a.same_bundles(b));
    }
}

TEST_CASE("triangle inequality over random triples") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_seq(kSubInventory, 6, rng);
        auto b = random_seq(kSubInventory, 6, rng);
        auto c = random_seq(kSubInventory, 6, rng);
        double ab = word_distance(a, b, kDefault).distance;
        double bc = word_distance(b, c, kDefault).distance;
        double ac = word_distance(a, c, kDefault).distance;
        CHECK(ac <= ab + bc + 1e-9);
    }
}

TEST_CASE("word distance never exceeds template distance on equal lengths") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_seq(kSubInventory, 5, rng);
        std::mt19937_64 rng2(rng());
        auto b = random_seq(kSubInventory, 5, rng2);
        if (a.size() != b.size()) continue;
        double td = template_distance(a, b, kDefault);
        double wd = word_distance(a, b, kDefault).distance;
        CHECK(wd <= td + 1e-9);
        // capping each aligned pair at delete+insert is always available
        double capped = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            capped += std::min(phoneme_distance(a.phoneme(i), b.phoneme(i), kDefault),
                               2 * kDefault.indel_cost);
        }
        CHECK(wd <= capped + 1e-9);
    }
}

TEST_CASE("mixed inventories are rejected") {
    auto inv2 = Inventory::from_file(std::string(PHONODIST_DATA_DIR) + "/inventory.tsv");
    auto a = seq("B EH T");
    auto b = PhonemeSequence::parse("B EH T", inv2);
    CHECK_THROWS_AS(word_distance(a, b, kDefault), MixedInventoryError);
}

TEST_CASE("knn basics") {
    auto inv = Inventory::default_inventory();
    Lexicon lex = {
        {"bet", seq("B EH T")},   {"bets", seq("B EH T S")}, {"best", seq("B EH S T")},
        {"bess", seq("B EH S")},  {"but", seq("B AH T")},    {"gut", seq("G AH T")},
    };
    auto nn = knn(seq("B EH T"), lex, 3, kDefault);
    REQUIRE(nn.size() == 3);
    CHECK(nn[0].entry.word == "bet");
    CHECK(nn[0].distance == 0);
    CHECK(nn[1].distance <= nn[2].distance);

    // k larger than the lexicon returns everything
    CHECK(knn(seq("B EH T"), lex, 100, kDefault).size() == lex.size());

    CHECK_THROWS_AS(knn(seq("B EH T"), {}, 1, kDefault), Error);
    CHECK_THROWS_AS(knn(seq("B EH T"), lex, 0, kDefault), Error);
}

TEST_CASE("knn agrees with exhaustive distance computation on a 20-word lexicon") {
    const char* words[][2] = {
        {"bet", "B EH T"},   {"bets", "B EH T S"}, {"best", "B EH S T"},
        {"bess", "B EH S"},  {"but", "B AH T"},    {"gut", "G AH T"},
        {"putt", "P AH T"},  {"bat", "B AE T"},    {"bad", "B AE D"},
        {"mat", "M AE T"},   {"mad", "M AE D"},    {"sip", "S IH P"},
        {"zip", "Z IH P"},   {"ship", "SH IH P"},  {"net", "N EH T"},
        {"debt", "D EH T"},  {"set", "S EH T"},    {"sit", "S IH T"},
        {"fan", "F AE N"},   {"van", "V AE N"},
    };
    Lexicon lex;
    for (const auto& w : words) lex.push_back({w[0], seq(w[1])});

    auto query = seq("B EH T");
    auto nn = knn(query, lex, 5, kDefault);
    REQUIRE(nn.size() == 5);

    // exhaustive reference with the same tie-break
    std::vector<std::pair<double, std::string>> all;
    for (const auto& e : lex) {
        all.emplace_back(word_distance(query, e.pron, kDefault).distance,
                         e.pron.format() + "\t" + e.word);
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < nn.size(); ++i) {
        CHECK(nn[i].distance == all[i].first);
    }
    for (std::size_t i = 1; i < nn.size(); ++i) {
        CHECK(nn[i - 1].distance <= nn[i].distance);
    }
}

TEST_CASE("traceback tie-break is deterministic") {
    auto a = seq("B EH T");
    auto b = seq("B EH T S");
    auto al1 = word_distance(a, b, kDefault).alignment;
    auto al2 = word_distance(a, b, kDefault).alignment;
    REQUIRE(al1.steps.size() == al2.steps.size());
    for (std::size_t i = 0; i < al1.steps.size(); ++i) {
        CHECK(al1.steps[i].kind == al2.steps[i].kind);
    }
}

TEST_CASE("two-row rendering covers every step") {
    auto a = seq("B EH T");
    auto b = seq("B EH T S");
    auto al = word_distance(a, b, kDefault).alignment;
    auto text = render_alignment(a, b, al);
    CHECK(text.find('-') != std::string::npos);  // the inserted S gap
    CHECK(text.find("EH") != std::string::npos);
}
