#include "phonodist/alignment.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace phonodist {

namespace {

double single_multiplier(const PhonemeSequence& s, std::size_t i, const WeightProfile& w) {
    double m = 1;
    if (s.entry(i).onset) m *= w.onset_multiplier;
    if (s.entry(i).stressed) m *= w.stress_multiplier;
    return m;
}

}  // namespace

WordDistanceResult word_distance(const PhonemeSequence& a, const PhonemeSequence& b,
                                 const WeightProfile& w) {
    if (a.inventory() != b.inventory()) {
        throw MixedInventoryError("word_distance: sequences use different inventories");
    }
    const std::size_t n = a.size();
    const std::size_t m = b.size();

    // Per-step costs. A substitution is reweighted by the larger of the
    // two positions' multipliers; an indel by its own position's.
    auto subst_cost = [&](std::size_t i, std::size_t j) {
        double mult = std::max(single_multiplier(a, i, w), single_multiplier(b, j, w));
        return mult * phoneme_distance(a.phoneme(i), b.phoneme(j), w);
    };
    auto delete_cost = [&](std::size_t i) { return single_multiplier(a, i, w) * w.indel_cost; };
    auto insert_cost = [&](std::size_t j) { return single_multiplier(b, j, w) * w.indel_cost; };

    std::vector<double> dp((n + 1) * (m + 1));
    auto at = [&](std::size_t i, std::size_t j) -> double& { return dp[i * (m + 1) + j]; };
    at(0, 0) = 0;
    for (std::size_t i = 1; i <= n; ++i) at(i, 0) = at(i - 1, 0) + delete_cost(i - 1);
    for (std::size_t j = 1; j <= m; ++j) at(0, j) = at(0, j - 1) + insert_cost(j - 1);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            double best = at(i - 1, j - 1) + subst_cost(i - 1, j - 1);
            best = std::min(best, at(i - 1, j) + delete_cost(i - 1));
            best = std::min(best, at(i, j - 1) + insert_cost(j - 1));
            at(i, j) = best;
        }
    }

    Alignment al;
    al.total_cost = at(n, m);
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + subst_cost(i - 1, j - 1)) {
            double c = subst_cost(i - 1, j - 1);
            bool match = a.phoneme(i - 1).features == b.phoneme(j - 1).features;
            al.steps.push_back({match ? StepKind::Match : StepKind::Subst, i - 1, j - 1, c});
            --i;
            --j;
        } else if (i > 0 && at(i, j) == at(i - 1, j) + delete_cost(i - 1)) {
            al.steps.push_back({StepKind::Delete, i - 1, AlignmentStep::npos, delete_cost(i - 1)});
            --i;
        } else {
            al.steps.push_back({StepKind::Insert, AlignmentStep::npos, j - 1, insert_cost(j - 1)});
            --j;
        }
    }
    std::reverse(al.steps.begin(), al.steps.end());
    return {al.total_cost, std::move(al)};
}

std::vector<Neighbor> knn(const PhonemeSequence& query, const Lexicon& lexicon,
                          std::size_t k, const WeightProfile& w) {
    if (k < 1) throw Error("knn: k must be >= 1");
    if (lexicon.empty()) throw Error("knn: empty lexicon");
    std::vector<Neighbor> all;
    all.reserve(lexicon.size());
    for (const auto& entry : lexicon) {
        all.push_back({entry, word_distance(query, entry.pron, w).distance});
    }
    std::stable_sort(all.begin(), all.end(), [](const Neighbor& x, const Neighbor& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        auto xs = x.entry.pron.format();
        auto ys = y.entry.pron.format();
        if (xs != ys) return xs < ys;
        return x.entry.word < y.entry.word;
    });
    if (all.size() > k) all.erase(all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
    return all;
}

std::string render_alignment(const PhonemeSequence& a, const PhonemeSequence& b,
                             const Alignment& al) {
    std::vector<std::string> top, bottom, marks;
    for (const auto& step : al.steps) {
        std::string t = step.kind == StepKind::Insert ? "-" : a.phoneme(step.i).symbol;
        std::string u = step.kind == StepKind::Delete ? "-" : b.phoneme(step.j).symbol;
        std::size_t width = std::max(t.size(), u.size());
        t.resize(width, ' ');
        u.resize(width, ' ');
        top.push_back(t);
        bottom.push_back(u);
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < top.size(); ++i) out << (i ? " " : "") << top[i];
    out << '\n';
    for (std::size_t i = 0; i < bottom.size(); ++i) out << (i ? " " : "") << bottom[i];
    out << '\n';
    return out.str();
}

}  // namespace phonodist
