#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phonodist/alignment.hpp"
#include "phonodist/autoseg.hpp"
#include "phonodist/feature_metric.hpp"
#include "phonodist/harness.hpp"
#include "phonodist/lexicon.hpp"
#include "phonodist/soundex.hpp"

using nlohmann::json;
using namespace phonodist;

namespace {

// exit codes: 0 ok, 1 usage, 2 data/parse, 3 resource budget
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kData = 2;
constexpr int kBudget = 3;

struct CommonOpts {
    std::string inventory_path;
    std::string weights_path;
    std::optional<double> indel_cost;
    bool json_out = false;
    std::uint64_t seed = 0;

    InventoryPtr inventory() const {
        return inventory_path.empty() ? Inventory::default_inventory()
                                      : Inventory::from_file(inventory_path);
    }
    WeightProfile weights() const {
        WeightProfile w = weights_path.empty() ? WeightProfile{}
                                               : WeightProfile::from_file(weights_path);
        if (indel_cost) {
            w.indel_cost = *indel_cost;
            w.validate();
        }
        return w;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_weights = true) {
    cmd->add_option("--inventory", opts.inventory_path, "phoneme inventory TSV");
    if (with_weights) {
        cmd->add_option("--weights", opts.weights_path, "weight profile file");
        cmd->add_option("--indel-cost", opts.indel_cost, "override the indel cost");
    }
    cmd->add_flag("--json", opts.json_out, "emit JSON");
    cmd->add_option("--seed", opts.seed, "random seed (default 0)");
}

json alignment_to_json(const PhonemeSequence& a, const PhonemeSequence& b,
                       const Alignment& al) {
    json steps = json::array();
    for (const auto& step : al.steps) {
        json s;
        switch (step.kind) {
            case StepKind::Match: s["op"] = "match"; break;
            case StepKind::Subst: s["op"] = "subst"; break;
            case StepKind::Insert: s["op"] = "insert"; break;
            case StepKind::Delete: s["op"] = "delete"; break;
        }
        if (step.i != AlignmentStep::npos) {
            s["i"] = step.i;
            s["a"] = a.phoneme(step.i).symbol;
        }
        if (step.j != AlignmentStep::npos) {
            s["j"] = step.j;
            s["b"] = b.phoneme(step.j).symbol;
        }
        s["cost"] = step.cost;
        steps.push_back(std::move(s));
    }
    return json{{"total_cost", al.total_cost}, {"steps", std::move(steps)}};
}

int run(int argc, char** argv) {
    CLI::App app{"phonetic encoding and distance toolkit"};
    app.require_subcommand(1);

    // soundex
    auto* sx = app.add_subcommand("soundex", "encode names with the Russell/SOUNDEX table");
    CommonOpts sx_opts;
    std::vector<std::string> sx_names;
    std::string sx_file;
    sx->add_option("names", sx_names, "names to encode");
    sx->add_option("--file", sx_file, "read names from a file (one per line)");
    sx->add_flag("--json", sx_opts.json_out, "emit JSON");
    sx->callback([&] {
        auto names = sx_names;
        if (!sx_file.empty()) {
            auto from_file = load_name_list(sx_file);
            names.insert(names.end(), from_file.begin(), from_file.end());
        }
        if (names.empty()) throw CLI::ValidationError("soundex", "no names given");
        for (const auto& name : names) {
            auto code = soundex::encode(name);
            if (sx_opts.json_out) {
                std::cout << json{{"name", name}, {"code", code.value}}.dump() << "\n";
            } else {
                std::cout << name << " " << code.value << "\n";
            }
        }
    });

    // collisions
    auto* col = app.add_subcommand("collisions", "group names by SOUNDEX code (JSON-lines)");
    std::string col_file;
    col->add_option("--file", col_file, "name-list file")->required();
    col->callback([&] {
        auto classes = soundex::collisions(load_name_list(col_file));
        for (const auto& c : classes) {
            std::cout << json{{"code", c.code.value},
                              {"size", c.members.size()},
                              {"members", c.members}}
                             .dump()
                      << "\n";
        }
    });

    // dist
    auto* dist = app.add_subcommand("dist", "distance between two phoneme sequences");
    CommonOpts dist_opts;
    std::string seq_a, seq_b;
    bool use_template = false, normalize = false;
    dist->add_option("a", seq_a, "first sequence")->required();
    dist->add_option("b", seq_b, "second sequence")->required();
    dist->add_flag("--template", use_template, "positionwise template distance (equal lengths)");
    dist->add_flag("--normalize", normalize, "divide by sequence length");
    add_common(dist, dist_opts);
    dist->callback([&] {
        auto inv = dist_opts.inventory();
        auto w = dist_opts.weights();
        auto a = PhonemeSequence::parse(seq_a, inv);
        auto b = PhonemeSequence::parse(seq_b, inv);
        if (use_template) {
            double d = template_distance(a, b, w, normalize);
            if (dist_opts.json_out) {
                std::cout << json{{"distance", d}, {"mode", "template"}}.dump() << "\n";
            } else {
                std::cout << d << "\n";
            }
            return;
        }
        auto [d, al] = word_distance(a, b, w);
        if (normalize && std::max(a.size(), b.size()) > 0) {
            d /= static_cast<double>(std::max(a.size(), b.size()));
        }
        if (dist_opts.json_out) {
            json out = alignment_to_json(a, b, al);
            out["distance"] = d;
            out["mode"] = "word";
            std::cout << out.dump() << "\n";
        } else {
            std::cout << d << "\n" << render_alignment(a, b, al);
        }
    });

    // knn
    auto* nn = app.add_subcommand("knn", "nearest lexicon entries to a query sequence");
    CommonOpts nn_opts;
    std::string nn_query, nn_lexicon;
    std::size_t nn_k = 5;
    nn->add_option("query", nn_query, "query sequence")->required();
    nn->add_option("--lexicon", nn_lexicon, "lexicon TSV")->required();
    nn->add_option("-k,--k", nn_k, "neighbour count");
    add_common(nn, nn_opts);
    nn->callback([&] {
        auto inv = nn_opts.inventory();
        auto lex = load_lexicon(nn_lexicon, inv);
        auto query = PhonemeSequence::parse(nn_query, inv);
        auto neighbors = knn(query, lex, nn_k, nn_opts.weights());
        for (const auto& n : neighbors) {
            if (nn_opts.json_out) {
                std::cout << json{{"word", n.entry.word},
                                  {"pron", n.entry.pron.format()},
                                  {"distance", n.distance}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << n.entry.word << "\t" << n.distance << "\t"
                          << n.entry.pron.format() << "\n";
            }
        }
    });

    // autoseg
    auto* as = app.add_subcommand("autoseg", "tier-automaton compatibility of two word files");
    std::string as_file1, as_file2;
    std::size_t as_budget = autoseg::kDefaultStateBudget;
    bool as_json = false;
    as->add_option("word1", as_file1, "first autoseg word file")->required();
    as->add_option("word2", as_file2, "second autoseg word file")->required();
    as->add_option("--budget", as_budget, "product-state budget");
    as->add_flag("--json", as_json, "emit JSON");
    as->callback([&] {
        auto w1 = autoseg::load_word(as_file1);
        auto w2 = autoseg::load_word(as_file2);
        bool ok = autoseg::compatible(w1, w2, {}, as_budget);
        if (as_json) {
            std::cout << json{{"compatible", ok}}.dump() << "\n";
        } else {
            std::cout << (ok ? "compatible" : "incompatible") << "\n";
        }
    });

    // eval
    auto* ev = app.add_subcommand("eval", "comparative desiderata report over a lexicon");
    CommonOpts ev_opts;
    std::string ev_lexicon, ev_gold;
    std::size_t ev_trials = 10000;
    bool ev_timings = false;
    ev->add_option("--lexicon", ev_lexicon, "lexicon TSV")->required();
    ev->add_option("--gold", ev_gold, "gold-pair file for SOUNDEX discrimination");
    ev->add_option("--trials", ev_trials, "metric-axiom trials");
    ev->add_flag("--timings", ev_timings, "include wall-clock timings (non-deterministic)");
    add_common(ev, ev_opts, /*with_weights=*/false);
    ev->callback([&] {
        auto inv = ev_opts.inventory();
        auto lex = load_lexicon(ev_lexicon, inv);
        harness::HarnessConfig config;
        config.seed = ev_opts.seed;
        config.metric_trials = ev_trials;
        config.include_timings = ev_timings;
        auto reports = harness::compare_schemes(lex, config);
        if (ev_opts.json_out) {
            std::cout << harness::report_to_json(reports, config);
        } else {
            std::cout << harness::report_to_text(reports, config);
        }
        if (!ev_gold.empty()) {
            std::vector<std::string> names;
            for (const auto& e : lex) names.push_back(e.word);
            auto gold = harness::load_gold_pairs(ev_gold);
            // gold pairs may reference a separate name universe; use it directly
            std::vector<std::string> universe = names;
            for (const auto& g : gold) {
                universe.push_back(g.name1);
                universe.push_back(g.name2);
            }
            auto counts = harness::soundex_discrimination(universe, gold);
            if (ev_opts.json_out) {
                std::cout << json{{"soundex_discrimination",
                                   {{"true_positive", counts.true_positive},
                                    {"false_positive", counts.false_positive},
                                    {"true_negative", counts.true_negative},
                                    {"false_negative", counts.false_negative}}}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "\nsoundex discrimination: TP " << counts.true_positive
                          << " FP " << counts.false_positive << " TN "
                          << counts.true_negative << " FN " << counts.false_negative << "\n";
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
