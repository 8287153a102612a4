#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phonodist/alignment.hpp"
#include "phonodist/autoseg.hpp"
#include "phonodist/feature_metric.hpp"
#include "phonodist/harness.hpp"
#include "phonodist/lexicon.hpp"
#include "phonodist/soundex.hpp"

namespace py = pybind11;
using namespace phonodist;

namespace {

WeightProfile profile_from_overrides(const py::dict& overrides) {
    std::string text;
    for (const auto& item : overrides) {
        text += py::cast<std::string>(py::str(item.first)) + "=" +
                py::cast<std::string>(py::str(item.second)) + "\n";
    }
    return WeightProfile::from_text(text);
}

struct PySession {
    InventoryPtr inventory = Inventory::default_inventory();
};

}  // namespace

PYBIND11_MODULE(_phonodist, m) {
    m.doc() = "phonetic encoding and distance toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<Error>(m, "PhonodistError", PyExc_RuntimeError);

    m.def("soundex", [](const std::string& name) { return soundex::encode(name).value; },
          py::arg("name"));
    m.def("soundex_code_space", &soundex::code_space_size);
    m.def("soundex_collisions", [](const std::vector<std::string>& names) {
        py::list out;
        for (const auto& c : soundex::collisions(names)) {
            out.append(py::make_tuple(c.code.value, c.members));
        }
        return out;
    });

    m.def(
        "phoneme_distance",
        [](const std::string& a, const std::string& b, const py::dict& weights) {
            auto inv = Inventory::default_inventory();
            return phoneme_distance(inv->lookup(a), inv->lookup(b),
                                    profile_from_overrides(weights));
        },
        py::arg("a"), py::arg("b"), py::arg("weights") = py::dict());

    m.def(
        "template_distance",
        [](const std::string& a, const std::string& b, bool normalize,
           const py::dict& weights) {
            auto inv = Inventory::default_inventory();
            return template_distance(PhonemeSequence::parse(a, inv),
                                     PhonemeSequence::parse(b, inv),
                                     profile_from_overrides(weights), normalize);
        },
        py::arg("a"), py::arg("b"), py::arg("normalize") = false,
        py::arg("weights") = py::dict());

    m.def(
        "word_distance",
        [](const std::string& a, const std::string& b, const py::dict& weights) {
            auto inv = Inventory::default_inventory();
            auto sa = PhonemeSequence::parse(a, inv);
            auto sb = PhonemeSequence::parse(b, inv);
            auto [d, al] = word_distance(sa, sb, profile_from_overrides(weights));
            py::list steps;
            for (const auto& step : al.steps) {
                const char* op = step.kind == StepKind::Match    ? "match"
                                 : step.kind == StepKind::Subst  ? "subst"
                                 : step.kind == StepKind::Insert ? "insert"
                                                                 : "delete";
                steps.append(py::make_tuple(op, step.cost));
            }
            return py::make_tuple(d, steps);
        },
        py::arg("a"), py::arg("b"), py::arg("weights") = py::dict());

    m.def(
        "knn",
        [](const std::string& query, const std::vector<std::pair<std::string, std::string>>& lexicon,
           std::size_t k, const py::dict& weights) {
            auto inv = Inventory::default_inventory();
            Lexicon lex;
            for (const auto& [word, pron] : lexicon) {
                lex.push_back({word, PhonemeSequence::parse(pron, inv)});
            }
            py::list out;
            for (const auto& n :
                 knn(PhonemeSequence::parse(query, inv), lex, k, profile_from_overrides(weights))) {
                out.append(py::make_tuple(n.entry.word, n.distance));
            }
            return out;
        },
        py::arg("query"), py::arg("lexicon"), py::arg("k") = 5,
        py::arg("weights") = py::dict());

    m.def("autoseg_compatible", [](const std::string& word1, const std::string& word2) {
        return autoseg::compatible(autoseg::parse_word(word1), autoseg::parse_word(word2));
    });

    m.def(
        "intersection_cost_profile",
        [](const std::vector<int>& tiers, int states, std::uint64_t seed) {
            py::list out;
            for (const auto& row : autoseg::intersection_cost_profile(tiers, states, seed)) {
                out.append(py::make_tuple(row.tiers, row.product_states_visited));
            }
            return out;
        },
        py::arg("tiers"), py::arg("states"), py::arg("seed") = 0);

    m.def(
        "compare_schemes_json",
        [](const std::vector<std::pair<std::string, std::string>>& lexicon, std::uint64_t seed,
           std::size_t trials) {
            auto inv = Inventory::default_inventory();
            Lexicon lex;
            for (const auto& [word, pron] : lexicon) {
                lex.push_back({word, PhonemeSequence::parse(pron, inv)});
            }
            harness::HarnessConfig config;
            config.seed = seed;
            config.metric_trials = trials;
            return harness::report_to_json(harness::compare_schemes(lex, config), config);
        },
        py::arg("lexicon"), py::arg("seed") = 0, py::arg("trials") = 10000);

    m.def("default_inventory_symbols", [] {
        std::vector<std::string> symbols;
        for (const auto& p : Inventory::default_inventory()->phonemes()) {
            symbols.push_back(p.symbol);
        }
        return symbols;
    });
}
