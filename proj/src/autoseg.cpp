#include "phonodist/autoseg.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>

namespace phonodist {
namespace autoseg {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

}  // namespace

int TierAutomaton::symbol_index(std::string_view symbol) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i] == symbol) return static_cast<int>(i);
    }
    return -1;
}

void TierAutomaton::add_transition(int from, std::string_view symbol, int to) {
    int sym = symbol_index(symbol);
    if (sym < 0) {
        throw ValidationError("tier '" + tier + "': symbol '" + std::string(symbol) +
                              "' not in alphabet");
    }
    if (from < 0 || from >= num_states || to < 0 || to >= num_states) {
        throw ValidationError("tier '" + tier + "': transition state out of range");
    }
    transitions.resize(num_states);
    for (auto& row : transitions) row.resize(alphabet.size());
    auto& succ = transitions[from][sym];
    if (std::find(succ.begin(), succ.end(), to) == succ.end()) {
        succ.push_back(to);
        std::sort(succ.begin(), succ.end());
    }
}

void TierAutomaton::validate() const {
    if (alphabet.empty()) throw ValidationError("tier '" + tier + "': empty alphabet");
    if (num_states <= 0) throw ValidationError("tier '" + tier + "': no states");
    if (start < 0 || start >= num_states) {
        throw ValidationError("tier '" + tier + "': start state out of range");
    }
    for (int s : accepting) {
        if (s < 0 || s >= num_states) {
            throw ValidationError("tier '" + tier + "': accepting state out of range");
        }
    }
    for (const auto& row : transitions) {
        for (const auto& succ : row) {
            for (int s : succ) {
                if (s < 0 || s >= num_states) {
                    throw ValidationError("tier '" + tier + "': transition state out of range");
                }
            }
        }
    }
}

void AutosegWord::validate() const {
    for (const auto& [name, automaton] : tiers) {
        automaton.validate();
        if (automaton.tier != name) {
            throw ValidationError("tier key '" + name + "' does not match tier name");
        }
    }
    for (const auto& pin : pinnings) {
        auto a = tiers.find(pin.tier_a);
        auto b = tiers.find(pin.tier_b);
        if (a == tiers.end() || b == tiers.end()) {
            throw ValidationError("pinning references missing tier '" +
                                  (a == tiers.end() ? pin.tier_a : pin.tier_b) + "'");
        }
        if (pin.state_a < 0 || pin.state_a >= a->second.num_states ||
            pin.state_b < 0 || pin.state_b >= b->second.num_states) {
            throw ValidationError("pinning references state out of range");
        }
    }
}

TierAutomaton from_sequence(std::string_view tier, const std::vector<std::string>& symbols) {
    if (symbols.empty()) throw Error("from_sequence: empty sequence");
    TierAutomaton a;
    a.tier = std::string(tier);
    for (const auto& s : symbols) {
        if (a.symbol_index(s) < 0) a.alphabet.push_back(s);
    }
    a.num_states = static_cast<int>(symbols.size()) + 1;
    a.start = 0;
    a.accepting = {a.num_states - 1};
    a.transitions.assign(a.num_states, std::vector<std::vector<int>>(a.alphabet.size()));
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        a.add_transition(static_cast<int>(i), symbols[i], static_cast<int>(i) + 1);
    }
    return a;
}

bool accepts(const TierAutomaton& a, const std::vector<std::string>& word) {
    std::set<int> current = {a.start};
    for (const auto& symbol : word) {
        int sym = a.symbol_index(symbol);
        if (sym < 0) return false;
        std::set<int> next;
        for (int s : current) {
            if (s < static_cast<int>(a.transitions.size()) &&
                sym < static_cast<int>(a.transitions[s].size())) {
                for (int t : a.transitions[s][sym]) next.insert(t);
            }
        }
        current = std::move(next);
        if (current.empty()) return false;
    }
    for (int s : current) {
        if (a.accepting.count(s)) return true;
    }
    return false;
}

namespace {

struct ResolvedPinning {
    std::size_t tier_a;
    int state_a;
    std::size_t tier_b;
    int state_b;
};

bool violates(const std::vector<int>& tuple, const std::vector<ResolvedPinning>& pins) {
    for (const auto& p : pins) {
        if ((tuple[p.tier_a] == p.state_a) != (tuple[p.tier_b] == p.state_b)) return true;
    }
    return false;
}

}  // namespace

TierAutomaton intersect(const std::vector<TierAutomaton>& automata,
                        const std::vector<Pinning>& pinnings,
                        std::size_t state_budget, IntersectStats* stats) {
    if (automata.size() < 2) throw Error("intersect: need at least 2 automata");
    const auto& alphabet = automata[0].alphabet;
    for (const auto& a : automata) {
        a.validate();
        if (a.alphabet != alphabet) {
            throw ValidationError("intersect: alphabet mismatch in tier '" + a.tier + "'");
        }
    }

    std::map<std::string, std::size_t> tier_index;
    for (std::size_t i = 0; i < automata.size(); ++i) {
        if (!tier_index.emplace(automata[i].tier, i).second) {
            throw ValidationError("intersect: duplicate tier name '" + automata[i].tier + "'");
        }
    }
    std::vector<ResolvedPinning> pins;
    for (const auto& p : pinnings) {
        auto a = tier_index.find(p.tier_a);
        auto b = tier_index.find(p.tier_b);
        if (a == tier_index.end() || b == tier_index.end()) {
            throw ValidationError("intersect: pinning references unknown tier '" +
                                  (a == tier_index.end() ? p.tier_a : p.tier_b) + "'");
        }
        if (p.state_a < 0 || p.state_a >= automata[a->second].num_states ||
            p.state_b < 0 || p.state_b >= automata[b->second].num_states) {
            throw ValidationError("intersect: pinning references state out of range");
        }
        pins.push_back({a->second, p.state_a, b->second, p.state_b});
    }

    TierAutomaton product;
    for (std::size_t i = 0; i < automata.size(); ++i) {
        if (i) product.tier += "&";
        product.tier += automata[i].tier;
    }
    product.alphabet = alphabet;

    std::vector<int> start_tuple;
    start_tuple.reserve(automata.size());
    for (const auto& a : automata) start_tuple.push_back(a.start);

    std::map<std::vector<int>, int> ids;
    std::deque<std::vector<int>> frontier;
    std::vector<std::vector<int>> tuples;

    std::size_t visited = 0;
    auto intern = [&](const std::vector<int>& tuple) -> int {
        auto [it, fresh] = ids.emplace(tuple, static_cast<int>(ids.size()));
        if (fresh) {
            if (++visited > state_budget) {
                throw ResourceLimitError("intersect: product-state budget of " +
                                         std::to_string(state_budget) + " exceeded");
            }
            tuples.push_back(tuple);
            frontier.push_back(tuple);
        }
        return it->second;
    };

    struct Edge {
        int from, sym, to;
    };
    std::vector<Edge> edges;

    const bool start_ok = !violates(start_tuple, pins);
    if (start_ok) intern(start_tuple);

    std::vector<int> next(automata.size());
    while (!frontier.empty()) {
        std::vector<int> tuple = std::move(frontier.front());
        frontier.pop_front();
        int from = ids.at(tuple);
        for (std::size_t sym = 0; sym < alphabet.size(); ++sym) {
            // every component must move; enumerate all successor combos
            std::vector<const std::vector<int>*> options(automata.size());
            bool dead = false;
            for (std::size_t i = 0; i < automata.size(); ++i) {
                options[i] = &automata[i].transitions[tuple[i]][sym];
                if (options[i]->empty()) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            std::vector<std::size_t> pick(automata.size(), 0);
            while (true) {
                for (std::size_t i = 0; i < automata.size(); ++i) next[i] = (*options[i])[pick[i]];
                if (!violates(next, pins)) {
                    int to = intern(next);
                    edges.push_back({from, static_cast<int>(sym), to});
                }
                std::size_t i = 0;
                while (i < pick.size() && ++pick[i] == options[i]->size()) {
                    pick[i] = 0;
                    ++i;
                }
                if (i == pick.size()) break;
            }
        }
    }

    if (stats) stats->product_states_visited = visited;

    if (!start_ok || tuples.empty()) {
        // start tuple itself violates a pinning: empty language
        product.num_states = 1;
        product.start = 0;
        product.transitions.assign(1, std::vector<std::vector<int>>(alphabet.size()));
        return product;
    }

    product.num_states = static_cast<int>(tuples.size());
    product.start = 0;  // the start tuple was interned first
    product.transitions.assign(product.num_states,
                               std::vector<std::vector<int>>(alphabet.size()));
    for (const auto& e : edges) {
        auto& succ = product.transitions[e.from][e.sym];
        if (std::find(succ.begin(), succ.end(), e.to) == succ.end()) succ.push_back(e.to);
    }
    for (auto& row : product.transitions) {
        for (auto& succ : row) std::sort(succ.begin(), succ.end());
    }
    for (int id = 0; id < product.num_states; ++id) {
        bool all_accept = true;
        for (std::size_t i = 0; i < automata.size(); ++i) {
            if (!automata[i].accepting.count(tuples[id][i])) {
                all_accept = false;
                break;
            }
        }
        if (all_accept) product.accepting.insert(id);
    }
    return product;
}

bool is_empty(const TierAutomaton& a) {
    std::vector<bool> seen(a.num_states, false);
    std::deque<int> queue = {a.start};
    seen[a.start] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        if (a.accepting.count(s)) return false;
        if (s < static_cast<int>(a.transitions.size())) {
            for (const auto& succ : a.transitions[s]) {
                for (int t : succ) {
                    if (!seen[t]) {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
    }
    return true;
}

bool compatible(const AutosegWord& w1, const AutosegWord& w2,
                const std::vector<CrossPinning>& cross_pinnings,
                std::size_t state_budget) {
    w1.validate();
    w2.validate();
    if (w1.tiers.size() != w2.tiers.size()) {
        throw ValidationError("compatible: words have different tier sets");
    }
    for (const auto& [name, t1] : w1.tiers) {
        auto it = w2.tiers.find(name);
        if (it == w2.tiers.end()) {
            throw ValidationError("compatible: tier '" + name + "' missing from second word");
        }
        auto sorted = [](std::vector<std::string> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sorted(t1.alphabet) != sorted(it->second.alphabet)) {
            throw ValidationError("compatible: alphabet mismatch on tier '" + name + "'");
        }
    }

    // Word-internal pinnings between same-alphabet tiers constrain that
    // word on its own; heterogeneous-alphabet pinnings are structural
    // annotations only in v1.
    auto word_consistent = [&](const AutosegWord& w) {
        for (const auto& pin : w.pinnings) {
            if (pin.tier_a == pin.tier_b) continue;
            const auto& a = w.tiers.at(pin.tier_a);
            const auto& b = w.tiers.at(pin.tier_b);
            if (a.alphabet != b.alphabet) continue;
            TierAutomaton product = intersect({a, b}, {pin}, state_budget);
            if (is_empty(product)) return false;
        }
        return true;
    };
    if (!word_consistent(w1) || !word_consistent(w2)) return false;

    for (const auto& [name, t1] : w1.tiers) {
        TierAutomaton left = t1;
        const TierAutomaton& r = w2.tiers.at(name);
        left.tier = name + "#1";
        // remap the second automaton onto the first one's symbol order
        TierAutomaton right;
        right.tier = name + "#2";
        right.alphabet = left.alphabet;
        right.num_states = r.num_states;
        right.start = r.start;
        right.accepting = r.accepting;
        right.transitions.assign(right.num_states,
                                 std::vector<std::vector<int>>(right.alphabet.size()));
        for (int s = 0; s < r.num_states; ++s) {
            for (std::size_t sym = 0; sym < r.alphabet.size(); ++sym) {
                for (int to : r.transitions[s][sym]) {
                    right.add_transition(s, r.alphabet[sym], to);
                }
            }
        }
        std::vector<Pinning> pins;
        for (const auto& cp : cross_pinnings) {
            if (cp.tier != name) continue;
            pins.push_back({left.tier, cp.state_w1, right.tier, cp.state_w2});
        }
        TierAutomaton product = intersect({left, right}, pins, state_budget);
        if (is_empty(product)) return false;
    }
    return true;
}

namespace {

// Chain backbone with all-symbol self-loops plus a few seeded shortcut
// edges; every product tuple stays reachable, so growth is s^k.
TierAutomaton random_chain_automaton(const std::string& tier, int states, std::mt19937_64& rng) {
    TierAutomaton a;
    a.tier = tier;
    a.alphabet = {"a", "b", "c"};
    a.num_states = states;
    a.start = 0;
    a.accepting = {states - 1};
    a.transitions.assign(states, std::vector<std::vector<int>>(a.alphabet.size()));
    std::uniform_int_distribution<int> sym(0, 2);
    for (int s = 0; s < states; ++s) {
        for (std::size_t k = 0; k < a.alphabet.size(); ++k) {
            a.add_transition(s, a.alphabet[k], s);
        }
        if (s + 1 < states) a.add_transition(s, a.alphabet[sym(rng)], s + 1);
    }
    std::uniform_int_distribution<int> st(0, states - 1);
    for (int extra = 0; extra < states / 2; ++extra) {
        int from = st(rng), to = st(rng);
        if (from < to) a.add_transition(from, a.alphabet[sym(rng)], to);
    }
    return a;
}

}  // namespace

std::vector<ProfileRow> intersection_cost_profile(const std::vector<int>& tier_counts,
                                                  int states_per_tier,
                                                  std::uint64_t seed,
                                                  std::size_t state_budget) {
    if (!std::is_sorted(tier_counts.begin(), tier_counts.end())) {
        throw Error("intersection_cost_profile: tier counts must be ascending");
    }
    std::vector<ProfileRow> rows;
    for (int k : tier_counts) {
        if (k < 2) throw Error("intersection_cost_profile: need at least 2 tiers");
        std::mt19937_64 rng(seed);
        std::vector<TierAutomaton> automata;
        for (int i = 0; i < k; ++i) {
            automata.push_back(random_chain_automaton("t" + std::to_string(i),
                                                      states_per_tier, rng));
        }
        IntersectStats stats;
        auto t0 = std::chrono::steady_clock::now();
        intersect(automata, {}, state_budget, &stats);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back({k, states_per_tier, stats.product_states_visited, ms});
    }
    return rows;
}

AutosegWord parse_word(std::string_view text) {
    AutosegWord word;
    TierAutomaton* current = nullptr;
    struct PendingTrans {
        std::string tier;
        int from;
        std::string symbol;
        int to;
    };
    std::vector<PendingTrans> pending;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("autoseg line " + std::to_string(line_no) + ": " + msg);
    };
    auto to_int = [&](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            fail("bad number '" + s + "'");
            return 0;
        }
    };
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tokens = split_ws(line);
        if (tokens[0] == "tier") {
            if (tokens.size() < 4 || tokens[2] != "alphabet") {
                fail("expected: tier <name> alphabet <symbols...>");
            }
            TierAutomaton a;
            a.tier = tokens[1];
            a.alphabet.assign(tokens.begin() + 3, tokens.end());
            if (word.tiers.count(a.tier)) fail("duplicate tier '" + a.tier + "'");
            current = &word.tiers.emplace(a.tier, std::move(a)).first->second;
        } else if (tokens[0] == "state") {
            if (!current) fail("state before any tier line");
            if (tokens.size() < 2) fail("expected: state <n> [start] [accept]");
            int n = to_int(tokens[1]);
            if (n < 0) fail("negative state number");
            current->num_states = std::max(current->num_states, n + 1);
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                if (tokens[i] == "start") current->start = n;
                else if (tokens[i] == "accept") current->accepting.insert(n);
                else fail("unknown state flag '" + tokens[i] + "'");
            }
        } else if (tokens[0] == "trans") {
            if (!current) fail("trans before any tier line");
            if (tokens.size() != 4) fail("expected: trans <from> <symbol> <to>");
            pending.push_back({current->tier, to_int(tokens[1]), tokens[2], to_int(tokens[3])});
        } else if (tokens[0] == "pin") {
            if (tokens.size() != 3) fail("expected: pin <tierA>:<state> <tierB>:<state>");
            auto parse_ref = [&](const std::string& t) {
                auto colon = t.find(':');
                if (colon == std::string::npos) fail("expected <tier>:<state> in '" + t + "'");
                return std::pair<std::string, int>{t.substr(0, colon),
                                                  to_int(t.substr(colon + 1))};
            };
            auto [ta, sa] = parse_ref(tokens[1]);
            auto [tb, sb] = parse_ref(tokens[2]);
            word.pinnings.push_back({ta, sa, tb, sb});
        } else {
            fail("unknown directive '" + tokens[0] + "'");
        }
    }
    if (word.tiers.empty()) throw ParseError("autoseg: no tiers defined");
    for (const auto& t : pending) {
        auto& a = word.tiers.at(t.tier);
        a.num_states = std::max(a.num_states, std::max(t.from, t.to) + 1);
    }
    for (const auto& t : pending) {
        word.tiers.at(t.tier).add_transition(t.from, t.symbol, t.to);
    }
    word.validate();
    return word;
}

AutosegWord load_word(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open autoseg file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_word(buf.str());
}

std::string format_word(const AutosegWord& word) {
    std::ostringstream out;
    for (const auto& [name, a] : word.tiers) {
        out << "tier " << name << " alphabet";
        for (const auto& s : a.alphabet) out << ' ' << s;
        out << '\n';
        for (int s = 0; s < a.num_states; ++s) {
            out << "state " << s;
            if (s == a.start) out << " start";
            if (a.accepting.count(s)) out << " accept";
            out << '\n';
        }
        for (int s = 0; s < static_cast<int>(a.transitions.size()); ++s) {
            for (std::size_t sym = 0; sym < a.transitions[s].size(); ++sym) {
                for (int to : a.transitions[s][sym]) {
                    out << "trans " << s << ' ' << a.alphabet[sym] << ' ' << to << '\n';
                }
            }
        }
    }
    for (const auto& p : word.pinnings) {
        out << "pin " << p.tier_a << ':' << p.state_a << ' ' << p.tier_b << ':' << p.state_b
            << '\n';
    }
    return out.str();
}

}  // namespace autoseg
}  // namespace phonodist
