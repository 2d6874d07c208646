#include "frx/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "frx/decompose.hpp"
#include "frx/derivative.hpp"

namespace frx {

namespace {

void collectStars(const Behavior& r, std::vector<Behavior>& out) {
    switch (r.op()) {
        case Op::Empty:
        case Op::Eps:
        case Op::Sym:
            return;
        case Op::Alt:
        case Op::Seq:
            collectStars(r.left(), out);
            collectStars(r.right(), out);
            return;
        case Op::Star:
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
            collectStars(r.body(), out);
            return;
        case Op::Fork:
            collectStars(r.body(), out);
            return;
    }
}

}  // namespace

WellBehavedReport checkWellBehaved(const Behavior& r) {
    std::vector<Behavior> stars;
    collectStars(r, stars);
    WellBehavedReport report;
    report.certified = true;
    for (const Behavior& star : stars) {
        Canonical body = normalize(star.body());
        bool ok = !body.term().containsFork();
        report.stars.push_back(StarCheck{star, body, ok});
        report.certified = report.certified && ok;
    }
    return report;
}

Dfa::Dfa(std::vector<Canonical> states, Alphabet alphabet,
         std::vector<std::vector<std::size_t>> transitions)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (nullable(states_[i].term())) accepting_.push_back(i);
    }
}

bool Dfa::isAccepting(std::size_t state) const {
    return std::binary_search(accepting_.begin(), accepting_.end(), state);
}

bool Dfa::accepts(const Word& w) const {
    std::size_t state = 0;
    for (const Symbol& x : w) {
        const auto& syms = alphabet_.symbols();
        auto it = std::lower_bound(syms.begin(), syms.end(), x);
        if (it == syms.end() || !(*it == x)) return false;
        state = transitions_[state][static_cast<std::size_t>(it - syms.begin())];
    }
    return isAccepting(state);
}

ExploreResult explore(const Behavior& r, std::size_t maxStates) {
    Alphabet sigma = alphabet(r);
    Canonical start = normalize(r);

    std::vector<Canonical> states{start};
    std::map<Canonical, std::size_t> index{{start, 0}};
    std::vector<std::vector<std::size_t>> transitions;
    std::deque<std::size_t> queue{0};

    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        std::vector<std::size_t> row;
        row.reserve(sigma.size());
        for (const Symbol& x : sigma) {
            Canonical next = deriveCanonical(states[i], x);
            auto it = index.find(next);
            if (it == index.end()) {
                if (states.size() + 1 > maxStates) {
                    std::vector<Canonical> frontier;
                    frontier.push_back(next);
                    for (std::size_t q : queue) frontier.push_back(states[q]);
                    return StateExplosion{std::move(states), std::move(frontier), maxStates};
                }
                it = index.emplace(next, states.size()).first;
                states.push_back(next);
                queue.push_back(it->second);
            }
            row.push_back(it->second);
        }
        transitions.push_back(std::move(row));
    }
    return Dfa(std::move(states), std::move(sigma), std::move(transitions));
}

StateCount countReachableStates(const Behavior& r, std::size_t cap) {
    ExploreResult result = explore(r, cap);
    if (const Dfa* dfa = std::get_if<Dfa>(&result)) {
        std::size_t n = dfa->states().size();
        if (n < cap) return {n, false};
    }
    return {cap, true};
}

namespace {

// Product-space search shared by contains and equivalent. Stops at the first
// pair violating the acceptance relation and rebuilds the shortest word
// leading there from the BFS parent links.
ContainsResult productSearch(const Behavior& r, const Behavior& s, std::size_t maxStates,
                             bool force, bool bothDirections) {
    if (!force && (!checkWellBehaved(r).certified || !checkWellBehaved(s).certified)) {
        return {ContainsStatus::NotCertified, {}, 0};
    }

    Alphabet sigma = alphabet(r).unionWith(alphabet(s));
    using Pair = std::pair<Canonical, Canonical>;
    Pair start{normalize(r), normalize(s)};

    std::vector<Pair> pairs{start};
    std::map<Pair, std::size_t> index{{start, 0}};
    std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};  // (pair, symbol)
    std::deque<std::size_t> queue{0};

    auto witnessFor = [&](std::size_t i) {
        Word w;
        while (i != 0) {
            w.push_back(sigma.symbols()[parent[i].second]);
            i = parent[i].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    auto violates = [&](const Pair& p) {
        bool a = nullable(p.first.term());
        bool b = nullable(p.second.term());
        return bothDirections ? a != b : (a && !b);
    };

    if (violates(start)) return {ContainsStatus::NotContained, {}, 1};

    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            const Symbol& x = sigma.symbols()[j];
            Pair next{deriveCanonical(pairs[i].first, x), deriveCanonical(pairs[i].second, x)};
            auto it = index.find(next);
            if (it != index.end()) continue;
            if (pairs.size() + 1 > maxStates) {
                return {ContainsStatus::StateExplosion, {}, pairs.size()};
            }
            std::size_t id = pairs.size();
            index.emplace(next, id);
            pairs.push_back(next);
            parent.emplace_back(i, j);
            if (violates(pairs[id])) {
                return {ContainsStatus::NotContained, witnessFor(id), pairs.size()};
            }
            queue.push_back(id);
        }
    }
    return {ContainsStatus::Contained, {}, pairs.size()};
}

}  // namespace

ContainsResult contains(const Behavior& r, const Behavior& s, std::size_t maxStates, bool force) {
    return productSearch(r, s, maxStates, force, false);
}

ContainsResult equivalent(const Behavior& r, const Behavior& s, std::size_t maxStates,
                          bool force) {
    return productSearch(r, s, maxStates, force, true);
}

namespace {

std::string escaped(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string toDot(const Dfa& d) {
    std::string out = "digraph frx {\n  rankdir=LR;\n  init [shape=point, label=\"\"];\n";
    for (std::size_t i = 0; i < d.states().size(); ++i) {
        out += "  s" + std::to_string(i) + " [label=\"" + escaped(render(d.states()[i].term())) +
               "\", shape=" + (d.isAccepting(i) ? "doublecircle" : "circle") + "];\n";
    }
    out += "  init -> s0;\n";
    for (std::size_t i = 0; i < d.states().size(); ++i) {
        for (std::size_t j = 0; j < d.alphabet().size(); ++j) {
            out += "  s" + std::to_string(i) + " -> s" + std::to_string(d.transitions()[i][j]) +
                   " [label=\"" + escaped(d.alphabet().symbols()[j].name()) + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

std::string toJson(const Dfa& d) {
    std::string out = "{\"states\":[";
    for (std::size_t i = 0; i < d.states().size(); ++i) {
        if (i > 0) out += ',';
        out += '"' + escaped(render(d.states()[i].term())) + '"';
    }
    out += "],\"alphabet\":[";
    for (std::size_t j = 0; j < d.alphabet().size(); ++j) {
        if (j > 0) out += ',';
        out += '"' + escaped(d.alphabet().symbols()[j].name()) + '"';
    }
    out += "],\"start\":0,\"accepting\":[";
    for (std::size_t i = 0; i < d.accepting().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(d.accepting()[i]);
    }
    out += "],\"transitions\":[";
    bool first = true;
    for (std::size_t i = 0; i < d.states().size(); ++i) {
        for (std::size_t j = 0; j < d.alphabet().size(); ++j) {
            if (!first) out += ',';
            first = false;
            out += '[' + std::to_string(i) + ",\"" + escaped(d.alphabet().symbols()[j].name()) +
                   "\"," + std::to_string(d.transitions()[i][j]) + ']';
        }
    }
    out += "]}";
    return out;
}

}  // namespace frx
