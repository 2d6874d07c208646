#include "frx/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>

namespace frx {

Word parseWord(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    if (tokens.size() == 1 && tokens[0] == "-") return {};
    Word w;
    w.reserve(tokens.size());
    for (auto& t : tokens) w.emplace_back(std::move(t));
    return w;
}

std::string renderWord(const Word& w) {
    if (w.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += w[i].name();
    }
    return out;
}

BoundedLanguage BoundedLanguage::epsilonOnly(std::size_t bound) {
    BoundedLanguage l(bound);
    l.insert({});
    return l;
}

void BoundedLanguage::insert(Word w) {
    if (w.size() <= bound_) words_.insert(std::move(w));
}

void BoundedLanguage::insertAll(const BoundedLanguage& other) {
    for (const auto& w : other.words_) insert(w);
}

BoundedLanguage BoundedLanguage::truncated(std::size_t newBound) const {
    BoundedLanguage out(newBound);
    for (const auto& w : words_) out.insert(w);
    return out;
}

std::vector<Word> BoundedLanguage::sortedByLength() const {
    std::vector<Word> out(words_.begin(), words_.end());
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() < b.size();
    });
    return out;
}

namespace {

void shuffleInto(const Word& v, std::size_t vi, const Word& w, std::size_t wi, Word& acc,
                 std::set<Word>& out) {
    if (vi == v.size()) {
        Word result = acc;
        result.insert(result.end(), w.begin() + static_cast<std::ptrdiff_t>(wi), w.end());
        out.insert(std::move(result));
        return;
    }
    if (wi == w.size()) {
        Word result = acc;
        result.insert(result.end(), v.begin() + static_cast<std::ptrdiff_t>(vi), v.end());
        out.insert(std::move(result));
        return;
    }
    acc.push_back(v[vi]);
    shuffleInto(v, vi + 1, w, wi, acc, out);
    acc.back() = w[wi];
    shuffleInto(v, vi, w, wi + 1, acc, out);
    acc.pop_back();
}

}  // namespace

std::set<Word> shuffleWords(const Word& v, const Word& w) {
    std::set<Word> out;
    Word acc;
    acc.reserve(v.size() + w.size());
    shuffleInto(v, 0, w, 0, acc, out);
    return out;
}

BoundedLanguage shuffleLanguages(const BoundedLanguage& l, const BoundedLanguage& m,
                                 std::size_t bound) {
    BoundedLanguage out(bound);
    for (const auto& v : l.words()) {
        for (const auto& w : m.words()) {
            if (v.size() + w.size() > bound) continue;  // shuffles preserve total length
            for (auto& s : shuffleWords(v, w)) out.insert(s);
        }
    }
    return out;
}

namespace {

// One evaluation of traceLanguage. The {eps}-continuation languages needed by
// fork nodes are cached per (node, bound): star fixpoints re-evaluate their
// body once per iteration, and without the cache nested forks under stars
// recompute the same closed language every time.
class Evaluator {
public:
    BoundedLanguage trace(const Behavior& r, const BoundedLanguage& k, std::size_t bound) {
        BoundedLanguage kt = k.bound() == bound ? k : k.truncated(bound);
        switch (r.op()) {
            case Op::Empty:
                return BoundedLanguage(bound);
            case Op::Eps:
                return kt;
            case Op::Sym: {
                BoundedLanguage out(bound);
                for (const auto& w : kt.words()) {
                    if (w.size() + 1 > bound) continue;
                    Word prefixed;
                    prefixed.reserve(w.size() + 1);
                    prefixed.push_back(r.symbol());
                    prefixed.insert(prefixed.end(), w.begin(), w.end());
                    out.insert(std::move(prefixed));
                }
                return out;
            }
            case Op::Alt: {
                BoundedLanguage out = trace(r.left(), kt, bound);
                out.insertAll(trace(r.right(), kt, bound));
                return out;
            }
            case Op::Seq:
                return trace(r.left(), trace(r.right(), kt, bound), bound);
            case Op::Star: {
                // Kleene iteration from the empty set over the finite lattice
                // of word sets of length <= bound.
                Behavior body = r.body();
                BoundedLanguage x(bound);
                while (true) {
                    BoundedLanguage next = trace(body, x, bound);
                    next.insertAll(kt);
                    if (next == x) return x;
                    x = std::move(next);
                }
            }
            case Op::Fork:
                return shuffleLanguages(closed(r.body(), bound), kt, bound);
        }
        return BoundedLanguage(bound);
    }

private:
    BoundedLanguage closed(const Behavior& r, std::size_t bound) {
        auto key = std::make_pair(r.id(), bound);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        BoundedLanguage result = trace(r, BoundedLanguage::epsilonOnly(bound), bound);
        return cache_.emplace(key, std::move(result)).first->second;
    }

    std::map<std::pair<const void*, std::size_t>, BoundedLanguage> cache_;
};

}  // namespace

BoundedLanguage traceLanguage(const Behavior& r, const BoundedLanguage& k, std::size_t bound) {
    return Evaluator{}.trace(r, k, bound);
}

BoundedLanguage language(const Behavior& r, std::size_t bound) {
    return Evaluator{}.trace(r, BoundedLanguage::epsilonOnly(bound), bound);
}

namespace {

BoundedLanguage concatenate(const BoundedLanguage& a, const BoundedLanguage& b,
                            std::size_t bound) {
    BoundedLanguage out(bound);
    for (const auto& v : a.words()) {
        if (v.size() > bound) continue;
        for (const auto& w : b.words()) {
            if (v.size() + w.size() > bound) continue;
            Word joined = v;
            joined.insert(joined.end(), w.begin(), w.end());
            out.insert(std::move(joined));
        }
    }
    return out;
}

}  // namespace

BoundedLanguage regularLanguage(const Behavior& r, std::size_t bound) {
    switch (r.op()) {
        case Op::Empty:
            return BoundedLanguage(bound);
        case Op::Eps:
            return BoundedLanguage::epsilonOnly(bound);
        case Op::Sym: {
            BoundedLanguage out(bound);
            out.insert({r.symbol()});
            return out;
        }
        case Op::Alt: {
            BoundedLanguage out = regularLanguage(r.left(), bound);
            out.insertAll(regularLanguage(r.right(), bound));
            return out;
        }
        case Op::Seq:
            return concatenate(regularLanguage(r.left(), bound), regularLanguage(r.right(), bound),
                               bound);
        case Op::Star: {
            BoundedLanguage base = regularLanguage(r.body(), bound);
            BoundedLanguage out = BoundedLanguage::epsilonOnly(bound);
            while (true) {
                BoundedLanguage next = concatenate(base, out, bound);
                next.insertAll(out);
                if (next == out) return out;
                out = std::move(next);
            }
        }
        case Op::Fork:
            throw std::invalid_argument("regularLanguage: input contains a fork");
    }
    return BoundedLanguage(bound);
}

BoundedLanguage leftQuotient(const Symbol& x, const BoundedLanguage& l) {
    std::size_t newBound = l.bound() == 0 ? 0 : l.bound() - 1;
    BoundedLanguage out(newBound);
    for (const auto& w : l.words()) {
        if (!w.empty() && w.front() == x) {
            out.insert(Word(w.begin() + 1, w.end()));
        }
    }
    return out;
}

bool memberOracle(const Behavior& r, const Word& w) {
    return language(r, w.size()).contains(w);
}

}  // namespace frx
