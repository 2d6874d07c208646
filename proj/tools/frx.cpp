// frx — forkable-regular-expression toolbox.
//
// Exit codes: 0 = yes/success, 1 = no/negative answer, 2 = usage or parse
// error, 3 = state explosion or uncertified operand. Negative answers go to
// stdout; only diagnostics go to stderr.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frx/automaton.hpp"
#include "frx/decompose.hpp"
#include "frx/derivative.hpp"
#include "frx/generate.hpp"
#include "frx/normalize.hpp"
#include "frx/oracle.hpp"
#include "frx/syntax.hpp"

namespace {

using namespace frx;

std::size_t envOr(const char* name, std::size_t fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    return static_cast<std::size_t>(std::stoull(value));
}

void printChain(const Behavior& r, const Word& w) {
    Canonical c = normalize(r);
    std::cout << render(c.term()) << "\n";
    for (const Symbol& x : w) {
        c = deriveCanonical(c, x);
        std::cout << "--" << x.name() << "--> " << render(c.term()) << "\n";
    }
}

int runMatch(const std::string& exprText, const std::string& wordText, bool steps) {
    Behavior r = parse(exprText);
    Word w = parseWord(wordText);
    if (steps) printChain(r, w);
    if (match(r, w)) {
        std::cout << "match\n";
        return 0;
    }
    std::cout << "no match\n";
    return 1;
}

int runEnumerate(const std::string& exprText, std::size_t bound) {
    std::size_t limit = envOr("FRX_MAX_BOUND", 10);
    if (bound > limit) {
        std::cerr << "bound " << bound << " exceeds limit " << limit
                  << " (set FRX_MAX_BOUND to raise)\n";
        return 2;
    }
    Behavior r = parse(exprText);
    for (const Word& w : language(r, bound).sortedByLength()) {
        std::cout << renderWord(w) << "\n";
    }
    return 0;
}

int runDfa(const std::string& exprText, const std::string& format, std::size_t maxStates) {
    Behavior r = parse(exprText);
    ExploreResult result = explore(r, maxStates);
    if (const auto* boom = std::get_if<StateExplosion>(&result)) {
        std::cerr << "state explosion: >= " << boom->states.size()
                  << " distinct states (limit " << boom->maxStates << "), "
                  << boom->frontier.size() << " unexpanded; the expression is not certified"
                  << " well-behaved\n";
        return 3;
    }
    const Dfa& dfa = std::get<Dfa>(result);
    std::cout << (format == "json" ? toJson(dfa) + "\n" : toDot(dfa));
    return 0;
}

int runCheck(const std::string& exprText) {
    WellBehavedReport report = checkWellBehaved(parse(exprText));
    for (const StarCheck& entry : report.stars) {
        std::cout << render(entry.subterm) << ": "
                  << (entry.certified ? "certified" : "unknown") << " (body normalizes to "
                  << render(entry.bodyNormal.term()) << ")\n";
    }
    std::cout << (report.certified ? "certified" : "unknown") << "\n";
    return report.certified ? 0 : 1;
}

int reportContainment(const ContainsResult& result, const char* yes, const char* no) {
    switch (result.status) {
        case ContainsStatus::Contained:
            std::cout << yes << "\n";
            return 0;
        case ContainsStatus::NotContained:
            std::cout << no << ", witness: " << renderWord(result.witness) << "\n";
            return 1;
        case ContainsStatus::NotCertified:
            std::cerr << "operand not certified well-behaved; rerun with --force for a"
                      << " bounded best-effort answer\n";
            return 3;
        case ContainsStatus::StateExplosion:
            std::cerr << "state explosion after " << result.pairsExplored
                      << " state pairs\n";
            return 3;
    }
    return 3;
}

int runContains(const std::string& leftText, const std::string& rightText,
                std::size_t maxStates, bool force, bool equivalence) {
    Behavior l = parse(leftText);
    Behavior r = parse(rightText);
    ContainsResult result = equivalence ? equivalent(l, r, maxStates, force)
                                        : contains(l, r, maxStates, force);
    return equivalence ? reportContainment(result, "equivalent", "not equivalent")
                       : reportContainment(result, "contained", "not contained");
}

int runNormalize(const std::string& exprText, bool showTrace) {
    Behavior r = parse(exprText);
    if (showTrace) {
        std::vector<std::string> trace;
        Canonical c = normalize(r, trace);
        for (const std::string& line : trace) std::cout << line << "\n";
        std::cout << render(c.term()) << "\n";
    } else {
        std::cout << render(normalize(r).term()) << "\n";
    }
    return 0;
}

int runDecompose(const std::string& exprText) {
    Behavior r = parse(exprText);
    Behavior conc = concPart(r);
    Behavior seq = seqPart(r);
    std::cout << "conc:      " << render(conc) << "\n";
    std::cout << "conc-norm: " << render(normalize(conc).term()) << "\n";
    std::cout << "seq:       " << render(seq) << "\n";
    std::cout << "seq-norm:  " << render(normalize(seq).term()) << "\n";
    return 0;
}

int runDerive(const std::string& exprText, const std::string& wordText) {
    printChain(parse(exprText), parseWord(wordText));
    return 0;
}

int runCountStates(const std::string& exprText, std::size_t cap) {
    StateCount count = countReachableStates(parse(exprText), cap);
    if (count.atLeast) {
        std::cout << ">= " << count.count << "\n";
        return 3;
    }
    std::cout << count.count << "\n";
    return 0;
}

int runGen(std::uint64_t seed, std::size_t count, std::size_t size,
           const std::string& alphabetText, const std::string& modeText) {
    GenMode mode = GenMode::Any;
    if (modeText == "fork-free") mode = GenMode::ForkFree;
    if (modeText == "certified") mode = GenMode::Certified;
    std::vector<Symbol> sigma;
    for (const Symbol& s : parseWord(alphabetText)) sigma.push_back(s);
    ExprGen gen(seed, GenOptions{std::move(sigma), size, mode});
    for (std::size_t i = 0; i < count; ++i) {
        std::cout << render(gen.next()) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forkable regular expressions: matching, enumeration, automata"};
    app.require_subcommand(1);

    std::size_t defaultMaxStates = envOr("FRX_MAX_STATES", kDefaultMaxStates);

    std::string expr, word, right;
    bool steps = false, force = false, showTrace = false;
    std::size_t bound = 4;
    std::size_t maxStates = defaultMaxStates;
    std::string format = "dot";
    std::uint64_t seed = 42;
    std::size_t genCount = 10, genSize = 15;
    std::string genAlphabet = "a b c", genMode = "any";

    int exitCode = 0;
    auto* cmdMatch = app.add_subcommand("match", "match a word against an expression");
    cmdMatch->add_option("expr", expr)->required();
    cmdMatch->add_option("word", word)->required();
    cmdMatch->add_flag("--steps", steps, "print the derivative chain");
    cmdMatch->callback([&] { exitCode = runMatch(expr, word, steps); });

    auto* cmdEnum = app.add_subcommand("enumerate", "list all words up to a length bound");
    cmdEnum->add_option("expr", expr)->required();
    cmdEnum->add_option("bound", bound)->required();
    cmdEnum->callback([&] { exitCode = runEnumerate(expr, bound); });

    auto* cmdDfa = app.add_subcommand("dfa", "build the derivative automaton");
    cmdDfa->add_option("expr", expr)->required();
    cmdDfa->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    cmdDfa->add_option("--max-states", maxStates);
    cmdDfa->callback([&] { exitCode = runDfa(expr, format, maxStates); });

    auto* cmdCheck = app.add_subcommand("check", "certify well-behavedness");
    cmdCheck->add_option("expr", expr)->required();
    cmdCheck->callback([&] { exitCode = runCheck(expr); });

    auto* cmdContains = app.add_subcommand("contains", "test language containment");
    cmdContains->add_option("left", expr)->required();
    cmdContains->add_option("right", right)->required();
    cmdContains->add_option("--max-states", maxStates);
    cmdContains->add_flag("--force", force, "best effort without certification");
    cmdContains->callback([&] { exitCode = runContains(expr, right, maxStates, force, false); });

    auto* cmdEquiv = app.add_subcommand("equiv", "test language equivalence");
    cmdEquiv->add_option("left", expr)->required();
    cmdEquiv->add_option("right", right)->required();
    cmdEquiv->add_option("--max-states", maxStates);
    cmdEquiv->add_flag("--force", force, "best effort without certification");
    cmdEquiv->callback([&] { exitCode = runContains(expr, right, maxStates, force, true); });

    auto* cmdNorm = app.add_subcommand("normalize", "print the canonical form");
    cmdNorm->add_option("expr", expr)->required();
    cmdNorm->add_flag("--trace", showTrace, "print each simplification applied");
    cmdNorm->callback([&] { exitCode = runNormalize(expr, showTrace); });

    auto* cmdDecomp = app.add_subcommand("decompose", "concurrent and sequential parts");
    cmdDecomp->add_option("expr", expr)->required();
    cmdDecomp->callback([&] { exitCode = runDecompose(expr); });

    auto* cmdDerive = app.add_subcommand("derive", "print the derivative chain for a word");
    cmdDerive->add_option("expr", expr)->required();
    cmdDerive->add_option("word", word)->required();
    cmdDerive->callback([&] { exitCode = runDerive(expr, word); });

    auto* cmdCount = app.add_subcommand("count-states", "count dissimilar descendants");
    cmdCount->add_option("expr", expr)->required();
    cmdCount->add_option("--cap", maxStates);
    cmdCount->callback([&] { exitCode = runCountStates(expr, maxStates); });

    auto* cmdGen = app.add_subcommand("gen", "emit random expressions (for fuzzing)");
    cmdGen->group("");  // hidden
    cmdGen->add_option("--seed", seed);
    cmdGen->add_option("--count", genCount);
    cmdGen->add_option("--size", genSize);
    cmdGen->add_option("--alphabet", genAlphabet);
    cmdGen->add_option("--mode", genMode)->check(CLI::IsMember({"any", "fork-free", "certified"}));
    cmdGen->callback([&] { exitCode = runGen(seed, genCount, genSize, genAlphabet, genMode); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exitCode;
}
