#include "gmt/words.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace gmt {

Word Word::letter(const std::string& symbol, int exponent) {
    Word w;
    if (exponent != 0) w.letters_.push_back({symbol, exponent});
    return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const Letter& l : letters) {
        if (l.exponent == 0) continue;
        if (!w.letters_.empty() && w.letters_.back().symbol == l.symbol) {
            w.letters_.back().exponent += l.exponent;
            if (w.letters_.back().exponent == 0) w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

int Word::length() const {
    int n = 0;
    for (const Letter& l : letters_) n += std::abs(l.exponent);
    return n;
}

Word Word::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        rev.push_back({it->symbol, -it->exponent});
    Word w;
    w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
    return w;
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> all = letters_;
    all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
    return from_letters(all);
}

Word Word::pow(int e) const {
    if (e == 0) return {};
    Word base = e > 0 ? *this : inverse();
    Word acc = base;
    for (int i = 1; i < std::abs(e); ++i) acc = acc * base;
    return acc;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : letters_) {
        if (!first) os << '.';
        first = false;
        os << l.symbol;
        if (l.exponent != 1) os << '^' << l.exponent;
    }
    return os.str();
}

Word substitute(const Word& w, const std::map<std::string, Word>& images) {
    Word out;
    for (const Letter& l : w.letters()) {
        auto it = images.find(l.symbol);
        if (it == images.end()) {
            out = out * Word::letter(l.symbol, l.exponent);
        } else {
            out = out * it->second.pow(l.exponent);
        }
    }
    return out;
}

void Presentation::validate() const {
    std::set<std::string> known(generators.begin(), generators.end());
    if (known.size() != generators.size())
        throw std::invalid_argument("Presentation '" + name + "': duplicate generator");
    for (const std::string& g : generators)
        if (g.empty()) throw std::invalid_argument("Presentation '" + name + "': empty generator name");
    for (const Word& r : relators)
        for (const Letter& l : r.letters())
            if (!known.count(l.symbol))
                throw std::invalid_argument("Presentation '" + name + "': relator uses undeclared generator '" +
                                            l.symbol + "'");
}

ProjectiveMatrix evaluate_word(const Representation& rep, const Word& w) {
    ProjectiveMatrix acc = ProjectiveMatrix::identity();
    for (const Letter& l : w.letters()) {
        auto it = rep.assignment.find(l.symbol);
        if (it == rep.assignment.end())
            throw UnboundSymbol("evaluate_word: no assignment for '" + l.symbol + "'");
        acc = multiply(acc, power(it->second, l.exponent));
    }
    return acc;
}

RelatorReport verify_relators(const Representation& rep, const Presentation& pres,
                              const Tolerance& tol) {
    for (const std::string& g : pres.generators)
        if (!rep.assignment.count(g))
            throw UnboundSymbol("verify_relators: no assignment for generator '" + g + "'");
    RelatorReport report;
    report.pass = true;
    for (const Word& r : pres.relators) {
        RelatorCheck check;
        check.relator = r;
        check.residual = projective_distance(evaluate_word(rep, r), ProjectiveMatrix::identity());
        check.bound = tol.absolute * std::max(1, r.length());
        check.pass = check.residual <= check.bound;
        report.maxResidual = std::max(report.maxResidual, check.residual);
        report.pass = report.pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

namespace {

Word parse_word(const char* s) {
    // tiny builder syntax used only for the table below: "R" = rho, "r" = rho^-1,
    // "B" = b, "b" = b^-1
    std::vector<Letter> letters;
    for (const char* p = s; *p; ++p) {
        switch (*p) {
            case 'R': letters.push_back({"rho", 1}); break;
            case 'r': letters.push_back({"rho", -1}); break;
            case 'B': letters.push_back({"b", 1}); break;
            case 'b': letters.push_back({"b", -1}); break;
            default: throw std::logic_error("parse_word: bad char");
        }
    }
    return Word::from_letters(letters);
}

}  // namespace

AutomorphismTable AutomorphismTable::dehn() {
    AutomorphismTable t;
    auto add = [&t](const std::string& label, const char* rhoImage, const char* bImage) {
        t.labels_.push_back(label);
        t.entries_[label] = {parse_word(rhoImage), parse_word(bImage)};
    };
    add("sigma", "B", "R");
    add("tau", "RBr", "bRB");
    add("tau2", "b", "r");
    add("tau3", "brB", "Rbr");
    add("sigmatau", "bRB", "RBr");
    add("sigmatau2", "r", "b");
    add("sigmatau3", "Rbr", "brB");
    return t;
}

bool AutomorphismTable::has(const std::string& label) const { return entries_.count(label) != 0; }

const std::pair<Word, Word>& AutomorphismTable::images(const std::string& label) const {
    auto it = entries_.find(label);
    if (it == entries_.end()) throw UnknownLabel("automorphism table: unknown label '" + label + "'");
    return it->second;
}

Word apply_automorphism(const AutomorphismTable& table, const std::string& label,
                        const Word& w) {
    const auto& [rhoImage, bImage] = table.images(label);
    for (const Letter& l : w.letters())
        if (l.symbol != "rho" && l.symbol != "b")
            throw UnboundSymbol("apply_automorphism: word uses symbol '" + l.symbol +
                                "' outside {rho, b}");
    return substitute(w, {{"rho", rhoImage}, {"b", bImage}});
}

namespace {

using TraceKey = std::array<long long, 6>;

long long round6(double x) {
    double scaled = x * 1e6;
    // collapse -0 so that lifts agree
    double r = std::round(scaled);
    return r == 0.0 ? 0 : static_cast<long long>(r);
}

TraceKey trace_key(const ProjectiveMatrix& f, const ProjectiveMatrix& g) {
    Complex tf = tr_squared(f);
    Complex tg = tr_squared(g);
    Complex tc = tr_commutator(f, g);
    return {round6(tf.real()), round6(tf.imag()),
            round6(tg.real()), round6(tg.imag()),
            round6(tc.real()), round6(tc.imag())};
}

}  // namespace

NielsenResult nielsen_search(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                             int depth, const Tolerance& tol) {
    if (depth < 0) throw std::invalid_argument("nielsen_search: depth must be >= 0");

    NielsenResult result;
    result.depth = depth;
    result.bestValue = std::numeric_limits<double>::infinity();

    std::set<TraceKey> seen;
    std::vector<std::pair<ProjectiveMatrix, ProjectiveMatrix>> frontier;

    auto consider = [&](const ProjectiveMatrix& a, const ProjectiveMatrix& b) -> bool {
        TraceKey key = trace_key(a, b);
        if (!seen.insert(key).second) return false;
        ++result.visitedCount;
        Complex trC = tr_commutator(a, b);
        if (std::abs(trC - Complex{1.0}) <= tol.absolute) {
            ++result.skippedCount;  // GMT number undefined at tr[f,g] = 1
            return true;
        }
        Complex trSq = tr_squared(a);
        double value = std::abs(trSq - Complex{2.0}) + std::abs(trC - Complex{1.0});
        if (value < result.bestValue) {
            result.bestValue = value;
            result.bestF = a;
            result.bestG = b;
        }
        return true;
    };

    consider(f, g);
    frontier.push_back({f, g});

    for (int level = 0; level < depth; ++level) {
        std::vector<std::pair<ProjectiveMatrix, ProjectiveMatrix>> next;
        // full frontier per level, moves in fixed order: deterministic result
        for (const auto& [a, b] : frontier) {
            std::pair<ProjectiveMatrix, ProjectiveMatrix> moves[4] = {
                {b, a},
                {inverse(a), b},
                {a, multiply(a, b)},
                {a, multiply(b, inverse(a))},
            };
            for (const auto& m : moves)
                if (consider(m.first, m.second)) next.push_back(m);
        }
        frontier = std::move(next);
    }
    return result;
}

// --- JSON ---

nlohmann::json word_to_json(const Word& w) {
    nlohmann::json j = nlohmann::json::array();
    for (const Letter& l : w.letters()) j.push_back({l.symbol, l.exponent});
    return j;
}

Word word_from_json(const nlohmann::json& j) {
    std::vector<Letter> letters;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("word: expected [symbol, exponent] pairs");
        letters.push_back({item.at(0).get<std::string>(), item.at(1).get<int>()});
    }
    return Word::from_letters(letters);
}

nlohmann::json presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["name"] = p.name;
    j["generators"] = p.generators;
    nlohmann::json rels = nlohmann::json::array();
    for (const Word& r : p.relators) rels.push_back(word_to_json(r));
    j["relators"] = rels;
    return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
    Presentation p;
    p.name = j.at("name").get<std::string>();
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators")) p.relators.push_back(word_from_json(r));
    p.validate();
    return p;
}

}  // namespace gmt
