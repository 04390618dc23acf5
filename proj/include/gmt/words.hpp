#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmt/algebra.hpp"

namespace gmt {

struct UnboundSymbol : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownLabel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One syllable of a word: generator symbol with a nonzero exponent.
struct Letter {
    std::string symbol;
    int exponent = 1;
    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in abstract generators: adjacent letters always carry
/// distinct symbols and no exponent is zero.
class Word {
public:
    Word() = default;

    static Word letter(const std::string& symbol, int exponent = 1);
    /// Concatenates and reduces.
    static Word from_letters(const std::vector<Letter>& letters);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    /// Total letter count, sum of |exponent|.
    int length() const;

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word pow(int e) const;

    bool operator==(const Word&) const = default;

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

/// Replace each symbol that has an image; untouched symbols stay themselves.
/// The result is freely reduced.
Word substitute(const Word& w, const std::map<std::string, Word>& images);

struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<Word> relators;

    /// Every relator must use only declared generators.
    void validate() const;
};

/// Assignment of generator symbols to PSL(2,C) elements.
struct Representation {
    std::map<std::string, ProjectiveMatrix> assignment;
};

/// Left-to-right product of assigned matrices raised to letter exponents.
/// Throws UnboundSymbol when a symbol of w has no assignment.
ProjectiveMatrix evaluate_word(const Representation& rep, const Word& w);

struct RelatorCheck {
    Word relator;
    double residual = 0.0;  ///< projective distance of the evaluated word from I
    double bound = 0.0;     ///< pass threshold: tol.absolute * max(1, word length)
    bool pass = false;
};

struct RelatorReport {
    std::vector<RelatorCheck> checks;
    bool pass = false;
    double maxResidual = 0.0;
};

/// Evaluates every relator and compares with I projectively. The per-relator
/// pass bound scales linearly with word length (error grows with each
/// product).
RelatorReport verify_relators(const Representation& rep, const Presentation& pres,
                              const Tolerance& tol = {});

/// Action of Dehn's outer automorphisms on the figure-eight generator pair
/// (rho, b); one column per label. Columns are data, not compositions: the
/// images are the reduced forms valid in the orbifold group.
class AutomorphismTable {
public:
    /// Column labels in table order:
    /// sigma, tau, tau2, tau3, sigmatau, sigmatau2, sigmatau3.
    static AutomorphismTable dehn();

    const std::vector<std::string>& labels() const { return labels_; }
    bool has(const std::string& label) const;
    /// (image of rho, image of b); throws UnknownLabel.
    const std::pair<Word, Word>& images(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::map<std::string, std::pair<Word, Word>> entries_;
};

/// Letterwise substitution of the labeled column, then free reduction.
/// w may use only the symbols "rho" and "b".
Word apply_automorphism(const AutomorphismTable& table, const std::string& label,
                        const Word& w);

/// Result of a breadth-first search over Nielsen moves. bestValue is an
/// upper bound on the group's GMT number; the search never claims the
/// infimum.
struct NielsenResult {
    double bestValue = 0.0;
    ProjectiveMatrix bestF = ProjectiveMatrix::identity();
    ProjectiveMatrix bestG = ProjectiveMatrix::identity();
    std::size_t visitedCount = 0;  ///< distinct trace triples explored
    std::size_t skippedCount = 0;  ///< pairs with tr[f,g] ≈ 1, recorded but ineligible
    int depth = 0;
    bool upperBoundOnly = true;
};

/// Breadth-first exploration of the move set
///   (f,g) -> (g,f), (f^-1,g), (f,fg), (f,gf^-1)
/// up to the given depth, deduplicating by the trace triple
/// (tr^2 f, tr^2 g, tr[f,g]) rounded to 6 decimals. Pairs with
/// tr[f,g] ≈ 1 are skipped, not failed. Deterministic for fixed inputs.
NielsenResult nielsen_search(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                             int depth, const Tolerance& tol = {});

// --- JSON (serialization format: relators as arrays of [symbol, exponent]) ---
nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

}  // namespace gmt
