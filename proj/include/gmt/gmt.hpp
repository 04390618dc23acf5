#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "gmt/algebra.hpp"

namespace gmt {

/// G(f,g) = |tr^2(f) - 2| + |tr[f,g] - 1|, with the degenerate
/// tr[f,g] = 1 case flagged rather than rejected: the functional is only
/// defined away from that locus, and search code must skip, not crash.
struct GmtEvaluation {
    Complex trSquaredF{0.0};
    Complex trCommutator{0.0};
    double value = 0.0;
    bool commutatorTraceIsOne = false;
    bool equalityAttained = false;  ///< |value - 1| <= tol and not commutatorTraceIsOne
    double toleranceUsed = 0.0;
};

nlohmann::json to_json(const GmtEvaluation& e);

GmtEvaluation gmt_value(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                        const Tolerance& tol = {});

/// Verdict of the discreteness inequality G(f,g) >= 1.
///   NotApplicable  — tr[f,g] = 1 within tolerance
///   Equality       — |G - 1| <= tol
///   Violated       — G < 1 - tol: certifies that f, g do NOT generate a
///                    discrete group with tr[f,g] != 1 (contrapositive of the
///                    inequality); discreteness itself is never certified
///   SatisfiedStrict otherwise
enum class InequalityVerdict { SatisfiedStrict, Equality, Violated, NotApplicable };

const char* to_string(InequalityVerdict v);

InequalityVerdict gmt_inequality_check(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                                       const Tolerance& tol = {});

/// |LHS - RHS| of the trace identity
///   tr[f, hfh^-1] = (tr[f,h] - 2)(tr[f,h] - tr^2(f) + 2) + 2,
/// both sides computed independently (left by direct matrix products, right
/// from traces of f and [f,h]).
double commutator_trace_identity_residual(const ProjectiveMatrix& f, const ProjectiveMatrix& h);

struct PreconditionTrSquared : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// | |tr[f,hfh^-1] - 1| - |tr[f,h] - 1|^2 | for f with tr^2(f) = 2 (elliptic
/// of order four). Throws PreconditionTrSquared otherwise.
double squared_distance_identity_residual(const ProjectiveMatrix& f, const ProjectiveMatrix& h,
                                          const Tolerance& tol = {});

/// Element types for which |tr^2 f - 2| alone already forces G(f,g) > 1 for
/// every admissible g.
enum class Lemma1Case {
    Parabolic,           ///< |tr^2 - 2| = 2
    Hyperbolic,          ///< |tr^2 - 2| > 2
    SmallOrderElliptic,  ///< order 2 or 3: |tr^2 - 2| = 2 or 1
    HighOrderElliptic,   ///< tr^2 = 4cos^2(pi k/n), n/k >= 6: |tr^2 - 2| >= 1
};

const char* to_string(Lemma1Case c);

struct Lemma1Floor {
    Lemma1Case caseLabel;
    double floorValue = 0.0;  ///< proven lower bound on |tr^2 f - 2|
};

/// Returns the matching case and its floor, or nullopt when no case applies
/// (notably order-four elliptics, the subjects of every equality example).
std::optional<Lemma1Floor> lemma1_floor(const ProjectiveMatrix& f, const Tolerance& tol = {});

struct PreconditionNotGmtPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LemmaViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Lemma2Result {
    ProjectiveMatrix h;  ///< g f g^-1
    GmtEvaluation eval;  ///< gmt_value(f, h); equality attained per the lemma
};

/// From a GMT pair (f, g) with f of order four, produce the GMT pair
/// (f, gfg^-1). Preconditions are enforced; the conclusion is asserted and a
/// LemmaViolation thrown if numerics ever disagree with the lemma.
Lemma2Result lemma2_conjugate_pair(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                                   const Tolerance& tol = {});

/// Which conjugation action the involution h exerts on the pair (f, g).
enum class Lemma3Action {
    ConjugatesToG,          ///< (i)   h f h^-1 = g
    InvertsF,               ///< (ii)  h f h^-1 = f^-1
    ConjugatesToFGinvFinv,  ///< (iii) h f h^-1 = f g^-1 f^-1
};

const char* to_string(Lemma3Action a);

struct Lemma3Case {
    Lemma3Action action;
    double residual = 0.0;  ///< projective distance between h f h^-1 and the case target
};

struct NoCaseMatches : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Lemma3Result {
    Lemma3Case primary;               ///< first match in order (i), (ii), (iii)
    std::vector<Lemma3Case> matches;  ///< all matches (several can coincide for special pairs)
    GmtEvaluation eval;               ///< gmt_value(f, h); equality attained when a case matches
};

/// Verifies that the involution h realizes one of the Lemma 3 cases on the
/// GMT pair (f, g) and that G(f, h) = 1 follows. Throws PreconditionNotGmtPair
/// when the hypotheses fail and NoCaseMatches when no target matches.
Lemma3Result lemma3_verify(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                           const ProjectiveMatrix& h, const Tolerance& tol = {});

}  // namespace gmt
