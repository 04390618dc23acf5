#include "gmt/gmt.hpp"

#include "gmt/classification.hpp"

namespace gmt {

nlohmann::json to_json(const GmtEvaluation& e) {
    nlohmann::json j;
    j["trSquaredF"] = {e.trSquaredF.real(), e.trSquaredF.imag()};
    j["trCommutator"] = {e.trCommutator.real(), e.trCommutator.imag()};
    j["value"] = e.value;
    j["commutatorTraceIsOne"] = e.commutatorTraceIsOne;
    j["equalityAttained"] = e.equalityAttained;
    j["toleranceUsed"] = e.toleranceUsed;
    return j;
}

GmtEvaluation gmt_value(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                        const Tolerance& tol) {
    GmtEvaluation e;
    e.trSquaredF = tr_squared(f);
    e.trCommutator = tr_commutator(f, g);
    e.value = std::abs(e.trSquaredF - Complex{2.0}) + std::abs(e.trCommutator - Complex{1.0});
    e.commutatorTraceIsOne = std::abs(e.trCommutator - Complex{1.0}) <= tol.absolute;
    e.equalityAttained = !e.commutatorTraceIsOne && std::abs(e.value - 1.0) <= tol.absolute;
    e.toleranceUsed = tol.absolute;
    return e;
}

const char* to_string(InequalityVerdict v) {
    switch (v) {
        case InequalityVerdict::SatisfiedStrict: return "satisfied-strict";
        case InequalityVerdict::Equality: return "equality";
        case InequalityVerdict::Violated: return "violated";
        case InequalityVerdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

InequalityVerdict gmt_inequality_check(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                                       const Tolerance& tol) {
    GmtEvaluation e = gmt_value(f, g, tol);
    if (e.commutatorTraceIsOne) return InequalityVerdict::NotApplicable;
    if (std::abs(e.value - 1.0) <= tol.absolute) return InequalityVerdict::Equality;
    if (e.value < 1.0 - tol.absolute) return InequalityVerdict::Violated;
    return InequalityVerdict::SatisfiedStrict;
}

double commutator_trace_identity_residual(const ProjectiveMatrix& f, const ProjectiveMatrix& h) {
    ProjectiveMatrix hfh = multiply(multiply(h, f), inverse(h));
    Complex lhs = tr_commutator(f, hfh);
    Complex trFH = tr_commutator(f, h);
    Complex trSqF = tr_squared(f);
    Complex rhs = (trFH - Complex{2.0}) * (trFH - trSqF + Complex{2.0}) + Complex{2.0};
    return std::abs(lhs - rhs);
}

double squared_distance_identity_residual(const ProjectiveMatrix& f, const ProjectiveMatrix& h,
                                          const Tolerance& tol) {
    Complex trSqF = tr_squared(f);
    if (std::abs(trSqF - Complex{2.0}) > tol.absolute)
        throw PreconditionTrSquared("squared_distance_identity_residual: tr^2(f) != 2");
    ProjectiveMatrix hfh = multiply(multiply(h, f), inverse(h));
    double lhs = std::abs(tr_commutator(f, hfh) - Complex{1.0});
    double rhsRoot = std::abs(tr_commutator(f, h) - Complex{1.0});
    return std::abs(lhs - rhsRoot * rhsRoot);
}

const char* to_string(Lemma1Case c) {
    switch (c) {
        case Lemma1Case::Parabolic: return "parabolic";
        case Lemma1Case::Hyperbolic: return "hyperbolic";
        case Lemma1Case::SmallOrderElliptic: return "elliptic-order-2-or-3";
        case Lemma1Case::HighOrderElliptic: return "elliptic-high-order";
    }
    return "?";
}

std::optional<Lemma1Floor> lemma1_floor(const ProjectiveMatrix& f, const Tolerance& tol) {
    ElementClass cls = classify(f, tol);
    switch (cls.kind) {
        case ElementKind::Identity:
            return std::nullopt;
        case ElementKind::Parabolic:
            return Lemma1Floor{Lemma1Case::Parabolic, 2.0};
        case ElementKind::Loxodromic:
            if (cls.hyperbolic) return Lemma1Floor{Lemma1Case::Hyperbolic, 2.0};
            return std::nullopt;
        case ElementKind::Elliptic:
            break;
    }
    if (!cls.ellipticOrder) return std::nullopt;
    auto [k, n] = *cls.ellipticOrder;
    if (n == 2) return Lemma1Floor{Lemma1Case::SmallOrderElliptic, 2.0};
    if (n == 3) return Lemma1Floor{Lemma1Case::SmallOrderElliptic, 1.0};
    // tr^2 = 4cos^2(pi k/n) >= 3  <=>  n/k >= 6 for the canonical (smallest k) pair
    if (static_cast<double>(n) / static_cast<double>(k) >= 6.0)
        return Lemma1Floor{Lemma1Case::HighOrderElliptic, 1.0};
    return std::nullopt;
}

Lemma2Result lemma2_conjugate_pair(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                                   const Tolerance& tol) {
    if (std::abs(tr_squared(f) - Complex{2.0}) > tol.absolute)
        throw PreconditionNotGmtPair("lemma2_conjugate_pair: tr^2(f) != 2");
    if (!gmt_value(f, g, tol).equalityAttained)
        throw PreconditionNotGmtPair("lemma2_conjugate_pair: G(f,g) != 1");
    Lemma2Result out{multiply(multiply(g, f), inverse(g)), {}};
    out.eval = gmt_value(f, out.h, tol);
    if (!out.eval.equalityAttained)
        throw LemmaViolation("lemma2_conjugate_pair: G(f, gfg^-1) != 1 (numerical contradiction)");
    return out;
}

const char* to_string(Lemma3Action a) {
    switch (a) {
        case Lemma3Action::ConjugatesToG: return "i";
        case Lemma3Action::InvertsF: return "ii";
        case Lemma3Action::ConjugatesToFGinvFinv: return "iii";
    }
    return "?";
}

Lemma3Result lemma3_verify(const ProjectiveMatrix& f, const ProjectiveMatrix& g,
                           const ProjectiveMatrix& h, const Tolerance& tol) {
    if (std::abs(tr_squared(f) - Complex{2.0}) > tol.absolute)
        throw PreconditionNotGmtPair("lemma3_verify: tr^2(f) != 2");
    if (!is_involution(h, tol))
        throw PreconditionNotGmtPair("lemma3_verify: h is not an involution");
    if (!gmt_value(f, g, tol).equalityAttained)
        throw PreconditionNotGmtPair("lemma3_verify: G(f,g) != 1");

    ProjectiveMatrix conjugated = multiply(multiply(h, f), inverse(h));
    ProjectiveMatrix targets[3] = {
        g,
        inverse(f),
        multiply(multiply(f, inverse(g)), inverse(f)),
    };
    Lemma3Action actions[3] = {Lemma3Action::ConjugatesToG, Lemma3Action::InvertsF,
                               Lemma3Action::ConjugatesToFGinvFinv};

    Lemma3Result result;
    for (int i = 0; i < 3; ++i) {
        double residual = projective_distance(conjugated, targets[i]);
        if (residual <= tol.absolute) result.matches.push_back({actions[i], residual});
    }
    if (result.matches.empty())
        throw NoCaseMatches("lemma3_verify: h f h^-1 matches none of g, f^-1, f g^-1 f^-1");
    result.primary = result.matches.front();
    result.eval = gmt_value(f, h, tol);
    if (!result.eval.equalityAttained)
        throw LemmaViolation("lemma3_verify: case matched but G(f,h) != 1 (numerical contradiction)");
    return result;
}

}  // namespace gmt
