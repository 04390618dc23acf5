#include "gmt/classification.hpp"

#include <numeric>

namespace gmt {

const char* to_string(ElementKind k) {
    switch (k) {
        case ElementKind::Identity: return "identity";
        case ElementKind::Elliptic: return "elliptic";
        case ElementKind::Parabolic: return "parabolic";
        case ElementKind::Loxodromic: return "loxodromic";
    }
    return "?";
}

AmbiguousClassification::AmbiguousClassification(ElementKind first, ElementKind second,
                                                 double dist)
    : std::runtime_error(std::string("ambiguous classification: ") + to_string(first) +
                         " vs " + to_string(second)),
      candidateA(first),
      candidateB(second),
      identityDistance(dist) {}

namespace {

double identity_distance(const ProjectiveMatrix& m) {
    return projective_distance(m, ProjectiveMatrix::identity());
}

// Identity-vs-parabolic calls that would flip under a modest tolerance
// change are refused rather than guessed; see classify().
constexpr double kAmbiguityFactor = 4.0;

std::optional<EllipticOrder> order_search(Complex trSq, int maxN, double tolAbs) {
    double bestResidual = std::numeric_limits<double>::infinity();
    EllipticOrder best{};
    for (int n = 2; n <= maxN; ++n) {
        for (int k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            double c = std::cos(M_PI * static_cast<double>(k) / static_cast<double>(n));
            double target = 4.0 * c * c;
            double residual = std::abs(trSq - Complex{target});
            if (residual < bestResidual) {
                bestResidual = residual;
                best = {k, n};
            }
        }
    }
    if (bestResidual <= tolAbs) return best;
    return std::nullopt;
}

}  // namespace

ElementClass classify(const ProjectiveMatrix& m, const Tolerance& tol, int orderSearchMaxN) {
    double idDist = identity_distance(m);
    if (idDist <= tol.absolute) return {ElementKind::Identity, false, {}};

    Complex trSq = tr_squared(m);

    if (std::abs(trSq - Complex{4.0}) <= tol.absolute) {
        if (idDist <= kAmbiguityFactor * tol.absolute)
            throw AmbiguousClassification(ElementKind::Identity, ElementKind::Parabolic, idDist);
        return {ElementKind::Parabolic, false, {}};
    }

    bool realTrSq = std::abs(trSq.imag()) <= tol.absolute;
    if (realTrSq && trSq.real() >= -tol.absolute && trSq.real() < 4.0) {
        ElementClass out{ElementKind::Elliptic, false, {}};
        out.ellipticOrder = order_search(trSq, orderSearchMaxN, tol.absolute);
        return out;
    }

    ElementClass out{ElementKind::Loxodromic, false, {}};
    Complex tr = m.rep().trace();
    // Real trace with tr^2 > 4: one of the lifts ±tr lands in (2, inf) and
    // the other in (-inf, 0), so either sign convention certifies hyperbolic.
    out.hyperbolic = std::abs(tr.imag()) <= tol.absolute &&
                     std::abs(tr.real()) > 2.0 + tol.absolute;
    return out;
}

std::optional<EllipticOrder> elliptic_order(const ProjectiveMatrix& m, int maxN,
                                            const Tolerance& tol) {
    ElementClass cls = classify(m, tol, /*orderSearchMaxN=*/2);
    if (cls.kind != ElementKind::Elliptic)
        throw NotElliptic(std::string("elliptic_order: element is ") + to_string(cls.kind));
    return order_search(tr_squared(m), maxN, tol.absolute);
}

bool is_involution(const ProjectiveMatrix& m, const Tolerance& tol) {
    if (identity_distance(m) <= tol.absolute) return false;
    return identity_distance(multiply(m, m)) <= tol.absolute;
}

}  // namespace gmt
