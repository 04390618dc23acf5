#pragma once

#include <optional>

#include "gmt/algebra.hpp"

namespace gmt {

enum class ElementKind { Identity, Elliptic, Parabolic, Loxodromic };

const char* to_string(ElementKind k);

/// Coprime pair (k, n) with tr^2 = 4 cos^2(pi k / n); n is the element order.
struct EllipticOrder {
    int k = 0;
    int n = 0;
    bool operator==(const EllipticOrder&) const = default;
};

struct ElementClass {
    ElementKind kind = ElementKind::Identity;
    /// Meaningful only for Loxodromic: some sign lift has real trace in
    /// (-inf, 0) ∪ (2, +inf).
    bool hyperbolic = false;
    std::optional<EllipticOrder> ellipticOrder;
};

/// The verdict sits on the identity/parabolic knife edge: tr^2 is within
/// tolerance of 4 and the element is nearly, but not quite, ±I. Both
/// candidate kinds are reported instead of guessing.
struct AmbiguousClassification : std::runtime_error {
    AmbiguousClassification(ElementKind first, ElementKind second, double identityDistance);
    ElementKind candidateA;
    ElementKind candidateB;
    double identityDistance;
};

struct NotElliptic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Trace trichotomy with tolerance:
///   identity first (tr^2 = 4 would otherwise misreport ±I as parabolic),
///   then parabolic (tr^2 within tol of 4), elliptic (tr^2 real in [0,4)),
///   loxodromic otherwise. Elliptic verdicts carry the detected finite order
///   when one exists with n <= orderSearchMaxN.
ElementClass classify(const ProjectiveMatrix& m, const Tolerance& tol = {},
                      int orderSearchMaxN = 64);

/// The coprime pair (k, n), n <= maxN, minimizing |tr^2 - 4cos^2(pi k/n)|;
/// ties broken by smaller n, then smaller k. Returns nullopt when the best
/// residual exceeds tol.absolute (irrational rotation within resolution).
/// Throws NotElliptic when classify(m) is not Elliptic.
std::optional<EllipticOrder> elliptic_order(const ProjectiveMatrix& m, int maxN,
                                            const Tolerance& tol = {});

/// M^2 ≈ ±I and M itself is not ±I.
bool is_involution(const ProjectiveMatrix& m, const Tolerance& tol = {});

}  // namespace gmt
