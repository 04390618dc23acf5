#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmt/algebra.hpp"
#include "gmt/gmt.hpp"
#include "gmt/words.hpp"

namespace gmt {

struct BadIndex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NegativeRadicand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoBranchSatisfiesRelation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootFindFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AmbiguousSolution : std::runtime_error {
    AmbiguousSolution(const std::string& what, int dim)
        : std::runtime_error(what), nullspaceDim(dim) {}
    int nullspaceDim;
};

struct SingularNormalization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sign choices made when taking sinh d_n = ±sqrt(cosh^2 d_n - 1) and the
/// outer square root e^(d_n/2) = ±sqrt(cosh d_n + sinh d_n).
enum class BranchTag { SinhPlusExpPlus, SinhPlusExpMinus, SinhMinusExpPlus, SinhMinusExpMinus };

const char* to_string(BranchTag t);

/// cosh of the complex distance between the generator axes:
///   cosh d_n = 1/4 (1 + cot^2(pi/n) - i sqrt(3cot^4(pi/n) + 14cot^2(pi/n) - 5)).
/// Imaginary part <= 0. Throws BadIndex for n < 4.
Complex cosh_dn(int n);

/// Generators of the figure-eight orbifold group with cone angle 2pi/n, and
/// the branch data that produced them.
struct FigureEightData {
    int n = 0;
    Complex coshDn{0.0};
    Complex dnHalfExp{0.0};  ///< chosen value of e^(d_n/2)
    BranchTag branchTag = BranchTag::SinhPlusExpPlus;
    ProjectiveMatrix rho = ProjectiveMatrix::identity();
    ProjectiveMatrix b = ProjectiveMatrix::identity();
};

/// Builds
///   rho_n = (cos(pi/n)            i e^(d_n/2) sin(pi/n))
///           (i e^(-d_n/2) sin(pi/n)          cos(pi/n) )
/// and b_n with the off-diagonal exponentials swapped. The sign branch of
/// e^(d_n/2) is not pinned by the cosh value alone, so all four candidates
/// are tried against the defining relator and the survivor with
/// (Im >= 0, then Re >= 0) wins. Throws NoBranchSatisfiesRelation if no
/// candidate passes (an implementation bug, not an expected state).
FigureEightData figure_eight_generators(int n, const Tolerance& tol = {});

/// Closed form for |tr[rho_n, b_n] - lambda|:
///   sqrt((lambda^2 - 3 lambda + 3) + 4 (lambda - 1) sin^2(pi/n)).
/// Throws NegativeRadicand rather than clamping.
double lambda_trace_distance(int n, double lambda);

/// 3 - 4 sin^2(pi/n): an upper bound for the GMT number of the figure-eight
/// orbifold group, realized by the pair (rho_n, b_n). Not the infimum.
double gamma_gmt_upper_bound(int n);

/// The involution (0 i; i 0); swaps rho_n and b_n by conjugation for all n.
ProjectiveMatrix involution_h1();

struct ConjugationConstraint {
    ProjectiveMatrix g = ProjectiveMatrix::identity();
    ProjectiveMatrix target = ProjectiveMatrix::identity();
};

/// Solves h g h^-1 = ±target (PSL semantics, per-constraint sign) for h.
/// Each constraint h g = target h is linear in the four entries of h; the
/// stacked homogeneous system must have a 1-dimensional null space
/// (rank threshold: 1e-10 x largest singular value). Throws NoSolution,
/// AmbiguousSolution (with the null-space dimension) or
/// SingularNormalization.
ProjectiveMatrix solve_conjugator(const std::vector<ConjugationConstraint>& constraints,
                                  const Tolerance& tol = {});

/// Involution inverting both generators: h2 rho_n h2^-1 = rho_n^-1 and
/// h2 b_n h2^-1 = b_n^-1.
ProjectiveMatrix involution_h2(int n, const Tolerance& tol = {});

/// Involution with h3 b_n h3^-1 = b_n rho_n^-1 b_n^-1. Its action on rho_n
/// is pinned by requiring the induced automorphism to square to the
/// identity, which forces h3 rho_n h3^-1 = b_n rho_n b_n^-1 rho_n^-1 b_n^-1.
ProjectiveMatrix involution_h3(int n, const Tolerance& tol = {});

enum class CatalogGroup { KnotGroup, Gamma, Delta, O2, O3, O4 };

const char* to_string(CatalogGroup g);
std::optional<CatalogGroup> catalog_group_from_string(const std::string& s);
/// Gamma, Delta and O2 are families indexed by n >= 4.
bool catalog_group_needs_index(CatalogGroup g);

/// The defining relator of the figure-eight knot group,
/// rho^-1 [b,rho] b^-1 [b,rho]^-1 with [b,rho] = b rho b^-1 rho^-1.
Word figure_eight_relator();

/// Exact relator lists for the named groups. n is required (and >= 4) for
/// Gamma, Delta and O2. Throws BadIndex.
Presentation build_presentation(CatalogGroup name, std::optional<int> n = {});

/// Delta_n with b_n eliminated via b_n = h1 rho_n h1^-1: generators
/// {rho, h1}. The conjugate relator (h1 rho^n h1^-1) is dropped as
/// redundant.
Presentation delta_two_generator_presentation(int n);

/// Representation of O3 = <a, b | a^4 = b^4 = 1, [a,b]^2 = 1>:
/// a = diag(e^(i pi/4), e^(-i pi/4)) and b = T a T^-1 where
/// T(t) = (cosh(t/2) sinh(t/2); sinh(t/2) cosh(t/2)) and the complex tunnel
/// parameter t solves tr[a, b] = 0.
struct O3Data {
    Representation rep;      ///< symbols "a" and "b"
    Complex tunnelParameter{0.0};
    Complex newtonStart{0.0};
    int newtonIterations = 0;
};

/// Newton's method on tr[a, T(t) a T(t)^-1] = 0 over the fixed start grid
/// {1, 1+i, 2, 2+i, 1+2i, 2+2i}, iteration cap 100, acceptance
/// |tr[a,b]| <= 1e-10. Deterministic. Throws RootFindFailed.
O3Data o3_representation(const Tolerance& tol = {});

/// Representation of O4 = <a, p | a^4 = p^2 = 1, (apapa^-1pa^-1p)^2 = 1>:
/// a from O3 and p = solve_conjugator({a -> b, b -> a}), an involution
/// swapping the O3 generators.
struct O4Data {
    Representation rep;  ///< symbols "a" and "p"
    O3Data o3;
};

O4Data o4_representation(const Tolerance& tol = {});

/// Presentation, representation (where one is known) and provenance notes
/// for one catalog entry. All groups are generated on demand; nothing is
/// precomputed.
struct OrbifoldGroupSpec {
    std::string name;
    Presentation presentation;
    std::optional<Representation> representation;
    std::string provenanceNotes;
};

OrbifoldGroupSpec catalog_group(CatalogGroup name, std::optional<int> n = {},
                                const Tolerance& tol = {});

/// Full JSON document for one group: presentation, representation matrices,
/// branch tags, root values and all verification residuals.
nlohmann::json catalog_export(CatalogGroup name, std::optional<int> n = {},
                              const Tolerance& tol = {});

}  // namespace gmt
