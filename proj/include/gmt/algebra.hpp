#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace gmt {

using Complex = std::complex<double>;

/// Thrown when a matrix with |det| at or below the determinant tolerance
/// is handed to an operation that needs a unit-determinant representative.
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteEntry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Every numeric comparison in the library is driven by one of these two
/// knobs; there are no hidden constants.
///   absolute — projective/entrywise comparison tolerance
///   detTol   — determinant residual tolerance (also the "is this entry zero"
///              threshold for the canonical sign rule)
struct Tolerance {
    double absolute = 1e-9;
    double detTol = 1e-12;

    void validate() const {
        if (!(detTol > 0.0) || !(detTol <= absolute) || !(absolute < 1.0))
            throw std::invalid_argument("Tolerance: need 0 < detTol <= absolute < 1");
    }
};

/// Row-major 2x2 complex matrix (a b; c d). Plain value type; no
/// determinant constraint at this level.
struct Mat2 {
    Complex a{1.0}, b{0.0}, c{0.0}, d{0.0};

    Mat2() : a(1.0), b(0.0), c(0.0), d(1.0) {}
    Mat2(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {}

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    /// Adjugate; equals the inverse exactly when det == 1.
    Mat2 adjugate() const { return {d, -b, -c, a}; }

    bool all_finite() const {
        auto ok = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
        return ok(a) && ok(b) && ok(c) && ok(d);
    }

    static Mat2 identity() { return {}; }
};

inline double max_abs_entry(const Mat2& m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

/// Entrywise max-modulus distance (the library's matrix norm).
inline double max_abs_diff(const Mat2& x, const Mat2& y) {
    return std::max(std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)),
                    std::max(std::abs(x.c - y.c), std::abs(x.d - y.d)));
}

/// Unit-determinant representative of a class {±M} in PSL(2,C).
///
/// The stored representative is canonical: the sign is chosen so that the
/// first entry of (a, b, c, d) with modulus above detTol has argument in
/// [0, pi). Equal classes therefore hold comparable representatives, and
/// detResidual() records |det(rep) - 1| from construction time.
class ProjectiveMatrix {
public:
    const Mat2& rep() const { return rep_; }
    double detResidual() const { return detResidual_; }

    static ProjectiveMatrix identity() { return ProjectiveMatrix(Mat2::identity(), 0.0); }

private:
    ProjectiveMatrix(const Mat2& rep, double detResidual)
        : rep_(rep), detResidual_(detResidual) {}

    friend ProjectiveMatrix normalize_det(const Mat2&, const Tolerance&);

    Mat2 rep_;
    double detResidual_ = 0.0;
};

/// Scale M by 1/sqrt(det M) (principal branch) and apply the canonical sign
/// rule. The +/- ambiguity of the square root is absorbed by the class.
/// Throws SingularMatrix when |det M| <= tol.detTol.
ProjectiveMatrix normalize_det(const Mat2& m, const Tolerance& tol = {});

ProjectiveMatrix multiply(const ProjectiveMatrix& x, const ProjectiveMatrix& y);
ProjectiveMatrix inverse(const ProjectiveMatrix& m);
ProjectiveMatrix power(const ProjectiveMatrix& m, int e);

inline ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return multiply(x, y);
}

/// f g f^-1 g^-1. Sign lifts cancel in the four-fold product, so the trace
/// of the result is independent of representative choices.
ProjectiveMatrix commutator(const ProjectiveMatrix& f, const ProjectiveMatrix& g);

/// tr^2 is well defined on PSL classes; the raw trace is not.
struct TraceData {
    Complex trSquared;  ///< tr(rep)^2 — invariant under the ± ambiguity
    Complex trOfRep;    ///< tr of the canonical representative; sign is representative-dependent
};

inline TraceData trace_data(const ProjectiveMatrix& m) {
    Complex t = m.rep().trace();
    return {t * t, t};
}

inline Complex tr_squared(const ProjectiveMatrix& m) {
    Complex t = m.rep().trace();
    return t * t;
}

/// Trace of the SL(2,C) commutator f g f^-1 g^-1, computed on raw lifts.
/// Well defined on classes: sign flips cancel in the four-fold product. The
/// canonical representative of commutator() may carry the opposite sign, so
/// trace-sensitive code must use this, not commutator().rep().trace().
inline Complex tr_commutator(const ProjectiveMatrix& f, const ProjectiveMatrix& g) {
    const Mat2& F = f.rep();
    const Mat2& G = g.rep();
    return (F * G * F.adjugate() * G.adjugate()).trace();
}

/// min over sign lifts of the entrywise max-modulus distance.
inline double projective_distance(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return std::min(max_abs_diff(x.rep(), y.rep()), max_abs_diff(x.rep(), -y.rep()));
}

inline bool projective_eq(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                          const Tolerance& tol = {}) {
    return projective_distance(x, y) <= tol.absolute;
}

}  // namespace gmt
