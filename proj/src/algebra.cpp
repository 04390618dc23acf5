#include <limits>

#include "gmt/algebra.hpp"

namespace gmt {

namespace {

// Sign rule: the first entry of (a, b, c, d) with modulus > detTol must have
// argument in [0, pi). Deterministic, so equal classes hash/compare alike.
Mat2 canonical_sign(const Mat2& m, double detTol) {
    const Complex* entries[4] = {&m.a, &m.b, &m.c, &m.d};
    for (const Complex* e : entries) {
        if (std::abs(*e) <= detTol) continue;
        double im = e->imag();
        bool keep = im > 0.0 || (im == 0.0 && e->real() > 0.0);
        return keep ? m : -m;
    }
    return m;  // all entries below threshold; caller has already rejected this
}

}  // namespace

ProjectiveMatrix normalize_det(const Mat2& m, const Tolerance& tol) {
    if (!m.all_finite())
        throw NonFiniteEntry("normalize_det: matrix has non-finite entries");
    Complex det = m.det();
    if (std::abs(det) <= tol.detTol)
        throw SingularMatrix("normalize_det: |det| <= detTol");
    Complex scale = std::sqrt(det);  // principal branch; ± absorbed by the class
    Mat2 unit{m.a / scale, m.b / scale, m.c / scale, m.d / scale};
    unit = canonical_sign(unit, tol.detTol);
    double residual = std::abs(unit.det() - Complex{1.0});
    ProjectiveMatrix result{unit, residual};
    return result;
}

ProjectiveMatrix multiply(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    // det of the raw product is 1 up to rounding; renormalizing keeps the
    // determinant residual from accumulating over long words.
    return normalize_det(x.rep() * y.rep());
}

ProjectiveMatrix inverse(const ProjectiveMatrix& m) {
    return normalize_det(m.rep().adjugate());
}

ProjectiveMatrix power(const ProjectiveMatrix& m, int e) {
    if (e == std::numeric_limits<int>::min())
        throw std::invalid_argument("power: exponent out of range");
    if (e < 0) return power(inverse(m), -e);
    ProjectiveMatrix acc = ProjectiveMatrix::identity();
    ProjectiveMatrix base = m;
    unsigned k = static_cast<unsigned>(e);
    while (k != 0) {
        if (k & 1u) acc = multiply(acc, base);
        k >>= 1u;
        if (k != 0) base = multiply(base, base);
    }
    return acc;
}

ProjectiveMatrix commutator(const ProjectiveMatrix& f, const ProjectiveMatrix& g) {
    const Mat2& F = f.rep();
    const Mat2& G = g.rep();
    // adjugate == inverse for unit determinant
    Mat2 raw = F * G * F.adjugate() * G.adjugate();
    return normalize_det(raw);
}

}  // namespace gmt
