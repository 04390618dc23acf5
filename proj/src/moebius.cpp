#include "gmt/moebius.hpp"

namespace gmt {

UpperHalfSpacePoint act_h3(const ProjectiveMatrix& g, const UpperHalfSpacePoint& p,
                           const Tolerance& tol) {
    if (!(p.t > 0.0))
        throw std::invalid_argument("act_h3: height must be positive");
    const Mat2& m = g.rep();
    Complex w = m.c * p.z + m.d;
    double denom = std::norm(w) + std::norm(m.c) * p.t * p.t;
    if (denom <= tol.detTol)
        throw DegenerateDenominator("act_h3: |cz+d|^2 + |c|^2 t^2 below tolerance");
    Complex zNew = ((m.a * p.z + m.b) * std::conj(w) + m.a * std::conj(m.c) * p.t * p.t) / denom;
    return {zNew, p.t / denom};
}

BoundaryPoint act_boundary(const ProjectiveMatrix& g, const BoundaryPoint& x) {
    const Mat2& m = g.rep();
    if (x.is_infinity()) {
        if (m.c == Complex{0.0}) return BoundaryPoint::infinity();
        return BoundaryPoint::at(m.a / m.c);
    }
    Complex z = x.value();
    Complex denom = m.c * z + m.d;
    if (denom == Complex{0.0}) return BoundaryPoint::infinity();
    Complex q = (m.a * z + m.b) / denom;
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) return BoundaryPoint::infinity();
    return BoundaryPoint::at(q);
}

}  // namespace gmt
