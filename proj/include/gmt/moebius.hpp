#pragma once

#include <optional>

#include "gmt/algebra.hpp"

namespace gmt {

/// Point (z, t) of the upper half-space model, t > 0 strictly.
struct UpperHalfSpacePoint {
    Complex z{0.0};
    double t = 1.0;
};

/// Point of the boundary sphere: a finite complex value or the point at
/// infinity. Infinity is a tagged alternative, never a large float, so
/// parabolic fixed-point tests are exact.
class BoundaryPoint {
public:
    static BoundaryPoint infinity() { return BoundaryPoint{std::nullopt}; }
    static BoundaryPoint at(Complex z) { return BoundaryPoint{z}; }

    bool is_infinity() const { return !finite_.has_value(); }
    Complex value() const { return finite_.value(); }

    bool operator==(const BoundaryPoint&) const = default;

private:
    explicit BoundaryPoint(std::optional<Complex> v) : finite_(v) {}
    std::optional<Complex> finite_;
};

/// Cannot occur for t > 0 and det = 1; signals corrupted input.
struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Isometric action on upper half-space:
///   g(z,t) = ( ((az+b)conj(cz+d) + a conj(c) t^2) / D , t / D ),
///   D = |cz+d|^2 + |c|^2 t^2.
/// Acting with rep and -rep gives bitwise identical results.
UpperHalfSpacePoint act_h3(const ProjectiveMatrix& g, const UpperHalfSpacePoint& p,
                           const Tolerance& tol = {});

/// Moebius action z -> (az+b)/(cz+d) on the boundary sphere, with the usual
/// conventions at infinity.
BoundaryPoint act_boundary(const ProjectiveMatrix& g, const BoundaryPoint& x);

}  // namespace gmt
