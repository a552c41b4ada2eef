#pragma once

#include <optional>
#include <string>

#include "teich/mat2.hpp"

namespace teich {

// A point of the boundary circle of the upper half-plane: a real number
// or the point at infinity.  Infinity is an explicit state, never an
// IEEE infinity fed into arithmetic.
struct BoundaryPoint {
    double x = 0.0;
    bool infinite = false;

    static BoundaryPoint inf() { return {0.0, true}; }
    static BoundaryPoint at(double x) { return {x, false}; }

    bool operator==(const BoundaryPoint& o) const {
        return infinite ? o.infinite : (!o.infinite && x == o.x);
    }
    std::string str() const;
};

// Möbius action of a Mat2 on the boundary line.
BoundaryPoint mobius_apply(const Mat2& m, const BoundaryPoint& p);

// Unordered pair of distinct boundary points: a complete geodesic.
struct Geodesic {
    BoundaryPoint p, q;

    Geodesic(BoundaryPoint p_, BoundaryPoint q_);
    static Geodesic imaginary_axis() { return {BoundaryPoint::at(0.0), BoundaryPoint::inf()}; }

    bool shares_endpoint(const Geodesic& o) const;
    bool same_as(const Geodesic& o) const;
    std::string str() const;
};

// Fixed points of the Möbius action of a hyperbolic matrix on the
// boundary.  Unoriented; Elliptic/Parabolic error for |tr| <= 2.
Geodesic axis_endpoints(const Mat2& m);

// Repelling/attracting endpoints in that order (|tr| > 2 required).
struct OrientedAxis {
    BoundaryPoint repelling, attracting;
    Geodesic geodesic() const { return {repelling, attracting}; }
};
OrientedAxis oriented_axis(const Mat2& m);

// Fixed point of a parabolic matrix (||tr| - 2| <= 1e-9 required).
BoundaryPoint parabolic_fixed_point(const Mat2& m);

// Length of the common perpendicular between two geodesics; 0 when they
// cross or share an endpoint; Degenerate error when equal.
double geodesic_distance(const Geodesic& g1, const Geodesic& g2);

// ---- frames (used by the gluing assembly) ----------------------------

// The unique isometry sending 0 -> from, infinity -> to, i -> a chosen
// point of the target geodesic.  `foot_shift` slides that point: the
// frame below maps e^s i to frame(e^s i).
Mat2 frame_to_axis(const OrientedAxis& axis);

// Signed position s of a point on the axis (from, to): the frame above
// pulls the foot of the perpendicular from `mark` back to e^s i.
// `mark` may be any boundary point not an endpoint of the axis, or a
// disjoint geodesic (foot of the common perpendicular).
double axis_position_of_perpendicular(const OrientedAxis& axis, const BoundaryPoint& mark);
double axis_position_of_perpendicular(const OrientedAxis& axis, const Geodesic& other);

} // namespace teich
