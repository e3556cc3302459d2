#pragma once

namespace agint::geom {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

// Worst-case interference region: the part of the network disk C0
// (radius r_max, centered at the victim receiver at the origin) outside
// the protection disk C1 (radius r_p, centered at (r_dec, 0)).
struct RegionSpec {
    double r_max = 1.0;    // network radius
    double r_p = 0.0;      // protection radius around the primary transmitter
    double r_dec = 0.0;    // distance from origin to the protection center
    double epsilon = 0.01; // mean-interference matching factor
};

struct LuneGeometry {
    double theta1;   // half-angle of the admissible arc, in [0, pi]
    double area;     // admissible area, <= pi * r_max^2
    double chord_x;  // u-coordinate of the circle intersection points
};

// Throws config_error on invalid radii.
void validate(const RegionSpec& region);

// Admissible region of the two-disk configuration. Degenerate cases:
// protection disk absent or fully interior -> full disk / annulus with
// theta1 = pi; network disk fully protected -> theta1 = 0, area 0.
LuneGeometry lune(const RegionSpec& region);

// Membership predicate: inside C0 and outside C1.
bool contains(Point2D p, const RegionSpec& region);

// Smallest network radius satisfying the finite-network truncation rule
// for the given path-loss exponent (alpha > 2): r_max^(2-alpha) < epsilon.
double min_r_max(double alpha, double epsilon);

bool truncation_rule_ok(const RegionSpec& region, double alpha);

}  // namespace agint::geom
