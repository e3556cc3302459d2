#include "agint/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "agint/errors.hpp"

namespace agint::geom {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Area of the intersection of two disks at center distance d.
double lens_area(double r1, double r2, double d) {
    if (d >= r1 + r2) return 0.0;
    if (d + r2 <= r1) return kPi * r2 * r2;
    if (d + r1 <= r2) return kPi * r1 * r1;
    const double a1 = (d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1);
    const double a2 = (d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2);
    const double part1 = r1 * r1 * std::acos(std::clamp(a1, -1.0, 1.0));
    const double part2 = r2 * r2 * std::acos(std::clamp(a2, -1.0, 1.0));
    const double s = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) *
                     (d + r1 + r2);
    return part1 + part2 - 0.5 * std::sqrt(std::max(s, 0.0));
}

}  // namespace

void validate(const RegionSpec& region) {
    if (!(region.r_max > 0.0))
        throw config_error("region: r_max must be positive");
    if (region.r_p < 0.0) throw config_error("region: r_p must be >= 0");
    if (region.r_dec < 0.0) throw config_error("region: r_dec must be >= 0");
    if (!(region.epsilon > 0.0) || region.epsilon >= 1.0)
        throw config_error("region: epsilon must be in (0, 1)");
}

LuneGeometry lune(const RegionSpec& region) {
    validate(region);
    const double rm = region.r_max, rp = region.r_p, d = region.r_dec;
    const double disk = kPi * rm * rm;
    if (rp == 0.0) return {kPi, disk, -rm};
    if (d + rm <= rp) return {0.0, 0.0, rm};  // fully protected
    if (d + rp <= rm) {
        // Protection disk interior (or concentric): annulus-like region,
        // every direction admissible.
        return {kPi, disk - kPi * rp * rp, -rm};
    }
    if (d >= rm + rp) return {kPi, disk, -rm};  // disjoint, no exclusion
    const double chord_x = (rm * rm + d * d - rp * rp) / (2.0 * d);
    // acos(chord_x / r_max) is the half-angle of the excluded cap (the arc
    // of C0 inside C1); theta1 is its complement, the admissible half-angle,
    // which is continuous with the degenerate branches above and monotone
    // nonincreasing in r_p.
    const double theta1 =
        kPi - std::acos(std::clamp(chord_x / rm, -1.0, 1.0));
    return {theta1, disk - lens_area(rm, rp, d), chord_x};
}

bool contains(Point2D p, const RegionSpec& region) {
    const double rr = p.x * p.x + p.y * p.y;
    if (rr > region.r_max * region.r_max) return false;
    const double dx = p.x - region.r_dec;
    return dx * dx + p.y * p.y >= region.r_p * region.r_p;
}

double min_r_max(double alpha, double epsilon) {
    if (!(alpha > 2.0))
        throw math_domain_error("min_r_max: requires alpha > 2");
    return std::pow(epsilon, -1.0 / (alpha - 2.0));
}

bool truncation_rule_ok(const RegionSpec& region, double alpha) {
    if (!(alpha > 2.0)) return true;  // rule degenerates at alpha <= 2
    return std::pow(region.r_max, 2.0 - alpha) < region.epsilon;
}

}  // namespace agint::geom
