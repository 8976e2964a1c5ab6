#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rng.hpp"

namespace clsnet {

enum class Geometry { Euclidean, Spherical, Hyperbolic, Ultrametric };

std::string geometry_name(Geometry g);
Geometry geometry_from_name(const std::string& name);

// Perfect b-ary branching hierarchy; leaves are the points of the space.
struct UltrametricTree {
    uint32_t branching = 2;
    uint32_t depth = 1;

    uint64_t leaf_count() const;
};

// A constant-curvature space (K fixed at 0 / +1 / -1) or an ultrametric tree.
struct GeometrySpace {
    Geometry kind = Geometry::Euclidean;
    UltrametricTree tree; // meaningful for Ultrametric only

    double curvature() const; // 0, +1, -1; input error for Ultrametric

    static GeometrySpace euclidean() { return {Geometry::Euclidean, {}}; }
    static GeometrySpace spherical() { return {Geometry::Spherical, {}}; }
    static GeometrySpace hyperbolic() { return {Geometry::Hyperbolic, {}}; }
    // Validates branching >= 2, depth >= 1, and that b^L does not overflow.
    static GeometrySpace ultrametric(uint32_t branching, uint32_t depth);
};

struct PolarPoint {
    double r = 0.0;   // intrinsic radial coordinate (geodesic distance from origin)
    double phi = 0.0; // angle in [0, 2*pi)
};

// Disk of intrinsic radius R about the origin (or its analogue) of a curved space.
struct DiskDomain {
    GeometrySpace space;
    double radius = 1.0;

    static DiskDomain make(const GeometrySpace& space, double radius);
};

struct HyperboloidPoint {
    double x = 0.0, y = 0.0, z = 1.0; // upper sheet: z^2 - y^2 - x^2 = 1, z > 0
};

struct PoincarePoint {
    double u = 0.0, v = 0.0; // u^2 + v^2 < 1
};

// Hyperbolic sampling keeps cosh(R) comfortably inside double range.
inline constexpr double kMaxHyperbolicRadius = 25.0;

double angular_difference(double phi_a, double phi_b); // pi - |pi - |phi_a - phi_b||

// Geodesic distance between two points of a curved space.
double distance(const GeometrySpace& space, const PolarPoint& a, const PolarPoint& b);

// Ultrametric distance: level of the lowest common ancestor, counted from the leaves.
uint32_t leaf_distance(const GeometrySpace& space, uint64_t leaf_a, uint64_t leaf_b);

// Analytic radial law of the uniform (area-measure) distribution on a disk.
double radial_cdf(const GeometrySpace& space, double R, double r);
double radial_inv_cdf(const GeometrySpace& space, double R, double u);

// Quasi-uniform hyperbolic radial law p(r|R,alpha) = alpha sinh(alpha r) / (cosh(alpha R) - 1).
double quasi_uniform_density(double R, double alpha, double r);
double quasi_uniform_cdf(double R, double alpha, double r);
double quasi_uniform_inv_cdf(double R, double alpha, double u);

// n i.i.d. points uniform w.r.t. the area measure on the disk; inverse-CDF radial
// transform, phi ~ Uniform(0, 2*pi). Deterministic given (seed, stream).
std::vector<PolarPoint> sample_disk(const DiskDomain& domain, uint32_t n, uint64_t seed,
                                    uint64_t stream = 0);

// Hyperbolic disk with radial density p(r|R,alpha); alpha = 1 is the uniform disk.
std::vector<PolarPoint> sample_quasi_uniform(double R, double alpha, uint32_t n, uint64_t seed,
                                             uint64_t stream = 0);

// Uniform leaves of an ultrametric tree.
std::vector<uint64_t> sample_leaves(const GeometrySpace& space, uint32_t n, uint64_t seed,
                                    uint64_t stream = 0);

// Circumference of a circle of radius r in a space of curvature K:
// 2*pi*r (K=0), 2*pi*sin(sqrt(|K|) r) (K>0), 2*pi*sinh(sqrt(|K|) r) (K<0).
double circumference(double curvature, double r);

HyperboloidPoint to_hyperboloid(const PolarPoint& p);
PoincarePoint to_poincare(const HyperboloidPoint& h);

// acosh(z_a z_b - x_a x_b - y_a y_b); agrees with distance() on hyperbolic points.
double minkowski_distance(const HyperboloidPoint& a, const HyperboloidPoint& b);

} // namespace clsnet
