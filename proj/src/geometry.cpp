#include "geometry.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace clsnet {

namespace {

void check_finite_radial(const PolarPoint& p) {
    if (!std::isfinite(p.r) || !std::isfinite(p.phi) || p.r < 0.0)
        throw_input("polar point must have finite phi and r >= 0");
}

void check_point(const GeometrySpace& space, const PolarPoint& p) {
    check_finite_radial(p);
    if (space.kind == Geometry::Spherical && p.r > kPi + 1e-12)
        throw_input("spherical point has r > pi");
}

} // namespace

std::string geometry_name(Geometry g) {
    switch (g) {
        case Geometry::Euclidean: return "euclidean";
        case Geometry::Spherical: return "spherical";
        case Geometry::Hyperbolic: return "hyperbolic";
        case Geometry::Ultrametric: return "ultrametric";
    }
    return "unknown";
}

Geometry geometry_from_name(const std::string& name) {
    if (name == "euclidean") return Geometry::Euclidean;
    if (name == "spherical") return Geometry::Spherical;
    if (name == "hyperbolic") return Geometry::Hyperbolic;
    if (name == "ultrametric") return Geometry::Ultrametric;
    throw_input("unknown geometry: " + name);
}

uint64_t UltrametricTree::leaf_count() const {
    uint64_t count = 1;
    for (uint32_t level = 0; level < depth; ++level) {
        if (count > UINT64_MAX / branching)
            throw_input("ultrametric tree leaf count overflows: b^L too large");
        count *= branching;
    }
    return count;
}

double GeometrySpace::curvature() const {
    switch (kind) {
        case Geometry::Euclidean: return 0.0;
        case Geometry::Spherical: return 1.0;
        case Geometry::Hyperbolic: return -1.0;
        case Geometry::Ultrametric: break;
    }
    throw_input("ultrametric space has no curvature");
}

GeometrySpace GeometrySpace::ultrametric(uint32_t branching, uint32_t depth) {
    if (branching < 2) throw_input("ultrametric branching must be >= 2");
    if (depth < 1) throw_input("ultrametric depth must be >= 1");
    GeometrySpace space{Geometry::Ultrametric, {branching, depth}};
    space.tree.leaf_count(); // overflow check
    return space;
}

DiskDomain DiskDomain::make(const GeometrySpace& space, double radius) {
    if (space.kind == Geometry::Ultrametric)
        throw_input("disk domains are defined for curved spaces only");
    if (!std::isfinite(radius) || radius <= 0.0) throw_input("disk radius must be positive");
    if (space.kind == Geometry::Spherical && radius > kPi)
        throw_input("spherical disk radius must satisfy R <= pi");
    if (space.kind == Geometry::Hyperbolic && radius > kMaxHyperbolicRadius)
        throw_input("hyperbolic disk radius capped at R <= 25");
    return DiskDomain{space, radius};
}

double angular_difference(double phi_a, double phi_b) {
    double raw = std::fmod(std::fabs(phi_a - phi_b), kTwoPi);
    return kPi - std::fabs(kPi - raw);
}

double distance(const GeometrySpace& space, const PolarPoint& a, const PolarPoint& b) {
    check_point(space, a);
    check_point(space, b);
    switch (space.kind) {
        case Geometry::Euclidean: {
            const double dx = a.r * std::cos(a.phi) - b.r * std::cos(b.phi);
            const double dy = a.r * std::sin(a.phi) - b.r * std::sin(b.phi);
            return std::hypot(dx, dy);
        }
        case Geometry::Spherical: {
            // central angle via the half-chord form; stable near 0 and pi
            const double sa = std::sin(a.r), ca = std::cos(a.r);
            const double sb = std::sin(b.r), cb = std::cos(b.r);
            const double dx = sa * std::cos(a.phi) - sb * std::cos(b.phi);
            const double dy = sa * std::sin(a.phi) - sb * std::sin(b.phi);
            const double dz = ca - cb;
            const double half_chord = 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
            return 2.0 * std::asin(std::min(1.0, half_chord));
        }
        case Geometry::Hyperbolic: {
            // cosh(ra)cosh(rb) - sinh(ra)sinh(rb)cos(dphi), rearranged so both
            // terms are nonnegative and coincident points give exactly 0
            const double dphi = angular_difference(a.phi, b.phi);
            const double arg = std::cosh(a.r - b.r) +
                               (1.0 - std::cos(dphi)) * std::sinh(a.r) * std::sinh(b.r);
            return std::acosh(std::max(arg, 1.0));
        }
        case Geometry::Ultrametric:
            break;
    }
    throw_input("distance over polar points is undefined for ultrametric spaces; use leaf_distance");
}

uint32_t leaf_distance(const GeometrySpace& space, uint64_t leaf_a, uint64_t leaf_b) {
    if (space.kind != Geometry::Ultrametric)
        throw_input("leaf_distance requires an ultrametric space");
    const uint64_t leaves = space.tree.leaf_count();
    if (leaf_a >= leaves || leaf_b >= leaves) throw_input("leaf index out of range");
    uint32_t level = 0;
    while (leaf_a != leaf_b) {
        leaf_a /= space.tree.branching;
        leaf_b /= space.tree.branching;
        ++level;
    }
    return level;
}

double radial_cdf(const GeometrySpace& space, double R, double r) {
    if (r <= 0.0) return 0.0;
    if (r >= R) return 1.0;
    switch (space.kind) {
        case Geometry::Euclidean: return (r / R) * (r / R);
        case Geometry::Spherical: return (1.0 - std::cos(r)) / (1.0 - std::cos(R));
        case Geometry::Hyperbolic: return (std::cosh(r) - 1.0) / (std::cosh(R) - 1.0);
        case Geometry::Ultrametric: break;
    }
    throw_input("radial_cdf is defined for curved spaces only");
}

double radial_inv_cdf(const GeometrySpace& space, double R, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw_input("radial_inv_cdf: u must lie in [0, 1]");
    switch (space.kind) {
        case Geometry::Euclidean: return R * std::sqrt(u);
        case Geometry::Spherical: {
            const double c = 1.0 - u * (1.0 - std::cos(R));
            return std::acos(std::clamp(c, -1.0, 1.0));
        }
        case Geometry::Hyperbolic: return std::acosh(1.0 + u * (std::cosh(R) - 1.0));
        case Geometry::Ultrametric: break;
    }
    throw_input("radial_inv_cdf is defined for curved spaces only");
}

double quasi_uniform_density(double R, double alpha, double r) {
    if (!(alpha > 0.0)) throw_input("quasi-uniform alpha must be positive");
    if (r < 0.0 || r > R) return 0.0;
    return alpha * std::sinh(alpha * r) / (std::cosh(alpha * R) - 1.0);
}

double quasi_uniform_cdf(double R, double alpha, double r) {
    if (!(alpha > 0.0)) throw_input("quasi-uniform alpha must be positive");
    if (r <= 0.0) return 0.0;
    if (r >= R) return 1.0;
    return (std::cosh(alpha * r) - 1.0) / (std::cosh(alpha * R) - 1.0);
}

double quasi_uniform_inv_cdf(double R, double alpha, double u) {
    if (!(alpha > 0.0)) throw_input("quasi-uniform alpha must be positive");
    if (!(u >= 0.0 && u <= 1.0)) throw_input("quasi_uniform_inv_cdf: u must lie in [0, 1]");
    return std::acosh(1.0 + u * (std::cosh(alpha * R) - 1.0)) / alpha;
}

std::vector<PolarPoint> sample_disk(const DiskDomain& domain, uint32_t n, uint64_t seed,
                                    uint64_t stream) {
    DiskDomain checked = DiskDomain::make(domain.space, domain.radius); // revalidate
    if (n < 1) throw_input("sample_disk: n must be >= 1");
    Rng rng(seed, stream);
    std::vector<PolarPoint> points(n);
    for (auto& p : points) {
        p.r = radial_inv_cdf(checked.space, checked.radius, rng.uniform());
        p.phi = kTwoPi * rng.uniform();
    }
    return points;
}

std::vector<PolarPoint> sample_quasi_uniform(double R, double alpha, uint32_t n, uint64_t seed,
                                             uint64_t stream) {
    if (!(alpha > 0.0)) throw_input("sample_quasi_uniform: alpha must be positive");
    if (!std::isfinite(R) || R <= 0.0) throw_input("sample_quasi_uniform: R must be positive");
    if (alpha * R > 700.0) throw_input("sample_quasi_uniform: alpha*R too large for cosh");
    if (n < 1) throw_input("sample_quasi_uniform: n must be >= 1");
    Rng rng(seed, stream);
    std::vector<PolarPoint> points(n);
    for (auto& p : points) {
        p.r = quasi_uniform_inv_cdf(R, alpha, rng.uniform());
        p.phi = kTwoPi * rng.uniform();
    }
    return points;
}

std::vector<uint64_t> sample_leaves(const GeometrySpace& space, uint32_t n, uint64_t seed,
                                    uint64_t stream) {
    if (space.kind != Geometry::Ultrametric)
        throw_input("sample_leaves requires an ultrametric space");
    if (n < 1) throw_input("sample_leaves: n must be >= 1");
    const uint64_t leaves = space.tree.leaf_count();
    Rng rng(seed, stream);
    std::vector<uint64_t> out(n);
    for (auto& leaf : out) leaf = rng.below(leaves);
    return out;
}

double circumference(double curvature, double r) {
    if (!std::isfinite(r) || r < 0.0) throw_input("circumference: r must be >= 0");
    if (curvature == 0.0) return kTwoPi * r;
    const double scaled = std::sqrt(std::fabs(curvature)) * r;
    return curvature > 0.0 ? kTwoPi * std::sin(scaled) : kTwoPi * std::sinh(scaled);
}

HyperboloidPoint to_hyperboloid(const PolarPoint& p) {
    check_finite_radial(p);
    const double sh = std::sinh(p.r);
    return {sh * std::cos(p.phi), sh * std::sin(p.phi), std::cosh(p.r)};
}

PoincarePoint to_poincare(const HyperboloidPoint& h) {
    if (!(h.z > 0.0)) throw_input("to_poincare: hyperboloid point must have z > 0");
    return {h.x / (1.0 + h.z), h.y / (1.0 + h.z)};
}

double minkowski_distance(const HyperboloidPoint& a, const HyperboloidPoint& b) {
    const double form = a.z * b.z - a.x * b.x - a.y * b.y;
    return std::acosh(std::max(form, 1.0));
}

} // namespace clsnet
