#pragma once

// Torus-equivariant data of smooth projective toric surfaces: fixed points
// with the weights of their local coordinate functions, and per-fixed-point
// fiber weights of equivariant line bundles.
//
// Sign convention: a chart (w1, w2) lists the weights of the two coordinate
// functions at a fixed point, so box characters Z = sum t1^i t2^j carry
// nonnegative exponents and the tangent space has weights -w1, -w2. A line
// bundle stores the weight of its fiber in the same convention as tangent
// characters; the canonical bundle det(T^*) therefore has weight w1 + w2.

#include "nesthilb/charalg.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nesthilb {

struct FixedPointChart {
    Weight w1;
    Weight w2;
};

struct EquivariantLineBundle {
    std::string label;
    std::vector<Weight> weights; // one per fixed point, in chart order
    std::vector<int> divisor;    // toric divisor coefficients when known

    /// Tensor product.
    friend EquivariantLineBundle operator+(const EquivariantLineBundle &l, const EquivariantLineBundle &r);
    /// Tensor with the dual.
    friend EquivariantLineBundle operator-(const EquivariantLineBundle &l, const EquivariantLineBundle &r);
};

using Ray = std::array<std::int64_t, 2>;

struct ToricSurface {
    std::string name;
    std::vector<FixedPointChart> charts;
    std::vector<Ray> rays; // empty for descriptor-loaded surfaces
    bool fano = false;
    std::map<std::string, EquivariantLineBundle> bundles;
    std::map<std::pair<std::string, std::string>, Integer> declared_intersections;

    std::size_t fixed_point_count() const { return charts.size(); }
    /// Topological Euler number, the number of torus-fixed points.
    int euler_number() const { return static_cast<int>(charts.size()); }

    /// Named bundle lookup; "O" and "K" always resolve. Throws InvalidSurface.
    EquivariantLineBundle bundle(const std::string &label) const;
};

/// Smooth complete fan given by primitive rays in counterclockwise order; one
/// fixed point per two-dimensional cone (rays k, k+1).
ToricSurface surface_from_fan(std::string name, std::vector<Ray> rays, bool fano);

ToricSurface surface_p2();
ToricSurface surface_p1xp1();
/// Hirzebruch surface F_a; F_0 is the quadric.
ToricSurface surface_hirzebruch(int a);

/// O(sum_k coeffs[k] D_k) for the torus-invariant divisors D_k of the fan.
/// Throws WrongCoefficientCount if the coefficient count does not match the rays.
EquivariantLineBundle line_bundle(const ToricSurface &s, const std::vector<int> &divisor_coeffs);
EquivariantLineBundle trivial_bundle(const ToricSurface &s);
EquivariantLineBundle canonical_bundle(const ToricSurface &s);

/// Poincare pairing <c1(L), c1(L')> by localization on the surface, checked
/// for constancy at three specializations.
Rational intersect(const ToricSurface &s, const EquivariantLineBundle &l, const EquivariantLineBundle &lp);

/// Parses a JSON surface descriptor; only local consistency is checked.
ToricSurface parse_surface_json(const std::string &text);
ToricSurface load_surface_json(const std::filesystem::path &path);

} // namespace nesthilb
