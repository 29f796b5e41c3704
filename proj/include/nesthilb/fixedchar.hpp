#pragma once

// Torus characters at fixed points of Hilbert schemes of points and of the
// nested Hilbert scheme S^[n1 >= n2] of a toric surface.
//
// Arguments named outer/inner are the box characters of (mu1, mu2): mu1 is the
// length-n1 subscheme and mu2, of length n2, sits inside it.

#include "nesthilb/charalg.hpp"
#include "nesthilb/partitions.hpp"
#include "nesthilb/toric.hpp"

#include <functional>
#include <vector>

namespace nesthilb {

/// (1 - t1)(1 - t2) / (t1 t2).
const LocalCharacter &koszul_dual_factor();

/// Virtual tangent character of the nested scheme at a monomial pair:
///   Z1 + Z2^/(t1t2) + (Z1^ Z2 - Z1^ Z1 - Z2^ Z2)(1-t1)(1-t2)/(t1t2)
/// where ^ is the bar involution and (Z1, Z2) = (outer, inner).
LocalCharacter nested_tangent_char(const LocalCharacter &outer, const LocalCharacter &inner);

/// Tangent character of Hilb^n at a monomial ideal with box character z.
LocalCharacter hilb_tangent_char(const LocalCharacter &z);

/// Restriction of E^{n1,n2} = [R pi_* O] - [R Hom(I1, I2)] to the pair of
/// monomial ideals; nesting is not required. Twist by M afterwards.
LocalCharacter em_char(const LocalCharacter &outer, const LocalCharacter &inner);

/// Fiber of the tautological bundle L^[n] before twisting by L.
LocalCharacter taut_char(const LocalCharacter &z);

/// Fiber of the twisted tangent bundle T^M before twisting by M.
LocalCharacter twisted_tangent_char(const LocalCharacter &z);

enum class Mode { Nested, Product };

/// Per-fixed-point partition pairs. In product mode the two partitions at a
/// point are independent and NestedPair::is_nested() may be false.
struct FixedConfig {
    std::vector<NestedPair> assignment;

    int n1() const;
    int n2() const;
};

/// Every fixed point of S^[n1 >= n2] (nested) or S^[n1] x S^[n2] (product),
/// each once, in a deterministic order. Throws InvalidNesting for n1 < n2 in
/// nested mode or negative sizes.
std::vector<FixedConfig> enumerate_configs(const ToricSurface &s, int n1, int n2, Mode mode);

/// Streaming form of enumerate_configs; visits configs in the same order.
void for_each_config(const ToricSurface &s, int n1, int n2, Mode mode,
                     const std::function<void(const FixedConfig &)> &visit);

/// Global tangent character of the config: nested_tangent_char (nested) or
/// the sum of the two Hilbert scheme tangents (product), substituted chart by
/// chart and summed.
GlobalCharacter tangent_character(const ToricSurface &s, const FixedConfig &config, Mode mode);

} // namespace nesthilb
