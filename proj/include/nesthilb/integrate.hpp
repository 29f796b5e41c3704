#pragma once

// Localization integrator over the fixed points of S^[n1 >= n2] or of
// S^[n1] x S^[n2]. Integrands are products of graded Chern classes; degrees
// are tracked by an auxiliary variable u and the u^vdim coefficient is
// integrated.

#include "nesthilb/charalg.hpp"
#include "nesthilb/fixedchar.hpp"
#include "nesthilb/toric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nesthilb {

enum class ClassKind {
    EM,             // E^{n1,n2}_M
    Taut,           // L^[n_i] on Hilbert factor i
    TwistedTangent, // T^M of Hilbert factor i
};

struct ClassRef {
    ClassKind kind = ClassKind::EM;
    EquivariantLineBundle bundle;
    int factor = 1; // 1 or 2; ignored for EM
};

ClassRef em_class(EquivariantLineBundle m);
ClassRef taut_class(EquivariantLineBundle l, int factor);
ClassRef tangent_class(EquivariantLineBundle m, int factor);

enum class Grade { Total, Top, Index };

struct Factor {
    ClassRef cls;
    Grade grade = Grade::Total;
    unsigned index = 0; // for Grade::Index
};

Factor total_chern(ClassRef cls);
Factor top_chern(ClassRef cls);
Factor chern_index(unsigned k, ClassRef cls);

/// A polynomial in Chern classes, written as a product of factors. An empty
/// factor list is the constant 1.
struct IntegrandSpec {
    Mode mode = Mode::Nested;
    std::vector<Factor> factors;

    std::string describe() const;
};

struct IntegrateOptions {
    unsigned workers = 1;
    int specializations = 3;
};

struct InvariantResult {
    Rational value;
    std::vector<Specialization> specializations;
    std::size_t config_count = 0;
    Mode mode = Mode::Nested;
    int n1 = 0;
    int n2 = 0;
};

/// Virtual dimension n1 + n2 (nested) or dimension 2(n1 + n2) (product).
unsigned integration_degree(Mode mode, int n1, int n2);

/// Sums [u^vdim of the integrand] / e(T) over all fixed points at several
/// seeded specializations and requires every evaluation to agree. Throws
/// NonConstantSum, SpecializationExhausted, ZeroWeightInTangent; every error
/// message names the surface, sizes and, where relevant, the config index.
InvariantResult integrate(const ToricSurface &s, int n1, int n2, const IntegrandSpec &spec, std::uint64_t seed,
                          const IntegrateOptions &options = {});

/// Integral over Hilb^n(S), computed as the product space Hilb^n x Hilb^0;
/// spec.mode is ignored.
InvariantResult integrate_hilb(const ToricSurface &s, int n, const IntegrandSpec &spec, std::uint64_t seed,
                               const IntegrateOptions &options = {});

} // namespace nesthilb
