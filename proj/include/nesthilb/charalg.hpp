#pragma once

// Exact character algebra: Laurent polynomials in the local torus variables
// (t1, t2), signed weight multisets in the global character lattice, and
// truncated series in an auxiliary grading variable u.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace nesthilb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "p/q" (q = 1 for integers).
std::string to_string(const Rational &r);
bool is_integral(const Rational &r);

struct Exponent {
    std::int64_t a = 0; // power of t1
    std::int64_t b = 0; // power of t2

    auto operator<=>(const Exponent &) const = default;
};

/// Finite sum of monomials t1^a t2^b with integer multiplicities; zero
/// multiplicities are never stored.
class LocalCharacter {
  public:
    using Terms = std::map<Exponent, Integer>;

    LocalCharacter() = default;

    static LocalCharacter monomial(std::int64_t a, std::int64_t b, const Integer &mult = 1);
    static LocalCharacter one() { return monomial(0, 0); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(std::int64_t a, std::int64_t b) const;

    /// Value at t1 = t2 = 1.
    Integer signed_rank() const;

    void add_term(Exponent e, const Integer &mult);

    LocalCharacter &operator+=(const LocalCharacter &rhs);
    LocalCharacter &operator-=(const LocalCharacter &rhs);
    LocalCharacter &operator*=(const Integer &scalar);

    friend LocalCharacter operator+(LocalCharacter lhs, const LocalCharacter &rhs) { return lhs += rhs; }
    friend LocalCharacter operator-(LocalCharacter lhs, const LocalCharacter &rhs) { return lhs -= rhs; }
    friend LocalCharacter operator*(const LocalCharacter &lhs, const LocalCharacter &rhs);
    friend LocalCharacter operator*(LocalCharacter lhs, const Integer &s) { return lhs *= s; }
    friend LocalCharacter operator-(LocalCharacter p) { return p *= -1; }
    friend bool operator==(const LocalCharacter &, const LocalCharacter &) = default;

  private:
    Terms terms_;
};

LocalCharacter lc_add(const LocalCharacter &p, const LocalCharacter &q);
LocalCharacter lc_mul(const LocalCharacter &p, const LocalCharacter &q);

/// t1^a t2^b -> t1^-a t2^-b.
LocalCharacter lc_bar(const LocalCharacter &p);

std::string to_string(const LocalCharacter &p);

/// Linear form a*s1 + b*s2 on the Lie algebra of the global 2-torus.
struct Weight {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool is_zero() const { return a == 0 && b == 0; }

    auto operator<=>(const Weight &) const = default;

    friend Weight operator+(Weight l, Weight r) { return {l.a + r.a, l.b + r.b}; }
    friend Weight operator-(Weight l, Weight r) { return {l.a - r.a, l.b - r.b}; }
    friend Weight operator-(Weight w) { return {-w.a, -w.b}; }
    friend Weight operator*(std::int64_t k, Weight w) { return {k * w.a, k * w.b}; }
};

bool linearly_independent(Weight w1, Weight w2);

/// A numeric assignment s1 = x, s2 = y of the equivariant parameters.
struct Specialization {
    Rational x;
    Rational y;

    bool operator==(const Specialization &) const = default;
};

Rational evaluate(Weight w, const Specialization &s);

/// Signed multiset of global weights: a K-theory class restricted to a
/// fixed point.
class GlobalCharacter {
  public:
    using Terms = std::map<Weight, Integer>;

    GlobalCharacter() = default;

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer multiplicity(Weight w) const;
    Integer signed_rank() const;

    void add_term(Weight w, const Integer &mult);

    /// Tensor with a line of weight w.
    GlobalCharacter translated(Weight w) const;

    GlobalCharacter &operator+=(const GlobalCharacter &rhs);
    friend GlobalCharacter operator+(GlobalCharacter l, const GlobalCharacter &r) { return l += r; }
    friend bool operator==(const GlobalCharacter &, const GlobalCharacter &) = default;

  private:
    Terms terms_;
};

/// Maps t1^a t2^b to the weight a*w1 + b*w2. Throws DependentChartWeights when
/// w1 and w2 are parallel.
GlobalCharacter substitute_chart(const LocalCharacter &p, Weight w1, Weight w2);

/// Product of weight values raised to their multiplicities. Throws
/// ZeroWeightInTangent if the zero weight occurs, SpecializationPole if a
/// nonzero weight vanishes at s.
Rational euler_value(const GlobalCharacter &c, const Specialization &s);

/// Power series in u truncated above u^cutoff.
class USeries {
  public:
    explicit USeries(unsigned cutoff);

    static USeries one(unsigned cutoff);

    unsigned cutoff() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Rational &operator[](unsigned k) const { return coeffs_.at(k); }
    Rational coefficient(unsigned k) const;
    Rational &at(unsigned k) { return coeffs_.at(k); }
    const std::vector<Rational> &coefficients() const { return coeffs_; }

    /// Multiply by (1 + u*value)^power; negative powers use the formal inverse.
    void multiply_linear_power(const Rational &value, long power);

    /// Only the u^k term of this series.
    USeries homogeneous_part(unsigned k) const;

    USeries &operator*=(const USeries &rhs);
    friend USeries operator*(USeries l, const USeries &r) { return l *= r; }
    bool operator==(const USeries &) const = default;

  private:
    std::vector<Rational> coeffs_;
};

/// prod_w (1 + u*w(s))^mult truncated at u^cutoff; the u^k coefficient is the
/// k-th equivariant Chern class of c at s.
USeries chern_useries(const GlobalCharacter &c, const Specialization &s, unsigned cutoff);

/// Seeded source of specialization points with numerators and denominators
/// drawn uniformly from [1, 10^4].
class SpecializationSource {
  public:
    static constexpr int kMaxAttempts = 32;
    static constexpr std::int64_t kBound = 10000;

    explicit SpecializationSource(std::uint64_t seed);

    Specialization next();

  private:
    Rational draw();

    std::mt19937_64 rng_;
};

} // namespace nesthilb
