#include "nesthilb/charalg.hpp"

#include "nesthilb/error.hpp"

#include <sstream>

namespace nesthilb {

std::string to_string(const Rational &r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_integral(const Rational &r) {
    Rational c = r;
    c.canonicalize();
    return c.get_den() == 1;
}

// LocalCharacter

LocalCharacter LocalCharacter::monomial(std::int64_t a, std::int64_t b, const Integer &mult) {
    LocalCharacter p;
    p.add_term({a, b}, mult);
    return p;
}

Integer LocalCharacter::coefficient(std::int64_t a, std::int64_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer LocalCharacter::signed_rank() const {
    Integer total = 0;
    for (const auto &[e, m] : terms_)
        total += m;
    return total;
}

void LocalCharacter::add_term(Exponent e, const Integer &mult) {
    if (mult == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LocalCharacter &LocalCharacter::operator+=(const LocalCharacter &rhs) {
    for (const auto &[e, m] : rhs.terms_)
        add_term(e, m);
    return *this;
}

LocalCharacter &LocalCharacter::operator-=(const LocalCharacter &rhs) {
    for (const auto &[e, m] : rhs.terms_)
        add_term(e, -m);
    return *this;
}

LocalCharacter &LocalCharacter::operator*=(const Integer &scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, m] : terms_)
        m *= scalar;
    return *this;
}

LocalCharacter operator*(const LocalCharacter &lhs, const LocalCharacter &rhs) {
    LocalCharacter out;
    for (const auto &[e1, m1] : lhs.terms_)
        for (const auto &[e2, m2] : rhs.terms_)
            out.add_term({e1.a + e2.a, e1.b + e2.b}, m1 * m2);
    return out;
}

LocalCharacter lc_add(const LocalCharacter &p, const LocalCharacter &q) { return p + q; }
LocalCharacter lc_mul(const LocalCharacter &p, const LocalCharacter &q) { return p * q; }

LocalCharacter lc_bar(const LocalCharacter &p) {
    LocalCharacter out;
    for (const auto &[e, m] : p.terms())
        out.add_term({-e.a, -e.b}, m);
    return out;
}

std::string to_string(const LocalCharacter &p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, m] : p.terms()) {
        if (!first)
            os << (m < 0 ? " - " : " + ");
        else if (m < 0)
            os << "-";
        first = false;
        Integer mag = abs(m);
        bool unit = e.a == 0 && e.b == 0;
        if (mag != 1 || unit)
            os << mag.get_str();
        if (!unit && mag != 1)
            os << "*";
        if (e.a != 0)
            os << "t1" << (e.a != 1 ? "^" + std::to_string(e.a) : "");
        if (e.a != 0 && e.b != 0)
            os << "*";
        if (e.b != 0)
            os << "t2" << (e.b != 1 ? "^" + std::to_string(e.b) : "");
    }
    return os.str();
}

// Weights

bool linearly_independent(Weight w1, Weight w2) { return w1.a * w2.b - w1.b * w2.a != 0; }

Rational evaluate(Weight w, const Specialization &s) { return w.a * s.x + w.b * s.y; }

Integer GlobalCharacter::multiplicity(Weight w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer GlobalCharacter::signed_rank() const {
    Integer total = 0;
    for (const auto &[w, m] : terms_)
        total += m;
    return total;
}

void GlobalCharacter::add_term(Weight w, const Integer &mult) {
    if (mult == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GlobalCharacter GlobalCharacter::translated(Weight w) const {
    GlobalCharacter out;
    for (const auto &[v, m] : terms_)
        out.add_term(v + w, m);
    return out;
}

GlobalCharacter &GlobalCharacter::operator+=(const GlobalCharacter &rhs) {
    for (const auto &[w, m] : rhs.terms_)
        add_term(w, m);
    return *this;
}

GlobalCharacter substitute_chart(const LocalCharacter &p, Weight w1, Weight w2) {
    if (!linearly_independent(w1, w2))
        throw Error(ErrorKind::DependentChartWeights,
                    "chart weights (" + std::to_string(w1.a) + "," + std::to_string(w1.b) + ") and (" +
                        std::to_string(w2.a) + "," + std::to_string(w2.b) + ") are parallel");
    GlobalCharacter out;
    for (const auto &[e, m] : p.terms())
        out.add_term(e.a * w1 + e.b * w2, m);
    return out;
}

namespace {

long checked_long(const Integer &m) {
    if (!m.fits_slong_p())
        throw Error(ErrorKind::InvalidIntegrand, "multiplicity " + m.get_str() + " out of range");
    return m.get_si();
}

Rational power(const Rational &base, long exponent) {
    mpz_class num, den;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

} // namespace

Rational euler_value(const GlobalCharacter &c, const Specialization &s) {
    if (c.multiplicity({0, 0}) != 0)
        throw Error(ErrorKind::ZeroWeightInTangent,
                    "zero weight with multiplicity " + c.multiplicity({0, 0}).get_str());
    Rational out = 1;
    for (const auto &[w, m] : c.terms()) {
        Rational v = evaluate(w, s);
        if (v == 0)
            throw Error(ErrorKind::SpecializationPole, "weight (" + std::to_string(w.a) + "," +
                                                           std::to_string(w.b) + ") vanishes at " +
                                                           to_string(s.x) + ", " + to_string(s.y));
        out *= power(v, checked_long(m));
    }
    return out;
}

// USeries

USeries::USeries(unsigned cutoff) : coeffs_(cutoff + 1, Rational(0)) {}

USeries USeries::one(unsigned cutoff) {
    USeries s(cutoff);
    s.coeffs_[0] = 1;
    return s;
}

Rational USeries::coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

void USeries::multiply_linear_power(const Rational &value, long power) {
    if (value == 0 || power == 0)
        return;
    const std::size_t n = coeffs_.size();
    if (power > 0) {
        for (long rep = 0; rep < power; ++rep)
            for (std::size_t k = n - 1; k > 0; --k)
                coeffs_[k] += value * coeffs_[k - 1];
    } else {
        // t = s / (1 + u v)  <=>  t_k = s_k - v t_{k-1}
        for (long rep = 0; rep < -power; ++rep)
            for (std::size_t k = 1; k < n; ++k)
                coeffs_[k] -= value * coeffs_[k - 1];
    }
}

USeries USeries::homogeneous_part(unsigned k) const {
    USeries out(cutoff());
    if (k < coeffs_.size())
        out.coeffs_[k] = coeffs_[k];
    return out;
}

USeries &USeries::operator*=(const USeries &rhs) {
    const std::size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

USeries chern_useries(const GlobalCharacter &c, const Specialization &s, unsigned cutoff) {
    USeries out = USeries::one(cutoff);
    for (const auto &[w, m] : c.terms())
        out.multiply_linear_power(evaluate(w, s), checked_long(m));
    return out;
}

// SpecializationSource

SpecializationSource::SpecializationSource(std::uint64_t seed) : rng_(seed) {}

Rational SpecializationSource::draw() {
    std::uniform_int_distribution<std::int64_t> dist(1, kBound);
    std::int64_t num = dist(rng_);
    std::int64_t den = dist(rng_);
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

Specialization SpecializationSource::next() {
    Rational x = draw();
    Rational y = draw();
    return {x, y};
}

} // namespace nesthilb
