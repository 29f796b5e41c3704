#include "nesthilb/charalg.hpp"
#include "nesthilb/error.hpp"

#include "doctest.h"

#include <random>

using namespace nesthilb;

namespace {

LocalCharacter t1() { return LocalCharacter::monomial(1, 0); }
LocalCharacter t2() { return LocalCharacter::monomial(0, 1); }

LocalCharacter random_local(std::mt19937 &rng) {
    std::uniform_int_distribution<int> exp(-3, 3), mult(-4, 4), count(0, 6);
    LocalCharacter p;
    for (int k = count(rng); k > 0; --k)
        p.add_term({exp(rng), exp(rng)}, mult(rng));
    return p;
}

GlobalCharacter random_global(std::mt19937 &rng, bool effective) {
    std::uniform_int_distribution<int> coord(-5, 5), mult(effective ? 1 : -2, 2), count(0, 5);
    GlobalCharacter c;
    for (int k = count(rng); k > 0; --k) {
        Weight w{coord(rng), coord(rng)};
        if (w.is_zero())
            w = {1, 0};
        c.add_term(w, mult(rng));
    }
    return c;
}

Specialization pt(long x, long y) { return {Rational(x), Rational(y)}; }

} // namespace

TEST_CASE("lc_add cancels, keeps identity and doubles") {
    CHECK(lc_add(LocalCharacter::one() + t1(), -t1()) == LocalCharacter::one());
    const LocalCharacter p = LocalCharacter::one() + t1() * t2();
    CHECK(lc_add(p, LocalCharacter{}) == p);
    CHECK(lc_add(LocalCharacter::one(), LocalCharacter::one()) == LocalCharacter::monomial(0, 0, 2));
    CHECK((t1() - t1()).is_zero());
    CHECK((t1() - t1()).terms().empty());
}

TEST_CASE("lc_mul expands products") {
    CHECK(lc_mul(t1(), t2()) == LocalCharacter::monomial(1, 1));
    LocalCharacter expected = LocalCharacter::one() - t1() - t2() + LocalCharacter::monomial(1, 1);
    CHECK(lc_mul(LocalCharacter::one() - t1(), LocalCharacter::one() - t2()) == expected);
    CHECK(lc_mul(LocalCharacter::one(), lc_bar(LocalCharacter::one())) == LocalCharacter::one());
}

TEST_CASE("lc_bar inverts exponents") {
    CHECK(lc_bar(t1()) == LocalCharacter::monomial(-1, 0));
    LocalCharacter p = LocalCharacter::one() + t1() + t2();
    CHECK(lc_bar(p) == LocalCharacter::one() + LocalCharacter::monomial(-1, 0) + LocalCharacter::monomial(0, -1));
    CHECK(lc_bar(lc_bar(p)) == p);
}

TEST_CASE("character ring laws on random characters") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const LocalCharacter p = random_local(rng), q = random_local(rng), r = random_local(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(lc_bar(lc_bar(p)) == p);
        CHECK(lc_bar(p * q) == lc_bar(p) * lc_bar(q));
        const LocalCharacter sum = p * q + r;
        for (const auto &[e, m] : sum.terms())
            CHECK(m != 0);
    }
}

TEST_CASE("substitute_chart maps exponents linearly") {
    GlobalCharacter c = substitute_chart(t1(), {1, 0}, {0, 1});
    CHECK(c.multiplicity({1, 0}) == 1);
    CHECK(c.terms().size() == 1);

    GlobalCharacter d = substitute_chart(LocalCharacter::monomial(1, -1), {1, 0}, {1, -1});
    CHECK(d.multiplicity({0, 1}) == 1);
    CHECK(d.terms().size() == 1);

    GlobalCharacter e = substitute_chart(LocalCharacter::one() + t1(), {2, 3}, {-1, 4});
    CHECK(e.multiplicity({0, 0}) == 1);
    CHECK(e.multiplicity({2, 3}) == 1);

    CHECK_THROWS_AS(substitute_chart(t1(), {1, 2}, {2, 4}), Error);
    try {
        substitute_chart(t1(), {1, 2}, {-2, -4});
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::DependentChartWeights);
    }
}

TEST_CASE("substitute_chart preserves signed rank") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const LocalCharacter p = random_local(rng);
        CHECK(substitute_chart(p, {2, -1}, {1, 3}).signed_rank() == p.signed_rank());
    }
}

TEST_CASE("euler_value") {
    GlobalCharacter c;
    c.add_term({1, 0}, 1);
    c.add_term({0, 1}, 1);
    CHECK(euler_value(c, pt(1, 1)) == 1);

    GlobalCharacter d;
    d.add_term({1, 0}, 1);
    d.add_term({0, 1}, -1);
    CHECK(euler_value(d, pt(2, 3)) == Rational(2, 3));

    GlobalCharacter z;
    z.add_term({0, 0}, 1);
    z.add_term({1, 0}, 1);
    try {
        euler_value(z, pt(1, 1));
        FAIL("expected ZeroWeightInTangent");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::ZeroWeightInTangent);
    }

    GlobalCharacter pole;
    pole.add_term({1, -1}, 1);
    try {
        euler_value(pole, pt(2, 2));
        FAIL("expected SpecializationPole");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::SpecializationPole);
    }
}

TEST_CASE("chern_useries examples") {
    CHECK(chern_useries(GlobalCharacter{}, pt(3, 4), 3) == USeries::one(3));

    GlobalCharacter c;
    c.add_term({1, 0}, 1);
    USeries s = chern_useries(c, pt(2, 5), 2);
    CHECK(s[0] == 1);
    CHECK(s[1] == 2);
    CHECK(s[2] == 0);

    GlobalCharacter d;
    d.add_term({1, 0}, -1);
    USeries g = chern_useries(d, pt(1, 1), 2);
    CHECK(g[0] == 1);
    CHECK(g[1] == -1);
    CHECK(g[2] == 1);
}

TEST_CASE("chern_useries is multiplicative and matches euler for effective characters") {
    std::mt19937 rng(13);
    const Specialization s{Rational(7, 3), Rational(-5, 11)};
    for (int trial = 0; trial < 100; ++trial) {
        const GlobalCharacter a = random_global(rng, false), b = random_global(rng, false);
        CHECK(chern_useries(a + b, s, 6) == chern_useries(a, s, 6) * chern_useries(b, s, 6));

        const GlobalCharacter e = random_global(rng, true);
        const long rank = e.signed_rank().get_si();
        Rational product = 1;
        bool pole = false;
        for (const auto &[w, m] : e.terms())
            for (long k = 0; k < m.get_si(); ++k) {
                product *= evaluate(w, s);
                pole = pole || evaluate(w, s) == 0;
            }
        if (!pole)
            CHECK(euler_value(e, s) == product);
        CHECK(chern_useries(e, s, static_cast<unsigned>(rank) + 2)[static_cast<unsigned>(rank)] == product);
        CHECK(chern_useries(e, s, static_cast<unsigned>(rank) + 2)[static_cast<unsigned>(rank) + 1] == 0);
    }
}

TEST_CASE("USeries truncation and homogeneous parts") {
    USeries a = USeries::one(3);
    a.multiply_linear_power(Rational(2), 3); // 1 + 6u + 12u^2 + 8u^3
    CHECK(a[3] == 8);
    USeries b = a;
    b.multiply_linear_power(Rational(2), -3);
    CHECK(b == USeries::one(3));
    USeries h = a.homogeneous_part(2);
    CHECK(h[0] == 0);
    CHECK(h[2] == 12);
    CHECK((h * h)[3] == 0);
}

TEST_CASE("specialization source is seeded and bounded") {
    SpecializationSource a(42), b(42), c(43);
    for (int k = 0; k < 50; ++k) {
        Specialization x = a.next();
        CHECK(x == b.next());
        for (const Rational &v : {x.x, x.y}) {
            CHECK(v > 0);
            CHECK(v.get_num() <= SpecializationSource::kBound);
            CHECK(v.get_den() <= SpecializationSource::kBound);
        }
    }
    CHECK_FALSE(SpecializationSource(42).next() == c.next());
}

TEST_CASE("rational serialization") {
    CHECK(to_string(Rational(-9)) == "-9/1");
    CHECK(to_string(Rational(6, 4)) == "3/2");
}
