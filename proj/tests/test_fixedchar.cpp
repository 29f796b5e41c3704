#include "nesthilb/error.hpp"
#include "nesthilb/fixedchar.hpp"
#include "nesthilb/toric.hpp"

#include "doctest.h"

#include <set>

using namespace nesthilb;

namespace {

LocalCharacter mono(std::int64_t a, std::int64_t b, long m = 1) { return LocalCharacter::monomial(a, b, m); }

// Combinatorial form of E at a pair of monomial ideals in terms of signed arm
// and leg lengths, computed box by box without any character products.
LocalCharacter em_oracle(const Partition &outer, const Partition &inner) {
    LocalCharacter out;
    for (int j = 0; j < inner.length(); ++j)
        for (int i = 0; i < inner.row(j); ++i)
            out.add_term({-(arm(outer, i, j) + 1), leg(inner, i, j)}, 1);
    for (int j = 0; j < outer.length(); ++j)
        for (int i = 0; i < outer.row(j); ++i)
            out.add_term({arm(inner, i, j), -(leg(outer, i, j) + 1)}, 1);
    return out;
}

LocalCharacter nested_oracle(const Partition &outer, const Partition &inner) {
    return em_oracle(outer, outer) + em_oracle(inner, inner) - em_oracle(outer, inner);
}

std::vector<Partition> all_partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto &p : partitions_of(k))
            out.push_back(p);
    return out;
}

// Independent count of fixed points: enumerate all assignments of one local
// pair per fixed point by brute force over every local pair of bounded size.
std::size_t brute_config_count(std::size_t points, int n1, int n2, Mode mode) {
    std::vector<NestedPair> local;
    for (const auto &o : all_partitions_up_to(n1))
        for (const auto &i : all_partitions_up_to(n2))
            if (mode == Mode::Product || o.contains(i))
                local.push_back({o, i});
    std::size_t count = 0;
    std::vector<std::size_t> idx(points, 0);
    while (true) {
        int a = 0, b = 0;
        for (auto k : idx) {
            a += local[k].outer.size();
            b += local[k].inner.size();
        }
        count += (a == n1 && b == n2);
        std::size_t p = 0;
        while (p < points && ++idx[p] == local.size())
            idx[p++] = 0;
        if (p == points)
            break;
    }
    return count;
}

} // namespace

TEST_CASE("nested tangent examples") {
    const LocalCharacter one = LocalCharacter::one();
    CHECK(nested_tangent_char({}, {}).is_zero());
    const LocalCharacter v10 = nested_tangent_char(one, {});
    CHECK(v10 == mono(-1, 0) + mono(0, -1) - mono(-1, -1));
    CHECK(v10.signed_rank() == 1);
    const LocalCharacter v11 = nested_tangent_char(one, one);
    CHECK(v11 == mono(-1, 0) + mono(0, -1));
    CHECK(v11.signed_rank() == 2);
}

TEST_CASE("hilbert tangent examples") {
    CHECK(hilb_tangent_char({}).is_zero());
    CHECK(hilb_tangent_char(LocalCharacter::one()) == mono(-1, 0) + mono(0, -1));
    CHECK(hilb_tangent_char(box_char(Partition({2}))) == mono(-2, 0) + mono(-1, 0) + mono(1, -1) + mono(0, -1));
}

TEST_CASE("characters agree with the arm and leg oracle") {
    const auto parts = all_partitions_up_to(5);
    for (const auto &o : parts)
        for (const auto &i : parts) {
            const LocalCharacter z1 = box_char(o), z2 = box_char(i);
            const LocalCharacter em = em_char(z1, z2);
            CHECK(em == em_oracle(o, i));
            CHECK(em.signed_rank() == o.size() + i.size());
            for (const auto &[e, m] : em.terms())
                CHECK(m > 0);
            CHECK(lc_bar(em) == LocalCharacter::monomial(1, 1) * em_char(z2, z1));
            if (o.contains(i))
                CHECK(nested_tangent_char(z1, z2) == nested_oracle(o, i));
        }
}

TEST_CASE("diagonal reduction for all partitions up to 6") {
    for (const auto &mu : all_partitions_up_to(6)) {
        const LocalCharacter z = box_char(mu);
        const LocalCharacter t = hilb_tangent_char(z);
        CHECK(nested_tangent_char(z, z) == t);
        CHECK(em_char(z, z) == t);
        CHECK(t.signed_rank() == 2 * mu.size());
        CHECK(t.coefficient(0, 0) == 0);
        for (const auto &[e, m] : t.terms())
            CHECK(m > 0);
        CHECK(taut_char(z) == z);
        CHECK(taut_char(z).signed_rank() == mu.size());
        CHECK(twisted_tangent_char(z) == t);
    }
}

TEST_CASE("config counts") {
    const ToricSurface p2 = surface_p2(), q = surface_p1xp1();
    CHECK(enumerate_configs(p2, 1, 0, Mode::Nested).size() == 3);
    CHECK(enumerate_configs(p2, 1, 1, Mode::Nested).size() == 3);
    CHECK(enumerate_configs(p2, 2, 1, Mode::Nested).size() == 12);
    CHECK(enumerate_configs(p2, 0, 0, Mode::Nested).size() == 1);
    for (const auto &[n1, n2] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {2, 2}, {3, 2}, {3, 0}}) {
        CHECK(enumerate_configs(p2, n1, n2, Mode::Nested).size() == brute_config_count(3, n1, n2, Mode::Nested));
        CHECK(enumerate_configs(q, n1, n2, Mode::Nested).size() == brute_config_count(4, n1, n2, Mode::Nested));
        CHECK(enumerate_configs(p2, n1, n2, Mode::Product).size() == brute_config_count(3, n1, n2, Mode::Product));
    }
    CHECK(enumerate_configs(p2, 1, 2, Mode::Product).size() == brute_config_count(3, 1, 2, Mode::Product));
}

TEST_CASE("configs are distinct, deterministic and have the requested sizes") {
    const ToricSurface q = surface_p1xp1();
    const auto a = enumerate_configs(q, 3, 2, Mode::Nested);
    const auto b = enumerate_configs(q, 3, 2, Mode::Nested);
    std::set<std::vector<NestedPair>> seen;
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].assignment == b[k].assignment);
        CHECK(a[k].n1() == 3);
        CHECK(a[k].n2() == 2);
        for (const auto &pair : a[k].assignment)
            CHECK(pair.is_nested());
        seen.insert(a[k].assignment);
    }
    CHECK(seen.size() == a.size());
    std::size_t streamed = 0;
    for_each_config(q, 3, 2, Mode::Nested, [&](const FixedConfig &c) {
        CHECK(c.assignment == a.at(streamed).assignment);
        ++streamed;
    });
    CHECK(streamed == a.size());
}

TEST_CASE("invalid sizes") {
    const ToricSurface p2 = surface_p2();
    try {
        enumerate_configs(p2, 1, 2, Mode::Nested);
        FAIL("expected InvalidNesting");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InvalidNesting);
    }
    CHECK_THROWS_AS(enumerate_configs(p2, -1, 0, Mode::Product), Error);
}

TEST_CASE("virtual dimension and isolatedness for n1 up to 4") {
    for (const auto &s : {surface_p2(), surface_p1xp1()})
        for (int n1 = 0; n1 <= 4; ++n1)
            for (int n2 = 0; n2 <= n1; ++n2)
                for_each_config(s, n1, n2, Mode::Nested, [&](const FixedConfig &c) {
                    const GlobalCharacter t = tangent_character(s, c, Mode::Nested);
                    CHECK(t.signed_rank() == n1 + n2);
                    CHECK(t.multiplicity({0, 0}) == 0);
                });
}

TEST_CASE("product tangent has dimension 2(n1 + n2)") {
    const ToricSurface p2 = surface_p2();
    for_each_config(p2, 2, 1, Mode::Product, [&](const FixedConfig &c) {
        const GlobalCharacter t = tangent_character(p2, c, Mode::Product);
        CHECK(t.signed_rank() == 6);
        CHECK(t.multiplicity({0, 0}) == 0);
        for (const auto &[w, m] : t.terms())
            CHECK(m > 0);
    });
}
