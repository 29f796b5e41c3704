#include "nesthilb/fixedchar.hpp"

#include "nesthilb/error.hpp"

namespace nesthilb {

const LocalCharacter &koszul_dual_factor() {
    static const LocalCharacter factor = [] {
        LocalCharacter f;
        f.add_term({0, 0}, 1);
        f.add_term({-1, 0}, -1);
        f.add_term({0, -1}, -1);
        f.add_term({-1, -1}, 1);
        return f;
    }();
    return factor;
}

namespace {

const LocalCharacter &inverse_t1t2() {
    static const LocalCharacter m = LocalCharacter::monomial(-1, -1);
    return m;
}

} // namespace

LocalCharacter nested_tangent_char(const LocalCharacter &outer, const LocalCharacter &inner) {
    const LocalCharacter outer_bar = lc_bar(outer);
    const LocalCharacter inner_bar = lc_bar(inner);
    LocalCharacter cross = outer_bar * inner - outer_bar * outer - inner_bar * inner;
    return outer + inner_bar * inverse_t1t2() + cross * koszul_dual_factor();
}

LocalCharacter hilb_tangent_char(const LocalCharacter &z) {
    const LocalCharacter z_bar = lc_bar(z);
    return z + z_bar * inverse_t1t2() - z_bar * z * koszul_dual_factor();
}

LocalCharacter em_char(const LocalCharacter &outer, const LocalCharacter &inner) {
    const LocalCharacter outer_bar = lc_bar(outer);
    return inner + outer_bar * inverse_t1t2() - outer_bar * inner * koszul_dual_factor();
}

LocalCharacter taut_char(const LocalCharacter &z) { return z; }

LocalCharacter twisted_tangent_char(const LocalCharacter &z) { return hilb_tangent_char(z); }

int FixedConfig::n1() const {
    int n = 0;
    for (const auto &pair : assignment)
        n += pair.outer.size();
    return n;
}

int FixedConfig::n2() const {
    int n = 0;
    for (const auto &pair : assignment)
        n += pair.inner.size();
    return n;
}

namespace {

std::vector<NestedPair> local_pairs(int a, int b, Mode mode) {
    if (mode == Mode::Nested)
        return nested_pairs(a, b);
    std::vector<NestedPair> out;
    const auto inners = partitions_of(b);
    for (const auto &outer : partitions_of(a))
        for (const auto &inner : inners)
            out.push_back({outer, inner});
    return out;
}

void assign(std::size_t point, std::size_t points, int rem1, int rem2, Mode mode, std::vector<NestedPair> &prefix,
            const std::function<void(const FixedConfig &)> &visit) {
    if (point + 1 == points) {
        if (mode == Mode::Nested && rem2 > rem1)
            return;
        for (auto &pair : local_pairs(rem1, rem2, mode)) {
            prefix.push_back(std::move(pair));
            visit(FixedConfig{prefix});
            prefix.pop_back();
        }
        return;
    }
    for (int a = rem1; a >= 0; --a) {
        for (int b = (mode == Mode::Nested ? std::min(a, rem2) : rem2); b >= 0; --b) {
            for (auto &pair : local_pairs(a, b, mode)) {
                prefix.push_back(std::move(pair));
                assign(point + 1, points, rem1 - a, rem2 - b, mode, prefix, visit);
                prefix.pop_back();
            }
        }
    }
}

} // namespace

void for_each_config(const ToricSurface &s, int n1, int n2, Mode mode,
                     const std::function<void(const FixedConfig &)> &visit) {
    if (n1 < 0 || n2 < 0 || (mode == Mode::Nested && n1 < n2))
        throw Error(ErrorKind::InvalidNesting,
                    "invalid sizes (" + std::to_string(n1) + ", " + std::to_string(n2) + ") on '" + s.name + "'");
    if (s.fixed_point_count() == 0)
        return;
    std::vector<NestedPair> prefix;
    prefix.reserve(s.fixed_point_count());
    assign(0, s.fixed_point_count(), n1, n2, mode, prefix, visit);
}

std::vector<FixedConfig> enumerate_configs(const ToricSurface &s, int n1, int n2, Mode mode) {
    std::vector<FixedConfig> out;
    for_each_config(s, n1, n2, mode, [&](const FixedConfig &c) { out.push_back(c); });
    return out;
}

GlobalCharacter tangent_character(const ToricSurface &s, const FixedConfig &config, Mode mode) {
    GlobalCharacter total;
    for (std::size_t p = 0; p < s.fixed_point_count(); ++p) {
        const auto &pair = config.assignment.at(p);
        const LocalCharacter z1 = box_char(pair.outer);
        const LocalCharacter z2 = box_char(pair.inner);
        const LocalCharacter local = mode == Mode::Nested ? nested_tangent_char(z1, z2)
                                                          : hilb_tangent_char(z1) + hilb_tangent_char(z2);
        total += substitute_chart(local, s.charts[p].w1, s.charts[p].w2);
    }
    return total;
}

} // namespace nesthilb
