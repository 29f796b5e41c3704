#include "nesthilb/toric.hpp"

#include "nesthilb/error.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace nesthilb {

namespace {

constexpr std::uint64_t kIntersectSeed = 0x1f2e3d4cULL;

void check_same_surface(const EquivariantLineBundle &l, const EquivariantLineBundle &r) {
    if (l.weights.size() != r.weights.size())
        throw Error(ErrorKind::InvalidSurface, "bundles '" + l.label + "' and '" + r.label +
                                                   "' live on different surfaces");
}

std::vector<int> combine_divisors(const std::vector<int> &l, const std::vector<int> &r, int sign) {
    if (l.size() != r.size())
        return {};
    std::vector<int> out(l.size());
    for (std::size_t k = 0; k < l.size(); ++k)
        out[k] = l[k] + sign * r[k];
    return out;
}

} // namespace

EquivariantLineBundle operator+(const EquivariantLineBundle &l, const EquivariantLineBundle &r) {
    check_same_surface(l, r);
    EquivariantLineBundle out{l.label + "+" + r.label, {}, combine_divisors(l.divisor, r.divisor, 1)};
    for (std::size_t p = 0; p < l.weights.size(); ++p)
        out.weights.push_back(l.weights[p] + r.weights[p]);
    return out;
}

EquivariantLineBundle operator-(const EquivariantLineBundle &l, const EquivariantLineBundle &r) {
    check_same_surface(l, r);
    EquivariantLineBundle out{l.label + "-" + r.label, {}, combine_divisors(l.divisor, r.divisor, -1)};
    for (std::size_t p = 0; p < l.weights.size(); ++p)
        out.weights.push_back(l.weights[p] - r.weights[p]);
    return out;
}

EquivariantLineBundle ToricSurface::bundle(const std::string &label) const {
    if (label == "O")
        return trivial_bundle(*this);
    if (label == "K")
        return canonical_bundle(*this);
    auto it = bundles.find(label);
    if (it == bundles.end())
        throw Error(ErrorKind::InvalidSurface, "surface '" + name + "' has no bundle '" + label + "'");
    return it->second;
}

ToricSurface surface_from_fan(std::string name, std::vector<Ray> rays, bool fano) {
    if (rays.size() < 3)
        throw Error(ErrorKind::InvalidSurface, "a complete fan needs at least 3 rays");
    ToricSurface s;
    s.name = std::move(name);
    s.fano = fano;
    for (std::size_t k = 0; k < rays.size(); ++k) {
        const Ray &v1 = rays[k];
        const Ray &v2 = rays[(k + 1) % rays.size()];
        std::int64_t det = v1[0] * v2[1] - v1[1] * v2[0];
        if (det != 1)
            throw Error(ErrorKind::InvalidSurface,
                        "cone " + std::to_string(k) + " of '" + s.name +
                            "' is not smooth or rays are not counterclockwise");
        // Dual basis: <m1, v1> = 1, <m1, v2> = 0, <m2, v1> = 0, <m2, v2> = 1.
        Weight m1{v2[1], -v2[0]};
        Weight m2{-v1[1], v1[0]};
        s.charts.push_back({m1, m2});
    }
    s.rays = std::move(rays);
    return s;
}

ToricSurface surface_p2() { return surface_from_fan("p2", {{{1, 0}}, {{0, 1}}, {{-1, -1}}}, true); }

ToricSurface surface_p1xp1() {
    return surface_from_fan("p1xp1", {{{1, 0}}, {{0, 1}}, {{-1, 0}}, {{0, -1}}}, true);
}

ToricSurface surface_hirzebruch(int a) {
    if (a < 0)
        throw Error(ErrorKind::InvalidSurface, "Hirzebruch index must be nonnegative");
    return surface_from_fan("fa:" + std::to_string(a), {{{1, 0}}, {{0, 1}}, {{-1, a}}, {{0, -1}}}, a <= 1);
}

EquivariantLineBundle line_bundle(const ToricSurface &s, const std::vector<int> &divisor_coeffs) {
    if (divisor_coeffs.size() != s.rays.size())
        throw Error(ErrorKind::WrongCoefficientCount,
                    "surface '" + s.name + "' has " + std::to_string(s.rays.size()) + " rays, got " +
                        std::to_string(divisor_coeffs.size()) + " coefficients");
    EquivariantLineBundle out;
    out.divisor = divisor_coeffs;
    out.label = "O(";
    for (std::size_t k = 0; k < divisor_coeffs.size(); ++k)
        out.label += (k ? "," : "") + std::to_string(divisor_coeffs[k]);
    out.label += ")";
    // The local generator chi^m of O(D) on the cone (v_k, v_{k+1}) satisfies
    // <m, v> = -a_v for both rays, i.e. m = -a_k m1 - a_{k+1} m2.
    const std::size_t n = s.rays.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto &chart = s.charts[k];
        out.weights.push_back((-divisor_coeffs[k]) * chart.w1 + (-divisor_coeffs[(k + 1) % n]) * chart.w2);
    }
    return out;
}

EquivariantLineBundle trivial_bundle(const ToricSurface &s) {
    EquivariantLineBundle out{"O", std::vector<Weight>(s.charts.size()), std::vector<int>(s.rays.size(), 0)};
    return out;
}

EquivariantLineBundle canonical_bundle(const ToricSurface &s) {
    EquivariantLineBundle out{"K", {}, std::vector<int>(s.rays.size(), -1)};
    for (const auto &c : s.charts)
        out.weights.push_back(c.w1 + c.w2);
    return out;
}

Rational intersect(const ToricSurface &s, const EquivariantLineBundle &l, const EquivariantLineBundle &lp) {
    if (l.weights.size() != s.charts.size() || lp.weights.size() != s.charts.size())
        throw Error(ErrorKind::InvalidSurface, "bundle does not match the fixed points of '" + s.name + "'");
    SpecializationSource source(kIntersectSeed);
    std::optional<Rational> common;
    for (int evaluations = 0, attempts = 0; evaluations < 3;) {
        if (attempts++ >= 3 * SpecializationSource::kMaxAttempts)
            throw Error(ErrorKind::SpecializationExhausted, "intersect on '" + s.name + "'");
        Specialization pt = source.next();
        Rational total = 0;
        bool pole = false;
        for (std::size_t p = 0; p < s.charts.size() && !pole; ++p) {
            Rational e = evaluate(s.charts[p].w1, pt) * evaluate(s.charts[p].w2, pt);
            if (e == 0) {
                pole = true;
                break;
            }
            total += evaluate(l.weights[p], pt) * evaluate(lp.weights[p], pt) / e;
        }
        if (pole)
            continue;
        if (common && *common != total)
            throw Error(ErrorKind::NonConstantSum, "intersection <" + l.label + ", " + lp.label + "> on '" +
                                                       s.name + "' depends on the equivariant parameters");
        common = total;
        ++evaluations;
    }
    return *common;
}

namespace {

using nlohmann::json;

std::int64_t require_int(const json &j, const std::string &where) {
    if (!j.is_number_integer())
        throw Error(ErrorKind::InvalidSurface, where + ": expected an integer");
    return j.get<std::int64_t>();
}

Weight parse_weight(const json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2)
        throw Error(ErrorKind::InvalidSurface, where + ": expected [a, b]");
    return {require_int(j[0], where), require_int(j[1], where)};
}

} // namespace

ToricSurface parse_surface_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::InvalidSurface, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("fixed_points") || !doc["fixed_points"].is_array())
        throw Error(ErrorKind::InvalidSurface, "descriptor needs a 'fixed_points' array");

    ToricSurface s;
    s.name = doc.value("name", std::string("custom"));
    if (doc.contains("fano")) {
        if (!doc["fano"].is_boolean())
            throw Error(ErrorKind::InvalidSurface, "'fano' must be a boolean");
        s.fano = doc["fano"].get<bool>();
    }
    const auto &points = doc["fixed_points"];
    if (points.size() < 3)
        throw Error(ErrorKind::InvalidSurface, "descriptor needs at least 3 fixed points");

    std::optional<std::vector<std::string>> labels;
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto &fp = points[p];
        const std::string where = "fixed_points[" + std::to_string(p) + "]";
        if (!fp.is_object() || !fp.contains("w1") || !fp.contains("w2"))
            throw Error(ErrorKind::InvalidSurface, where + ": needs w1 and w2");
        FixedPointChart chart{parse_weight(fp["w1"], where + ".w1"), parse_weight(fp["w2"], where + ".w2")};
        if (!linearly_independent(chart.w1, chart.w2))
            throw Error(ErrorKind::DependentChartWeights, where + ": chart weights are parallel");
        s.charts.push_back(chart);

        std::vector<std::string> here;
        if (fp.contains("bundles")) {
            if (!fp["bundles"].is_object())
                throw Error(ErrorKind::InvalidSurface, where + ".bundles: expected an object");
            for (const auto &[label, w] : fp["bundles"].items()) {
                if (label == "O" || label == "K")
                    throw Error(ErrorKind::InvalidSurface, where + ": bundle labels O and K are reserved");
                here.push_back(label);
                auto &b = s.bundles[label];
                b.label = label;
                b.weights.push_back(parse_weight(w, where + ".bundles." + label));
            }
        }
        if (labels && *labels != here)
            throw Error(ErrorKind::InvalidSurface, where + ": bundle labels differ from the first fixed point");
        labels = std::move(here);
    }

    if (doc.contains("intersections")) {
        const auto &ints = doc["intersections"];
        if (!ints.is_object())
            throw Error(ErrorKind::InvalidSurface, "'intersections' must be an object");
        for (const auto &[key, value] : ints.items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw Error(ErrorKind::InvalidSurface, "intersection key '" + key + "' must be 'A,B'");
            std::string a = key.substr(0, comma), b = key.substr(comma + 1);
            Integer declared = static_cast<long>(require_int(value, "intersections." + key));
            Rational computed = intersect(s, s.bundle(a), s.bundle(b));
            if (computed != Rational(declared))
                throw Error(ErrorKind::InvalidSurface, "declared <" + a + "," + b + "> = " + declared.get_str() +
                                                           " but localization gives " + to_string(computed));
            s.declared_intersections[{a, b}] = declared;
        }
    }
    return s;
}

ToricSurface load_surface_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidSurface, "cannot open surface descriptor '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_surface_json(buf.str());
}

} // namespace nesthilb
