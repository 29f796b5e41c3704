#include "nesthilb/integrate.hpp"

#include "nesthilb/error.hpp"
#include "nesthilb/parallel.hpp"

#include <map>
#include <optional>

namespace nesthilb {

ClassRef em_class(EquivariantLineBundle m) { return {ClassKind::EM, std::move(m), 1}; }
ClassRef taut_class(EquivariantLineBundle l, int factor) { return {ClassKind::Taut, std::move(l), factor}; }
ClassRef tangent_class(EquivariantLineBundle m, int factor) {
    return {ClassKind::TwistedTangent, std::move(m), factor};
}

Factor total_chern(ClassRef cls) { return {std::move(cls), Grade::Total, 0}; }
Factor top_chern(ClassRef cls) { return {std::move(cls), Grade::Top, 0}; }
Factor chern_index(unsigned k, ClassRef cls) { return {std::move(cls), Grade::Index, k}; }

std::string IntegrandSpec::describe() const {
    std::string out = mode == Mode::Nested ? "nested:" : "product:";
    if (factors.empty())
        return out + "1";
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const Factor &f = factors[k];
        if (k)
            out += "*";
        switch (f.grade) {
        case Grade::Total: out += "c("; break;
        case Grade::Top: out += "ctop("; break;
        case Grade::Index: out += "c" + std::to_string(f.index) + "("; break;
        }
        switch (f.cls.kind) {
        case ClassKind::EM: out += "E_" + f.cls.bundle.label; break;
        case ClassKind::Taut: out += f.cls.bundle.label + "^[n" + std::to_string(f.cls.factor) + "]"; break;
        case ClassKind::TwistedTangent:
            out += "T^" + f.cls.bundle.label + "_" + std::to_string(f.cls.factor);
            break;
        }
        out += ")";
    }
    return out;
}

unsigned integration_degree(Mode mode, int n1, int n2) {
    return static_cast<unsigned>(mode == Mode::Nested ? n1 + n2 : 2 * (n1 + n2));
}

namespace {

constexpr std::size_t kChunkSize = 32;

struct LocalData {
    GlobalCharacter tangent;
    std::vector<GlobalCharacter> classes; // one per factor
    std::vector<long> ranks;              // signed rank per factor
};

struct LocalValues {
    Rational euler;
    std::vector<USeries> series;
};

LocalCharacter class_local(const ClassRef &cls, const LocalCharacter &z1, const LocalCharacter &z2) {
    switch (cls.kind) {
    case ClassKind::EM: return em_char(z1, z2);
    case ClassKind::Taut: return taut_char(cls.factor == 1 ? z1 : z2);
    case ClassKind::TwistedTangent: return twisted_tangent_char(cls.factor == 1 ? z1 : z2);
    }
    return {};
}

std::string context(const ToricSurface &s, const IntegrandSpec &spec, int n1, int n2) {
    return " [surface=" + s.name + ", integrand=" + spec.describe() + ", n1=" + std::to_string(n1) +
           ", n2=" + std::to_string(n2) + "]";
}

void validate(const ToricSurface &s, const IntegrandSpec &spec) {
    for (const auto &f : spec.factors) {
        if (f.cls.bundle.weights.size() != s.fixed_point_count())
            throw Error(ErrorKind::InvalidIntegrand,
                        "bundle '" + f.cls.bundle.label + "' does not resolve on '" + s.name + "'");
        if (f.cls.kind != ClassKind::EM && f.cls.factor != 1 && f.cls.factor != 2)
            throw Error(ErrorKind::InvalidIntegrand, "Hilbert factor index must be 1 or 2");
        if (f.cls.kind != ClassKind::EM && spec.mode == Mode::Nested)
            throw Error(ErrorKind::InvalidIntegrand,
                        "tautological and tangent classes are only supported on the product space");
    }
}

} // namespace

InvariantResult integrate(const ToricSurface &s, int n1, int n2, const IntegrandSpec &spec, std::uint64_t seed,
                          const IntegrateOptions &options) {
    validate(s, spec);
    const Mode mode = spec.mode;
    const unsigned degree = integration_degree(mode, n1, n2);
    const std::size_t points = s.fixed_point_count();
    const std::size_t nfactors = spec.factors.size();

    // Configs refer to interned (fixed point, pair) slots.
    std::map<std::pair<std::size_t, NestedPair>, std::size_t> slot_of;
    std::vector<std::pair<std::size_t, NestedPair>> slots;
    std::vector<std::vector<std::size_t>> configs;
    for_each_config(s, n1, n2, mode, [&](const FixedConfig &c) {
        std::vector<std::size_t> ids(points);
        for (std::size_t p = 0; p < points; ++p) {
            auto key = std::make_pair(p, c.assignment[p]);
            auto [it, inserted] = slot_of.try_emplace(key, slots.size());
            if (inserted)
                slots.push_back(key);
            ids[p] = it->second;
        }
        configs.push_back(std::move(ids));
    });

    std::vector<LocalData> local(slots.size());
    parallel_for(slots.size(), options.workers, [&](std::size_t i) {
        const auto &[p, pair] = slots[i];
        const auto &chart = s.charts[p];
        const LocalCharacter z1 = box_char(pair.outer);
        const LocalCharacter z2 = box_char(pair.inner);
        const LocalCharacter tangent = mode == Mode::Nested ? nested_tangent_char(z1, z2)
                                                            : hilb_tangent_char(z1) + hilb_tangent_char(z2);
        LocalData &d = local[i];
        d.tangent = substitute_chart(tangent, chart.w1, chart.w2);
        if (d.tangent.multiplicity({0, 0}) != 0)
            throw Error(ErrorKind::ZeroWeightInTangent, "fixed point " + std::to_string(p) + " pair (" +
                                                            to_string(pair.outer) + ", " + to_string(pair.inner) +
                                                            ")" + context(s, spec, n1, n2));
        for (const auto &f : spec.factors) {
            GlobalCharacter c =
                substitute_chart(class_local(f.cls, z1, z2), chart.w1, chart.w2).translated(f.cls.bundle.weights[p]);
            d.ranks.push_back(c.signed_rank().get_si());
            d.classes.push_back(std::move(c));
        }
    });

    InvariantResult result;
    result.mode = mode;
    result.n1 = n1;
    result.n2 = n2;
    result.config_count = configs.size();

    SpecializationSource source(seed);
    std::optional<Rational> common;
    for (int evaluation = 0; evaluation < options.specializations; ++evaluation) {
        std::vector<LocalValues> values(slots.size());
        Specialization pt;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= SpecializationSource::kMaxAttempts)
                throw Error(ErrorKind::SpecializationExhausted,
                            std::to_string(attempt) + " specializations hit poles" + context(s, spec, n1, n2));
            pt = source.next();
            try {
                parallel_for(slots.size(), options.workers, [&](std::size_t i) {
                    LocalValues &v = values[i];
                    v.euler = euler_value(local[i].tangent, pt);
                    v.series.clear();
                    for (const auto &c : local[i].classes)
                        v.series.push_back(chern_useries(c, pt, degree));
                });
                break;
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::SpecializationPole)
                    throw;
            }
        }

        const std::size_t chunks = (configs.size() + kChunkSize - 1) / kChunkSize;
        std::vector<Rational> partial(chunks);
        parallel_for(chunks, options.workers, [&](std::size_t chunk) {
            Rational sum = 0;
            const std::size_t end = std::min(configs.size(), (chunk + 1) * kChunkSize);
            for (std::size_t ci = chunk * kChunkSize; ci < end; ++ci) {
                const auto &ids = configs[ci];
                Rational euler = 1;
                for (std::size_t id : ids)
                    euler *= values[id].euler;
                USeries integrand = USeries::one(degree);
                for (std::size_t f = 0; f < nfactors; ++f) {
                    USeries series = USeries::one(degree);
                    long rank = 0;
                    for (std::size_t id : ids) {
                        series *= values[id].series[f];
                        rank += local[id].ranks[f];
                    }
                    const Factor &factor = spec.factors[f];
                    if (factor.grade == Grade::Top)
                        series = rank < 0 ? USeries(degree) : series.homogeneous_part(static_cast<unsigned>(rank));
                    else if (factor.grade == Grade::Index)
                        series = series.homogeneous_part(factor.index);
                    integrand *= series;
                }
                sum += integrand[degree] / euler;
            }
            partial[chunk] = std::move(sum);
        });
        Rational total = 0;
        for (const auto &p : partial)
            total += p;

        if (common && *common != total)
            throw Error(ErrorKind::NonConstantSum, "evaluations " + to_string(*common) + " and " + to_string(total) +
                                                       " disagree" + context(s, spec, n1, n2));
        common = total;
        result.specializations.push_back(pt);
    }
    result.value = common.value_or(Rational(0));
    return result;
}

InvariantResult integrate_hilb(const ToricSurface &s, int n, const IntegrandSpec &spec, std::uint64_t seed,
                               const IntegrateOptions &options) {
    IntegrandSpec product = spec;
    product.mode = Mode::Product;
    return integrate(s, n, 0, product, seed, options);
}

} // namespace nesthilb
