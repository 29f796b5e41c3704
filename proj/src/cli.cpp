#include "nesthilb/cli.hpp"

#include "nesthilb/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nesthilb::cli {

namespace {

const std::vector<std::string> kChecks = {"theorem7", "theorem5", "case2", "case3", "zprod"};

bool parse_int(std::string_view text, int &value) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

void validate(const RunConfig &config) {
    if (config.nmax < 0)
        throw std::invalid_argument("nmax must be nonnegative");
    if (config.workers < 1)
        throw std::invalid_argument("worker count must be at least 1");
    if (config.format != "text" && config.format != "json")
        throw std::invalid_argument("format must be text or json");
    if (config.check != "all" && std::find(kChecks.begin(), kChecks.end(), config.check) == kChecks.end())
        throw std::invalid_argument("unknown check '" + config.check + "'");
}

} // namespace

bool RunResult::pass() const {
    for (const auto &c : checks)
        if (c.asserted && !c.pass)
            return false;
    return true;
}

ToricSurface resolve_surface(const std::string &selector) {
    if (selector == "p2")
        return surface_p2();
    if (selector == "p1xp1")
        return surface_p1xp1();
    if (selector.starts_with("fa:")) {
        int a = 0;
        if (!parse_int(std::string_view(selector).substr(3), a) || a < 0)
            throw Error(ErrorKind::InvalidSurface, "bad Hirzebruch selector '" + selector + "'");
        return surface_hirzebruch(a);
    }
    if (selector.starts_with("file:"))
        return load_surface_json(selector.substr(5));
    throw Error(ErrorKind::InvalidSurface, "unknown surface '" + selector + "'");
}

EquivariantLineBundle resolve_bundle(const ToricSurface &s, const std::string &selector) {
    const auto parts = split(selector, ',');
    std::vector<int> coeffs;
    bool numeric = !parts.empty();
    for (const auto &p : parts) {
        int v = 0;
        if (!parse_int(p, v)) {
            numeric = false;
            break;
        }
        coeffs.push_back(v);
    }
    if (numeric)
        return line_bundle(s, coeffs);
    return s.bundle(selector);
}

RunResult execute(const RunConfig &config) {
    validate(config);
    const ToricSurface surface = resolve_surface(config.surface);
    const EquivariantLineBundle bundle = resolve_bundle(surface, config.bundle);
    const VerifyOptions options{config.workers};
    const bool all = config.check == "all";

    RunResult result{surface.name, bundle.divisor, bundle.label, config.seed, {}};
    auto selected = [&](const std::string &name) { return all || config.check == name; };

    if (selected("theorem7")) {
        const auto start = std::chrono::steady_clock::now();
        CheckReport r = compare_tables("theorem7", theorem7_lhs(surface, bundle, config.nmax, config.seed, options),
                                       theorem7_rhs(surface, bundle, config.nmax));
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
        result.checks.push_back(std::move(r));
    }
    if (selected("theorem5")) {
        CheckReport r{"theorem5", {}, true, surface.fano, 0, 0};
        for (int n1 = 0; n1 <= config.nmax; ++n1)
            for (int n2 = 0; n2 <= n1; ++n2)
                r.merge(theorem5_check(surface, bundle, n1, n2, config.seed, options));
        result.checks.push_back(std::move(r));
    }
    if (selected("case2")) {
        CheckReport r{"case2", {}, true, true, 0, 0};
        for (int n = 0; n <= config.nmax; ++n)
            r.merge(case2_check(surface, bundle, n, config.seed, options));
        result.checks.push_back(std::move(r));
    }
    if (selected("case3")) {
        CheckReport r{"case3", {}, true, true, 0, 0};
        for (int n = 0; n <= config.nmax; ++n)
            r.merge(case3_check(surface, n, config.seed));
        result.checks.push_back(std::move(r));
    }
    if (selected("zprod"))
        result.checks.push_back(zprod_check(surface, bundle, config.nmax, config.seed, options));

    if (!config.timing)
        for (auto &c : result.checks)
            c.millis = 0;
    return result;
}

std::string to_json(const RunResult &result) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["surface"] = result.surface;
    doc["bundle"] = result.bundle;
    doc["seed"] = result.seed;
    doc["checks"] = ordered_json::array();
    for (const auto &c : result.checks) {
        ordered_json check;
        check["name"] = c.name;
        check["entries"] = ordered_json::array();
        for (const auto &e : c.entries) {
            ordered_json entry;
            entry["n1"] = e.n1;
            entry["n2"] = e.n2;
            entry["lhs"] = to_string(e.lhs);
            entry["rhs"] = to_string(e.rhs);
            entry["match"] = e.match;
            check["entries"].push_back(std::move(entry));
        }
        check["pass"] = c.pass;
        check["asserted"] = c.asserted;
        check["configs_evaluated"] = c.configs_evaluated;
        check["millis"] = c.millis;
        doc["checks"].push_back(std::move(check));
    }
    doc["pass"] = result.pass();
    return doc.dump(2) + "\n";
}

std::string to_text(const RunResult &result) {
    std::ostringstream os;
    os << "surface " << result.surface << "  bundle " << result.bundle_label << "  seed " << result.seed << "\n";
    for (const auto &c : result.checks) {
        os << "\n"
           << c.name << "  " << (c.pass ? "PASS" : "FAIL") << (c.asserted ? "" : " (informational)")
           << "  configs " << c.configs_evaluated << "  ms " << c.millis << "\n";
        std::size_t wl = 3, wr = 3;
        for (const auto &e : c.entries) {
            wl = std::max(wl, to_string(e.lhs).size());
            wr = std::max(wr, to_string(e.rhs).size());
        }
        os << "  " << std::setw(3) << "n1" << " " << std::setw(3) << "n2" << "  " << std::setw(int(wl)) << "lhs"
           << "  " << std::setw(int(wr)) << "rhs" << "  match\n";
        for (const auto &e : c.entries)
            os << "  " << std::setw(3) << e.n1 << " " << std::setw(3) << e.n2 << "  " << std::setw(int(wl))
               << to_string(e.lhs) << "  " << std::setw(int(wr)) << to_string(e.rhs) << "  "
               << (e.match ? "yes" : "NO") << "\n";
    }
    os << "\n" << (result.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    RunResult result;
    try {
        result = execute(config);
    } catch (const Error &e) {
        err << "error: " << e.what() << " [surface=" << config.surface << ", bundle=" << config.bundle << "]\n";
        return is_structural(e.kind()) ? kStructural : kUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const std::string report = config.format == "json" ? to_json(result) : to_text(result);
    if (config.output.empty()) {
        out << report;
    } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << config.output << "'\n";
            return kUsage;
        }
        file << report;
    }
    return result.pass() ? kPass : kMismatch;
}

} // namespace nesthilb::cli
