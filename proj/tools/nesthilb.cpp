// Command-line front end for the nested Hilbert scheme localization checks.

#include "nesthilb/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char **argv) {
    nesthilb::cli::RunConfig config;
    CLI::App app{"Equivariant localization checks on nested Hilbert schemes of points"};
    app.add_option("-s,--surface", config.surface, "p2 | p1xp1 | fa:<a> | file:<path>");
    app.add_option("-b,--bundle", config.bundle, "divisor coefficients (e.g. 1,0,0) or a bundle label (O, K, ...)");
    app.add_option("-c,--check", config.check, "theorem7 | theorem5 | case2 | case3 | zprod | all");
    app.add_option("-n,--nmax", config.nmax, "largest n1 to compute");
    app.add_option("--seed", config.seed, "seed for the specialization points");
    app.add_option("-j,--workers", config.workers, "worker threads");
    app.add_option("-f,--format", config.format, "text | json");
    app.add_option("-o,--output", config.output, "write the report here instead of stdout");
    app.add_flag("--timing", config.timing, "record wall-clock milliseconds per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : nesthilb::cli::kUsage;
    }
    return nesthilb::cli::run(config, std::cout, std::cerr);
}
