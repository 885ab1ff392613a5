#include "delta/checks.hpp"
#include "delta/macdonald.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>

using namespace delta;

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of Delta-operator identities against labeled-path enumeration"};
    std::string profile = "quick", format = "text", cache_dir;
    std::vector<std::string> checks;
    CheckConfig cfg;
    bool one = false, zero = false, list = false, quiet = false;

    app.add_option("--profile", profile, "size caps: quick or full")->check(CLI::IsMember({"quick", "full"}));
    app.add_option("--check", checks, "run only these checks (repeatable)");
    app.add_option("--n-max", cfg.n_max, "replace the profile's size caps")->check(CLI::PositiveNumber);
    app.add_option("--k", cfg.k, "restrict checks that range over k")->check(CLI::NonNegativeNumber);
    app.add_option("--vars", cfg.vars, "number of x variables for full truncations (default n)")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", cache_dir, "Macdonald cache directory (overrides DELTA_CACHE_DIR)");
    auto* z = app.add_flag("--qtint-zero", zero, "[0]_{q,t} = 0 (default)");
    app.add_flag("--qtint-one", one, "[0]_{q,t} = 1")->excludes(z);
    app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--list", list, "print the catalog and exit");
    app.add_flag("--quiet", quiet, "no progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list) {
        for (const auto& c : check_catalog())
            std::cout << c.name << '\t' << status_name(c.status) << '\t' << c.statement << '\n';
        return 0;
    }

    cfg.profile = parse_profile(profile);
    cfg.qt_zero = one ? QtZero::One : QtZero::Zero;
    if (!quiet) {
        cfg.progress = [](const std::string& m) { std::cerr << "  " << m << '\n'; };
        MacdonaldCache::instance().set_progress([](const std::string& m) { std::cerr << "  cache: " << m << '\n'; });
    }
    if (!cache_dir.empty()) MacdonaldCache::instance().set_directory(cache_dir);

    if (checks.empty()) checks = all_check_names();
    for (const auto& c : checks)
        if (!find_check(c)) {
            std::cerr << "unknown check '" << c << "' (see --list)\n";
            return 2;
        }

    Report rep;
    try {
        std::sort(checks.begin(), checks.end());
        checks.erase(std::unique(checks.begin(), checks.end()), checks.end());
        for (const auto& name : checks) {
            if (!quiet) std::cerr << name << " ...\n";
            rep.checks.push_back(run_check(name, cfg));
            if (!quiet) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.2f", rep.checks.back().seconds);
                std::cerr << name << " done in " << buf << " s\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::cout << (format == "text" ? report_text(rep) : report_structured(rep));
    return rep.theorem_failure() ? 1 : 0;
}
