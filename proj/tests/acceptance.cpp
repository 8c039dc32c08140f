// Acceptance suite: runs every criterion at its pinned bound and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include "sphopf/engine.hpp"
#include "sphopf/io.hpp"
#include "sphopf/verify.hpp"

#include <chrono>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

using namespace sphopf;

namespace {

struct Criterion {
    std::string name;
    std::vector<Report> reports;
};

bool print_criterion(int number, const Criterion& criterion) {
    bool ok = true;
    long checks = 0;
    std::string detail;
    for (const Report& report : criterion.reports) {
        checks += static_cast<long>(report.checks.size());
        for (const auto& check : report.checks)
            if (!check.passed && detail.empty())
                detail = report.title + " / " + check.identity +
                         (check.detail.empty() ? "" : " (" + check.detail + ")");
        ok = ok && report.ok();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << criterion.name << " (" << checks << " checks)";
    if (!ok) std::cout << " -- " << detail;
    std::cout << "\n" << std::flush;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    const auto started = std::chrono::steady_clock::now();
    bool all_ok = true;
    int number = 0;
    auto run = [&](const std::string& name, auto&& make_reports) {
        Criterion criterion{name, make_reports()};
        all_ok = print_criterion(++number, criterion) && all_ok;
    };

    // the six bundled label species with their component bounds
    std::vector<std::pair<std::shared_ptr<SpeciesHopfMonoid>, int>> monoids;
    for (const auto& entry : verify::bundled_species())
        monoids.emplace_back(std::make_shared<SpeciesHopfMonoid>(entry.species),
                             entry.n_max);

    run("product/coproduct axioms and compatibility, all bundled species", [&] {
        std::vector<Report> out;
        for (const auto& [monoid, n] : monoids) out.push_back(verify::hopf_axioms(*monoid, n));
        return out;
    });

    run("closed-form Moebius values equal the recursive ones", [&] {
        std::vector<Report> out;
        for (const auto& [monoid, n] : monoids)
            out.push_back(verify::mobius_closed_form(*monoid, n));
        return out;
    });

    run("lower intervals are refinement lattices of the right size", [&] {
        std::vector<Report> out;
        for (const auto& [monoid, n] : monoids)
            out.push_back(verify::poset_isomorphism(*monoid, n));
        return out;
    });

    run("closed-form structure rules in m/p/e/h with the sign involution", [&] {
        std::vector<Report> out;
        for (const auto& [monoid, n] : monoids) out.push_back(verify::basis_rules(*monoid, n));
        return out;
    });

    run("polynomial realizations with the exact scalar dictionary", [&] {
        return std::vector<Report>{verify::ncsym_sym(4, 5)};
    });

    run("function-algebra dictionaries and the characteristic map", [&] {
        return std::vector<Report>{verify::class_functions(5)};
    });

    run("lifting map image formulas and the factorial identity", [&] {
        return std::vector<Report>{verify::lifting_map(4)};
    });

    run("superclass models: arc bijections, dimensions, order-doubling", [&] {
        return std::vector<Report>{verify::superclass_models(3)};
    });

    run("terminal morphism and coinvariant dimension matching", [&] {
        return std::vector<Report>{verify::terminal_morphism(4)};
    });

    run("byte-identical repeated output", [&] {
        return std::vector<Report>{verify::determinism(cli_path)};
    });

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cout << (all_ok ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES present")
              << " (" << elapsed / 1000.0 << "s)\n";
    return all_ok ? 0 : 1;
}
