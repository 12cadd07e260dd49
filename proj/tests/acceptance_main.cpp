#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Runs the acceptance criteria and prints one pass/fail line each"};
    int only = 0;
    speiser::acceptance::Options opt;
    bool quiet = false;
    app.add_option("--only", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
    app.add_option("--seed", opt.seed, "Seed for randomized criteria");
    app.add_option("--vertex-budget", opt.vertex_budget, "Vertex budget");
    app.add_flag("--quiet", quiet, "Omit detail lines");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (const auto& c : speiser::acceptance::criteria()) {
        if (only && c.id != only) continue;
        auto r = speiser::acceptance::run_criterion(c.id, opt);
        speiser::acceptance::print_result(std::cout, r, !quiet);
        std::cout.flush();
        all = all && r.pass;
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
