// Acceptance runner: one pass/fail line per criterion, exit 0 iff all pass.
#include <CLI11.hpp>

#include <iostream>
#include <vector>

#include "suite.hpp"

int main(int argc, char** argv) {
    CLI::App app{"vecpack acceptance criteria"};
    vecpack::suite::Options options;
    std::vector<int> criteria;
    app.add_option("--seed", options.seed, "RNG seed");
    app.add_option("--criterion", criteria, "criterion to run (repeatable); default all")
        ->check(CLI::Range(1, vecpack::suite::kCriteria));
    CLI11_PARSE(app, argc, argv);

    std::vector<vecpack::suite::CriterionResult> results;
    if (criteria.empty()) {
        results = vecpack::suite::run_all(options);
    } else {
        for (int id : criteria) results.push_back(vecpack::suite::run(id, options));
    }

    bool all = true;
    for (const auto& r : results) {
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << '\n';
        for (const auto& d : r.details) std::cout << "    " << d << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
