#include <cstdio>
#include <cstdlib>
#include <string>

#include "selgames/suite.hpp"

int main(int argc, char** argv) {
    selgames::SuiteOptions opt;
    for (int i = 1; i < argc; ++i) opt.only.push_back(std::atoi(argv[i]));
    opt.on_check = [](const selgames::CheckReport& c) {
        std::printf("[%s] %2d %s: %zu instances, %zu violations (%.3f s)\n", c.passed() ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.instances, c.violations.size(), c.elapsed_ms / 1000.0);
        for (std::size_t i = 0; i < c.violations.size() && i < 10; ++i)
            std::printf("       violation: %s\n", c.violations[i].c_str());
        for (const auto& n : c.notes) std::printf("       note: %s\n", n.c_str());
        std::fflush(stdout);
    };
    const auto report = selgames::run_suite(opt);
    std::printf("%s\n", report.passed() ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return report.passed() ? 0 : 1;
}
