// Acceptance suite: one pass/fail line per criterion; nonzero exit on failure.

#include <cstring>
#include <iostream>
#include <string>

#include "qinv/verify.hpp"

int main(int argc, char** argv) {
    qinv::verify::Config cfg;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            only = argv[++i];
        } else if (arg == "--threads" && i + 1 < argc) {
            cfg.threads = std::stoi(argv[++i]);
        } else if (arg == "--seed" && i + 1 < argc) {
            cfg.seed = std::stoull(argv[++i]);
        } else {
            std::cerr << "usage: qinv_acceptance [--only ITEM] [--threads N] [--seed S]\n";
            return 2;
        }
    }
    const bool ok = qinv::verify::run_acceptance(std::cout, cfg, only);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    return ok ? 0 : 1;
}
