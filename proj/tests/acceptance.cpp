// Acceptance runner: one pass/fail line per criterion. With an argument it
// runs that criterion alone (used by the per-criterion ctest entries);
// without arguments it runs the whole suite. Exit 0 on pass, 2 on failure.

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "jc/validation.hpp"

int main(int argc, char** argv) {
    try {
        if (argc > 1) {
            const int id = std::atoi(argv[1]);
            return jc::run_criterion(id).pass ? 0 : 2;
        }
        bool all = true;
        for (const auto& r : jc::run_all_criteria()) all = all && r.pass;
        return all ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: error: %s\n", e.what());
        return 1;
    }
}
