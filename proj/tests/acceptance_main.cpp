// Runs the full verification suite and prints one pass/fail line per
// check. Exit status 0 iff everything passed.

#include <cstdio>

#include "shutterbox/acceptance.hpp"

int main() {
    const auto results = shutterbox::run_acceptance_checks();
    std::fputs(shutterbox::to_text(results).c_str(), stdout);
    return shutterbox::all_pass(results) ? 0 : 1;
}
