#include <cstdio>

#include "mahler/acceptance.hpp"

int main() {
    const auto results = mahler::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        std::puts(mahler::format_criterion_line(r).c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
