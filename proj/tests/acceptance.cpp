// Acceptance suite: runs every verification item against the golden tree
// and prints one pass/fail line per item. Exits nonzero if anything fails.

#include <cstdio>

#include "cone/verify.hpp"

int main() {
    cone::VerifyReport report = cone::verify_all(CONE_GOLDEN_DIR);
    for (const auto& item : report.items) {
        std::printf("[%s] %2d %-10s %s\n", item.pass ? "PASS" : "FAIL", item.id,
                    item.module.c_str(), item.name.c_str());
        if (!item.pass) std::printf("       %s\n", item.detail.c_str());
    }
    int passed = 0;
    for (const auto& item : report.items) passed += item.pass;
    std::printf("%d/%zu acceptance checks passed\n", passed, report.items.size());
    return report.all_pass() ? 0 : 1;
}
