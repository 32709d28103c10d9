#ifndef CONE_VERIFY_HPP
#define CONE_VERIFY_HPP

#include <string>
#include <vector>

namespace cone {

struct VerifyItem {
    int id;
    std::string module;  // hilbert, koszul, uxu, groebner, ideals, membership
    std::string name;
    bool pass;
    std::string detail;  // first mismatch on failure, empty otherwise
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

// Runs the full verification suite against the golden files in golden_dir.
// `only` restricts to items whose module matches; empty runs everything.
VerifyReport verify_all(const std::string& golden_dir, const std::string& only = "");

}  // namespace cone

#endif
