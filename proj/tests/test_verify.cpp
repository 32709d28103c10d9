#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cone/verify.hpp"

namespace fs = std::filesystem;

namespace {

void copy_golden(const fs::path& dst) {
    fs::remove_all(dst);
    fs::create_directories(dst);
    for (const auto& entry : fs::directory_iterator(CONE_GOLDEN_DIR))
        fs::copy_file(entry.path(), dst / entry.path().filename());
}

}  // namespace

TEST_CASE("module filter restricts the items") {
    cone::VerifyReport report = cone::verify_all(CONE_GOLDEN_DIR, "koszul");
    REQUIRE(report.items.size() == 1);
    CHECK(report.items[0].id == 3);
    CHECK(report.items[0].pass);
}

TEST_CASE("a corrupted golden file fails the check and is named") {
    fs::path dir = fs::temp_directory_path() / "conering_corrupt_golden";
    copy_golden(dir);
    {
        std::ofstream out(dir / "groebner_O3beta_degrevlex.txt", std::ios::app);
        out << "x11\n";
    }
    cone::VerifyReport report = cone::verify_all(dir.string(), "groebner");
    CHECK_FALSE(report.all_pass());
    bool named = false;
    for (const auto& item : report.items)
        if (!item.pass && item.detail.find("groebner_O3beta_degrevlex.txt") != std::string::npos)
            named = true;
    CHECK(named);
    fs::remove_all(dir);
}

TEST_CASE("a missing golden directory fails cleanly") {
    cone::VerifyReport report = cone::verify_all("/nonexistent/golden", "groebner");
    CHECK_FALSE(report.all_pass());
}
