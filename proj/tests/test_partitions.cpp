#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cone/partition.hpp"

using namespace cone;

namespace {

// Closed-form dimension of the Sp(4)-irreducible labeled (d-k, k):
// (d+3)(d-k+2)(k+1)(d-2k+1)/6. Independent oracle for the rank-2
// symplectic Weyl product.
Int sp4_dim_formula(int d, int k) {
    return Int(d + 3) * Int(d - k + 2) * Int(k + 1) * Int(d - 2 * k + 1) / 6;
}

}  // namespace

TEST_CASE("label enumeration matches the published lists") {
    CHECK(enum_labels(O(3), 3) ==
          std::vector<PartitionLabel>{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}});
    CHECK(enum_labels(Sp(4), 5) == std::vector<PartitionLabel>{{5, 0}, {4, 1}, {3, 2}});
    CHECK(enum_labels(SO(4), 2) == std::vector<PartitionLabel>{{2, 0}, {1, 1}, {1, -1}});
    CHECK(enum_labels(O(3), 0) == std::vector<PartitionLabel>{{0, 0, 0}});
    CHECK(enum_labels(Sp(4), 0) == std::vector<PartitionLabel>{{0, 0}});
    // degree 4 picks up the full-column label
    CHECK(enum_labels(O(4), 4) ==
          std::vector<PartitionLabel>{
              {4, 0, 0, 0}, {3, 1, 0, 0}, {2, 2, 0, 0}, {2, 1, 1, 0}, {1, 1, 1, 1}});
}

TEST_CASE("label counts") {
    CHECK(label_count(Sp(4), 7) == 4);
    CHECK(label_count(SO(4), 6) == 7);
    CHECK(label_count(O(3), 0) == 1);
    for (int d = 0; d <= 30; ++d) {
        CHECK(label_count(Sp(4), d) == 1 + d / 2);
        CHECK(label_count(SO(4), d) == 1 + 2 * (d / 2));
    }
    // O(3): one label in degrees 0 and 1, three in degree 3, two otherwise
    for (int d = 0; d <= 30; ++d) {
        long want = (d <= 1) ? 1 : (d == 3 ? 3 : 2);
        CHECK(label_count(O(3), d) == want);
    }
}

TEST_CASE("labels are distinct, degree-homogeneous, and counted consistently") {
    for (const GroupId& g : {O(3), O(4), SO(4), Sp(4)}) {
        for (int d = 0; d <= 30; ++d) {
            auto labels = enum_labels(g, d);
            CHECK((long)labels.size() == label_count(g, d));
            std::set<PartitionLabel> seen(labels.begin(), labels.end());
            CHECK(seen.size() == labels.size());
            for (const auto& l : labels) {
                CHECK(degree(l) == d);
                CHECK(is_label(g, l));
            }
        }
    }
}

TEST_CASE("SO with odd size points to the orthogonal cone") {
    CHECK_THROWS_WITH_AS(enum_labels(SO(3), 1), doctest::Contains("use O(3)"),
                         std::invalid_argument);
}

TEST_CASE("epsilon") {
    CHECK(epsilon(O(4), {1, 1}) == 2);
    CHECK(epsilon(O(4), {2, 0}) == 1);
    CHECK(epsilon(O(4), {0, 0}) == 1);
    CHECK(epsilon(O(4), {2, 1, 1, 0}) == 1);  // associated label has one row
    CHECK(epsilon(O(4), {1, 1, 1, 1}) == 1);
    CHECK_THROWS_AS(epsilon(O(4), {2, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(epsilon(O(3), {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("associated partition swaps the first column") {
    CHECK(associated_partition({1, 1, 1}, 3) == PartitionLabel{});
    CHECK(associated_partition({2, 1}, 3) == PartitionLabel{2});
    CHECK(associated_partition({4, 1, 0}, 3) == PartitionLabel{4});
    CHECK(associated_partition({2, 1, 1, 0}, 4) == PartitionLabel{2});
    CHECK(associated_partition({1, 1, 1, 1}, 4) == PartitionLabel{});
}

TEST_CASE("Weyl dimension formula") {
    CHECK(weyl_dim(RootSystem::C, {1, 0}) == 4);  // = sp4_dim_formula(1, 0)
    CHECK(weyl_dim(RootSystem::C, {0, 0}) == 1);
    CHECK(weyl_dim(RootSystem::B, {0}) == 1);
    CHECK(weyl_dim(RootSystem::D, {0, 0}) == 1);

    for (int d = 0; d <= 12; ++d) CHECK(weyl_dim(RootSystem::B, {d}) == 2 * d + 1);

    for (int d = 0; d <= 12; ++d)
        for (int k = 0; k <= d / 2; ++k) {
            CHECK(weyl_dim(RootSystem::D, {d - k, k}) == Int(d + 1) * Int(d - 2 * k + 1));
            CHECK(weyl_dim(RootSystem::D, {d - k, -k}) == Int(d + 1) * Int(d - 2 * k + 1));
            CHECK(weyl_dim(RootSystem::C, {d - k, k}) == sp4_dim_formula(d, k));
        }

    CHECK_THROWS_AS(weyl_dim(RootSystem::C, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dim(RootSystem::B, {2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dim(RootSystem::D, {1, -2}), std::invalid_argument);
}

TEST_CASE("irreducible dimensions") {
    for (int d = 2; d <= 12; ++d) CHECK(dim_irrep(O(3), {d - 1, 1, 0}) == 2 * d - 1);
    for (int d : {3, 5, 6}) CHECK(dim_irrep(O(4), {d - 2, 1, 1, 0}) == Int(d - 1) * Int(d - 1));
    CHECK(dim_irrep(O(4), {1, 1, 1, 1}) == 1);
    CHECK(dim_irrep(Sp(4), {2, 0}) == 10);  // = sp4_dim_formula(2, 0)
    for (const GroupId& g : {O(3), O(4), SO(4), Sp(4)}) CHECK(dim_irrep(g, {}) == 1);
    CHECK_THROWS_AS(dim_irrep(O(3), {2, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(dim_irrep(Sp(4), {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("restriction to SO(4) preserves total dimension") {
    for (int d = 0; d <= 30; ++d)
        for (const auto& label : enum_labels(O(4), d)) {
            PartitionLabel two(label.begin(), label.begin() + 2);
            bool split = epsilon(O(4), label) == 2;
            Int so_total;
            if (split) {
                PartitionLabel conj = two;
                conj.back() = -conj.back();
                so_total = dim_irrep(SO(4), two) + dim_irrep(SO(4), conj);
            } else {
                // labels with more than two rows restrict like their
                // associated partner
                PartitionLabel base = label;
                int rows = 0;
                for (int p : base)
                    if (p) ++rows;
                if (rows > 2) base = associated_partition(base, 4);
                base.resize(2, 0);
                so_total = dim_irrep(SO(4), base);
            }
            CHECK(dim_irrep(O(4), label) == so_total);
        }
}
