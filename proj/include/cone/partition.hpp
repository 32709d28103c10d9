#ifndef CONE_PARTITION_HPP
#define CONE_PARTITION_HPP

#include <string>
#include <vector>

#include "cone/rational.hpp"

namespace cone {

// A highest-weight label: weakly decreasing integer tuple. For O(n) and
// Sp(2m) all entries are nonnegative; for SO(2m) the last entry may be
// negative (conjugate pair of irreducibles).
using PartitionLabel = std::vector<int>;

enum class Family { O, SO, Sp };

struct GroupId {
    Family family;
    int n;  // matrix size

    int rank() const { return n / 2; }
    std::string name() const;

    // Accepts O3, O4, SO4, Sp4, and generally O<n>/SO<n>/Sp<n>.
    static GroupId parse(const std::string& s);

    bool operator==(const GroupId&) const = default;
};

inline GroupId O(int n) { return {Family::O, n}; }
inline GroupId SO(int n) { return {Family::SO, n}; }
inline GroupId Sp(int n) { return {Family::Sp, n}; }

// Throws std::invalid_argument for unsupported descriptors; in particular
// SO(n) with n odd is rejected with a hint to use O(n), whose cone it equals.
void validate_group(const GroupId& g);

int degree(const PartitionLabel& label);

// Is `label` a valid member of Lambda(G)?
bool is_label(const GroupId& g, const PartitionLabel& label);

// Replaces the first-column length l of the diagram by n - l. Labels the
// O(n)-irreducible of the same dimension; defined whenever the first two
// column lengths sum to at most n.
PartitionLabel associated_partition(const PartitionLabel& label, int n);

// All labels of degree d, each exactly once, lexicographically decreasing.
// For SO(2m) both signs of a nonzero last part appear, positive first.
std::vector<PartitionLabel> enum_labels(const GroupId& g, int d);

long label_count(const GroupId& g, int d);

// Number of SO(2m)-irreducible constituents (1 or 2) of the O(2m)-irreducible
// with the given label.
int epsilon(const GroupId& g, const PartitionLabel& label);

enum class RootSystem { B, C, D };

// Weyl dimension formula, exact integer product over positive roots.
// The rank is the length of `weight`; for D the last entry may be negative.
Int weyl_dim(RootSystem type, const std::vector<int>& weight);

// Dimension of the irreducible representation of G labeled by `label`.
// Labels with more than n/2 rows are first replaced by their associated
// partition. For orthogonal groups beyond n = 4 the values come from the
// same Weyl-formula path but are covered only by formula-level checks.
Int dim_irrep(const GroupId& g, const PartitionLabel& label);

}  // namespace cone

#endif
