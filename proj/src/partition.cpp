#include "cone/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cone {

std::string GroupId::name() const {
    switch (family) {
        case Family::O: return "O" + std::to_string(n);
        case Family::SO: return "SO" + std::to_string(n);
        case Family::Sp: return "Sp" + std::to_string(n);
    }
    return "?";
}

GroupId GroupId::parse(const std::string& s) {
    auto make = [](Family f, const std::string& num) {
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("unrecognized group name");
        GroupId g{f, std::stoi(num)};
        validate_group(g);
        return g;
    };
    if (s.rfind("SO", 0) == 0) return make(Family::SO, s.substr(2));
    if (s.rfind("Sp", 0) == 0) return make(Family::Sp, s.substr(2));
    if (s.rfind("O", 0) == 0) return make(Family::O, s.substr(1));
    throw std::invalid_argument("unrecognized group name: " + s);
}

void validate_group(const GroupId& g) {
    if (g.n < 3) throw std::invalid_argument("matrix size must be at least 3");
    if (g.family == Family::Sp && g.n % 2 != 0)
        throw std::invalid_argument("Sp(n) requires even n");
    if (g.family == Family::SO && g.n % 2 != 0)
        throw std::invalid_argument(
            "SO(" + std::to_string(g.n) +
            ") with odd n has the same cone as O(n); use O(" + std::to_string(g.n) + ")");
}

int degree(const PartitionLabel& label) {
    int d = 0;
    for (int p : label) d += std::abs(p);
    return d;
}

namespace {

int row_count(const PartitionLabel& label) {
    int r = 0;
    for (int p : label)
        if (p != 0) ++r;
    return r;
}

bool weakly_decreasing_nonneg(const PartitionLabel& label) {
    for (size_t i = 0; i < label.size(); ++i) {
        if (label[i] < 0) return false;
        if (i > 0 && label[i] > label[i - 1]) return false;
    }
    return true;
}

// First two column lengths of the diagram.
std::pair<int, int> first_two_columns(const PartitionLabel& label) {
    int c1 = 0, c2 = 0;
    for (int p : label) {
        if (p >= 1) ++c1;
        if (p >= 2) ++c2;
    }
    return {c1, c2};
}

std::vector<int> conjugate(const PartitionLabel& label) {
    std::vector<int> out;
    int len = label.empty() ? 0 : label[0];
    out.resize(len, 0);
    for (int j = 0; j < len; ++j)
        for (int p : label)
            if (p > j) ++out[j];
    return out;
}

}  // namespace

bool is_label(const GroupId& g, const PartitionLabel& label) {
    switch (g.family) {
        case Family::O: {
            if (!weakly_decreasing_nonneg(label)) return false;
            auto [c1, c2] = first_two_columns(label);
            return c1 + c2 <= g.n;
        }
        case Family::Sp: {
            if (!weakly_decreasing_nonneg(label)) return false;
            return row_count(label) <= g.rank();
        }
        case Family::SO: {
            // (l_1, ..., l_{m-1}, |l_m|) must be a partition with <= m parts;
            // only the entry in position m may be negative.
            int m = g.rank();
            for (size_t i = (size_t)m; i < label.size(); ++i)
                if (label[i] != 0) return false;
            PartitionLabel abs(label);
            abs.resize(m, 0);
            for (int i = 0; i + 1 < m; ++i)
                if (abs[i] < 0) return false;
            abs[m - 1] = std::abs(abs[m - 1]);
            return weakly_decreasing_nonneg(abs);
        }
    }
    return false;
}

PartitionLabel associated_partition(const PartitionLabel& label, int n) {
    auto [c1, c2] = first_two_columns(label);
    if (c1 + c2 > n)
        throw std::invalid_argument("label outside Lambda(O(n)): first two columns too long");
    std::vector<int> cols = conjugate(label);
    if (cols.empty()) cols.push_back(0);
    cols[0] = n - c1;
    // conjugate back; cols may no longer be sorted only in position 0 vs 1,
    // but the Lambda(O(n)) condition guarantees n - c1 >= c2.
    PartitionLabel out = conjugate(cols);
    return out;
}

namespace {

// Partitions of d with at most max_parts parts, lexicographically decreasing.
void gen_partitions(int remaining, int max_part, int slots, std::vector<int>& cur,
                    std::vector<PartitionLabel>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

PartitionLabel padded(PartitionLabel p, int len) {
    p.resize(len, 0);
    return p;
}

}  // namespace

std::vector<PartitionLabel> enum_labels(const GroupId& g, int d) {
    validate_group(g);
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<PartitionLabel> raw;
    std::vector<int> cur;
    std::vector<PartitionLabel> out;
    switch (g.family) {
        case Family::O: {
            gen_partitions(d, d, g.n, cur, raw);
            for (auto& p : raw) {
                auto [c1, c2] = first_two_columns(p);
                if (c1 + c2 <= g.n) out.push_back(padded(std::move(p), g.n));
            }
            break;
        }
        case Family::Sp: {
            gen_partitions(d, d, g.rank(), cur, raw);
            for (auto& p : raw) out.push_back(padded(std::move(p), g.rank()));
            break;
        }
        case Family::SO: {
            int m = g.rank();
            gen_partitions(d, d, m, cur, raw);
            for (auto& p : raw) {
                bool full = (int)p.size() == m && p.back() > 0;
                out.push_back(padded(p, m));
                if (full) {
                    PartitionLabel neg = padded(std::move(p), m);
                    neg.back() = -neg.back();
                    out.push_back(std::move(neg));
                }
            }
            break;
        }
    }
    return out;
}

long label_count(const GroupId& g, int d) { return (long)enum_labels(g, d).size(); }

int epsilon(const GroupId& g, const PartitionLabel& label) {
    if (g.family != Family::O || g.n % 2 != 0)
        throw std::invalid_argument("epsilon is defined for O(2m) only");
    if (!is_label(g, label)) throw std::invalid_argument("label outside Lambda(O(n))");
    int m = g.rank();
    PartitionLabel lam = label;
    if (row_count(lam) > m) lam = associated_partition(lam, g.n);
    return row_count(lam) == m ? 2 : 1;
}

Int weyl_dim(RootSystem type, const std::vector<int>& weight) {
    int m = (int)weight.size();
    for (int i = 0; i + 1 < m; ++i)
        if (weight[i] < weight[i + 1])
            throw std::invalid_argument("weight is not dominant");
    if (m > 0) {
        bool last_neg_ok = (type == RootSystem::D);
        int last = weight[m - 1];
        if (last < 0 && !last_neg_ok)
            throw std::invalid_argument("weight is not dominant");
        if (m >= 2 && weight[m - 2] < std::abs(last))
            throw std::invalid_argument("weight is not dominant");
    }

    // lambda+rho and rho in a scaling that keeps everything integral:
    // B_m uses 2(lambda_i + m - i + 1/2), C_m uses lambda_i + m - i + 1,
    // D_m uses lambda_i + m - i  (1-based i).
    std::vector<long> l(m), r(m);
    for (int i = 0; i < m; ++i) {
        long li = weight[i], ri = 0;
        switch (type) {
            case RootSystem::B: li = 2 * li + 2 * (m - i) - 1; ri = 2 * (m - i) - 1; break;
            case RootSystem::C: li += m - i; ri = m - i; break;
            case RootSystem::D: li += m - i - 1; ri = m - i - 1; break;
        }
        l[i] = li;
        r[i] = ri;
    }
    Int num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= Int(l[i] * l[i] - l[j] * l[j]);
            den *= Int(r[i] * r[i] - r[j] * r[j]);
        }
    if (type == RootSystem::B || type == RootSystem::C)
        for (int i = 0; i < m; ++i) {
            num *= Int(l[i]);
            den *= Int(r[i]);
        }
    return int_divexact(num, den);
}

Int dim_irrep(const GroupId& g, const PartitionLabel& label) {
    validate_group(g);
    if (!is_label(g, label)) throw std::invalid_argument("label outside Lambda(" + g.name() + ")");
    int m = g.rank();
    switch (g.family) {
        case Family::Sp: {
            std::vector<int> w(label);
            w.resize(m, 0);
            return weyl_dim(RootSystem::C, w);
        }
        case Family::SO: {
            std::vector<int> w(label);
            w.resize(m, 0);
            return weyl_dim(RootSystem::D, w);
        }
        case Family::O: {
            PartitionLabel lam = label;
            if (row_count(lam) > m) lam = associated_partition(lam, g.n);
            std::vector<int> w(lam);
            w.resize(m, 0);
            if (g.n % 2 == 1) return weyl_dim(RootSystem::B, w);
            // n = 2m: a label with a full m-th row restricts to two
            // SO(2m)-irreducibles of equal dimension.
            Int d = weyl_dim(RootSystem::D, w);
            return w[m - 1] > 0 ? 2 * d : d;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace cone
