#include "cone/cone_ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cone/groebner.hpp"

namespace cone {

namespace {

using PolyMat = std::vector<std::vector<MPoly>>;

PolyMat poly_mat(int rows, int cols, int nvars) {
    return PolyMat(rows, std::vector<MPoly>(cols, MPoly(nvars)));
}

PolyMat from_form(const QMatrix& B, int nvars) {
    PolyMat out = poly_mat(B.rows(), B.cols(), nvars);
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
            if (B.at(i, j) != 0) out[i][j] = MPoly::constant(nvars, B.at(i, j));
    return out;
}

PolyMat pm_mul(const PolyMat& a, const PolyMat& b) {
    int rows = (int)a.size(), inner = (int)b.size(), cols = (int)b[0].size();
    int nvars = a[0][0].nvars();
    PolyMat out = poly_mat(rows, cols, nvars);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < cols; ++j)
                if (!b[k][j].is_zero()) out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

PolyMat pm_transpose(const PolyMat& a) {
    int rows = (int)a.size(), cols = (int)a[0].size();
    PolyMat out = poly_mat(cols, rows, a[0][0].nvars());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[j][i] = a[i][j];
    return out;
}

// Keeps the elements whose coefficient rows enlarge the span, in list order.
std::vector<MPoly> prune_dependent(const std::vector<MPoly>& polys) {
    std::map<Monomial, int> columns;
    for (const auto& f : polys)
        for (const auto& [m, c] : f.terms())
            columns.emplace(m, 0);
    int idx = 0;
    for (auto& [m, col] : columns) col = idx++;

    std::vector<std::vector<Rat>> rows;  // reduced rows
    std::vector<MPoly> kept;
    for (const auto& f : polys) {
        std::vector<Rat> row(columns.size(), Rat(0));
        for (const auto& [m, c] : f.terms()) row[columns[m]] = c;
        for (const auto& r : rows) {
            int p = -1;
            for (size_t k = 0; k < r.size(); ++k)
                if (r[k] != 0) {
                    p = (int)k;
                    break;
                }
            if (p >= 0 && row[p] != 0) {
                Rat f2 = row[p] / r[p];
                for (size_t k = 0; k < r.size(); ++k) row[k] -= f2 * r[k];
            }
        }
        bool nonzero = std::any_of(row.begin(), row.end(), [](const Rat& v) { return v != 0; });
        if (nonzero) {
            rows.push_back(std::move(row));
            kept.push_back(f);
        }
    }
    return kept;
}

}  // namespace

FormMatrix FormMatrix::identity(int n) { return FormMatrix{QMatrix::identity(n), FormKind::symmetric}; }

FormMatrix FormMatrix::beta3() {
    QMatrix b(3, 3);
    b.at(0, 2) = 1;
    b.at(1, 1) = 1;
    b.at(2, 0) = 1;
    return FormMatrix{b, FormKind::symmetric};
}

FormMatrix FormMatrix::standard_symplectic(int n) {
    if (n % 2 != 0) throw std::invalid_argument("symplectic form needs even size");
    QMatrix j(n, n);
    for (int k = 0; k < n / 2; ++k) {
        j.at(2 * k, 2 * k + 1) = 1;
        j.at(2 * k + 1, 2 * k) = -1;
    }
    return FormMatrix{j, FormKind::skew};
}

void FormMatrix::validate() const {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("form matrix must be square");
    QMatrix t = mat.transpose();
    if (kind == FormKind::symmetric && !(t == mat))
        throw std::invalid_argument("form matrix is not symmetric");
    if (kind == FormKind::skew && !(t == mat * Rat(-1)))
        throw std::invalid_argument("form matrix is not skew");
    if (mat.det() == 0) throw std::invalid_argument("form matrix is singular");
}

MPoly xvar(int n, int i, int j) {
    VarGrid grid{n};
    return MPoly::variable(grid.nvars(), grid.flat(i, j));
}

std::vector<std::vector<MPoly>> generic_matrix(int n) {
    PolyMat X = poly_mat(n, n, n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) X[i - 1][j - 1] = xvar(n, i, j);
    return X;
}

MPoly generic_det(int n) {
    // cofactor expansion on explicit index sets; n stays small here
    struct Rec {
        const PolyMat& X;
        int nvars;
        MPoly minor(const std::vector<int>& rows, const std::vector<int>& cols) {
            if (rows.size() == 1) return X[rows[0]][cols[0]];
            MPoly acc(nvars);
            std::vector<int> subrows(rows.begin() + 1, rows.end());
            for (size_t k = 0; k < cols.size(); ++k) {
                std::vector<int> subcols;
                for (size_t l = 0; l < cols.size(); ++l)
                    if (l != k) subcols.push_back(cols[l]);
                MPoly term = X[rows[0]][cols[k]] * minor(subrows, subcols);
                acc = (k % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    };
    PolyMat X = generic_matrix(n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    Rec rec{X, n * n};
    return rec.minor(all, all);
}

namespace {

// Entries of X^T B X and X B X^T at the positions where B vanishes, then
// proportionality differences against the first nonzero position. `upper`
// selects i <= j for symmetric forms and i < j for skew ones.
std::vector<MPoly> form_relations(int n, const FormMatrix& B, bool strict_upper) {
    int nvars = n * n;
    PolyMat X = generic_matrix(n);
    PolyMat Bp = from_form(B.mat, nvars);
    PolyMat left = pm_mul(pm_mul(pm_transpose(X), Bp), X);   // X^T B X
    PolyMat right = pm_mul(pm_mul(X, Bp), pm_transpose(X));  // X B X^T

    std::pair<int, int> ref{-1, -1};
    std::vector<std::pair<int, int>> zeros, others;
    for (int i = 0; i < n; ++i)
        for (int j = strict_upper ? i + 1 : i; j < n; ++j) {
            if (B.mat.at(i, j) == 0) {
                zeros.emplace_back(i, j);
            } else if (ref.first < 0) {
                ref = {i, j};
            } else {
                others.emplace_back(i, j);
            }
        }

    std::vector<MPoly> gens;
    for (auto [i, j] : zeros) gens.push_back(left[i][j]);
    for (auto [i, j] : zeros) gens.push_back(right[i][j]);
    for (auto [k, l] : others)
        gens.push_back(B.mat.at(k, l) * left[ref.first][ref.second] -
                       B.mat.at(ref.first, ref.second) * left[k][l]);
    for (auto [k, l] : others)
        gens.push_back(B.mat.at(k, l) * right[ref.first][ref.second] -
                       B.mat.at(ref.first, ref.second) * right[k][l]);
    return prune_dependent(gens);
}

}  // namespace

std::vector<MPoly> orthogonal_generators(int n, const FormMatrix& B) {
    if (B.kind != FormKind::symmetric)
        throw std::invalid_argument("orthogonal generators need a symmetric form");
    B.validate();
    if (B.mat.rows() != n) throw std::invalid_argument("form size mismatch");
    std::vector<MPoly> gens = form_relations(n, B, /*strict_upper=*/false);
    if ((int)gens.size() != n * n + n - 2)
        throw std::logic_error("unexpected generator count for the orthogonal cone");
    return gens;
}

std::vector<MPoly> symplectic_generators(int n, const FormMatrix& J) {
    if (J.kind != FormKind::skew)
        throw std::invalid_argument("symplectic generators need a skew form");
    J.validate();
    if (J.mat.rows() != n || n % 2 != 0) throw std::invalid_argument("form size mismatch");
    std::vector<MPoly> gens = form_relations(n, J, /*strict_upper=*/true);
    // reduced echelon presentation under row-major degrevlex
    MonomialOrder order = MonomialOrder::row_major(OrderKind::degrevlex, n * n);
    return reduce_set(std::move(gens), order);
}

Rat evaluate(const MPoly& f, const QMatrix& point) {
    int n = point.rows();
    if (point.cols() != n || f.nvars() != n * n)
        throw std::invalid_argument("point size does not match the variable grid");
    Rat acc = 0;
    for (const auto& [m, c] : f.terms()) {
        Rat term = c;
        for (int v = 0; v < f.nvars(); ++v) {
            int e = m.exponent(v);
            for (int k = 0; k < e; ++k) term *= point.at(v / n, v % n);
        }
        acc += term;
    }
    return acc;
}

GaussRat evaluate_gaussian(const MPoly& f, const QMatrix& re, const QMatrix& im) {
    int n = re.rows();
    if (re.cols() != n || im.rows() != n || im.cols() != n || f.nvars() != n * n)
        throw std::invalid_argument("point size does not match the variable grid");
    GaussRat acc{Rat(0), Rat(0)};
    for (const auto& [m, c] : f.terms()) {
        GaussRat term{c, Rat(0)};
        for (int v = 0; v < f.nvars(); ++v) {
            int e = m.exponent(v);
            for (int k = 0; k < e; ++k) {
                GaussRat z{re.at(v / n, v % n), im.at(v / n, v % n)};
                term = GaussRat{term.re * z.re - term.im * z.im,
                                term.re * z.im + term.im * z.re};
            }
        }
        acc.re += term.re;
        acc.im += term.im;
    }
    return acc;
}

QMatrix cayley_transform(const QMatrix& S, const FormMatrix& B) {
    B.validate();
    int n = S.rows();
    if (S.cols() != n || B.mat.rows() != n) throw std::invalid_argument("matrix size mismatch");
    QMatrix skew_check = S.transpose() * B.mat + B.mat * S;
    if (!(skew_check == QMatrix(n, n)))
        throw std::invalid_argument("S is not skew with respect to the form");
    QMatrix id = QMatrix::identity(n);
    QMatrix plus = id + S;
    if (plus.det() == 0) throw std::invalid_argument("I + S is singular");
    return (id - S) * plus.inverse();
}

QMatrix unit_matrix(int n, int i, int j) {
    QMatrix e(n, n);
    e.at(i - 1, j - 1) = 1;
    return e;
}

MPoly infinitesimal_action(const MPoly& f, const QMatrix& u, Side side) {
    int n = u.rows();
    if (u.cols() != n || f.nvars() != n * n)
        throw std::invalid_argument("Lie element size does not match the variable grid");
    // image of x_{ij} under the derivation: -(uX)_{ij} or (Xu)_{ij}
    PolyMat X = generic_matrix(n);
    PolyMat img = poly_mat(n, n, f.nvars());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MPoly acc(f.nvars());
            for (int k = 0; k < n; ++k) {
                if (side == Side::left) {
                    if (u.at(i, k) != 0) acc = acc + X[k][j] * u.at(i, k);
                } else {
                    if (u.at(k, j) != 0) acc = acc + X[i][k] * u.at(k, j);
                }
            }
            img[i][j] = side == Side::left ? -acc : acc;
        }
    MPoly out(f.nvars());
    for (int v = 0; v < f.nvars(); ++v) {
        if (img[v / n][v % n].is_zero()) continue;
        MPoly d = f.derivative(v);
        if (!d.is_zero()) out = out + d * img[v / n][v % n];
    }
    return out;
}

std::vector<MPoly> uxu_candidates_O3beta() {
    int nvars = 9;
    FormMatrix beta = FormMatrix::beta3();
    PolyMat X = generic_matrix(3);
    PolyMat Bp = from_form(beta.mat, nvars);
    PolyMat P = pm_mul(pm_mul(pm_transpose(X), Bp), X);  // X^T beta X
    MPoly trace(nvars);                                  // Tr(X^T beta X beta)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (beta.mat.at(j, i) != 0) trace = trace + P[i][j] * beta.mat.at(j, i);
    std::vector<MPoly> out;
    out.push_back(xvar(3, 3, 1));
    out.push_back(xvar(3, 3, 1) * xvar(3, 2, 2) - xvar(3, 2, 1) * xvar(3, 3, 2));
    out.push_back(trace);
    out.push_back(generic_det(3));
    return out;
}

int coefficient_rank(const std::vector<MPoly>& polys) {
    std::map<Monomial, int> columns;
    for (const auto& f : polys)
        for (const auto& [m, c] : f.terms()) columns.emplace(m, 0);
    int idx = 0;
    for (auto& [m, col] : columns) col = idx++;
    QMatrix mat((int)polys.size(), std::max<int>(1, (int)columns.size()));
    for (int r = 0; r < (int)polys.size(); ++r)
        for (const auto& [m, c] : polys[r].terms()) mat.at(r, columns[m]) = c;
    return mat.rank();
}

}  // namespace cone
