#include "cone/verify.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "cone/cone_ideals.hpp"
#include "cone/groebner.hpp"
#include "cone/hilbert.hpp"
#include "cone/serialize.hpp"

namespace cone {

namespace {

struct Check {
    int id;
    std::string module;
    std::string name;
    std::function<std::string()> run;  // empty string = pass, otherwise first mismatch
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

std::string check_series_equal(const IntSeries& got, const IntSeries& want,
                               const std::string& what) {
    for (int d = 0; d <= std::min(got.order(), want.order()); ++d)
        if (got.at(d) != want.at(d))
            return what + ": coefficient of t^" + std::to_string(d) + " is " +
                   got.at(d).get_str() + ", expected " + want.at(d).get_str();
    if (got.order() != want.order()) return what + ": order mismatch";
    return "";
}

std::string check_closed_form(const GroupId& g, const IntSeries& series,
                              const RationalFunction& form) {
    return check_series_equal(series, form.expand(series.order()), g.name());
}

RationalFunction rf(std::vector<Int> num, int a, int b) {
    return RationalFunction{std::move(num), a, b};
}

std::string check_golden_form(const RationalFunction& want, const std::string& path) {
    RationalFunction got;
    try {
        got = rational_from_json(nlohmann::json::parse(read_file(path)));
    } catch (const std::exception& e) {
        return path + ": " + e.what();
    }
    if (!(got == want)) return path + ": closed form differs from the computed one";
    return "";
}

// ---- golden Groebner data ------------------------------------------------

GroebnerBasis groebner_O3beta() {
    MonomialOrder order = MonomialOrder::row_major(OrderKind::degrevlex, 9);
    return buchberger(orthogonal_generators(3, FormMatrix::beta3()), order);
}

GroebnerBasis groebner_Sp4() {
    MonomialOrder order = MonomialOrder::row_major(OrderKind::degrevlex, 16);
    return buchberger(symplectic_generators(4, FormMatrix::standard_symplectic(4)), order);
}

std::string compare_to_golden(const std::string& got, const std::string& path) {
    std::string want;
    try {
        want = read_file(path);
    } catch (const std::exception& e) {
        return e.what();
    }
    if (got == want) return "";
    std::istringstream a(got), b(want);
    std::string la, lb;
    int line = 1;
    while (true) {
        bool ga = (bool)std::getline(a, la), gb = (bool)std::getline(b, lb);
        if (!ga && !gb) break;
        if (!ga || !gb || la != lb)
            return path + ": first mismatch at line " + std::to_string(line);
        ++line;
    }
    return path + ": content differs";
}

// ---- membership sampling -------------------------------------------------

struct FormCase {
    std::string label;
    FormMatrix form;
    std::vector<MPoly> gens;
};

QMatrix random_skew(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int v = dist(rng);
            a.at(i, j) = v;
            a.at(j, i) = -v;
        }
    return a;
}

QMatrix random_symmetric(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int v = dist(rng);
            a.at(i, j) = v;
            a.at(j, i) = v;
        }
    return a;
}

std::string membership_check() {
    std::vector<FormCase> cases;
    cases.push_back({"O3 identity", FormMatrix::identity(3),
                     orthogonal_generators(3, FormMatrix::identity(3))});
    cases.push_back({"O3 split form", FormMatrix::beta3(),
                     orthogonal_generators(3, FormMatrix::beta3())});
    cases.push_back({"Sp4", FormMatrix::standard_symplectic(4),
                     symplectic_generators(4, FormMatrix::standard_symplectic(4))});

    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), entry(-4, 4);
    for (const auto& c : cases) {
        int n = c.form.mat.rows();
        QMatrix binv = c.form.mat.inverse();
        int produced = 0, attempts = 0;
        while (produced < 200) {
            if (++attempts > 2000) return c.label + ": could not sample 200 points";
            QMatrix a = c.form.kind == FormKind::symmetric ? random_skew(n, rng)
                                                           : random_symmetric(n, rng);
            QMatrix s = binv * a;
            if ((QMatrix::identity(n) + s).det() == 0) continue;
            QMatrix m = cayley_transform(s, c.form);
            int p = num(rng);
            if (p == 0) p = 1;
            Rat scale(p, den(rng));
            scale.canonicalize();
            QMatrix point = m * scale;
            for (const auto& g : c.gens)
                if (evaluate(g, point) != 0)
                    return c.label + ": generator does not vanish on a scaled sample point";
            ++produced;
        }

        // separation: random integer matrices are detected as non-members
        int separated = 0;
        attempts = 0;
        while (separated < 50) {
            if (++attempts > 1000) return c.label + ": could not sample 50 non-members";
            QMatrix point(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) point.at(i, j) = entry(rng);
            bool witness = false;
            for (const auto& g : c.gens)
                if (evaluate(g, point) != 0) {
                    witness = true;
                    break;
                }
            if (witness) ++separated;
        }
    }

    // the rank-one complex point: both components of every generator vanish
    QMatrix re(3, 3), im(3, 3);
    re.at(0, 0) = 1;
    re.at(1, 1) = 1;
    im.at(0, 1) = 1;
    im.at(1, 0) = -1;
    for (const auto& g : orthogonal_generators(3, FormMatrix::identity(3))) {
        GaussRat v = evaluate_gaussian(g, re, im);
        if (v.re != 0 || v.im != 0)
            return "complex sample point: generator does not vanish";
    }
    return "";
}

// ---- the individual criteria ----------------------------------------------

std::string check_hilbert_closed_forms(const std::string& golden_dir) {
    struct Row {
        GroupId g;
        RationalFunction form;
    };
    std::vector<Row> rows;
    rows.push_back({O(3), rf(ints({1, 5, 5, -6, 4, -1}), 4, 0)});
    rows.push_back({O(4), rf(ints({1, 9, 27, 19, -30, 34, -35, 21, -7, 1}), 7, 0)});
    rows.push_back({Sp(4), rf(ints({1, 5, 5, 1}), 11, 0)});
    rows.push_back({SO(4), rf(ints({1, 9, 9, 1}), 7, 0)});
    for (const auto& r : rows) {
        std::string err = check_closed_form(r.g, hilbert_series(r.g, 30), r.form);
        if (!err.empty()) return err;
        // reconstruction from the series gives back the same numerator
        RationalFunction rec = reconstruct_rational(hilbert_series(r.g, 30), r.form.denom_pow1, 0);
        if (!(rec == r.form)) return r.g.name() + ": reconstructed numerator differs";
        err = check_golden_form(r.form, golden_dir + "/hilbert_" + r.g.name() + ".json");
        if (!err.empty()) return err;
    }
    return "";
}

std::string check_spot_dimensions() {
    auto expect = [](const Int& got, long want, const std::string& what) -> std::string {
        if (got != want)
            return what + " is " + got.get_str() + ", expected " + std::to_string(want);
        return "";
    };
    std::string err;
    if (!(err = expect(cone_dim(O(4), 2), 118, "cone_dim(O4,2)")).empty()) return err;
    if (!(err = expect(cone_dim(O(4), 4), 1825, "cone_dim(O4,4)")).empty()) return err;
    if (!(err = expect(h_G(O(4), 2), 117, "h(O4,2)")).empty()) return err;
    if (!(err = expect(h_G(O(4), 4), 1707, "h(O4,4)")).empty()) return err;
    for (int d = 0; d <= 10; d += 2)
        if (cone_dim(O(3), d) != binomial(2 * d + 3, 3))
            return "cone_dim(O3," + std::to_string(d) + ") != C(2d+3,3)";
    return "";
}

std::string check_koszul() {
    IntSeries inv = series_inverse(hilbert_series(O(3), 12).substitute_neg_t());
    std::vector<Int> want =
        ints({1, 9, 46, 183, 628, 1912, 5129, 11539, 17883, -7330});
    for (int d = 0; d <= 9; ++d)
        if (inv.at(d) != want[d])
            return "1/H(O3;-t): coefficient of t^" + std::to_string(d) + " is " +
                   inv.at(d).get_str() + ", expected " + want[d].get_str();
    auto obstruction = koszul_obstruction(O(3), 12);
    if (!obstruction || obstruction->index != 9 || obstruction->coefficient != -7330)
        return "O3 obstruction not found at t^9";
    for (const GroupId& g : {O(4), Sp(4)})
        if (koszul_obstruction(g, 50))
            return g.name() + ": unexpected negative coefficient within t^50";
    return "";
}

std::string check_uxu_closed_forms(const std::string& golden_dir) {
    struct Row {
        GroupId g;
        RationalFunction form;
    };
    std::vector<Row> rows;
    rows.push_back({O(3), rf(ints({1, 0, 1, 1, -1}), 1, 1)});
    rows.push_back({O(4), rf(ints({1, 0, 3, 1, 1, -2, -1, 1}), 1, 2)});
    rows.push_back({SO(4), rf(ints({1, 0, 1}), 1, 2)});
    rows.push_back({Sp(4), rf(ints({1}), 1, 2)});
    for (const auto& r : rows) {
        std::string err =
            check_series_equal(uxu_series(r.g, 30), r.form.expand(30), r.g.name() + " UxU");
        if (!err.empty()) return err;
        err = check_golden_form(r.form, golden_dir + "/uxu_" + r.g.name() + ".json");
        if (!err.empty()) return err;
    }
    return "";
}

std::string check_groebner_golden(const std::string& golden_dir) {
    GroebnerBasis gb3 = groebner_O3beta();
    std::string err = compare_to_golden(basis_file_text(gb3),
                                        golden_dir + "/groebner_O3beta_degrevlex.txt");
    if (!err.empty()) return err;
    if (gb3.elements.size() != 15) return "O3beta basis: expected 15 elements";

    std::string lm_text = "# order=degrevlex vars=row-major n=3\n";
    for (const auto& m : leading_ideal(gb3).generators) lm_text += monomial_text(m, VarGrid{3}) + "\n";
    err = compare_to_golden(lm_text, golden_dir + "/leading_monomials_O3beta_degrevlex.txt");
    if (!err.empty()) return err;

    GroebnerBasis gb4 = groebner_Sp4();
    err = compare_to_golden(basis_file_text(gb4), golden_dir + "/groebner_Sp4_degrevlex.txt");
    if (!err.empty()) return err;
    if (gb4.elements.size() != 12) return "Sp4 basis: expected 12 elements";
    int cubics = 0, quadratics = 0;
    for (const auto& f : gb4.elements) (f.degree() == 3 ? cubics : quadratics)++;
    if (quadratics != 10 || cubics != 2) return "Sp4 basis: expected 10 quadratics and 2 cubics";
    return "";
}

std::string check_two_route() {
    {
        GroebnerBasis gb = groebner_O3beta();
        IntSeries staircase = monomial_quotient_hilbert(leading_ideal(gb), 9, 20);
        std::string err =
            check_series_equal(staircase, hilbert_series(O(3), 20), "O3 staircase vs dimension sums");
        if (!err.empty()) return err;
    }
    {
        GroebnerBasis gb = groebner_Sp4();
        IntSeries staircase = monomial_quotient_hilbert(leading_ideal(gb), 16, 20);
        std::string err =
            check_series_equal(staircase, hilbert_series(Sp(4), 20), "Sp4 staircase vs dimension sums");
        if (!err.empty()) return err;
    }
    return "";
}

std::string check_quadratic_counts() {
    struct Row {
        GroupId g;
        long want;
        std::vector<MPoly> gens;
    };
    std::vector<Row> rows;
    rows.push_back({O(3), 10, orthogonal_generators(3, FormMatrix::identity(3))});
    rows.push_back({O(4), 18, orthogonal_generators(4, FormMatrix::identity(4))});
    rows.push_back({Sp(4), 10, symplectic_generators(4, FormMatrix::standard_symplectic(4))});
    for (const auto& r : rows) {
        int n2 = r.g.n * r.g.n;
        Int count = binomial(n2 + 1, 2) - cone_dim(r.g, 2);
        if (count != r.want)
            return r.g.name() + ": quadratic relation count is " + count.get_str();
        if ((long)r.gens.size() != r.want)
            return r.g.name() + ": generator count is " + std::to_string(r.gens.size());
        if (coefficient_rank(r.gens) != r.want)
            return r.g.name() + ": generator rank below " + std::to_string(r.want);
    }
    return "";
}

std::string check_recursion() {
    for (const GroupId& g : {O(3), O(4), SO(4), Sp(4)})
        for (int d = 2; d <= 30; ++d)
            if (cone_dim(g, d) - cone_dim(g, d - 2) != h_G(g, d))
                return g.name() + ": recursion fails at degree " + std::to_string(d);
    return "";
}

std::string check_invariance() {
    std::vector<MPoly> cands = uxu_candidates_O3beta();
    QMatrix u = unit_matrix(3, 1, 2) - unit_matrix(3, 2, 3);
    for (size_t i = 0; i < cands.size(); ++i)
        for (Side side : {Side::left, Side::right})
            if (!infinitesimal_action(cands[i], u, side).is_zero())
                return "candidate " + std::to_string(i + 1) + " is not annihilated";
    // products of the candidates span components of dimensions 1, 3, 4
    const MPoly& lin = cands[0];
    std::vector<MPoly> deg1 = {lin};
    std::vector<MPoly> deg2 = {lin * lin, cands[1], cands[2]};
    std::vector<MPoly> deg3 = {lin * lin * lin, lin * cands[1], lin * cands[2], cands[3]};
    if (coefficient_rank(deg1) != 1) return "degree-1 span has wrong dimension";
    if (coefficient_rank(deg2) != 3) return "degree-2 span has wrong dimension";
    if (coefficient_rank(deg3) != 4) return "degree-3 span has wrong dimension";
    IntSeries u_series = uxu_series(O(3), 3);
    if (u_series.at(1) != 1 || u_series.at(2) != 3 || u_series.at(3) != 4)
        return "UxU series disagrees with the candidate spans";
    return "";
}

std::string check_certificates() {
    struct Row {
        std::string label;
        GroebnerBasis gb;
        std::vector<MPoly> gens;
    };
    std::vector<Row> rows;
    rows.push_back({"O3beta", groebner_O3beta(), orthogonal_generators(3, FormMatrix::beta3())});
    rows.push_back({"Sp4", groebner_Sp4(),
                    symplectic_generators(4, FormMatrix::standard_symplectic(4))});
    for (const auto& r : rows) {
        const auto& els = r.gb.elements;
        for (size_t i = 0; i < els.size(); ++i)
            for (size_t j = i + 1; j < els.size(); ++j) {
                MPoly s = s_polynomial(els[i], els[j], r.gb.order);
                if (!normal_form(s, els, r.gb.order).is_zero())
                    return r.label + ": S-polynomial (" + std::to_string(i) + "," +
                           std::to_string(j) + ") does not reduce to zero";
            }
        for (size_t i = 0; i < r.gens.size(); ++i)
            if (!normal_form(r.gens[i], els, r.gb.order).is_zero())
                return r.label + ": generator " + std::to_string(i) + " does not reduce to zero";
    }
    return "";
}

std::string check_alternate_decomposition() {
    RationalFunction p1 = rf(ints({1, 3, 3, 1}), 4, 0);
    RationalFunction p2 = rf(ints({0, 2, 2}), 3, 0);
    RationalFunction p3 = rf(ints({0, 0, 1}), 2, 0);
    RationalFunction p4 = rf(ints({0, 0, 1}), 1, 0);
    IntSeries sum = p1.expand(30) + p2.expand(30) + p3.expand(30) + p4.expand(30);
    return check_series_equal(sum, hilbert_series(O(3), 30), "staircase decomposition");
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& i : items)
        if (!i.pass) return false;
    return true;
}

VerifyReport verify_all(const std::string& golden_dir, const std::string& only) {
    std::vector<Check> checks = {
        {1, "hilbert", "Hilbert series closed forms, order 30",
         [&] { return check_hilbert_closed_forms(golden_dir); }},
        {2, "hilbert", "spot dimensions", check_spot_dimensions},
        {3, "koszul", "Koszul obstruction at t^9 for O3; none through t^50 for O4, Sp4",
         check_koszul},
        {4, "uxu", "UxU-invariant series closed forms, order 30",
         [&] { return check_uxu_closed_forms(golden_dir); }},
        {5, "groebner", "Groebner bases match golden files byte for byte",
         [&] { return check_groebner_golden(golden_dir); }},
        {6, "groebner", "staircase Hilbert series equals dimension sums, order 20",
         check_two_route},
        {7, "ideals", "quadratic relation counts and generator ranks", check_quadratic_counts},
        {8, "hilbert", "degree recursion, 2 <= d <= 30", check_recursion},
        {9, "ideals", "UxU invariance of the four candidates and their product spans",
         check_invariance},
        {10, "membership", "generators vanish on sampled points and separate non-members",
         membership_check},
        {11, "groebner", "Buchberger certificates: S-polynomials and generators reduce to zero",
         check_certificates},
        {12, "hilbert", "alternate staircase decomposition of the O3 series",
         check_alternate_decomposition},
    };

    VerifyReport report;
    for (const auto& c : checks) {
        if (!only.empty() && c.module != only) continue;
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        report.items.push_back({c.id, c.module, c.name, detail.empty(), detail});
    }
    return report;
}

}  // namespace cone
