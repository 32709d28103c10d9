#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cone/cone_ideals.hpp"
#include "cone/groebner.hpp"
#include "cone/hilbert.hpp"
#include "cone/serialize.hpp"
#include "cone/verify.hpp"

using nlohmann::json;

namespace {

struct GroupChoice {
    cone::GroupId group;
    bool beta = false;  // O(3) in split coordinates
};

GroupChoice parse_group(const std::string& name) {
    if (name == "O3beta") return {cone::O(3), true};
    return {cone::GroupId::parse(name), false};
}

std::string label_text(const cone::PartitionLabel& label) {
    std::string out = "(";
    for (size_t i = 0; i < label.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(label[i]);
    }
    return out + ")";
}

json label_json(const cone::PartitionLabel& label) {
    json a = json::array();
    for (int p : label) a.push_back(p);
    return a;
}

// Denominator exponents "a" or "a,b".
std::pair<int, int> parse_denominator(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stoi(s), 0};
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

void print_series(const cone::IntSeries& s, bool as_json) {
    if (as_json) {
        std::cout << cone::to_json(s).dump() << "\n";
        return;
    }
    for (int d = 0; d <= s.order(); ++d)
        std::cout << "t^" << d << ": " << s.at(d).get_str() << "\n";
}

void print_closed_form(const cone::RationalFunction& f, bool as_json) {
    if (as_json) {
        std::cout << cone::to_json(f).dump() << "\n";
        return;
    }
    std::cout << "numerator: " << f.numerator_text() << "\n"
              << "denominator: " << f.denominator_text() << "\n";
}

std::vector<cone::MPoly> generators_for(const GroupChoice& gc) {
    using namespace cone;
    if (gc.beta) return orthogonal_generators(3, FormMatrix::beta3());
    switch (gc.group.family) {
        case Family::O: return orthogonal_generators(gc.group.n, FormMatrix::identity(gc.group.n));
        case Family::Sp:
            return symplectic_generators(gc.group.n, FormMatrix::standard_symplectic(gc.group.n));
        case Family::SO:
            throw std::invalid_argument(
                "the vanishing ideal of the SO cone is not provided; use the O or Sp forms");
    }
    throw std::logic_error("unreachable");
}

int run(int argc, char** argv) {
    CLI::App app{"exact Hilbert series, UxU-invariant series, Koszul obstructions and "
                 "Groebner bases for coordinate rings of cones of classical groups"};
    app.require_subcommand(1);

    std::string group = "O3", format = "text", order_name = "degrevlex", var_order = "row-major";
    std::string denominator, golden_dir = "golden", only;
    int terms = 30, degree = 0, max_degree = 50;
    bool closed_form = false;

    auto add_common = [&](CLI::App* cmd, bool with_group = true) {
        if (with_group) cmd->add_option("--group", group, "group name (O3, O4, SO4, Sp4, O3beta)");
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of the cone's coordinate ring");
    add_common(hilbert);
    hilbert->add_option("--terms", terms, "number of terms past the constant one");
    hilbert->add_flag("--closed-form", closed_form, "print numerator over (1-t)^a*(1-t^2)^b");
    hilbert->add_option("--denominator", denominator, "denominator exponents a or a,b");

    auto* uxu = app.add_subcommand("uxu", "graded dimensions of the UxU-invariant subalgebra");
    add_common(uxu);
    uxu->add_option("--terms", terms, "number of terms past the constant one");
    uxu->add_flag("--closed-form", closed_form, "print numerator over (1-t)^a*(1-t^2)^b");
    uxu->add_option("--denominator", denominator, "denominator exponents a or a,b");

    auto* koszul = app.add_subcommand("koszul", "scan 1/H(-t) for a negative coefficient");
    add_common(koszul);
    koszul->add_option("--max", max_degree, "largest degree scanned");

    auto* dims = app.add_subcommand("dims", "labels and dimensions in one degree");
    add_common(dims);
    dims->add_option("--degree", degree, "degree")->required();

    auto* labels = app.add_subcommand("labels", "labels of one degree");
    add_common(labels);
    labels->add_option("--degree", degree, "degree")->required();

    auto* generators = app.add_subcommand("generators", "quadratic generators of the vanishing ideal");
    add_common(generators);
    generators->add_option("--order", order_name, "monomial order for printing")
        ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}));

    auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of the vanishing ideal");
    add_common(groebner);
    groebner->add_option("--order", order_name, "monomial order")
        ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}));
    groebner->add_option("--var-order", var_order, "variable priority")
        ->check(CLI::IsMember({"row-major"}));

    auto* verify = app.add_subcommand("verify", "run every golden check and report per item");
    add_common(verify, /*with_group=*/false);
    verify->add_option("--golden", golden_dir, "directory holding the golden files");
    verify->add_option("--only", only, "restrict to one module")
        ->check(CLI::IsMember({"hilbert", "koszul", "uxu", "groebner", "ideals", "membership"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    bool as_json = format == "json";

    if (hilbert->parsed() || uxu->parsed()) {
        GroupChoice gc = parse_group(group);
        auto series_fn = [&](int n) {
            return hilbert->parsed() ? cone::hilbert_series(gc.group, n)
                                     : cone::uxu_series(gc.group, n);
        };
        if (terms < 0) throw CLI::ValidationError("--terms must be nonnegative");
        if (!closed_form) {
            print_series(series_fn(terms), as_json);
            return 0;
        }
        int a = cone::default_denominator_pow(gc.group), b = 0;
        if (uxu->parsed()) a = 1, b = 2;
        bool fixed = !denominator.empty();
        if (fixed) std::tie(a, b) = parse_denominator(denominator);
        // With no explicit --denominator, scan upward from the default
        // exponent until the numerator terminates.
        for (;; ++a) {
            int needed = std::max(terms, a + 2 * b + 7);
            try {
                print_closed_form(cone::reconstruct_rational(series_fn(needed), a, b), as_json);
                return 0;
            } catch (const std::runtime_error&) {
                if (fixed || a >= cone::default_denominator_pow(gc.group) + 40) throw;
            }
        }
    }

    if (koszul->parsed()) {
        GroupChoice gc = parse_group(group);
        auto obstruction = cone::koszul_obstruction(gc.group, max_degree);
        if (as_json) {
            json j{{"group", gc.group.name()}, {"max", max_degree}};
            if (obstruction)
                j["obstruction"] = {{"index", obstruction->index},
                                    {"coefficient", obstruction->coefficient.get_str()}};
            else
                j["obstruction"] = nullptr;
            std::cout << j.dump() << "\n";
        } else if (obstruction) {
            std::cout << "obstruction at t^" << obstruction->index << ", coefficient "
                      << obstruction->coefficient.get_str() << "\n";
        } else {
            std::cout << "no obstruction through t^" << max_degree << "\n";
        }
        return 0;
    }

    if (dims->parsed() || labels->parsed()) {
        GroupChoice gc = parse_group(group);
        auto ls = cone::enum_labels(gc.group, degree);
        if (labels->parsed()) {
            if (as_json) {
                json a = json::array();
                for (const auto& l : ls) a.push_back(label_json(l));
                std::cout << json{{"group", gc.group.name()}, {"degree", degree}, {"labels", a}}.dump()
                          << "\n";
            } else {
                for (const auto& l : ls) std::cout << label_text(l) << "\n";
            }
            return 0;
        }
        cone::Int h = cone::h_G(gc.group, degree), cd = cone::cone_dim(gc.group, degree);
        if (as_json) {
            json a = json::array();
            for (const auto& l : ls)
                a.push_back({{"label", label_json(l)},
                             {"dim", cone::dim_irrep(gc.group, l).get_str()}});
            std::cout << json{{"group", gc.group.name()},
                              {"degree", degree},
                              {"labels", a},
                              {"h", h.get_str()},
                              {"cone_dim", cd.get_str()}}
                             .dump()
                      << "\n";
        } else {
            for (const auto& l : ls)
                std::cout << label_text(l) << " dim "
                          << cone::dim_irrep(gc.group, l).get_str() << "\n";
            std::cout << "h(" << degree << ") = " << h.get_str() << "\n"
                      << "component dim = " << cd.get_str() << "\n";
        }
        return 0;
    }

    if (generators->parsed() || groebner->parsed()) {
        GroupChoice gc = parse_group(group);
        std::vector<cone::MPoly> gens = generators_for(gc);
        int nvars = gens.front().nvars();
        cone::MonomialOrder order =
            cone::MonomialOrder::row_major(cone::order_kind_parse(order_name), nvars);
        if (generators->parsed()) {
            if (as_json) {
                json a = json::array();
                for (const auto& g : gens) a.push_back(cone::canonical_text(g, order));
                std::cout << json{{"group", group}, {"generators", a}}.dump() << "\n";
            } else {
                for (const auto& g : gens) std::cout << cone::canonical_text(g, order) << "\n";
            }
            return 0;
        }
        cone::GroebnerBasis basis = cone::buchberger(gens, order);
        if (as_json) {
            json a = json::array();
            for (const auto& g : basis.elements) a.push_back(cone::canonical_text(g, order));
            json lm = json::array();
            for (const auto& m : cone::leading_ideal(basis).generators)
                lm.push_back(cone::monomial_text(m, cone::VarGrid{gc.beta ? 3 : gc.group.n}));
            std::cout << json{{"group", group},
                              {"order", order_name},
                              {"basis", a},
                              {"leading_monomials", lm}}
                             .dump()
                      << "\n";
        } else {
            std::cout << cone::basis_file_text(basis);
        }
        return 0;
    }

    if (verify->parsed()) {
        cone::VerifyReport report = cone::verify_all(golden_dir, only);
        if (as_json) {
            json items = json::array();
            for (const auto& i : report.items)
                items.push_back({{"id", i.id},
                                 {"module", i.module},
                                 {"name", i.name},
                                 {"pass", i.pass},
                                 {"detail", i.detail}});
            std::cout << json{{"items", items}, {"pass", report.all_pass()}}.dump() << "\n";
        } else {
            for (const auto& i : report.items) {
                std::cout << (i.pass ? "[ok]   " : "[FAIL] ") << i.id << " " << i.module << ": "
                          << i.name;
                if (!i.pass) std::cout << " -- " << i.detail;
                std::cout << "\n";
            }
            size_t passed = 0;
            for (const auto& i : report.items) passed += i.pass;
            std::cout << passed << "/" << report.items.size() << " checks passed\n";
        }
        return report.all_pass() ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
