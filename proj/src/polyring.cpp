#include "cone/polyring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cone {

std::string VarGrid::var_name(int flat) const {
    if (n <= 9) return "x" + std::to_string(row(flat)) + std::to_string(col(flat));
    return "x" + std::to_string(row(flat)) + "_" + std::to_string(col(flat));
}

Monomial Monomial::variable(int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    if (power < 0) throw std::invalid_argument("negative exponent");
    Monomial m(nvars);
    m.exps_[index] = power;
    m.deg_ = power;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("mismatched variable grids");
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.exps_[i] += o.exps_[i];
    r.deg_ += o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("mismatched variable grids");
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide_exact(const Monomial& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.exps_[i] -= o.exps_[i];
    r.deg_ -= o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable grids");
    Monomial r(a.nvars());
    r.deg_ = 0;
    for (int i = 0; i < a.nvars(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.deg_ += r.exps_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("mismatched variable grids");
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

bool Monomial::operator<(const Monomial& o) const {
    if (deg_ != o.deg_) return deg_ < o.deg_;
    return exps_ < o.exps_;
}

OrderKind order_kind_parse(const std::string& name) {
    if (name == "degrevlex") return OrderKind::degrevlex;
    if (name == "deglex") return OrderKind::deglex;
    if (name == "lex") return OrderKind::lex;
    throw std::invalid_argument("unknown monomial order: " + name);
}

std::string order_kind_name(OrderKind kind) {
    switch (kind) {
        case OrderKind::degrevlex: return "degrevlex";
        case OrderKind::deglex: return "deglex";
        case OrderKind::lex: return "lex";
    }
    return "?";
}

MonomialOrder MonomialOrder::row_major(OrderKind kind, int nvars) {
    MonomialOrder o;
    o.kind = kind;
    o.priority.resize(nvars);
    std::iota(o.priority.begin(), o.priority.end(), 0);
    return o;
}

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
    if (u.nvars() != v.nvars() || (int)priority.size() != u.nvars())
        throw std::invalid_argument("mismatched variable grids");
    if (kind != OrderKind::lex) {
        if (u.degree() != v.degree()) return u.degree() < v.degree() ? -1 : 1;
    }
    if (kind == OrderKind::degrevlex) {
        // ties: the last nonzero entry of u - v in reverse priority decides,
        // negative meaning u is the larger monomial
        for (int r = (int)priority.size() - 1; r >= 0; --r) {
            int d = u.exponent(priority[r]) - v.exponent(priority[r]);
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    for (int idx : priority) {
        int d = u.exponent(idx) - v.exponent(idx);
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly f(nvars);
    f.add_term(Monomial(nvars), c);
    return f;
}

MPoly MPoly::variable(int nvars, int index) {
    MPoly f(nvars);
    f.add_term(Monomial::variable(nvars, index), Rat(1));
    return f;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool MPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d == -1) d = m.degree();
        if (m.degree() != d) return false;
    }
    return true;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("mismatched variable grids");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("mismatched variable grids");
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("mismatched variable grids");
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("mismatched variable grids");
    MPoly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

std::pair<Monomial, Rat> MPoly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Monomial MPoly::leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).first;
}

MPoly MPoly::derivative(int var_index) const {
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var_index);
        if (e == 0) continue;
        r.add_term(m.divide_exact(Monomial::variable(nvars_, var_index)), c * e);
    }
    return r;
}

MPoly MPoly::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    Rat lc = leading_term(order).second;
    return *this * (Rat(1) / lc);
}

MPoly MPoly::normalized_integral(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : terms_) den_lcm = int_lcm(den_lcm, c.get_den());
    for (const auto& [m, c] : terms_) num_gcd = int_gcd(num_gcd, Int(c.get_num() * den_lcm / c.get_den()));
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    MPoly r = *this * scale;
    if (r.leading_term(order).second < 0) r = -r;
    return r;
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& B, const MonomialOrder& order) {
    for (const auto& b : B)
        if (b.is_zero()) throw std::invalid_argument("divisor list contains the zero polynomial");
    MPoly r(f.nvars());
    MPoly p = f;
    std::vector<std::pair<Monomial, Rat>> lts;
    lts.reserve(B.size());
    for (const auto& b : B) lts.push_back(b.leading_term(order));
    while (!p.is_zero()) {
        auto [m, c] = p.leading_term(order);
        bool reduced = false;
        for (size_t i = 0; i < B.size(); ++i) {
            if (lts[i].first.divides(m)) {
                MPoly q(f.nvars());
                q.add_term(m.divide_exact(lts[i].first), c / lts[i].second);
                p = p - q * B[i];
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(m, c);
            MPoly t(f.nvars());
            t.add_term(m, c);
            p = p - t;
        }
    }
    return r;
}

MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial requires nonzero inputs");
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    Monomial l = Monomial::lcm(mf, mg);
    MPoly uf(f.nvars()), ug(g.nvars());
    uf.add_term(l.divide_exact(mf), Rat(1) / cf);
    ug.add_term(l.divide_exact(mg), Rat(1) / cg);
    return uf * f - ug * g;
}

std::string monomial_text(const Monomial& m, const VarGrid& grid) {
    if (m.nvars() != grid.nvars()) throw std::invalid_argument("mismatched variable grids");
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += grid.var_name(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string canonical_text(const MPoly& f, const MonomialOrder& order) {
    if (f.is_zero()) return "0";
    int n = (int)std::lround(std::sqrt((double)f.nvars()));
    if (n * n != f.nvars()) throw std::invalid_argument("polynomial is not over a square grid");
    VarGrid grid{n};
    std::vector<std::pair<Monomial, Rat>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    std::string out;
    for (const auto& [m, c] : terms) {
        Rat mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        bool constant = m.degree() == 0;
        if (mag != 1 || constant) {
            out += mag.get_str();
            if (!constant) out += "*";
        }
        if (!constant) out += monomial_text(m, grid);
    }
    return out;
}

}  // namespace cone
