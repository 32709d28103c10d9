#include "cone/serialize.hpp"

#include <stdexcept>

namespace cone {

using nlohmann::json;

json to_json(const IntSeries& s) {
    json coeffs = json::array();
    for (const Int& c : s.coeffs()) coeffs.push_back(c.get_str());
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

IntSeries series_from_json(const json& j) {
    int order = j.at("order").get<int>();
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    if ((int)coeffs.size() != order + 1)
        throw std::invalid_argument("series JSON: coefficient count does not match order");
    return IntSeries(std::move(coeffs));
}

json to_json(const RationalFunction& f) {
    json num = json::array();
    for (const Int& c : f.numerator) num.push_back(c.get_str());
    return json{{"numerator", std::move(num)}, {"a", f.denom_pow1}, {"b", f.denom_pow2}};
}

RationalFunction rational_from_json(const json& j) {
    RationalFunction f;
    for (const auto& c : j.at("numerator")) f.numerator.emplace_back(c.get<std::string>());
    f.denom_pow1 = j.at("a").get<int>();
    f.denom_pow2 = j.at("b").get<int>();
    return f;
}

json to_json(const QMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const json& j) {
    int rows = (int)j.size();
    int cols = rows ? (int)j.at(0).size() : 0;
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            Rat v(j.at(i).at(k).get<std::string>());
            v.canonicalize();
            m.at(i, k) = v;
        }
    return m;
}

}  // namespace cone
