#pragma once

// JSON and CSV forms of the exact types. Rationals travel as "num/den" strings
// (denominator omitted when 1); polynomials as canonical-ordered term lists.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dyck.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace dyckwig {

using json = nlohmann::ordered_json;

inline json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (auto [var, e] : m.factors()) exps.push_back({var, e});
        terms.push_back({{"coeff", c.get_str()}, {"exponents", std::move(exps)}});
    }
    return terms;
}

inline MultiPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
    MultiPoly p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exponents"))
            throw ParseError("polynomial term needs 'coeff' and 'exponents'");
        Monomial m;
        for (const auto& f : term.at("exponents")) {
            if (!f.is_array() || f.size() != 2) throw ParseError("exponent entries are [var_index, exponent] pairs");
            m.multiply_var(f[0].get<unsigned>(), f[1].get<unsigned>());
        }
        p.add_term(m, parse_integer(term.at("coeff").get<std::string>()));
    }
    return p;
}

inline json to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix<Rational> matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
        rows.push_back(std::move(r));
    }
    return Matrix<Rational>::from_rows(rows);
}

inline json to_json(const std::vector<DyckPath>& paths) {
    json words = json::array();
    for (const auto& p : paths) words.push_back(word(p));
    return words;
}

/// Exact strings, or fixed-point decimals when `precision` is set.
inline std::string render(const Rational& q, std::optional<unsigned> precision) {
    return precision ? to_decimal(q, *precision) : to_string(q);
}

inline void write_csv(std::ostream& os, const Matrix<Rational>& m, std::optional<unsigned> precision) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) os << ',';
            os << render(m(i, j), precision);
        }
        os << '\n';
    }
}

} // namespace dyckwig
