#pragma once

// Sparse multivariate polynomials in u1, u2, ... with big-integer coefficients.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <cctype>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace dyckwig {

/// Product of variables u_k^e, stored as (k, e) pairs sorted by k, every e > 0.
class Monomial {
public:
    using Factor = std::pair<unsigned, unsigned>;

    Monomial() = default;
    Monomial(std::initializer_list<Factor> factors) {
        for (auto [var, e] : factors) multiply_var(var, e);
    }

    static Monomial var(unsigned k, unsigned e = 1) {
        Monomial m;
        m.multiply_var(k, e);
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    unsigned exponent(unsigned var) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
        return (it != factors_.end() && it->first == var) ? it->second : 0;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    /// Highest variable index present, 0 for the constant monomial.
    unsigned max_var() const { return factors_.empty() ? 0 : factors_.back().first; }

    void multiply_var(unsigned var, unsigned e = 1) {
        if (var == 0) throw DomainError("variable indices start at 1");
        if (e == 0) return;
        auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
        if (it != factors_.end() && it->first == var) it->second += e;
        else factors_.insert(it, Factor{var, e});
    }

    Monomial shifted(unsigned s) const {
        Monomial m = *this;
        for (auto& f : m.factors_) f.first += s;
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        m.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) m.factors_.push_back(*i++);
            else if (i == a.factors_.end() || j->first < i->first) m.factors_.push_back(*j++);
            else {
                m.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded lex: higher total degree first, then the larger exponent of u1, u2, ... first.
struct GrlexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        std::size_t i = 0, j = 0;
        while (i < fa.size() && j < fb.size()) {
            if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first;
            if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
            ++i;
            ++j;
        }
        return i < fa.size() && j == fb.size();
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Integer, GrlexOrder>;

    MultiPoly() = default;
    MultiPoly(long c) { add_term(Monomial{}, Integer(c)); }  // NOLINT(google-explicit-constructor)
    explicit MultiPoly(const Integer& c) { add_term(Monomial{}, c); }
    MultiPoly(const Monomial& m, const Integer& c = 1) { add_term(m, c); }  // NOLINT

    static MultiPoly var(unsigned k) { return MultiPoly(Monomial::var(k)); }

    /// Terms in canonical (graded lex) order.
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    unsigned max_var() const {
        unsigned v = 0;
        for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
        return v;
    }

    void add_term(const Monomial& m, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly() - a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend MultiPoly operator*(const Integer& k, const MultiPoly& p) {
        MultiPoly out;
        if (k == 0) return out;
        for (const auto& [m, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, k * c);
        return out;
    }

    friend MultiPoly operator*(long k, const MultiPoly& p) { return Integer(k) * p; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Replaces every u_k by u_{k+s}.
    MultiPoly shifted(unsigned s) const {
        MultiPoly out;
        for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m.shifted(s), c);
        return out;
    }

    /// Sets u_k = 0 for every k > h.
    MultiPoly restricted(unsigned h) const {
        MultiPoly out;
        for (const auto& [m, c] : terms_)
            if (m.max_var() <= h) out.terms_.emplace_hint(out.terms_.end(), m, c);
        return out;
    }

    /// Exact evaluation. `value(k)` must return the Rational assigned to u_k.
    template <typename ValueFn>
    Rational evaluate(ValueFn&& value) const {
        Rational sum = 0;
        std::map<unsigned, Rational> cache;
        for (const auto& [m, c] : terms_) {
            Rational term(c);
            for (auto [var, e] : m.factors()) {
                auto it = cache.find(var);
                if (it == cache.end()) it = cache.emplace(var, value(var)).first;
                term *= pow(it->second, e);
            }
            sum += term;
        }
        return sum;
    }

private:
    TermMap terms_;
};

inline MultiPoly shift(const MultiPoly& p, unsigned s) { return p.shifted(s); }

inline Rational substitute(const MultiPoly& p, const std::map<unsigned, Rational>& values) {
    return p.evaluate([&](unsigned var) -> Rational {
        auto it = values.find(var);
        if (it == values.end()) throw MissingVariable(var);
        return it->second;
    });
}

/// Text form "2*u1^2*u2 + u1*u2^2", `symbol` names the variables.
inline std::string to_text(const Monomial& m, char symbol = 'u') {
    std::string s;
    for (auto [var, e] : m.factors()) {
        if (!s.empty()) s += '*';
        s += symbol;
        s += std::to_string(var);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string to_text(const MultiPoly& p, char symbol = 'u') {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Integer mag = abs(c);
        if (first) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            s += mag.get_str();
            continue;
        }
        if (mag != 1) s += mag.get_str() + "*";
        s += to_text(m, symbol);
    }
    return s;
}

/// Parses the text form back. Accepts "2*u1^2*u2 - u3 + 5" and the unstarred "2u1^2u2".
inline MultiPoly parse_poly(std::string_view text, char symbol = 'u') {
    MultiPoly p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_uint = [&]() -> std::string {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        return std::string(text.substr(start, i - start));
    };
    auto fail = [&](const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(i) + " in '" + std::string(text) + "'");
    };

    skip_ws();
    if (text.substr(i) == "0") return p;
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (first) fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Integer coeff = 1;
        Monomial m;
        bool any = false;
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            coeff = parse_integer(read_uint());
            any = true;
            if (i < text.size() && text[i] == '*') ++i;
        }
        while (i < text.size() && text[i] == symbol) {
            ++i;
            std::string var = read_uint();
            if (var.empty()) fail("variable index expected");
            unsigned e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string ex = read_uint();
                if (ex.empty()) fail("exponent expected");
                e = static_cast<unsigned>(std::stoul(ex));
            }
            m.multiply_var(static_cast<unsigned>(std::stoul(var)), e);
            any = true;
            if (i < text.size() && text[i] == '*') ++i;
        }
        if (!any) fail("term expected");
        p.add_term(m, sign * coeff);
    }
    return p;
}

} // namespace dyckwig
