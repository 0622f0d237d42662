#pragma once

// Self-check suites run by `dyckwig verify`. Each suite expands into independent cases;
// cases may run on worker threads but results keep their case order.

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "dyck.hpp"
#include "oscillator.hpp"
#include "wigner.hpp"

namespace dyckwig {

struct CaseResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyCase {
    std::string suite;
    std::string name;
    std::function<std::string()> run;  ///< empty string on success, else the failure reason
};

struct VerifyBounds {
    int two_j_max = 4;
    int r_max = 4;
    CostLimits limits{};
};

inline const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names{"catalan", "recurrence", "lemma1",     "theorem1",
                                                "genseries", "routes",    "marginals", "reflection"};
    return names;
}

namespace detail {

inline std::string tag(std::initializer_list<std::pair<const char*, int>> kv) {
    std::string s;
    for (auto [k, v] : kv) {
        if (!s.empty()) s += ' ';
        s += std::string(k) + "=" + std::to_string(v);
    }
    return s;
}

inline void catalan_cases(const VerifyBounds& b, std::vector<VerifyCase>& out) {
    for (int r = 0; r <= b.r_max; ++r)
        out.push_back({"catalan", tag({{"r", r}}), [r]() -> std::string {
                           auto n = count_paths(PathConstraint::unrestricted(r));
                           if (Integer(static_cast<unsigned long>(n)) != catalan(r))
                               return "count " + std::to_string(n) + " != C_r = " + catalan(r).get_str();
                           // P_{r+1}(1, 1, ...) reproduces sum_i C_i C_{r-i}.
                           Integer conv = 0;
                           for (int i = 0; i <= r; ++i) conv += catalan(i) * catalan(r - i);
                           Rational ones = dyck_poly_rec(r + 1, 0, 0).evaluate([](unsigned) { return Rational(1); });
                           if (ones != Rational(conv)) return "P_{r+1}(1,...,1) != sum C_i C_{r-i}";
                           return {};
                       }});
}

inline void recurrence_cases(const VerifyBounds& b, std::vector<VerifyCase>& out) {
    for (int r = 0; r <= b.r_max; ++r)
        out.push_back({"recurrence", tag({{"r", r}}), [r]() -> std::string {
                           for (int a = 0; a <= r; ++a)
                               for (int bb = 0; bb <= r; ++bb)
                                   for (int h = 0; h <= r; ++h)
                                       if (dyck_poly(PathConstraint{r, h, a, bb}) !=
                                           dyck_poly_enum(PathConstraint{r, h, a, bb}))
                                           return "mismatch at " + tag({{"h", h}, {"a", a}, {"b", bb}});
                           return {};
                       }});
}

inline void lemma_cases(const VerifyBounds& b, std::vector<VerifyCase>& out) {
    for (int r = 0; r <= b.r_max; ++r)
        out.push_back({"lemma1", tag({{"r", r}}), [r]() -> std::string {
                           for (int a = 0; a <= r + 1; ++a)
                               for (int bb = 0; bb <= r + 1; ++bb) {
                                   auto [lhs, rhs] = lemma_lhs_rhs(r, a, bb);
                                   if (lhs != rhs) return "sides differ at " + tag({{"a", a}, {"b", bb}});
                               }
                           return {};
                       }});
}

inline std::string check_theorem1(int N, int r) {
    const auto y = symbolic_y(N);
    const auto even = symbolic_power(y, 2 * r);
    const auto odd = even * y;
    for (int a = 0; a <= N; ++a) {
        MultiPoly prefix_b = 1;
        for (int bcol = 0; bcol <= N; ++bcol) {
            if (bcol > 0) prefix_b *= MultiPoly::var(static_cast<unsigned>(bcol));
            const MultiPoly lhs = even(a, bcol) * prefix_b;
            if ((a + bcol) % 2 != 0) {
                if (!even(a, bcol).is_zero()) return "nonzero odd-parity entry " + tag({{"a", a}, {"b", bcol}});
                continue;
            }
            if (!odd(a, bcol).is_zero()) return "odd power has nonzero entry " + tag({{"a", a}, {"b", bcol}});
            const MultiPoly rhs = dyck_poly_enum(PathConstraint{r + (a + bcol) / 2, N, a, bcol});
            if (lhs != rhs) return "entry mismatch " + tag({{"a", a}, {"b", bcol}});
        }
    }
    return {};
}

inline void theorem1_cases(const VerifyBounds& b, std::vector<VerifyCase>& out) {
    for (int N = 1; N <= b.two_j_max; ++N)
        for (int r = 0; r <= b.r_max; ++r)
            out.push_back({"theorem1", tag({{"N", N}, {"r", r}}), [N, r] { return check_theorem1(N, r); }});
}

inline void genseries_cases(const VerifyBounds& b, std::vector<VerifyCase>& out) {
    for (int nv = 0; nv <= b.r_max + 1; ++nv)
        out.push_back({"genseries", tag({{"n_vars", nv}, {"order", b.r_max}}), [nv, order = b.r_max]() -> std::string {
                           auto series = gen_series(order, nv);
                           for (int r = 0; r <= order; ++r)
                               if (series[r] != restrict_height(dyck_poly_rec(r, 0, 0), nv))
                                   return "coefficient of t^" + std::to_string(r) + " differs";
                           return {};
                       }});
}

inline void routes_cases(const VerifyBounds& b, std::vector<VerifyCase>& out) {
    for (int tj = 1; tj <= b.two_j_max; ++tj)
        for (int n = 0; n <= tj; ++n)
            out.push_back({"routes", tag({{"two_j", tj}, {"n", n}}), [tj, n, b]() -> std::string {
                               OscillatorModel model(tj);
                               for (int r = 0; r <= b.r_max; ++r) {
                                   Rational k = q_moment_krawtchouk(n, r, model, b.limits);
                                   if (k != q_moment_dyck(n, r, model, b.limits) ||
                                       k != q_moment_matrix(n, r, model, b.limits))
                                       return "moment routes disagree at r=" + std::to_string(r);
                               }
                               auto zk = pre_wigner(n, model, PreWignerRoute::Krawtchouk, b.limits).entries;
                               if (zk != pre_wigner(n, model, PreWignerRoute::Dyck, b.limits).entries)
                                   return "Z(n) differs between krawtchouk and dyck";
                               if (zk != pre_wigner(n, model, PreWignerRoute::Oracle, b.limits).entries)
                                   return "Z(n) differs between krawtchouk and oracle";
                               if (n == 0 && zk != pre_wigner_ground(model).entries)
                                   return "Z(0) differs from the ground-state closed form";
                               return {};
                           }});
}

inline void marginal_cases(const VerifyBounds& b, std::vector<VerifyCase>& out) {
    for (int tj = 1; tj <= b.two_j_max; ++tj)
        for (int n = 0; n <= tj; ++n)
            out.push_back({"marginals", tag({{"two_j", tj}, {"n", n}}), [tj, n, b]() -> std::string {
                               OscillatorModel model(tj);
                               auto vs = vandermonde_inverse(model.nodes());
                               auto z = pre_wigner(n, model, PreWignerRoute::Krawtchouk, b.limits);
                               auto w = wigner_from_pre(z, vs);
                               if (discrete_moments(w, vs) != z.entries) return "V^T W V != Z";
                               auto rep = check_marginals(w, model);
                               if (rep.total != 1) return "total " + to_string(rep.total) + " != 1";
                               if (!rep.position_exact()) return "position marginal differs from |phi_n|^2";
                               return {};
                           }});
}

inline void reflection_cases(const VerifyBounds& b, std::vector<VerifyCase>& out) {
    for (int tj = 1; tj <= b.two_j_max; ++tj)
        out.push_back({"reflection", tag({{"two_j", tj}}), [tj, b]() -> std::string {
                           OscillatorModel model(tj);
                           const int N = model.N();
                           auto vs = vandermonde_inverse(model.nodes());
                           for (int n = 0; n <= N; ++n) {
                               for (int r = 0; r <= b.r_max; ++r)
                                   if (q_moment_matrix(n, r, model, b.limits) != q_moment_matrix(N - n, r, model, b.limits))
                                       return "moment reflection fails at " + tag({{"n", n}, {"r", r}});
                               auto w = wigner_from_pre(pre_wigner(n, model, PreWignerRoute::Krawtchouk, b.limits), vs);
                               auto wr = wigner_from_pre(pre_wigner(N - n, model, PreWignerRoute::Krawtchouk, b.limits), vs);
                               for (int k = 0; k <= N; ++k)
                                   for (int l = 0; l <= N; ++l)
                                       if (wr.entries(k, l) != w.entries(N - k, N - l))
                                           return "Wigner reflection fails at " + tag({{"n", n}, {"k", k}, {"l", l}});
                           }
                           return {};
                       }});
}

} // namespace detail

/// Expands the named suites into cases. Throws DomainError on an unknown suite name.
inline std::vector<VerifyCase> build_cases(const std::vector<std::string>& suites, const VerifyBounds& b) {
    std::vector<VerifyCase> out;
    for (const auto& s : suites) {
        if (s == "catalan") detail::catalan_cases(b, out);
        else if (s == "recurrence") detail::recurrence_cases(b, out);
        else if (s == "lemma1") detail::lemma_cases(b, out);
        else if (s == "theorem1") detail::theorem1_cases(b, out);
        else if (s == "genseries") detail::genseries_cases(b, out);
        else if (s == "routes") detail::routes_cases(b, out);
        else if (s == "marginals") detail::marginal_cases(b, out);
        else if (s == "reflection") detail::reflection_cases(b, out);
        else throw DomainError("unknown verify suite '" + s + "'");
    }
    return out;
}

/// Runs cases on up to `threads` workers; result i belongs to case i.
inline std::vector<CaseResult> run_cases(const std::vector<VerifyCase>& cases, unsigned threads = 0) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    std::vector<CaseResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            const auto& c = cases[i];
            std::string why;
            try {
                why = c.run();
            } catch (const std::exception& e) {
                why = std::string("exception: ") + e.what();
            }
            results[i] = {c.suite, c.name, why.empty(), why};
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < std::min<std::size_t>(threads, cases.size()); ++t) pool.emplace_back(worker);
        worker();
    }
    return results;
}

} // namespace dyckwig
