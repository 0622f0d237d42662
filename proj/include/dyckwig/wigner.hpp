#pragma once

// Pre-Wigner matrices Z(n), the Weyl-symmetrization oracle, and the Wigner matrix
// W(n) = V^-T Z(n) V^-1 on the (p_k, q_l) grid.

#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "oscillator.hpp"
#include "rational.hpp"

namespace dyckwig {

/// Weyl-ordered p^a q^b: the average of all C(a+b, a) orderings of a copies of p and b of q.
inline Matrix<GaussianRational> weyl_operator(int a, int b, const OscillatorModel& model,
                                              const CostLimits& limits = {}) {
    if (a < 0 || b < 0) throw DomainError("Weyl degrees must be nonnegative");
    const Integer orderings = binomial(a + b, a);
    if (orderings > limits.max_weyl_orderings)
        throw CostGuard("Weyl oracle for (a, b) = (" + std::to_string(a) + ", " + std::to_string(b) + ") needs " +
                        orderings.get_str() + " orderings, above the guard " +
                        std::to_string(limits.max_weyl_orderings));

    const Matrix<GaussianRational> p = p_gauge(model);
    const Matrix<GaussianRational> q = q_gauge(model).map([](const Rational& x) { return GaussianRational(x); });
    Matrix<GaussianRational> sum(model.dim(), model.dim());

    // Walk every word in {p, q} with a p's and b q's, sharing prefix products.
    auto walk = [&](auto& self, const Matrix<GaussianRational>& prefix, int ps, int qs) -> void {
        if (ps == 0 && qs == 0) {
            sum += prefix;
            return;
        }
        if (ps > 0) self(self, prefix * p, ps - 1, qs);
        if (qs > 0) self(self, prefix * q, ps, qs - 1);
    };
    walk(walk, Matrix<GaussianRational>::identity(model.dim()), a, b);

    const GaussianRational inv_count(make_rational(Integer(1), orderings));
    return sum.map([&](const GaussianRational& z) { return z * inv_count; });
}

enum class PreWignerRoute { Krawtchouk, Dyck, Oracle };

struct PreWignerMatrix {
    int n = 0;
    Matrix<Rational> entries;
};

/// C(a+b, a) / C(2a+2b, 2a), the weight of <n|q^{2a+2b}|n> in Z(n)_{2a,2b}.
inline Rational even_weyl_factor(int a, int b) { return make_rational(binomial(a + b, a), binomial(2 * a + 2 * b, 2 * a)); }

inline PreWignerMatrix pre_wigner(int n, const OscillatorModel& model, PreWignerRoute route,
                                  const CostLimits& limits = {}) {
    model.check_index(n);
    const int N = model.N();
    PreWignerMatrix z{n, Matrix<Rational>(model.dim(), model.dim())};

    if (route == PreWignerRoute::Oracle) {
        for (int a = 0; a <= N; ++a)
            for (int b = 0; b <= N; ++b) {
                GaussianRational g = weyl_operator(a, b, model, limits)(n, n);
                if (!g.is_real()) throw Error("Weyl average has a nonzero imaginary part: " + to_string(g));
                z.entries(a, b) = g.re;
            }
        return z;
    }

    const MomentRoute moment_route = route == PreWignerRoute::Dyck ? MomentRoute::Dyck : MomentRoute::Krawtchouk;
    std::vector<Rational> moments;
    for (int r = 0; r <= 2 * (N / 2); ++r) moments.push_back(q_moment(moment_route, n, r, model, limits));
    for (int a = 0; 2 * a <= N; ++a)
        for (int b = 0; 2 * b <= N; ++b) z.entries(2 * a, 2 * b) = even_weyl_factor(a, b) * moments[a + b];
    return z;
}

/// Z(0) from the closed form 2^{-2j} C(a+b,a)/C(2a+2b,2a) sum_k C(2j,k) (-j+k)^{2a+2b}.
inline PreWignerMatrix pre_wigner_ground(const OscillatorModel& model) {
    const int N = model.N();
    const Integer two_pow = pow(Integer(2), static_cast<unsigned long>(N));
    PreWignerMatrix z{0, Matrix<Rational>(model.dim(), model.dim())};
    for (int a = 0; 2 * a <= N; ++a)
        for (int b = 0; 2 * b <= N; ++b) {
            Rational s = 0;
            for (int k = 0; k <= N; ++k)
                s += Rational(binomial(N, k)) * pow(model.node(k), 2UL * static_cast<unsigned long>(a + b));
            z.entries(2 * a, 2 * b) = even_weyl_factor(a, b) * s / Rational(two_pow);
        }
    return z;
}

struct VandermondeSystem {
    std::vector<Rational> nodes;
    Matrix<Rational> V;      ///< V(k, a) = nodes[k]^a
    Matrix<Rational> V_inv;
};

inline VandermondeSystem vandermonde_inverse(const std::vector<Rational>& nodes) {
    std::set<Rational> seen(nodes.begin(), nodes.end());
    if (seen.size() != nodes.size()) throw DuplicateNodes("Vandermonde nodes must be pairwise distinct");
    const std::size_t n = nodes.size();
    Matrix<Rational> v(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational x = 1;
        for (std::size_t a = 0; a < n; ++a) {
            v(k, a) = x;
            x *= nodes[k];
        }
    }
    Matrix<Rational> inv = mat_inverse(v);
    return {nodes, std::move(v), std::move(inv)};
}

/// Rows index momentum nodes p_k, columns position nodes q_l.
struct WignerMatrix {
    int n = 0;
    Matrix<Rational> entries;

    Rational total() const {
        Rational s = 0;
        for (std::size_t k = 0; k < entries.rows(); ++k)
            for (std::size_t l = 0; l < entries.cols(); ++l) s += entries(k, l);
        return s;
    }
};

inline WignerMatrix wigner_from_pre(const PreWignerMatrix& z, const VandermondeSystem& vs) {
    return {z.n, vs.V_inv.transpose() * z.entries * vs.V_inv};
}

inline WignerMatrix wigner_matrix(int n, const OscillatorModel& model, PreWignerRoute route = PreWignerRoute::Krawtchouk,
                                  const CostLimits& limits = {}) {
    return wigner_from_pre(pre_wigner(n, model, route, limits), vandermonde_inverse(model.nodes()));
}

/// V^T W V, whose (a, b) entry is sum_{k,l} W_{k,l} p_k^a q_l^b.
inline Matrix<Rational> discrete_moments(const WignerMatrix& w, const VandermondeSystem& vs) {
    return vs.V.transpose() * w.entries * vs.V;
}

struct MarginalEntry {
    int index = 0;
    Rational sum;
    Rational reference;
    bool equal = false;
};

struct MarginalReport {
    int n = 0;
    std::vector<MarginalEntry> position;  ///< column sums vs |phi_n(q_l)|^2
    std::vector<MarginalEntry> momentum;  ///< row sums vs |phi_n(p_k)|^2, reported only
    Rational total;

    bool position_exact() const {
        for (const auto& e : position)
            if (!e.equal) return false;
        return true;
    }
    bool momentum_exact() const {
        for (const auto& e : momentum)
            if (!e.equal) return false;
        return true;
    }
};

inline MarginalReport check_marginals(const WignerMatrix& w, const OscillatorModel& model) {
    MarginalReport rep;
    rep.n = w.n;
    rep.total = w.total();
    const auto dim = static_cast<int>(model.dim());
    for (int l = 0; l < dim; ++l) {
        Rational col = 0, row = 0;
        for (int k = 0; k < dim; ++k) {
            col += w.entries(k, l);
            row += w.entries(l, k);
        }
        Rational ref = phi_squared(w.n, l, model).square;
        rep.position.push_back({l, col, ref, col == ref});
        rep.momentum.push_back({l, row, ref, row == ref});
    }
    return rep;
}

} // namespace dyckwig
