#pragma once

// The su(2) finite oscillator in the (2j+1)-dimensional representation.
//
// Position and momentum are stored after conjugation by D = diag(1, sqrt(u1), sqrt(u1 u2), ...)
// with u_k = k(N+1-k). In that gauge q is rational and p is Gaussian-rational, and every
// diagonal element of a product of them equals the physical <n|...|n>.

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "dyck.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "rational.hpp"

namespace dyckwig {

/// Bounds on request size; exceeding one raises CostGuard.
struct CostLimits {
    int max_two_j = 16;
    int max_r = 12;
    /// Orderings averaged by the Weyl oracle, C(a+b, a). C(10,5) admits every a+b <= 10.
    long max_weyl_orderings = 252;

    static CostLimits unlimited() {
        return {std::numeric_limits<int>::max(), std::numeric_limits<int>::max(), std::numeric_limits<long>::max()};
    }
};

struct OscillatorModel {
    int two_j = 1;

    explicit OscillatorModel(int two_j_) : two_j(two_j_) {
        if (two_j < 1) throw DomainError("two_j must be a positive integer");
    }

    int N() const { return two_j; }
    std::size_t dim() const { return static_cast<std::size_t>(two_j) + 1; }
    Rational j() const { return make_rational(two_j, 2); }

    /// q_k = p_k = -j + k.
    Rational node(int k) const { return Rational(k) - j(); }

    std::vector<Rational> nodes() const {
        std::vector<Rational> out;
        for (int k = 0; k <= two_j; ++k) out.push_back(node(k));
        return out;
    }

    /// u_k = k (N + 1 - k), the squared ladder coefficients.
    Integer u(int k) const { return Integer(k) * (two_j + 1 - k); }

    std::map<unsigned, Rational> substitution() const {
        std::map<unsigned, Rational> s;
        for (int k = 1; k <= two_j; ++k) s.emplace(static_cast<unsigned>(k), Rational(u(k)));
        return s;
    }

    void check_index(int n, const char* what = "state index") const {
        if (n < 0 || n > two_j)
            throw DomainError(std::string(what) + " " + std::to_string(n) + " outside 0.." + std::to_string(two_j));
    }

    void check_limits(int r, const CostLimits& limits) const {
        if (two_j > limits.max_two_j)
            throw CostGuard("two_j = " + std::to_string(two_j) + " exceeds the guard " + std::to_string(limits.max_two_j));
        if (r > limits.max_r)
            throw CostGuard("r = " + std::to_string(r) + " exceeds the guard " + std::to_string(limits.max_r));
    }
};

/// sign * sqrt(square), kept without radicals.
struct SignedSquare {
    int sign = 0;
    Rational square = 0;

    friend SignedSquare operator*(const SignedSquare& a, const SignedSquare& b) {
        return {a.sign * b.sign, a.square * b.square};
    }
    friend bool operator==(const SignedSquare&, const SignedSquare&) = default;
};

/// K_n(x; p, N) = 2F1(-n, -x; -N; 1/p) as a terminating sum.
inline Rational krawtchouk(int n, int x, const Rational& inv_p, int N) {
    if (n < 0 || x < 0 || n > N || x > N)
        throw DomainError("krawtchouk arguments must satisfy 0 <= n, x <= N");
    Rational sum = 0;
    Rational power = 1;
    for (int i = 0; i <= std::min(n, x); ++i) {
        sum += make_rational(binomial(n, i) * binomial(x, i), binomial(N, i)) * power;
        power *= -inv_p;
    }
    return sum;
}

/// phi_n(q_k) = (-1)^n 2^{-j} sqrt(C(2j,n) C(2j,k)) K_n(k; 1/2, 2j).
inline SignedSquare phi_squared(int n, int k, const OscillatorModel& model) {
    model.check_index(n);
    model.check_index(k, "node index");
    const int N = model.N();
    Rational kn = krawtchouk(n, k, Rational(2), N);
    int s = sgn(kn);
    if (n % 2 != 0) s = -s;
    Rational sq = make_rational(binomial(N, n) * binomial(N, k), pow(Integer(2), static_cast<unsigned long>(N))) * kn * kn;
    return {s, sq};
}

/// Gauge position operator: superdiagonal 1/2, subdiagonal u_k/2 at (k, k-1).
inline Matrix<Rational> q_gauge(const OscillatorModel& model) {
    Matrix<Rational> q(model.dim(), model.dim());
    for (int k = 1; k <= model.N(); ++k) {
        q(k - 1, k) = make_rational(1, 2);
        q(k, k - 1) = make_rational(model.u(k), 2);
    }
    return q;
}

/// Gauge momentum operator for p = (i/2)(J+ - J-), J+ on the subdiagonal:
/// subdiagonal i u_k/2, superdiagonal -i/2.
inline Matrix<GaussianRational> p_gauge(const OscillatorModel& model) {
    Matrix<GaussianRational> p(model.dim(), model.dim());
    for (int k = 1; k <= model.N(); ++k) {
        p(k - 1, k) = GaussianRational(Rational(0), make_rational(-1, 2));
        p(k, k - 1) = GaussianRational(Rational(0), make_rational(model.u(k), 2));
    }
    return p;
}

struct GaugeOperators {
    Matrix<Rational> q;
    Matrix<GaussianRational> p;
};

inline GaugeOperators gauge_operators(const OscillatorModel& model) {
    return {q_gauge(model), p_gauge(model)};
}

/// Y': superdiagonal 1, subdiagonal u_1..u_N, symbolic in the u's.
inline Matrix<MultiPoly> symbolic_y(int N) {
    if (N < 1) throw DomainError("symbolic_y needs N >= 1");
    const auto dim = static_cast<std::size_t>(N) + 1;
    Matrix<MultiPoly> y(dim, dim);
    for (int k = 1; k <= N; ++k) {
        y(k - 1, k) = 1;
        y(k, k - 1) = MultiPoly::var(static_cast<unsigned>(k));
    }
    return y;
}

inline Matrix<MultiPoly> symbolic_power(const Matrix<MultiPoly>& y, int m) {
    if (m < 0) throw DomainError("negative matrix power");
    return mat_pow(y, static_cast<unsigned>(m));
}

/// <n|q^{2r}|n> = sum_k q_k^{2r} |phi_n(q_k)|^2.
inline Rational q_moment_krawtchouk(int n, int r, const OscillatorModel& model, const CostLimits& limits = {}) {
    model.check_index(n);
    if (r < 0) throw DomainError("moment order must be nonnegative");
    model.check_limits(r, limits);
    Rational sum = 0;
    for (int k = 0; k <= model.N(); ++k) {
        Rational w = phi_squared(n, k, model).square;
        if (w == 0) continue;
        sum += pow(model.node(k), 2UL * static_cast<unsigned long>(r)) * w;
    }
    return sum;
}

/// <n|q^{2r}|n> = 4^{-r} P_{r+n|N}^{(n,n)} / (u_1...u_n) at u_i = i(N+1-i).
inline Rational q_moment_dyck(int n, int r, const OscillatorModel& model, const CostLimits& limits = {}) {
    model.check_index(n);
    if (r < 0) throw DomainError("moment order must be nonnegative");
    model.check_limits(r, limits);
    MultiPoly p = restrict_height(dyck_poly_rec(r + n, n, n), model.N());
    Rational value = substitute(p, model.substitution());
    Integer prefix = 1;
    for (int i = 1; i <= n; ++i) prefix *= model.u(i);
    return value / Rational(prefix * pow(Integer(4), static_cast<unsigned long>(r)));
}

/// Diagonal entry (n, n) of q_gauge^{2r} by repeated multiplication.
inline Rational q_moment_matrix(int n, int r, const OscillatorModel& model, const CostLimits& limits = {}) {
    model.check_index(n);
    if (r < 0) throw DomainError("moment order must be nonnegative");
    model.check_limits(r, limits);
    return mat_pow(q_gauge(model), 2U * static_cast<unsigned>(r))(n, n);
}

enum class MomentRoute { Krawtchouk, Dyck, Matrix };

inline Rational q_moment(MomentRoute route, int n, int r, const OscillatorModel& model, const CostLimits& limits = {}) {
    switch (route) {
    case MomentRoute::Krawtchouk: return q_moment_krawtchouk(n, r, model, limits);
    case MomentRoute::Dyck: return q_moment_dyck(n, r, model, limits);
    case MomentRoute::Matrix: return q_moment_matrix(n, r, model, limits);
    }
    throw DomainError("unknown moment route");
}

} // namespace dyckwig
