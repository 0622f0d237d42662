#include <catch2/catch_amalgamated.hpp>

#include <dyckwig/oscillator.hpp>

#include <cmath>

using namespace dyckwig;

namespace {

// Symmetric Jacobi matrix in doubles: off-diagonal sqrt(u_k)/2.
std::vector<std::vector<double>> float_q(int N) {
    std::vector<std::vector<double>> q(N + 1, std::vector<double>(N + 1, 0.0));
    for (int k = 1; k <= N; ++k) q[k - 1][k] = q[k][k - 1] = std::sqrt(static_cast<double>(k * (N + 1 - k))) / 2.0;
    return q;
}

double float_moment(int N, int n, int power) {
    auto q = float_q(N);
    std::vector<double> v(N + 1, 0.0);
    v[n] = 1.0;
    for (int s = 0; s < power; ++s) {
        std::vector<double> w(N + 1, 0.0);
        for (int i = 0; i <= N; ++i)
            for (int k = 0; k <= N; ++k) w[i] += q[i][k] * v[k];
        v = std::move(w);
    }
    return v[n];
}

} // namespace

TEST_CASE("OscillatorModel", "[oscillator]") {
    OscillatorModel m(4);
    CHECK(m.dim() == 5);
    CHECK(m.j() == 2);
    CHECK(m.nodes() == std::vector<Rational>{-2, -1, 0, 1, 2});
    CHECK(m.u(1) == 4);
    CHECK(m.u(2) == 6);
    CHECK(m.u(4) == 4);
    CHECK(OscillatorModel(1).node(0) == make_rational(-1, 2));
    CHECK_THROWS_AS(OscillatorModel(0), DomainError);
    CHECK_THROWS_AS(m.check_index(5), DomainError);
    CHECK_THROWS_AS(m.check_index(-1), DomainError);
}

TEST_CASE("krawtchouk", "[oscillator]") {
    for (int N = 1; N <= 6; ++N)
        for (int x = 0; x <= N; ++x) {
            CHECK(krawtchouk(0, x, Rational(2), N) == 1);
            CHECK(krawtchouk(x, 0, Rational(2), N) == 1);
        }
    CHECK(krawtchouk(1, 1, Rational(2), 2) == 0);
    CHECK(krawtchouk(1, 0, Rational(2), 2) == 1);
    CHECK(krawtchouk(1, 2, Rational(2), 2) == -1);
    CHECK(krawtchouk(2, 1, Rational(2), 2) == -1);
    CHECK_THROWS_AS(krawtchouk(3, 0, Rational(2), 2), DomainError);
    CHECK_THROWS_AS(krawtchouk(0, -1, Rational(2), 2), DomainError);
}

TEST_CASE("Krawtchouk duality K_n(x) = K_x(n)", "[oscillator][property]") {
    for (int N = 1; N <= 8; ++N)
        for (int n = 0; n <= N; ++n)
            for (int x = 0; x <= N; ++x) CHECK(krawtchouk(n, x, Rational(2), N) == krawtchouk(x, n, Rational(2), N));
}

TEST_CASE("phi_squared", "[oscillator]") {
    OscillatorModel half(1);
    CHECK(phi_squared(0, 0, half) == SignedSquare{1, make_rational(1, 2)});
    CHECK(phi_squared(0, 1, half) == SignedSquare{1, make_rational(1, 2)});
    CHECK(phi_squared(1, 0, half) == SignedSquare{-1, make_rational(1, 2)});
    CHECK(phi_squared(1, 1, half) == SignedSquare{1, make_rational(1, 2)});
    OscillatorModel one(2);
    CHECK(phi_squared(1, 1, one).sign == 0);
    CHECK(phi_squared(1, 1, one).square == 0);
    CHECK(phi_squared(0, 1, one).square == make_rational(1, 2));
    CHECK(phi_squared(0, 0, one).square == make_rational(1, 4));
}

TEST_CASE("Eigenfunctions are orthonormal and complete", "[oscillator][property]") {
    for (int N = 1; N <= 8; ++N) {
        OscillatorModel m(N);
        for (int n = 0; n <= N; ++n) {
            Rational by_k = 0, by_n = 0;
            for (int k = 0; k <= N; ++k) {
                by_k += phi_squared(n, k, m).square;
                by_n += phi_squared(k, n, m).square;
            }
            CHECK(by_k == 1);
            CHECK(by_n == 1);
        }
        // Orthogonality of distinct rows, with radicals sqrt(C(N,n)C(N,k)) cancelling within a row pair.
        for (int n = 0; n <= N; ++n)
            for (int n2 = n + 1; n2 <= N; ++n2) {
                Rational s = 0;
                for (int k = 0; k <= N; ++k)
                    s += Rational(binomial(N, k)) * krawtchouk(n, k, Rational(2), N) * krawtchouk(n2, k, Rational(2), N);
                CHECK(s == 0);
            }
    }
}

TEST_CASE("Gauge operators", "[oscillator]") {
    OscillatorModel m(2);
    auto q = q_gauge(m);
    CHECK(q == Matrix<Rational>::from_rows({{0, make_rational(1, 2), 0}, {1, 0, make_rational(1, 2)}, {0, 1, 0}}));
    auto p = p_gauge(m);
    CHECK(p(0, 1) == GaussianRational(0, make_rational(-1, 2)));
    CHECK(p(1, 0) == GaussianRational(0, 1));
    // [q, p] is diagonal and purely imaginary.
    auto qc = q.map([](const Rational& x) { return GaussianRational(x); });
    auto comm = qc * p - p * qc;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t k = 0; k < m.dim(); ++k) {
            if (i != k) CHECK(comm(i, k) == GaussianRational(0));
        }
    for (int k = 0; k <= 2; ++k) CHECK(comm(k, k) == GaussianRational(0, m.node(k) * -1));
}

TEST_CASE("Symbolic powers of Y", "[oscillator]") {
    for (int N = 1; N <= 5; ++N) {
        auto y = symbolic_y(N);
        auto y2 = symbolic_power(y, 2);
        for (int a = 0; a <= N; ++a) {
            MultiPoly expect;
            if (a >= 1) expect += MultiPoly::var(a);
            if (a + 1 <= N) expect += MultiPoly::var(a + 1);
            CHECK(y2(a, a) == expect);
        }
        CHECK(y2(N, N) == MultiPoly::var(N));
        auto y3 = symbolic_power(y, 3);
        for (int a = 0; a <= N; ++a)
            for (int b = 0; b <= N; ++b)
                if ((a + b) % 2 == 0) CHECK(y3(a, b).is_zero());
    }
    CHECK_THROWS_AS(symbolic_y(0), DomainError);
    CHECK_THROWS_AS(symbolic_power(symbolic_y(2), -1), DomainError);
}

TEST_CASE("Diagonal of Y^{2r} is a height-restricted Dyck polynomial", "[oscillator][property]") {
    for (int N = 1; N <= 5; ++N) {
        auto y = symbolic_y(N);
        for (int r = 0; r <= 4; ++r) {
            auto even = symbolic_power(y, 2 * r);
            auto odd = symbolic_power(y, 2 * r + 1);
            MultiPoly prefix = 1;
            for (int n = 0; n <= N; ++n) {
                if (n > 0) prefix = prefix * MultiPoly::var(n);
                CHECK(prefix * even(n, n) == restrict_height(dyck_poly_rec(r + n, n, n), N));
                CHECK(odd(n, n).is_zero());
            }
        }
    }
}

TEST_CASE("Moment examples", "[oscillator]") {
    OscillatorModel m(2);
    CHECK(q_moment_krawtchouk(0, 1, m) == make_rational(1, 2));
    CHECK(q_moment_krawtchouk(0, 2, m) == make_rational(1, 2));
    CHECK(q_moment_krawtchouk(1, 1, m) == 1);
    CHECK(q_moment_dyck(1, 2, m) == 1);
    for (int n = 0; n <= 2; ++n) CHECK(q_moment_matrix(n, 0, m) == 1);
    OscillatorModel half(1);
    CHECK(q_moment(MomentRoute::Dyck, 0, 3, half) == make_rational(1, 64));
    CHECK_THROWS_AS(q_moment_dyck(0, -1, m), DomainError);
    CHECK_THROWS_AS(q_moment_krawtchouk(3, 1, m), DomainError);
}

TEST_CASE("Three moment routes agree", "[oscillator][oracle]") {
    for (int N = 1; N <= 8; ++N) {
        OscillatorModel m(N);
        for (int n = 0; n <= N; ++n)
            for (int r = 0; r <= 6; ++r) {
                INFO("N=" << N << " n=" << n << " r=" << r);
                Rational k = q_moment(MomentRoute::Krawtchouk, n, r, m);
                CHECK(q_moment(MomentRoute::Dyck, n, r, m) == k);
                CHECK(q_moment(MomentRoute::Matrix, n, r, m) == k);
            }
    }
}

TEST_CASE("Moments are reflection symmetric and odd moments vanish", "[oscillator][property]") {
    for (int N = 1; N <= 7; ++N) {
        OscillatorModel m(N);
        auto q = q_gauge(m);
        for (int n = 0; n <= N; ++n) {
            for (int r = 0; r <= 5; ++r) CHECK(q_moment_krawtchouk(n, r, m) == q_moment_krawtchouk(N - n, r, m));
            for (unsigned p = 1; p <= 9; p += 2) CHECK(mat_pow(q, p)(n, n) == 0);
        }
    }
}

TEST_CASE("Exact moments match a floating point Jacobi matrix", "[oscillator][oracle]") {
    for (int N = 1; N <= 10; ++N) {
        OscillatorModel m(N);
        for (int n = 0; n <= N; ++n)
            for (int r = 0; r <= 5; ++r) {
                double exact = q_moment_krawtchouk(n, r, m).get_d();
                double approx = float_moment(N, n, 2 * r);
                CHECK(std::abs(exact - approx) <= 1e-9 * std::max(1.0, std::abs(exact)));
            }
    }
}

TEST_CASE("Cost guard", "[oscillator]") {
    OscillatorModel big(17);
    CHECK_THROWS_AS(q_moment_matrix(0, 1, big), CostGuard);
    CHECK_NOTHROW(q_moment_matrix(0, 1, big, CostLimits::unlimited()));
    OscillatorModel m(2);
    CHECK_THROWS_AS(q_moment_dyck(0, 13, m), CostGuard);
    CostLimits tight;
    tight.max_r = 2;
    CHECK_THROWS_AS(q_moment_krawtchouk(0, 3, m, tight), CostGuard);
}
