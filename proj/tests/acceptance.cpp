// Acceptance run: one PASS/FAIL line per criterion, each checked at its full bound
// and within its wall-clock budget. Exit status is nonzero if any criterion fails.

#include <dyckwig/dyckwig.hpp>
#include <dyckwig/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace dyckwig;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
        body();
    } catch (const Failure& f) {
        why = f.what;
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs >= budget_s) why = "exceeded the " + std::to_string(budget_s) + " s budget";
    if (!why.empty()) ++failures;
    std::printf("%s %2d  %-58s %8.3f s%s%s\n", why.empty() ? "PASS" : "FAIL", id, title, secs,
                why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
}

std::string at(std::initializer_list<std::pair<const char*, int>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) s += std::string(s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
}

} // namespace

int main() {
    criterion(1, "printed polynomials P0..P5, P_{3|2}, P_5^(3,2), Q_3", 1.0, [] {
        const char* listings[] = {
            "1",
            "u1",
            "u1^2+u1u2",
            "u1^3+2u1^2u2+u1u2^2+u1u2u3",
            "u1^4+3u1^3u2+3u1^2u2^2+2u1^2u2u3+u1u2^3+2u1u2^2u3+u1u2u3^2+u1u2u3u4",
            "2u1^2u2u3u4+2u1u2^2u3u4+2u1u2u3^2u4+u1u2u3u4^2+4u1^4u2+6u1^3u2^2+4u1^2u2^3+u1u2^4"
            "+u1^5+3u1^3u2u3+6u1^2u2^2u3+2u1^2u2u3^2+3u1u2^3u3+3u1u2^2u3^2+u1u2u3^3+u1u2u3u4u5",
        };
        for (int r = 0; r <= 5; ++r) expect(dyck_poly_rec(r, 0, 0) == parse_poly(listings[r]), "P_" + std::to_string(r));
        expect(dyck_poly({3, 2, 0, 0}) == parse_poly("u1u2^2+2u1^2u2+u1^3"), "P_{3|2}");
        expect(dyck_poly(PathConstraint::unrestricted(5, 3, 2)) ==
                   parse_poly("u1u2u3") * parse_poly("u4u5+u4^2+2u3u4+u2u4+u3^2+2u2u3+u2^2+u1u2"),
               "P_5^(3,2)");
        expect(u_segment_poly(3) == parse_poly("t1^3+3t1t2+t3", 't'), "Q_3");
    });

    criterion(2, "path counts: Catalan(r) for r <= 12, 4 / 1 / 10", 5.0, [] {
        for (int r = 0; r <= 12; ++r)
            expect(Integer(static_cast<unsigned long>(count_paths(PathConstraint::unrestricted(r)))) == catalan(r),
                   at({{"r", r}}));
        expect(count_paths({3, 2, 0, 0}) == 4, "|D_{3|2}|");
        expect(count_paths({3, 1, 0, 0}) == 1, "|D_{3|1}|");
        expect(count_paths(PathConstraint::unrestricted(5, 3, 2)) == 10, "|D_5^(3,2)|");
    });

    criterion(3, "lemma: all 0 <= a,b <= r+1, r <= 8", 30.0, [] {
        for (int r = 0; r <= 8; ++r)
            for (int a = 0; a <= r + 1; ++a)
                for (int b = 0; b <= r + 1; ++b) {
                    auto [lhs, rhs] = lemma_lhs_rhs(r, a, b);
                    expect(lhs == rhs, at({{"r", r}, {"a", a}, {"b", b}}));
                }
    });

    criterion(4, "theorem: (Y')^2r entries vs enumeration, N <= 6, r <= 5", 60.0, [] {
        for (int N = 1; N <= 6; ++N)
            for (int r = 0; r <= 5; ++r) {
                std::string why = detail::check_theorem1(N, r);
                expect(why.empty(), at({{"N", N}, {"r", r}}) + ": " + why);
            }
    });

    criterion(5, "moment routes agree: all n, N <= 8, r <= 6", 60.0, [] {
        for (int N = 1; N <= 8; ++N) {
            OscillatorModel m(N);
            for (int n = 0; n <= N; ++n)
                for (int r = 0; r <= 6; ++r) {
                    Rational k = q_moment_krawtchouk(n, r, m);
                    expect(k == q_moment_dyck(n, r, m) && k == q_moment_matrix(n, r, m),
                           at({{"N", N}, {"n", n}, {"r", r}}));
                }
        }
    });

    criterion(6, "pre-Wigner routes, ground closed form, checkerboard", 120.0, [] {
        for (int N = 1; N <= 4; ++N) {
            OscillatorModel m(N);
            for (int n = 0; n <= N; ++n) {
                auto z = pre_wigner(n, m, PreWignerRoute::Oracle).entries;
                expect(pre_wigner(n, m, PreWignerRoute::Krawtchouk).entries == z, "krawtchouk " + at({{"N", N}, {"n", n}}));
                expect(pre_wigner(n, m, PreWignerRoute::Dyck).entries == z, "dyck " + at({{"N", N}, {"n", n}}));
                for (int a = 0; a <= N; ++a)
                    for (int b = 0; b <= N; ++b)
                        if (a % 2 || b % 2) expect(z(a, b) == 0, "checkerboard " + at({{"N", N}, {"a", a}, {"b", b}}));
            }
        }
        for (int N = 1; N <= 8; ++N) {
            OscillatorModel m(N);
            expect(pre_wigner_ground(m).entries == pre_wigner(0, m, PreWignerRoute::Krawtchouk).entries,
                   "ground " + at({{"N", N}}));
        }
    });

    criterion(7, "V^T W V = Z, sum 1 (2j <= 8); position marginal (2j <= 6)", 60.0, [] {
        for (int N = 1; N <= 8; ++N) {
            OscillatorModel m(N);
            auto vs = vandermonde_inverse(m.nodes());
            for (int n = 0; n <= N; ++n) {
                auto z = pre_wigner(n, m, PreWignerRoute::Krawtchouk);
                auto w = wigner_from_pre(z, vs);
                expect(discrete_moments(w, vs) == z.entries, "moments " + at({{"N", N}, {"n", n}}));
                expect(w.total() == 1, "sum " + at({{"N", N}, {"n", n}}));
                if (N <= 6) expect(check_marginals(w, m).position_exact(), "marginal " + at({{"N", N}, {"n", n}}));
            }
        }
    });

    criterion(8, "golden W(0) for 2j = 1 is all 1/4", 1.0, [] {
        const Rational quarter = make_rational(1, 4);
        auto expected = Matrix<Rational>::from_rows({{quarter, quarter}, {quarter, quarter}});
        OscillatorModel m(1);
        for (auto route : {PreWignerRoute::Krawtchouk, PreWignerRoute::Dyck, PreWignerRoute::Oracle})
            expect(wigner_matrix(0, m, route).entries == expected, "W(0)");
    });

    criterion(9, "continued-fraction series through order 8", 10.0, [] {
        for (int nv = 0; nv <= 9; ++nv) {
            auto g = gen_series(8, nv);
            for (int r = 0; r <= 8; ++r)
                expect(g[r] == restrict_height(dyck_poly_enum(PathConstraint::unrestricted(r)), nv),
                       at({{"n_vars", nv}, {"r", r}}));
        }
    });

    criterion(10, "reflection n <-> N-n for moments and W, 2j <= 6", 30.0, [] {
        for (int N = 1; N <= 6; ++N) {
            OscillatorModel m(N);
            auto vs = vandermonde_inverse(m.nodes());
            std::vector<Matrix<Rational>> w;
            for (int n = 0; n <= N; ++n) {
                for (int r = 0; r <= 6; ++r)
                    expect(q_moment_krawtchouk(n, r, m) == q_moment_krawtchouk(N - n, r, m),
                           "moment " + at({{"N", N}, {"n", n}, {"r", r}}));
                w.push_back(wigner_from_pre(pre_wigner(n, m, PreWignerRoute::Krawtchouk), vs).entries);
            }
            for (int n = 0; n <= N; ++n)
                for (int k = 0; k <= N; ++k)
                    for (int l = 0; l <= N; ++l) {
                        const Rational& x = w[n](k, l);
                        expect(x == w[N - n](N - k, N - l), "state reflection " + at({{"N", N}, {"n", n}}));
                        expect(x == w[n](N - k, l) && x == w[n](k, N - l), "node reflection " + at({{"N", N}, {"n", n}}));
                    }
        }
    });

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures ? 1 : 0;
}
