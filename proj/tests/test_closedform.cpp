#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <steenrod/closedform.hpp>

#include <cstdint>

using namespace steenrod;

namespace {

struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
    Rational rat() { return Rational(range(-5, 5), range(1, 4)); }
};

MultiPoly<Rational> random_poly(Rng& rng, int nv, int max_deg, int terms) {
    MultiPoly<Rational> p(nv);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(nv);
        for (int i = 0; i < nv; ++i) e[i] = static_cast<int>(rng.range(0, max_deg));
        p.add_term(e, rng.rat());
    }
    return p;
}

OperatorFamily<Rational> single_member(int nv, int k, const std::vector<Rational>& a,
                                       const std::vector<Rational>& b) {
    return family_single("single", k, deformed_steenrod(nv, k, a, b));
}

}  // namespace

TEST_CASE("shifted factorial products") {
    CHECK(shifted_factorial(Rational(1), Rational(1), 3) == Rational(6));
    CHECK(shifted_factorial(Rational(1), Rational(1), 0) == Rational(1));
    for (int m = 0; m <= 5; ++m) CHECK(shifted_factorial(Rational(0), Rational(1), m) == Rational(1));
    CHECK(shifted_factorial(Rational(2), Rational(3), 2) == Rational(15));
    QScalar q = q_var();
    CHECK(shifted_factorial(q, QScalar(Rational(1)), 2) == q + Rational(1));
}

TEST_CASE("singular parameter witness") {
    CHECK(!singular_parameter_degree(Rational(1), Rational(1)).has_value());
    CHECK(!singular_parameter_degree(Rational(0), Rational(1)).has_value());
    CHECK(!singular_parameter_degree(Rational(1), Rational(1, 2)).has_value());
    CHECK(!singular_parameter_degree(Rational(1), Rational(3)).has_value());  // d = -3
    CHECK(singular_parameter_degree(Rational(0), Rational(0)) == Integer(0));
    CHECK(singular_parameter_degree(Rational(1), Rational(0)) == Integer(0));
    CHECK(singular_parameter_degree(Rational(2), Rational(-6)) == Integer(3));
}

TEST_CASE("one-step lifts in two variables") {
    using P = MultiPoly<Rational>;
    PsiLift<Rational> unit(2, 1, {Rational(1), Rational(1)}, {Rational(1), Rational(1)});
    P x1 = P::variable(2, 0), x2 = P::variable(2, 1);
    CHECK(unit.lift(x1) == x1 - x2);
    CHECK(unit.lift(P::constant(2, Rational(1))) == P::constant(2, Rational(1)));

    // first-order operator with weights b1, b2 only
    PsiLift<Rational> wt(2, 1, {Rational(0), Rational(0)}, {Rational(3), Rational(5)});
    CHECK(wt.lift(x1) == x1 - x2.scale(Rational(3, 5)));
}

TEST_CASE("lifted polynomials land in the kernel") {
    Rng rng{7u};
    std::vector<Rational> a = {Rational(1), Rational(2), Rational(1, 3)};
    std::vector<Rational> b = {Rational(1), Rational(1, 2), Rational(4)};
    for (int k = 1; k <= 3; ++k) {
        PsiLift<Rational> psi(3, k, a, b);
        auto D = psi.op();
        for (int it = 0; it < 8; ++it) {
            auto g = random_poly(rng, 3, 4, 3);
            MultiPoly<Rational> seed(3);
            for (const auto& [e, c] : g.terms()) {
                ExpVec cut = e;
                cut[2] %= k;
                seed.add_term(cut, c);
            }
            auto f = psi.lift(seed);
            CHECK(D.apply(f).is_zero());
            CHECK(seed_part(f, 2, k) == seed);
        }
    }
}

TEST_CASE("lift preserves total degree and counts match the series") {
    std::vector<Rational> a = {Rational(1), Rational(1), Rational(1)};
    std::vector<Rational> b = {Rational(2), Rational(2), Rational(2)};
    for (int k = 1; k <= 2; ++k) {
        PsiLift<Rational> psi(3, k, a, b);
        UPoly series = kernel_hilbert_single(k, 3, 6);
        for (int d = 0; d <= 6; ++d) {
            auto basis = psi.lifted_basis(d);
            CHECK(Rational(static_cast<long>(basis.size())) == series.coeff(d));
            for (const auto& f : basis) CHECK(f.homogeneous_degree() == d);
        }
    }
}

TEST_CASE("lifted basis matches the direct nullspace") {
    std::vector<Rational> a2 = {Rational(1), Rational(1)};
    std::vector<Rational> b2 = {Rational(1), Rational(1)};
    for (int k = 1; k <= 2; ++k) {
        PsiLift<Rational> psi(2, k, a2, b2);
        auto fam = single_member(2, k, a2, b2);
        auto ker = solve_kernel(fam, 6);
        for (int d = 0; d <= 6; ++d) {
            auto basis = psi.lifted_basis(d);
            REQUIRE(basis.size() == ker.graded[d].size());
            // same span: each lifted element expands in the solver basis
            for (const auto& f : basis) CHECK(in_kernel_span(ker, d, f).has_value());
        }
    }
}

TEST_CASE("expansion coefficients are read off the seed part") {
    // any kernel element f satisfies f = lift(f mod x^k)
    std::vector<Rational> a = {Rational(2), Rational(1)};
    std::vector<Rational> b = {Rational(3), Rational(1)};
    for (int k = 1; k <= 2; ++k) {
        PsiLift<Rational> psi(2, k, a, b);
        auto ker = solve_kernel(single_member(2, k, a, b), 5);
        for (int d = 0; d <= 5; ++d)
            for (const auto& f : ker.graded[d]) CHECK(psi.lift(seed_part(f, 1, k)) == f);
    }
}

TEST_CASE("recurrence shape of a lowering operator on power series slices") {
    // D_k (sum_d f_d x^d / d!) = sum_d [D_k(f_d) + (a d + b) f_{d+k}] x^d / d!
    Rng rng{99u};
    std::vector<Rational> a = {Rational(1, 2), Rational(2)};
    std::vector<Rational> b = {Rational(1), Rational(3)};
    for (int k = 1; k <= 3; ++k) {
        auto D = deformed_steenrod(2, k, a, b);
        for (int it = 0; it < 6; ++it) {
            auto f = random_poly(rng, 2, 5, 5);
            // slice along the last variable: f_d has the x2-power stripped
            auto slice = [&](int d) {
                MultiPoly<Rational> s(2);
                for (const auto& [e, c] : f.terms())
                    if (e[1] == d) s.add_term({e[0], 0}, c * Rational(int_factorial(d)));
                return s;
            };
            MultiPoly<Rational> want(2);
            for (int d = 0; d <= 6; ++d) {
                auto part = D.apply(slice(d)) + slice(d + k).scale(a[1] * Rational(d) + b[1]);
                for (const auto& [e, c] : part.terms())
                    want.add_term({e[0], d}, c * Rational(Integer(1), int_factorial(d)));
            }
            CHECK(D.apply(f) == want);
        }
    }
}

TEST_CASE("vanishing denominators are reported with the offending degree") {
    using P = MultiPoly<Rational>;
    P x1 = P::variable(2, 0);
    // pure x d^2 weights: b = 0 makes d = 0 singular as soon as a lift is needed
    PsiLift<Rational> tilde(2, 1, {Rational(1), Rational(1)}, {Rational(0), Rational(0)});
    CHECK(tilde.lift(x1) == x1);  // nothing to lift, no denominator touched
    CHECK_THROWS_WITH_AS(tilde.lift(x1 * x1), "PsiLift: a*d + b vanishes at d = 0",
                         std::domain_error);
    // a = 1, b = -2 first breaks at d = 2
    PsiLift<Rational> shifted(2, 1, {Rational(1), Rational(1)}, {Rational(-2), Rational(-2)});
    CHECK_THROWS_WITH_AS(shifted.lift(x1 * x1 * x1 * x1 * x1 * x1),
                         "PsiLift: a*d + b vanishes at d = 2", std::domain_error);
    CHECK_THROWS_AS(tilde.lift(P::monomial(2, {0, 1}, Rational(1))), std::invalid_argument);
}

TEST_CASE("lift works over the q-rationals") {
    using P = MultiPoly<QScalar>;
    QScalar q = q_var(), one(Rational(1));
    // one-parameter weights a = q, b = 1 in both variables
    PsiLift<QScalar> psi(2, 1, {q, q}, {one, one});
    P x1 = P::variable(2, 0);
    auto f = psi.lift(x1 * x1);
    CHECK(psi.op().apply(f).is_zero());
    // seed x1^2: D(x1^2) = 2(q+1) x1, D^2(x1^2) = 2(q+1); denominators 1, q+1
    P x2 = P::variable(2, 1);
    P want = x1 * x1 + (x1 * x2) * (-(q + one) * Rational(2)) + x2 * x2;
    CHECK(f == want);
}

TEST_CASE("series for the kernel of one operator") {
    auto s = kernel_hilbert_single(1, 2, 5);
    CHECK(s == UPoly({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}));
    auto s2 = kernel_hilbert_single(2, 2, 4);
    CHECK(s2 == UPoly({Rational(1), Rational(2), Rational(2), Rational(2), Rational(2)}));
    auto s3 = kernel_hilbert_single(1, 3, 4);
    CHECK(s3 == UPoly({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)}));
}

TEST_CASE("graded dimensions of the kernel of the first pure x d^2 operator") {
    CHECK(tilde_single_kernel_bound(1, 3) == UPoly({Rational(1), Rational(1)}));
    // n = 2: 1 + 2t + t^2 (1 + t + t^2 + ...)
    CHECK(tilde_single_kernel_bound(2, 5) ==
          UPoly({Rational(1), Rational(2), Rational(1), Rational(1), Rational(1), Rational(1)}));
    for (int n = 2; n <= 3; ++n) {
        auto tilde = family_tilde<Rational>(n);
        auto ker = solve_kernel(family_single("single", 1, tilde.member(1)), 5);
        CHECK(ker.hilbert() == truncate_series(tilde_single_kernel_bound(n, 5), 5));
    }
}
