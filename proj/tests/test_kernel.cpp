#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <steenrod/kernel.hpp>

using namespace steenrod;

namespace {

MultiPoly<Rational> vandermonde(int nv) {
    MultiPoly<Rational> p = MultiPoly<Rational>::constant(nv, Rational(1));
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            p = p * (MultiPoly<Rational>::variable(nv, i) - MultiPoly<Rational>::variable(nv, j));
    return p;
}

template <class S>
bool all_killed(const OperatorFamily<S>& fam, const GradedKernel<S>& ker, int check_cap) {
    for (int d = 0; d < static_cast<int>(ker.graded.size()); ++d)
        for (const auto& f : ker.graded[d])
            for (int k = 1; k <= std::min(d, check_cap); ++k) {
                if (fam.member_cap >= 0 && k > fam.member_cap) break;
                if (!fam.member(k).apply(f).is_zero()) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("symmetric-derivative kernel in two and three variables") {
    auto ker2 = solve_kernel(family_classical(2), 3);
    CHECK(ker2.hilbert() == t_factorial(2));
    CHECK(ker2.total() == Integer(2));
    REQUIRE(ker2.dim(1) == 1);
    CHECK(ker2.graded[1][0] ==
          MultiPoly<Rational>::variable(2, 0) - MultiPoly<Rational>::variable(2, 1));

    auto ker3 = solve_kernel(family_classical(3), 5);
    CHECK(ker3.hilbert() == t_factorial(3));
    CHECK(ker3.total() == Integer(6));
    CHECK(all_killed(family_classical(3), ker3, 3));
}

TEST_CASE("alternant lies in the symmetric-derivative kernel") {
    for (int nv = 2; nv <= 3; ++nv) {
        auto fam = family_classical(nv);
        auto delta = vandermonde(nv);
        for (int k = 1; k <= nv; ++k) CHECK(fam.member(k).apply(delta).is_zero());
        int top = nv * (nv - 1) / 2;
        auto ker = solve_kernel(fam, top);
        auto c = in_kernel_span(ker, top, delta);
        REQUIRE(c.has_value());
        REQUIRE(ker.dim(top) == 1);
        // top graded piece is one-dimensional, spanned by the alternant
        CHECK(ker.graded[top][0].scale((*c)[0]) == delta);
    }
}

TEST_CASE("pure x d^{k+1} family: graded dimensions in two variables") {
    auto ker = solve_kernel(family_tilde<Rational>(2), 4);
    CHECK(ker.hilbert() == UPoly({Rational(1), Rational(2), Rational(1), Rational(1)}));
    CHECK(ker.total() == predicted_tilde_total(2));
    CHECK(ker.hilbert() == predicted_tilde_hilbert(2));
}

TEST_CASE("pure x d^{k+1} family: graded dimensions in three variables") {
    auto ker = solve_kernel(family_tilde<Rational>(3), 7);
    UPoly want({Rational(1), Rational(3), Rational(3), Rational(4), Rational(2), Rational(2),
                Rational(1)});
    CHECK(ker.hilbert() == want);
    CHECK(ker.total() == predicted_tilde_total(3));
    CHECK(ker.hilbert() == predicted_tilde_hilbert(3));
}

TEST_CASE("two-generator solve agrees with using every member") {
    auto fam = family_tilde<Rational>(3);
    auto two = solve_kernel(fam, 6, KernelMode::two_generator);
    auto all = solve_kernel(fam, 6, KernelMode::all_members);
    for (int d = 0; d <= 6; ++d) CHECK(two.graded[d] == all.graded[d]);
    CHECK_THROWS_AS(solve_kernel(family_classical(3), 3, KernelMode::two_generator),
                    std::invalid_argument);
}

TEST_CASE("shifted family has factorial graded dimensions") {
    auto ker2 = solve_kernel(family_hat<Rational>(2), 2);
    CHECK(ker2.hilbert() == t_factorial(2));
    auto ker3 = solve_kernel(family_hat<Rational>(3), 4);
    CHECK(ker3.hilbert() == t_factorial(3));
    CHECK(all_killed(family_hat<Rational>(3), ker3, 6));
}

TEST_CASE("one-parameter family at generic q has factorial graded dimensions") {
    auto ker = solve_kernel(family_q_steenrod_symbolic(2), 3);
    CHECK(ker.hilbert() == t_factorial(2));
    auto ker3 = solve_kernel(family_q_steenrod_symbolic(3), 4);
    CHECK(ker3.hilbert() == t_factorial(3));
}

TEST_CASE("q = -1 is a genuine jump point in two variables") {
    auto sym = solve_kernel(family_q_steenrod_symbolic(2), 3);
    auto special = solve_kernel(family_q_steenrod(2, Rational(-1)), 3);
    CHECK(special.dim(2) == 1);  // strictly above the generic count of 0
    REQUIRE(special.graded[2].size() == 1);
    CHECK(special.graded[2][0] == MultiPoly<Rational>::monomial(2, {2, 0}, Rational(1)) -
                                      MultiPoly<Rational>::monomial(2, {0, 2}, Rational(1)));
    for (int d = 0; d <= 3; ++d) CHECK(special.dim(d) >= sym.dim(d));
    // a positive sample stays generic
    auto pos = solve_kernel(family_q_steenrod(2, Rational(5, 3)), 3);
    CHECK(pos.hilbert() == t_factorial(2));
}

TEST_CASE("kernel elements pair to zero against every hit polynomial") {
    auto fam = family_tilde<Rational>(2);
    auto ker = solve_kernel(fam, 5);
    for (int d = 1; d <= 5; ++d) {
        auto mons = monomials_of_degree(2, d);
        for (const auto& row : hit_rows(fam, d, true)) {
            auto h = vec_to_poly(row, mons, 2);
            for (const auto& f : ker.graded[d]) CHECK(apolar_pairing(f, h).is_zero());
        }
    }
}

TEST_CASE("quotient by the hit span has the kernel dimensions") {
    for (int nv = 2; nv <= 3; ++nv) {
        auto tilde = family_tilde<Rational>(nv);
        auto dims = hit_quotient_dims(tilde, 6);
        auto ker = solve_kernel(tilde, 6);
        for (int d = 0; d <= 6; ++d) CHECK(dims[d] == ker.dim(d));

        auto cl = family_classical(nv);
        auto cdims = hit_quotient_dims(cl, 6);
        auto cker = solve_kernel(cl, 6);
        for (int d = 0; d <= 6; ++d) CHECK(cdims[d] == cker.dim(d));
    }
}

TEST_CASE("span membership accepts combinations and rejects outsiders") {
    auto ker = solve_kernel(family_classical(3), 5);
    REQUIRE(ker.dim(2) == 2);
    auto f = ker.graded[2][0] * Rational(3) - ker.graded[2][1] * Rational(1, 2);
    auto c = in_kernel_span(ker, 2, f);
    REQUIRE(c.has_value());
    CHECK((*c) == std::vector<Rational>{Rational(3), Rational(-1, 2)});
    auto bad = MultiPoly<Rational>::monomial(3, {2, 0, 0}, Rational(1));
    CHECK(!in_kernel_span(ker, 2, bad).has_value());
}
