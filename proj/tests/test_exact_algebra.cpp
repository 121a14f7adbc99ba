#include <doctest.h>

#include "test_helpers.hpp"

using namespace alres;
using namespace testutil;

TEST_CASE("rational arithmetic matches cross-multiplication equality")
{
    // (w^2 - 1)/(w - 1) == w + 1 without any gcd reduction
    RatFun lhs(bi({{2, 0, 1}, {0, 0, -1}}), bi({{1, 0, 1}, {0, 0, -1}}));
    RatFun rhs(bi({{1, 0, 1}, {0, 0, 1}}));
    CHECK(lhs == rhs);

    // additive identity
    RatFun wpw = W(1) + W(-1);
    CHECK(wpw + RatFun() == wpw);

    // multiplicative inverse of the regularization variable
    RatFun inv_lam(BiLaurent::constant(1), BiLaurent::lam());
    CHECK(inv_lam * L(1) == C(1));

    CHECK_THROWS_AS((void)(C(1) / RatFun()), Error);
    try {
        (void)(C(1) / RatFun());
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroDivide);
    }
}

TEST_CASE("matrix product examples")
{
    const Mat2 ws = Mat2::w_sigma(1);
    CHECK(ws * ws == Mat2::w_sigma(2));

    // degenerate site matrix times its adjugate vanishes
    const Potential p = one_site();
    CHECK((p.site_matrix(0) * p.site_adjugate(0)).is_zero());

    std::mt19937 rng(7);
    const Mat2 a = random_mat2(rng);
    CHECK(a * Mat2::identity() == a);
}

TEST_CASE("matrix inverse examples")
{
    const Potential p = one_site();

    // regularized degenerate site: inverse is (1/lambda) [[1/w, -1], [-1, (lambda+1) w]]
    const Mat2 inv = p.site_matrix_reg(0).inverse();
    const RatFun inv_lam(BiLaurent::constant(1), BiLaurent::lam());
    const Mat2 expected = Mat2(W(-1), C(-1), C(-1), RatFun(bi({{1, 0, 1}, {1, 1, 1}})))
                              .scaled(inv_lam);
    CHECK(inv == expected);

    CHECK(Mat2::w_sigma(1).inverse() == Mat2::w_sigma(-1));

    // r=1, s=0: determinant one, inverse is the adjugate
    const Potential q(0, {1}, {0});
    CHECK(q.site_matrix(0).inverse() == Mat2(W(-1), C(-1), RatFun(), W(1)));

    CHECK_THROWS_AS((void)p.site_matrix(0).inverse(), Error);
}

TEST_CASE("numeric evaluation")
{
    const RatFun f = W(1) + W(-1);
    CHECK(std::abs(f.eval({2.0, 0.0}, {0.0, 0.0}) - std::complex<double>(2.5, 0.0)) < 1e-15);

    const RatFun pole(BiLaurent::constant(1), BiLaurent::lam());
    CHECK_THROWS_AS((void)pole.eval({1.0, 0.0}, {1e-30, 0.0}), Error);
    try {
        (void)pole.eval({1.0, 0.0}, {1e-30, 0.0});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NearSingularEvaluation);
    }

    CHECK_THROWS_AS((void)f.eval({0.0, 0.0}, {0.0, 0.0}), Error);
}

TEST_CASE("lambda series at the regularization pole")
{
    // 1/(lambda (1 + lambda)) = lambda^-1 - 1 + lambda - ...
    RatFun x(BiLaurent::constant(1),
             BiLaurent::lam() * (BiLaurent::constant(1) + BiLaurent::lam()));
    const auto s = x.lambda_series(-1, 1);
    REQUIRE(s.size() == 3);
    CHECK(s.at(-1) == C(1));
    CHECK(s.at(0) == C(-1));
    CHECK(s.at(1) == C(1));

    // entry (1,1) of the regularized one-site inverse: 1/(w lambda)
    RatFun e(BiLaurent::constant(1), BiLaurent::monomial(1, 1, 1));
    CHECK(e.lambda_coefficient(-1) == W(-1));
    CHECK(e.lambda_coefficient(0).is_zero());

    // a polynomial expands to itself with empty negative part
    RatFun poly(bi({{0, 0, 2}, {1, 1, 3}}));
    const auto ps = poly.lambda_series(-3, 5);
    CHECK(ps.count(-1) == 0);
    CHECK(ps.at(0) == RatFun(bi({{0, 0, 2}})));
    CHECK(ps.at(1) == RatFun(bi({{1, 0, 3}})));
}

TEST_CASE("distributivity on random values")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const BiLaurent p = random_bilaurent(rng);
        const BiLaurent q = random_bilaurent(rng);
        const BiLaurent r = random_bilaurent(rng);
        CHECK((p + q) * r == p * r + q * r);
    }
}

TEST_CASE("random matrix inverse and adjugate identities")
{
    std::mt19937 rng(13);
    int inverted = 0;
    for (int i = 0; i < 60; ++i) {
        const Mat2 a = random_mat2(rng);
        const RatFun d = a.det();
        CHECK(a * a.adjugate() == Mat2::diag(d, d));
        if (d.is_zero())
            continue;
        ++inverted;
        const Mat2 inv = a.inverse();
        CHECK(a * inv == Mat2::identity());
        CHECK(inv * a == Mat2::identity());
    }
    CHECK(inverted > 20);
}

TEST_CASE("evaluation is a ring homomorphism within tolerance")
{
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> re(-2.0, 2.0);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        const RatFun p = random_ratfun(rng);
        const RatFun q = random_ratfun(rng);
        const std::complex<double> w0(re(rng) + 2.5, re(rng));
        const std::complex<double> l0(re(rng), re(rng));
        std::complex<double> vp, vq, vpq;
        try {
            vp = p.eval(w0, l0);
            vq = q.eval(w0, l0);
            vpq = (p * q).eval(w0, l0);
        } catch (const Error&) {
            continue; // near-singular draw
        }
        ++checked;
        const double scale = std::max(1.0, std::abs(vp * vq));
        CHECK(std::abs(vpq - vp * vq) / scale < 1e-12);
    }
    CHECK(checked > 50);
}

TEST_CASE("series resummation reproduces the value modulo the cutoff")
{
    std::mt19937 rng(19);
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        BiLaurent den;
        while (den.is_zero())
            den = random_bilaurent(rng, 3);
        BiLaurent num = random_bilaurent(rng);
        if (num.is_zero())
            continue;
        const RatFun x(num, den);
        const int low = x.num().min_lexp() - x.den().min_lexp() - 1;
        const int high = 3;
        const auto series = x.lambda_series(low, high);
        RatFun sum;
        for (const auto& [order, c] : series) {
            RatFun power = order >= 0 ? L(order)
                                      : RatFun(BiLaurent::constant(1), BiLaurent::lam(-order));
            sum = sum + c * power;
        }
        const RatFun remainder = x - sum;
        CHECK(remainder.lambda_series(low, high).empty());
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("exponent guard trips on runaway powers")
{
    const int saved = BiLaurent::exponent_guard;
    BiLaurent::exponent_guard = 16;
    CHECK_THROWS_AS((void)BiLaurent::w(1).pow(40), Error);
    BiLaurent::exponent_guard = saved;
}
