#include <doctest.h>

#include "test_helpers.hpp"

using namespace alres;
using namespace testutil;

TEST_CASE("region classification")
{
    CHECK(region_classify(2.0, 3.0) == RegionTag::BothBelow);
    CHECK(region_classify(2.0, 1.0) == RegionTag::WAbove);
    CHECK(region_classify(0.5, 1.0) == RegionTag::WinvAbove);
    CHECK(region_classify(2.0, 0.1) == RegionTag::BothAbove);
    CHECK(region_classify(2.0, 0.0) == RegionTag::BothAbove); // h = 0

    CHECK_THROWS_AS((void)region_classify(2.0, 2.0), Error);
    CHECK_THROWS_AS((void)region_classify(2.0, 0.5), Error); // |w| h = 1
    try {
        (void)region_classify(2.0, 2.0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundarySurface);
    }
}

TEST_CASE("annihilator column and row")
{
    const Potential p = one_site();
    CHECK(annihilator_column(p, 0, true) == Mat2::w_sigma(0));  // m = k
    CHECK(annihilator_column(p, -4, true) == Mat2::w_sigma(-4));
    CHECK(annihilator_column(p, 1, true) == p.site_matrix_reg(0) * Mat2::w_sigma(0));

    CHECK(annihilator_row(p, 0, true) == Mat2::w_sigma(0)); // n = K
    CHECK(annihilator_row(p, -1, true) == Mat2::w_sigma(0) * p.site_matrix_reg(0));
    CHECK(annihilator_row(p, 5, true) == Mat2::w_sigma(-5));

    const Potential z = Potential::zero();
    for (int m = -3; m <= 3; ++m) {
        CHECK(annihilator_column(z, m, true) == Mat2::w_sigma(m));
        CHECK(annihilator_row(z, m, true) == Mat2::w_sigma(-m));
    }

    // recursions across the support borders
    std::mt19937 rng(43);
    const Potential t = random_potential(rng, 5, -2);
    for (int m = -6; m <= 6; ++m) {
        CHECK(annihilator_column(t, m + 1, true)
              == t.site_matrix_reg(m) * annihilator_column(t, m, true));
        CHECK(annihilator_row(t, m - 1, true)
              == annihilator_row(t, m, true) * t.site_matrix_reg(m));
    }
}

TEST_CASE("transition matrix")
{
    // zero potential: telescopes to the free site matrix
    CHECK(transition_matrix(Potential::zero(), false) == Mat2::w_sigma(1));
    CHECK(transition_matrix(Potential(2, {0, 0, 0}, {0, 0, 0}), true) == Mat2::w_sigma(1));

    const Potential p = one_site();
    CHECK(transition_matrix(p, true)
          == Mat2(RatFun(bi({{1, 0, 1}, {1, 1, 1}})), C(1), C(1), W(-1)));
    CHECK(transition_matrix(p, true).det() == L(1));

    std::mt19937 rng(47);
    for (int i = 0; i < 10; ++i) {
        const Potential t = random_potential(rng, 6);
        CHECK(transition_matrix(t, true).det() == L(t.Q()));
        // numeric shadow of the determinant identity
        const auto d = transition_matrix(t, true).det().eval({1.3, 0.4}, {0.7, 0.0});
        const auto expect = std::pow(std::complex<double>(0.7, 0.0), t.Q());
        CHECK(std::abs(d - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("coupling matrix per region")
{
    const Potential z = Potential::zero();
    CHECK(gamma_matrix(z, RegionTag::BothBelow, true).is_zero());
    CHECK(gamma_matrix(z, RegionTag::WAbove, true) == Mat2::diag(W(-1), RatFun()));
    CHECK(gamma_matrix(z, RegionTag::WinvAbove, true) == Mat2::diag(RatFun(), W(1)));

    const Potential p = one_site();
    const RatFun inv_lam(BiLaurent::constant(1), BiLaurent::lam());
    CHECK(gamma_matrix(p, RegionTag::BothAbove, true)
          == Mat2(W(-1), C(-1), C(-1), RatFun(bi({{1, 0, 1}, {1, 1, 1}}))).scaled(inv_lam));

    CHECK_THROWS_AS((void)gamma_matrix(p, RegionTag::BothAbove, false), Error);
}

TEST_CASE("free resolvent closed form")
{
    // lower-triangular region at m = n + 1: the identity matrix
    CHECK(free_resolvent_entry(RegionTag::BothBelow, 1, 0) == Mat2::identity());
    CHECK(KernelWindow::h_exponent(1, 0) == -1);

    // upper-triangular region on the diagonal: minus the inverse free matrix
    CHECK(free_resolvent_entry(RegionTag::BothAbove, 0, 0) == -Mat2::w_sigma(-1));

    // mixed region on the diagonal: only the first component survives
    CHECK(free_resolvent_entry(RegionTag::WAbove, 0, 0) == Mat2::diag(-W(-1), RatFun()));
    CHECK(free_resolvent_entry(RegionTag::WinvAbove, 0, 0) == Mat2::diag(RatFun(), -W(1)));

    // zero potential windows reproduce the closed form in all regions
    const Potential z = Potential::zero();
    const WindowBounds b = WindowBounds::square(-4, 4);
    for (RegionTag t : {RegionTag::BothBelow, RegionTag::WAbove, RegionTag::WinvAbove,
                        RegionTag::BothAbove}) {
        const KernelWindow w = resolvent_window(z, t, b, true);
        for (int m = -4; m <= 4; ++m)
            for (int n = -4; n <= 4; ++n)
                CHECK(w.at(m, n) == free_resolvent_entry(t, m, n));
    }
}

TEST_CASE("kernel windows: triangularity and one-site values")
{
    const Potential p = one_site();
    const WindowBounds b = WindowBounds::square(-3, 3);

    const KernelWindow below = resolvent_window(p, RegionTag::BothBelow, b, true);
    for (int m = -3; m <= 3; ++m)
        for (int n = m; n <= 3; ++n)
            CHECK(below.at(m, n).is_zero()); // strictly lower triangular

    const KernelWindow above = resolvent_window(p, RegionTag::BothAbove, b, true);
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n < m; ++n)
            CHECK(above.at(m, n).is_zero()); // upper triangular incl. diagonal

    const RatFun inv_lam(BiLaurent::constant(1), BiLaurent::lam());
    const Mat2 expected =
        Mat2(W(-1), C(-1), C(-1), RatFun(bi({{1, 0, 1}, {1, 1, 1}}))).scaled(inv_lam);
    CHECK(above.at(0, 0) == -expected);

    CHECK_THROWS_AS((void)resolvent_window(p, RegionTag::BothAbove, b, false), Error);
}

TEST_CASE("defining recursions hold entrywise")
{
    std::mt19937 rng(53);
    for (int i = 0; i < 4; ++i) {
        const Potential p = random_potential(rng, 4);
        const WindowBounds b = default_window(p);
        for (RegionTag t : {RegionTag::BothBelow, RegionTag::WAbove, RegionTag::WinvAbove,
                            RegionTag::BothAbove}) {
            const KernelWindow w = resolvent_window(p, t, b, true);
            for (int m = b.m_lo; m < b.m_hi; ++m)
                for (int n = b.n_lo; n <= b.n_hi; ++n) {
                    const Mat2 delta = m == n ? Mat2::identity() : Mat2::zero();
                    CHECK(w.at(m + 1, n) == delta + p.site_matrix_reg(m) * w.at(m, n));
                }
            for (int m = b.m_lo; m <= b.m_hi; ++m)
                for (int n = b.n_lo + 1; n <= b.n_hi; ++n) {
                    const Mat2 delta = m == n ? Mat2::identity() : Mat2::zero();
                    CHECK(w.at(m, n - 1) == delta + w.at(m, n) * p.site_matrix_reg(n));
                }
        }
    }
}

TEST_CASE("coupling form agrees with the triangular form in the top region")
{
    std::mt19937 rng(59);
    for (int i = 0; i < 5; ++i) {
        const Potential p = random_potential(rng, 4);
        CHECK(check_triangular_consistency(p, default_window(p)).pass);
    }
}

TEST_CASE("inverse transition expansion")
{
    const Potential p = one_site();
    const auto exp = transition_inverse_expansion(p);
    REQUIRE(exp.size() == 2);
    CHECK(exp[0] == Mat2(W(-1), C(-1), C(-1), W(1)));        // pole part: the adjugate
    CHECK(exp[1] == Mat2(RatFun(), RatFun(), RatFun(), W(1))); // regular part

    const Potential z = Potential::zero();
    const auto ez = transition_inverse_expansion(z);
    REQUIRE(ez.size() == 1);
    CHECK(ez[0] == Mat2::w_sigma(-1));

    // oracle: direct inversion followed by series extraction
    std::mt19937 rng(61);
    for (int i = 0; i < 8; ++i) {
        const Potential t = random_potential(rng, 1 + static_cast<int>(rng() % 4));
        CHECK(check_transition_expansion(t).pass);
    }
}

TEST_CASE("residue windows")
{
    const Potential p = one_site();
    const WindowBounds b = WindowBounds::square(-2, 2);
    const KernelWindow r1 = residue_window(p, 1, b);

    CHECK(r1.at(0, 0) == -Mat2(W(-1), C(-1), C(-1), W(1)));
    CHECK(r1.at(1, 0).is_zero());      // below the diagonal
    CHECK(r1.at(-2, -1).is_zero());    // interval misses the degenerate site
    CHECK(!r1.at(-1, 1).is_zero());

    CHECK_THROWS_AS((void)residue_window(p, 2, b), Error);
    CHECK_THROWS_AS((void)residue_window(p, 0, b), Error);

    // oracle: the lambda^-j coefficients of the triangular-form entries
    std::mt19937 rng(67);
    for (int i = 0; i < 5; ++i) {
        const Potential t = random_potential(rng, 4);
        CHECK(check_residues_vs_series(t, default_window(t)).pass);
    }
}

TEST_CASE("limit kernel of the original operator")
{
    const Potential p = one_site();
    const WindowBounds b = WindowBounds::square(-2, 2);
    const KernelWindow lim = limit_resolvent_window(p, RegionTag::BothAbove, b);
    CHECK(lim.at(0, 0) == -Mat2(RatFun(), RatFun(), RatFun(), W(1)));

    const Potential z = Potential::zero();
    for (RegionTag t : {RegionTag::BothBelow, RegionTag::WAbove, RegionTag::WinvAbove,
                        RegionTag::BothAbove}) {
        const KernelWindow w = limit_resolvent_window(z, t, b);
        for (int m = -2; m <= 2; ++m)
            for (int n = -2; n <= 2; ++n)
                CHECK(w.at(m, n) == free_resolvent_entry(t, m, n));
    }

    // in the lower region the limit is the window of unregularized products
    const KernelWindow direct = resolvent_window(p, RegionTag::BothBelow, b, false);
    const KernelWindow limited = limit_resolvent_window(p, RegionTag::BothBelow, b);
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
            CHECK(direct.at(m, n) == limited.at(m, n));
}

TEST_CASE("pole structure of the top-region kernel")
{
    std::mt19937 rng(71);
    for (int i = 0; i < 5; ++i) {
        const Potential p = random_potential(rng, 5);
        CHECK(check_lambda_structure(p, default_window(p)).pass);
        CHECK(check_expansion_resummation(p, default_window(p)).pass);
    }
}

TEST_CASE("expansion bundle")
{
    const Potential p(0, {1, 1}, {1, 1});
    const LambdaExpansion e = lambda_expansion(p, default_window(p));
    CHECK(e.Q == 2);
    CHECK(e.residues.size() == 2);

    const LambdaExpansion ez = lambda_expansion(Potential::zero(), WindowBounds::square(-2, 2));
    CHECK(ez.Q == 0);
    CHECK(ez.residues.empty());
}
