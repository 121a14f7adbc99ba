#include "alres/resolvent.hpp"

#include <algorithm>

namespace alres {

const char* region_name(RegionTag t)
{
    switch (t) {
    case RegionTag::BothBelow: return "both-below";
    case RegionTag::WAbove: return "w-above";
    case RegionTag::WinvAbove: return "winv-above";
    case RegionTag::BothAbove: return "both-above";
    }
    return "?";
}

std::optional<RegionTag> region_from_name(const std::string& name)
{
    std::string n;
    for (char c : name)
        n.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(c)));
    if (n == "both-below" || n == "r-both-below")
        return RegionTag::BothBelow;
    if (n == "w-above" || n == "r-w-above")
        return RegionTag::WAbove;
    if (n == "winv-above" || n == "r-winv-above")
        return RegionTag::WinvAbove;
    if (n == "both-above" || n == "r-both-above")
        return RegionTag::BothAbove;
    return std::nullopt;
}

RegionTag region_classify(double abs_w, double h)
{
    if (!(abs_w > 0.0))
        fail(ErrorCode::InvalidArgument, "region classification requires |w| > 0");
    if (h < 0.0)
        fail(ErrorCode::InvalidArgument, "region classification requires h >= 0");
    if (abs_w == h || abs_w * h == 1.0)
        fail(ErrorCode::BoundarySurface,
             "the kernel is discontinuous on |w| = h and |w|*h = 1");
    const bool w_above = abs_w > h;      // |w| above h
    const bool winv_above = abs_w * h < 1.0; // 1/|w| above h
    if (w_above && winv_above)
        return RegionTag::BothAbove;
    if (w_above)
        return RegionTag::WAbove;
    if (winv_above)
        return RegionTag::WinvAbove;
    return RegionTag::BothBelow;
}

WindowBounds default_window(const Potential& p, int extra)
{
    const int lo = p.k() - extra - p.Q();
    const int hi = p.K() + extra + p.Q();
    return WindowBounds::square(lo, hi);
}

KernelWindow::KernelWindow(WindowBounds b, RegionTag region, bool regularized)
    : bounds_(b), region_(region), regularized_(regularized)
{
    if (b.m_lo > b.m_hi || b.n_lo > b.n_hi)
        fail(ErrorCode::InvalidRange, "window bounds are empty");
    cells_.resize(static_cast<std::size_t>(b.rows()) * static_cast<std::size_t>(b.cols()));
}

const Mat2& KernelWindow::at(int m, int n) const
{
    if (!bounds_.contains(m, n))
        fail(ErrorCode::InvalidRange, "window access outside bounds");
    return cells_[static_cast<std::size_t>(m - bounds_.m_lo) * static_cast<std::size_t>(bounds_.cols())
                  + static_cast<std::size_t>(n - bounds_.n_lo)];
}

Mat2& KernelWindow::at(int m, int n)
{
    if (!bounds_.contains(m, n))
        fail(ErrorCode::InvalidRange, "window access outside bounds");
    return cells_[static_cast<std::size_t>(m - bounds_.m_lo) * static_cast<std::size_t>(bounds_.cols())
                  + static_cast<std::size_t>(n - bounds_.n_lo)];
}

Mat2 annihilator_column(const Potential& p, int m, bool regularized)
{
    if (m <= p.k())
        return Mat2::w_sigma(m);
    Mat2 x = Mat2::w_sigma(p.k());
    for (int l = p.k(); l < m; ++l)
        x = p.site(l, regularized) * x;
    return x;
}

Mat2 annihilator_row(const Potential& p, int n, bool regularized)
{
    if (n >= p.K())
        return Mat2::w_sigma(-n);
    Mat2 y = Mat2::w_sigma(-p.K());
    for (int l = p.K(); l > n; --l)
        y = y * p.site(l, regularized);
    return y;
}

Mat2 transition_matrix(const Potential& p, bool regularized)
{
    return Mat2::w_sigma(-p.K()) * p.ordered_product(p.k(), p.K(), regularized)
        * Mat2::w_sigma(p.k());
}

Mat2 gamma_matrix(const Potential& p, RegionTag region, bool regularized)
{
    if (region == RegionTag::BothBelow)
        return Mat2::zero();
    if (region == RegionTag::BothAbove) {
        if (!regularized)
            fail(ErrorCode::InvalidArgument,
                 "the full coupling matrix requires the regularized transition matrix");
        return transition_matrix(p, true).inverse();
    }
    const Mat2 a = transition_matrix(p, regularized);
    if (region == RegionTag::WAbove) {
        if (a.e11().is_zero())
            fail(ErrorCode::SingularTransition, "transition entry a11 is identically zero");
        return Mat2::diag(RatFun::integer(1) / a.e11(), RatFun());
    }
    if (a.e22().is_zero())
        fail(ErrorCode::SingularTransition, "transition entry a22 is identically zero");
    return Mat2::diag(RatFun(), RatFun::integer(1) / a.e22());
}

Mat2 free_resolvent_entry(RegionTag region, int m, int n)
{
    // componentwise: entry_ii = w^(s_i (m-n-1)) * (below_i [m >= n+1] - above_i [n >= m])
    // with s_1 = +1, s_2 = -1 and (below_1, below_2) the indicator that h
    // exceeds |w| resp. 1/|w| in the given region.
    bool below1 = false, below2 = false;
    switch (region) {
    case RegionTag::BothBelow: below1 = true; below2 = true; break;
    case RegionTag::WAbove: below1 = false; below2 = true; break;
    case RegionTag::WinvAbove: below1 = true; below2 = false; break;
    case RegionTag::BothAbove: below1 = false; below2 = false; break;
    }
    const int theta_lower = m >= n + 1 ? 1 : 0;
    const int theta_upper = n >= m ? 1 : 0;
    const int c1 = (below1 ? theta_lower : 0) - (below1 ? 0 : theta_upper);
    const int c2 = (below2 ? theta_lower : 0) - (below2 ? 0 : theta_upper);
    RatFun e11 = c1 == 0 ? RatFun() : RatFun(BiLaurent::monomial(c1, m - n - 1));
    RatFun e22 = c2 == 0 ? RatFun() : RatFun(BiLaurent::monomial(c2, -(m - n - 1)));
    return Mat2::diag(std::move(e11), std::move(e22));
}

namespace {

// Entries of the strictly lower-triangular product term: for m >= n+1 the
// ordered product u_{m-1} ... u_{n+1}, built incrementally per column.
void fill_lower_products(const Potential& p, bool regularized, KernelWindow& w)
{
    const WindowBounds& b = w.bounds();
    for (int n = b.n_lo; n <= b.n_hi; ++n) {
        Mat2 prod = Mat2::identity(); // value for m = n + 1
        for (int m = n + 1; m <= b.m_hi; ++m) {
            if (m > n + 1)
                prod = p.site(m - 1, regularized) * prod;
            if (m >= b.m_lo)
                w.at(m, n) = prod;
        }
    }
}

KernelWindow window_via_gamma(const Potential& p, RegionTag region, WindowBounds b,
                              bool regularized)
{
    KernelWindow w(b, region, regularized);
    fill_lower_products(p, regularized, w);

    const Mat2 gamma = gamma_matrix(p, region, regularized);
    if (gamma.is_zero())
        return w; // nothing to subtract

    std::vector<Mat2> xg; // x_m * Gamma per row
    xg.reserve(static_cast<std::size_t>(b.rows()));
    {
        Mat2 x = annihilator_column(p, b.m_lo, regularized);
        for (int m = b.m_lo; m <= b.m_hi; ++m) {
            if (m > b.m_lo) {
                if (m <= p.k())
                    x = Mat2::w_sigma(m);
                else
                    x = p.site(m - 1, regularized) * x;
            }
            xg.push_back(x * gamma);
        }
    }
    std::vector<Mat2> ys;
    ys.reserve(static_cast<std::size_t>(b.cols()));
    {
        Mat2 y = annihilator_row(p, b.n_hi, regularized);
        for (int n = b.n_hi; n >= b.n_lo; --n) {
            if (n < b.n_hi) {
                if (n >= p.K())
                    y = Mat2::w_sigma(-n);
                else
                    y = y * p.site(n + 1, regularized);
            }
            ys.push_back(y);
        }
        std::reverse(ys.begin(), ys.end());
    }

    for (int m = b.m_lo; m <= b.m_hi; ++m)
        for (int n = b.n_lo; n <= b.n_hi; ++n)
            w.at(m, n) = w.at(m, n)
                - xg[static_cast<std::size_t>(m - b.m_lo)]
                    * ys[static_cast<std::size_t>(n - b.n_lo)];
    return w;
}

// Upper-triangular region: entries are the negated inverses of the
// ascending ordered products u_n * ... * u_m for n >= m.
KernelWindow window_both_above(const Potential& p, WindowBounds b, bool regularized)
{
    KernelWindow w(b, RegionTag::BothAbove, regularized);
    for (int m = b.m_lo; m <= b.m_hi; ++m) {
        Mat2 prod = Mat2::identity();
        for (int n = m; n <= b.n_hi; ++n) {
            prod = p.site(n, regularized) * prod;
            if (n >= b.n_lo)
                w.at(m, n) = -prod.inverse();
        }
    }
    return w;
}

} // namespace

KernelWindow resolvent_window(const Potential& p, RegionTag region, WindowBounds b,
                              bool regularized)
{
    switch (region) {
    case RegionTag::BothBelow: {
        KernelWindow w(b, region, regularized);
        fill_lower_products(p, regularized, w);
        return w;
    }
    case RegionTag::WAbove:
    case RegionTag::WinvAbove:
        return window_via_gamma(p, region, b, regularized);
    case RegionTag::BothAbove:
        if (!regularized)
            fail(ErrorCode::InvalidArgument,
                 "the upper-triangular kernel requires regularized site matrices");
        return window_both_above(p, b, regularized);
    }
    fail(ErrorCode::InvalidArgument, "unknown region");
}

KernelWindow resolvent_window_via_gamma(const Potential& p, RegionTag region, WindowBounds b,
                                        bool regularized)
{
    return window_via_gamma(p, region, b, regularized);
}

std::vector<Mat2> transition_inverse_expansion(const Potential& p)
{
    const int Q = p.Q();
    const auto sel = p.selective_products_all(p.k(), p.K());
    const Mat2 left = Mat2::w_sigma(-p.k());
    const Mat2 right = Mat2::w_sigma(p.K());
    std::vector<Mat2> out;
    out.reserve(static_cast<std::size_t>(Q) + 1);
    // coefficient of lambda^(j - Q) is w^j * w^(-k sigma) * S_j * w^(K sigma)
    for (int j = 0; j <= Q; ++j) {
        Mat2 coeff = left * sel[static_cast<std::size_t>(j)] * right;
        out.push_back(coeff.scaled(RatFun::w(j)));
    }
    return out;
}

KernelWindow residue_window(const Potential& p, int j, WindowBounds b)
{
    if (j < 1 || j > p.Q())
        fail(ErrorCode::InvalidResidueIndex, "residue order must be in 1..Q");
    KernelWindow w(b, RegionTag::BothAbove, false);
    for (int m = b.m_lo; m <= b.m_hi; ++m) {
        // ascending selective products graded by a lambda marker; the
        // coefficient of lambda^i is w^i times nothing -- the w power is
        // applied when the entry is assembled.
        Mat2 graded = Mat2::identity();
        for (int n = m; n <= b.n_hi; ++n) {
            Mat2 factor = p.site_adjugate(n);
            if (p.degenerate(n))
                factor.at(1, 1) = factor.at(1, 1) + RatFun::lam();
            graded = graded * factor;
            if (n < b.n_lo)
                continue;
            const int q = p.q_count(m, n);
            if (q < j)
                continue; // entry stays zero
            const int order = q - j;
            Mat2 sel = graded.lambda_coefficient(order);
            w.at(m, n) = -sel.scaled(RatFun::w(order));
        }
    }
    return w;
}

KernelWindow limit_resolvent_window(const Potential& p, RegionTag region, WindowBounds b)
{
    if (region != RegionTag::BothAbove)
        return resolvent_window(p, region, b, false);
    KernelWindow full = resolvent_window(p, RegionTag::BothAbove, b, true);
    KernelWindow w(b, RegionTag::BothAbove, false);
    for (int m = b.m_lo; m <= b.m_hi; ++m)
        for (int n = b.n_lo; n <= b.n_hi; ++n)
            w.at(m, n) = full.at(m, n).lambda_coefficient(0);
    return w;
}

LambdaExpansion lambda_expansion(const Potential& p, WindowBounds b)
{
    LambdaExpansion e{p.Q(), {}, limit_resolvent_window(p, RegionTag::BothAbove, b)};
    e.residues.reserve(static_cast<std::size_t>(e.Q));
    for (int j = 1; j <= e.Q; ++j)
        e.residues.push_back(residue_window(p, j, b));
    return e;
}

} // namespace alres
