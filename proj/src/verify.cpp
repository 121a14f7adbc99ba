#include "alres/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace alres {

bool all_pass(const std::vector<IdentityReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(),
                       [](const IdentityReport& r) { return r.pass || !r.gating; });
}

Mat2 degenerate_projector_entry(const Potential& p, int n)
{
    // diag(w, 0): the regularized site matrix is u_n(w) + lambda * D_n, and
    // the regularization adds lambda * w to the (1,1) entry, so the
    // projector carries the w.
    return p.degenerate(n) ? Mat2::diag(RatFun::w(1), RatFun()) : Mat2::zero();
}

KernelWindow compose_through_D(const KernelWindow& A, const KernelWindow& B,
                               const Potential& p)
{
    const WindowBounds& ba = A.bounds();
    const WindowBounds& bb = B.bounds();
    if (ba.n_lo > p.k() || ba.n_hi < p.K() || bb.m_lo > p.k() || bb.m_hi < p.K())
        fail(ErrorCode::WindowTooSmall,
             "composition windows must cover the support in the summed index");

    KernelWindow out(WindowBounds{ba.m_lo, ba.m_hi, bb.n_lo, bb.n_hi}, A.region(),
                     A.regularized());
    const auto& sites = p.degenerate_sites();
    if (sites.empty())
        return out;
    const RatFun weight = RatFun::w(1); // every projector entry is diag(w, 0)
    for (int m = ba.m_lo; m <= ba.m_hi; ++m) {
        for (int n = bb.n_lo; n <= bb.n_hi; ++n) {
            Mat2 acc;
            for (int l : sites) {
                const Mat2& a = A.at(m, l);
                const Mat2& b = B.at(l, n);
                // a * diag(w,0) * b touches only a's first column and b's first row
                acc = acc
                    + Mat2(a.e11() * b.e11(), a.e11() * b.e12(), a.e21() * b.e11(),
                           a.e21() * b.e12());
            }
            out.at(m, n) = acc.scaled(weight);
        }
    }
    return out;
}

namespace {

Mat2 delta_identity(int m, int n)
{
    return m == n ? Mat2::identity() : Mat2::zero();
}

// Scans residuals over a rectangle; the report records the first nonzero.
IdentityReport scan(std::string name, std::string region, WindowBounds b,
                    const std::function<Mat2(int, int)>& residual_at)
{
    IdentityReport rep;
    rep.name = std::move(name);
    rep.region = std::move(region);
    rep.window = b;
    for (int m = b.m_lo; m <= b.m_hi && rep.pass; ++m) {
        for (int n = b.n_lo; n <= b.n_hi; ++n) {
            Mat2 r = residual_at(m, n);
            if (!r.is_zero()) {
                rep.pass = false;
                rep.first_fail = FailSite{m, n, std::move(r)};
                break;
            }
        }
    }
    return rep;
}

IdentityReport check_inverse_impl(const Potential& p, const KernelWindow& w,
                                  std::string name)
{
    const WindowBounds& b = w.bounds();
    const bool reg = w.regularized();
    // left recursion on rows [m_lo, m_hi-1], dual recursion on
    // columns [n_lo+1, n_hi]; entries referencing cells outside the
    // window are left unchecked.
    auto residual = [&](int m, int n) {
        Mat2 r;
        if (m + 1 <= b.m_hi)
            r = w.at(m + 1, n) - p.site(m, reg) * w.at(m, n) - delta_identity(m, n);
        if (!r.is_zero())
            return r;
        if (n - 1 >= b.n_lo)
            r = w.at(m, n - 1) - w.at(m, n) * p.site(n, reg) - delta_identity(m, n);
        return r;
    };
    return scan(std::move(name), region_name(w.region()), b, residual);
}

KernelWindow substitute_window(const KernelWindow& w, const RatFun& t)
{
    if (t == RatFun::lam())
        return w;
    KernelWindow out(w.bounds(), w.region(), w.regularized());
    const WindowBounds& b = w.bounds();
    for (int m = b.m_lo; m <= b.m_hi; ++m)
        for (int n = b.n_lo; n <= b.n_hi; ++n)
            out.at(m, n) = w.at(m, n).lambda_substitute(t);
    return out;
}

IdentityReport check_hilbert_impl(const Potential& p, RegionTag region, const RatFun& t1,
                                  const RatFun& t2, const KernelWindow& m1,
                                  const KernelWindow& m2)
{
    // M(t1) - M(t2) = (t1 - t2) M(t2) D M(t1): the scalar is the difference
    // of the two L-operators, L(t2) - L(t1) = (t1 - t2) D.
    const KernelWindow comp = compose_through_D(m2, m1, p);
    const RatFun factor = t1 - t2;
    auto residual = [&](int m, int n) {
        return m1.at(m, n) - m2.at(m, n) - comp.at(m, n).scaled(factor);
    };
    IdentityReport rep = scan("hilbert", region_name(region), m1.bounds(), residual);
    rep.note = "markers " + t1.str() + " and " + t2.str();
    return rep;
}

std::vector<IdentityReport> check_modified_inverse_impl(const Potential& p,
                                                        const LambdaExpansion& exp,
                                                        WindowBounds b)
{
    const int Q = exp.Q;
    const Mat2 dproj = Mat2::diag(RatFun::w(1), RatFun()); // projector entry diag(w, 0)
    auto res = [&](int j) -> const KernelWindow* {
        return (j >= 1 && j <= Q) ? &exp.residues[static_cast<std::size_t>(j - 1)] : nullptr;
    };
    auto res_at = [&](int j, int m, int n) -> Mat2 {
        const KernelWindow* w = res(j);
        return w ? w->at(m, n) : Mat2::zero();
    };

    std::vector<IdentityReport> out;

    out.push_back(scan("modified-inverse-left", region_name(RegionTag::BothAbove), b,
                       [&](int m, int n) -> Mat2 {
                           if (m + 1 > b.m_hi)
                               return {};
                           Mat2 lhs = exp.regular.at(m + 1, n)
                               - p.site_matrix(m) * exp.regular.at(m, n);
                           Mat2 rhs = delta_identity(m, n);
                           if (p.degenerate(m))
                               rhs = rhs + dproj * res_at(1, m, n);
                           return lhs - rhs;
                       }));
    out.push_back(scan("modified-inverse-right", region_name(RegionTag::BothAbove), b,
                       [&](int m, int n) -> Mat2 {
                           if (n - 1 < b.n_lo)
                               return {};
                           Mat2 lhs = exp.regular.at(m, n - 1)
                               - exp.regular.at(m, n) * p.site_matrix(n);
                           Mat2 rhs = delta_identity(m, n);
                           if (p.degenerate(n))
                               rhs = rhs + res_at(1, m, n) * dproj;
                           return lhs - rhs;
                       }));

    for (int j = 1; j <= Q; ++j) {
        const KernelWindow& mj = *res(j);
        out.push_back(scan("residue-chain-left-" + std::to_string(j),
                           region_name(RegionTag::BothAbove), b, [&](int m, int n) -> Mat2 {
                               if (m + 1 > b.m_hi)
                                   return {};
                               Mat2 lhs = mj.at(m + 1, n) - p.site_matrix(m) * mj.at(m, n);
                               if (p.degenerate(m))
                                   lhs = lhs - dproj * res_at(j + 1, m, n);
                               return lhs;
                           }));
        out.push_back(scan("residue-chain-right-" + std::to_string(j),
                           region_name(RegionTag::BothAbove), b, [&](int m, int n) -> Mat2 {
                               if (n - 1 < b.n_lo)
                                   return {};
                               Mat2 lhs = mj.at(m, n - 1) - mj.at(m, n) * p.site_matrix(n);
                               if (p.degenerate(n))
                                   lhs = lhs - res_at(j + 1, m, n) * dproj;
                               return lhs;
                           }));
    }

    // Informational probe of the variant chain that carries an extra
    // identity term on the right-hand side for the intermediate orders.
    for (int j = 1; j <= Q - 1; ++j) {
        const KernelWindow& mj = *res(j);
        IdentityReport rep = scan("residue-chain-left-" + std::to_string(j)
                                      + "-identity-variant",
                                  region_name(RegionTag::BothAbove), b,
                                  [&](int m, int n) -> Mat2 {
                                      if (m + 1 > b.m_hi)
                                          return {};
                                      Mat2 lhs = mj.at(m + 1, n)
                                          - p.site_matrix(m) * mj.at(m, n)
                                          - delta_identity(m, n);
                                      if (p.degenerate(m))
                                          lhs = lhs - dproj * res_at(j + 1, m, n);
                                      return lhs;
                                  });
        rep.gating = false;
        rep.note = "variant with an identity term in the intermediate chain";
        out.push_back(rep);
    }
    return out;
}

std::vector<IdentityReport> check_residue_algebra_impl(const Potential& p,
                                                       const LambdaExpansion& exp,
                                                       WindowBounds b)
{
    const int Q = exp.Q;
    std::vector<IdentityReport> out;
    if (Q == 0)
        return out;

    auto resw = [&](int j) -> const KernelWindow& {
        return exp.residues[static_cast<std::size_t>(j - 1)];
    };

    std::map<std::pair<int, int>, KernelWindow> comp;
    auto composed = [&](int j, int l) -> const KernelWindow& {
        auto it = comp.find({j, l});
        if (it == comp.end())
            it = comp.emplace(std::pair{j, l}, compose_through_D(resw(j), resw(l), p)).first;
        return it->second;
    };

    for (int j = 1; j <= Q; ++j) {
        out.push_back(scan("residue-contraction-right-" + std::to_string(j),
                           region_name(RegionTag::BothAbove), b, [&](int m, int n) {
                               return resw(j).at(m, n) + composed(j, 1).at(m, n);
                           }));
        out.push_back(scan("residue-contraction-left-" + std::to_string(j),
                           region_name(RegionTag::BothAbove), b, [&](int m, int n) {
                               return resw(j).at(m, n) + composed(1, j).at(m, n);
                           }));
    }

    for (int j = 1; j <= Q; ++j) {
        const KernelWindow right = compose_through_D(resw(j), exp.regular, p);
        const KernelWindow left = compose_through_D(exp.regular, resw(j), p);
        out.push_back(scan("residue-limit-annihilation-right-" + std::to_string(j),
                           region_name(RegionTag::BothAbove), b,
                           [&](int m, int n) { return right.at(m, n); }));
        out.push_back(scan("residue-limit-annihilation-left-" + std::to_string(j),
                           region_name(RegionTag::BothAbove), b,
                           [&](int m, int n) { return left.at(m, n); }));
    }

    for (int j = 1; j <= Q; ++j) {
        for (int l = 1; l <= Q; ++l) {
            out.push_back(scan(
                "residue-ladder-" + std::to_string(j) + "-" + std::to_string(l),
                region_name(RegionTag::BothAbove), b, [&](int m, int n) -> Mat2 {
                    Mat2 lhs = composed(j, l).at(m, n);
                    if (l + j - 1 <= Q)
                        lhs = lhs + resw(l + j - 1).at(m, n);
                    return lhs;
                }));
        }
    }

    for (int j = 2; j <= Q; ++j) {
        for (int l = 1; l <= Q - 1; ++l) {
            out.push_back(scan(
                "residue-shift-" + std::to_string(j) + "-" + std::to_string(l),
                region_name(RegionTag::BothAbove), b, [&](int m, int n) {
                    return composed(j, l).at(m, n) - composed(j - 1, l + 1).at(m, n);
                }));
        }
    }
    return out;
}

std::array<std::complex<double>, 4> cmul(const std::array<std::complex<double>, 4>& a,
                                         const std::array<std::complex<double>, 4>& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

} // namespace

IdentityReport check_inverse_on(const Potential& p, const KernelWindow& w)
{
    return check_inverse_impl(p, w, "inverse");
}

IdentityReport check_inverse(const Potential& p, RegionTag region, WindowBounds b,
                             bool regularized)
{
    return check_inverse_impl(p, resolvent_window(p, region, b, regularized), "inverse");
}

std::vector<IdentityReport> check_modified_inverse(const Potential& p, WindowBounds b)
{
    return check_modified_inverse_impl(p, lambda_expansion(p, b), b);
}

IdentityReport check_hilbert(const Potential& p, RegionTag region, const RatFun& t1,
                             const RatFun& t2, WindowBounds b)
{
    if (t1 == t2)
        fail(ErrorCode::InvalidArgument, "the two lambda markers must differ");
    const KernelWindow w = resolvent_window(p, region, b, true);
    return check_hilbert_impl(p, region, t1, t2, substitute_window(w, t1),
                              substitute_window(w, t2));
}

std::vector<IdentityReport> check_residue_algebra(const Potential& p, WindowBounds b)
{
    return check_residue_algebra_impl(p, lambda_expansion(p, b), b);
}

IdentityReport check_annihilators(const Potential& p, int lo, int hi, bool regularized,
                                  std::optional<int> corrupt_at)
{
    if (lo > hi)
        fail(ErrorCode::InvalidRange, "annihilator range is empty");
    IdentityReport rep;
    rep.name = "annihilators";
    rep.window = WindowBounds{lo, hi, lo, hi};

    std::vector<Mat2> xs, ys;
    xs.reserve(static_cast<std::size_t>(hi - lo + 1));
    ys.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int m = lo; m <= hi; ++m)
        xs.push_back(annihilator_column(p, m, regularized));
    for (int n = lo; n <= hi; ++n)
        ys.push_back(annihilator_row(p, n, regularized));
    if (corrupt_at && *corrupt_at >= lo && *corrupt_at <= hi) {
        Mat2& x = xs[static_cast<std::size_t>(*corrupt_at - lo)];
        x.at(0, 0) = x.at(0, 0) + RatFun::integer(1);
    }

    for (int m = lo; m < hi && rep.pass; ++m) {
        Mat2 r = xs[static_cast<std::size_t>(m + 1 - lo)]
            - p.site(m, regularized) * xs[static_cast<std::size_t>(m - lo)];
        if (!r.is_zero()) {
            rep.pass = false;
            rep.first_fail = FailSite{m, m, std::move(r)};
            rep.note = "column recursion";
        }
    }
    for (int n = hi; n > lo && rep.pass; --n) {
        Mat2 r = ys[static_cast<std::size_t>(n - 1 - lo)]
            - ys[static_cast<std::size_t>(n - lo)] * p.site(n, regularized);
        if (!r.is_zero()) {
            rep.pass = false;
            rep.first_fail = FailSite{n, n, std::move(r)};
            rep.note = "row recursion";
        }
    }
    return rep;
}

IdentityReport check_triangular_consistency(const Potential& p, WindowBounds b)
{
    const KernelWindow direct = resolvent_window(p, RegionTag::BothAbove, b, true);
    const KernelWindow viag = resolvent_window_via_gamma(p, RegionTag::BothAbove, b, true);
    return scan("triangular-consistency", region_name(RegionTag::BothAbove), b,
                [&](int m, int n) { return direct.at(m, n) - viag.at(m, n); });
}

IdentityReport check_lambda_structure(const Potential& p, WindowBounds b)
{
    IdentityReport rep;
    rep.name = "lambda-structure";
    rep.region = region_name(RegionTag::BothAbove);
    rep.window = b;

    const RatFun det = transition_matrix(p, true).det();
    if (det != RatFun::lam(p.Q())) {
        rep.pass = false;
        rep.note = "transition determinant is not lambda^Q";
        rep.first_fail = FailSite{0, 0, Mat2::diag(det, RatFun())};
        return rep;
    }

    const KernelWindow w = resolvent_window(p, RegionTag::BothAbove, b, true);
    const RatFun lamQ = RatFun::lam(p.Q());
    for (int m = b.m_lo; m <= b.m_hi && rep.pass; ++m) {
        for (int n = b.n_lo; n <= b.n_hi; ++n) {
            const Mat2& e = w.at(m, n);
            bool ok = true;
            for (int i = 0; i < 2 && ok; ++i)
                for (int j = 0; j < 2 && ok; ++j) {
                    const RatFun cleared = lamQ * e.at(i, j);
                    ok = cleared.den().max_lexp() == 0;
                }
            if (!ok) {
                rep.pass = false;
                rep.first_fail = FailSite{m, n, e};
                rep.note = "pole order exceeds Q";
                break;
            }
        }
    }
    return rep;
}

IdentityReport check_residues_vs_series(const Potential& p, WindowBounds b)
{
    const KernelWindow w = resolvent_window(p, RegionTag::BothAbove, b, true);
    IdentityReport rep;
    rep.name = "residues-vs-series";
    rep.region = region_name(RegionTag::BothAbove);
    rep.window = b;
    for (int j = 1; j <= p.Q() && rep.pass; ++j) {
        const KernelWindow r = residue_window(p, j, b);
        for (int m = b.m_lo; m <= b.m_hi && rep.pass; ++m) {
            for (int n = b.n_lo; n <= b.n_hi; ++n) {
                Mat2 diff = r.at(m, n) - w.at(m, n).lambda_coefficient(-j);
                if (!diff.is_zero()) {
                    rep.pass = false;
                    rep.first_fail = FailSite{m, n, std::move(diff)};
                    rep.note = "order " + std::to_string(j);
                    break;
                }
            }
        }
    }
    return rep;
}

IdentityReport check_expansion_resummation(const Potential& p, WindowBounds b)
{
    const LambdaExpansion exp = lambda_expansion(p, b);
    const KernelWindow w = resolvent_window(p, RegionTag::BothAbove, b, true);
    return scan("expansion-resummation", region_name(RegionTag::BothAbove), b,
                [&](int m, int n) -> Mat2 {
                    Mat2 diff = w.at(m, n) - exp.regular.at(m, n);
                    for (int j = 1; j <= exp.Q; ++j)
                        diff = diff
                            - exp.residues[static_cast<std::size_t>(j - 1)]
                                  .at(m, n)
                                  .scaled(RatFun(BiLaurent::constant(1),
                                                 BiLaurent::lam(j)));
                    // the remainder must vanish to order lambda^0 inclusive
                    Mat2 head;
                    for (int i = 0; i < 2; ++i)
                        for (int j2 = 0; j2 < 2; ++j2) {
                            const auto series = diff.at(i, j2).lambda_series(-exp.Q, 0);
                            RatFun acc;
                            for (const auto& [o, c] : series)
                                acc = acc + c;
                            head.at(i, j2) = acc;
                        }
                    return head;
                });
}

IdentityReport check_transition_expansion(const Potential& p)
{
    IdentityReport rep;
    rep.name = "transition-expansion";
    rep.region = region_name(RegionTag::BothAbove);
    const auto expansion = transition_inverse_expansion(p);
    const Mat2 direct = transition_matrix(p, true).inverse();
    const int Q = p.Q();
    for (int i = 0; i <= Q && rep.pass; ++i) {
        Mat2 diff = expansion[static_cast<std::size_t>(i)] - direct.lambda_coefficient(i - Q);
        if (!diff.is_zero()) {
            rep.pass = false;
            rep.first_fail = FailSite{i - Q, i - Q, std::move(diff)};
            rep.note = "order " + std::to_string(i - Q);
        }
    }
    if (rep.pass) {
        // the inverse carries no positive lambda orders
        for (int i = 0; i < 2 && rep.pass; ++i)
            for (int j = 0; j < 2; ++j)
                if (!direct.at(i, j).lambda_series(1, Q + 1).empty()) {
                    rep.pass = false;
                    rep.note = "unexpected positive-order tail";
                    break;
                }
    }
    return rep;
}

std::vector<BoundaryPairReport>
discontinuity_probe(const Potential& p, std::complex<double> w0,
                    const std::vector<std::pair<double, double>>& h_pairs, double tol,
                    double lambda0, int margin)
{
    const double aw = std::abs(w0);
    if (aw == 0.0)
        fail(ErrorCode::PoleAtOrigin, "probe requires w != 0");
    const WindowBounds b = default_window(p, margin);

    std::vector<BoundaryPairReport> out;
    out.reserve(h_pairs.size());
    for (const auto& [hm, hp] : h_pairs) {
        if (!(hm > 0.0) || !(hp > hm))
            fail(ErrorCode::InvalidArgument, "need 0 < h_minus < h_plus");
        const bool cross_w = hm < aw && aw < hp;
        const bool cross_winv = hm < 1.0 / aw && 1.0 / aw < hp;
        if (cross_w && cross_winv)
            fail(ErrorCode::NotABoundaryPair,
                 "pair straddles both boundary surfaces; split it");

        BoundaryPairReport r;
        r.h_minus = hm;
        r.h_plus = hp;
        const RegionTag reg_minus = region_classify(aw, hm);
        const RegionTag reg_plus = region_classify(aw, hp);
        r.region_minus = region_name(reg_minus);
        r.region_plus = region_name(reg_plus);

        const bool needs_reg = reg_minus == RegionTag::BothAbove
            || reg_plus == RegionTag::BothAbove;
        double l0 = lambda0;
        if (l0 < 0.0)
            l0 = needs_reg ? 0.125 : 0.0;
        if (l0 == 0.0 && needs_reg)
            fail(ErrorCode::InvalidArgument,
                 "a pair touching the doubly-above region needs lambda != 0");
        r.lambda0 = l0;
        const std::complex<double> lc(l0, 0.0);
        const bool use_reg = l0 != 0.0;

        auto window_for = [&](RegionTag t) {
            return use_reg ? resolvent_window(p, t, b, true)
                           : limit_resolvent_window(p, t, b);
        };
        const KernelWindow wm = window_for(reg_minus);
        const KernelWindow wp = window_for(reg_plus);

        const Mat2 gm = gamma_matrix(p, reg_minus, use_reg);
        const Mat2 gp = gamma_matrix(p, reg_plus, use_reg);
        const auto dgamma = (gm - gp).eval(w0, lc); // minus-side minus plus-side

        double scale = 0.0;
        double max_abs = 0.0;
        double max_mismatch = 0.0;
        for (int m = b.m_lo; m <= b.m_hi; ++m) {
            const auto xv = annihilator_column(p, m, use_reg).eval(w0, lc);
            const auto xd = cmul(xv, dgamma);
            for (int n = b.n_lo; n <= b.n_hi; ++n) {
                const auto yv = annihilator_row(p, n, use_reg).eval(w0, lc);
                const auto pred = cmul(xd, yv); // jump = x (Gamma- - Gamma+) y
                const auto em = wm.at(m, n).eval(w0, lc);
                const auto ep = wp.at(m, n).eval(w0, lc);
                for (int i = 0; i < 4; ++i) {
                    const std::complex<double> jump = ep[i] - em[i];
                    max_abs = std::max(max_abs, std::abs(jump));
                    max_mismatch = std::max(max_mismatch, std::abs(jump - pred[i]));
                    scale = std::max({scale, std::abs(em[i]), std::abs(ep[i])});
                }
            }
        }
        if (scale == 0.0)
            scale = 1.0;
        r.max_abs_jump = max_abs;
        if (reg_minus == reg_plus) {
            r.max_rel_mismatch = max_abs / scale;
            r.pass = r.max_rel_mismatch <= 1e-12;
        } else {
            r.max_rel_mismatch = max_mismatch / std::max(scale, max_abs);
            r.pass = r.max_rel_mismatch <= tol;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<IdentityReport> check_identity_ladder(const Potential& p, WindowBounds b,
                                                  long hilbert_constant)
{
    std::vector<IdentityReport> out;
    const LambdaExpansion exp = lambda_expansion(p, b);
    auto modified = check_modified_inverse_impl(p, exp, b);
    out.insert(out.end(), modified.begin(), modified.end());
    auto algebra = check_residue_algebra_impl(p, exp, b);
    out.insert(out.end(), algebra.begin(), algebra.end());

    const RegionTag regions[] = {RegionTag::BothBelow, RegionTag::WAbove,
                                 RegionTag::WinvAbove, RegionTag::BothAbove};
    const RatFun t1 = RatFun::lam();
    const RatFun t2 = RatFun::integer(hilbert_constant);
    for (RegionTag t : regions) {
        const KernelWindow w = resolvent_window(p, t, b, true);
        out.push_back(check_hilbert_impl(p, t, t1, t2, w, substitute_window(w, t2)));
    }
    return out;
}

std::vector<IdentityReport> run_all_suites(const Potential& p, const SuiteOptions& opts)
{
    const WindowBounds b = opts.window.value_or(default_window(p));
    auto maybe_corrupt = [&](KernelWindow& w) {
        if (!opts.corrupt)
            return;
        const auto [cm, cn] = *opts.corrupt;
        if (w.bounds().contains(cm, cn)) {
            RatFun& e = w.at(cm, cn).at(0, 0);
            e = e + RatFun::integer(1);
        }
    };

    std::vector<IdentityReport> out;

    const RegionTag regions[] = {RegionTag::BothBelow, RegionTag::WAbove,
                                 RegionTag::WinvAbove, RegionTag::BothAbove};
    for (RegionTag t : regions) {
        KernelWindow w = resolvent_window(p, t, b, true);
        maybe_corrupt(w);
        out.push_back(check_inverse_impl(p, w, "inverse"));
    }

    {
        std::optional<int> corrupt_site;
        if (opts.corrupt)
            corrupt_site = opts.corrupt->first;
        out.push_back(check_annihilators(p, p.k() - 10 - p.Q(), p.K() + 10 + p.Q(), true,
                                         corrupt_site));
    }

    out.push_back(check_triangular_consistency(p, b));
    out.push_back(check_lambda_structure(p, b));
    out.push_back(check_transition_expansion(p));
    out.push_back(check_residues_vs_series(p, b));
    out.push_back(check_expansion_resummation(p, b));

    {
        LambdaExpansion exp = lambda_expansion(p, b);
        maybe_corrupt(exp.regular);
        auto reports = check_modified_inverse_impl(p, exp, b);
        out.insert(out.end(), reports.begin(), reports.end());
        if (p.Q() >= 1) {
            if (!exp.residues.empty())
                maybe_corrupt(exp.residues.front());
            auto algebra = check_residue_algebra_impl(p, exp, b);
            out.insert(out.end(), algebra.begin(), algebra.end());
        }
    }

    for (RegionTag t : regions) {
        const KernelWindow w = resolvent_window(p, t, b, true);
        KernelWindow m1 = substitute_window(w, RatFun::lam());
        KernelWindow m2 = substitute_window(w, RatFun::integer(opts.hilbert_constant));
        maybe_corrupt(m1);
        out.push_back(check_hilbert_impl(p, t, RatFun::lam(),
                                         RatFun::integer(opts.hilbert_constant), m1, m2));
    }
    return out;
}

} // namespace alres
