#include "alres/potential.hpp"

#include <algorithm>

namespace alres {

Potential::Potential(int k, std::vector<int> r, std::vector<int> s)
    : k_(k), r_(std::move(r)), s_(std::move(s))
{
    if (r_.empty() || r_.size() != s_.size())
        fail(ErrorCode::InvalidArgument, "potential needs equal-length nonempty r and s");
    for (std::size_t i = 0; i < r_.size(); ++i) {
        if ((r_[i] != 0 && r_[i] != 1) || (s_[i] != 0 && s_[i] != 1))
            fail(ErrorCode::InvalidArgument, "potential entries must be 0 or 1");
    }
    qprefix_.assign(r_.size() + 1, 0);
    for (std::size_t i = 0; i < r_.size(); ++i) {
        const bool deg = r_[i] == 1 && s_[i] == 1;
        qprefix_[i + 1] = qprefix_[i] + (deg ? 1 : 0);
        if (deg)
            degenerate_.push_back(k_ + static_cast<int>(i));
    }
}

int Potential::r(int n) const noexcept
{
    if (n < k_ || n > K())
        return 0;
    return r_[static_cast<std::size_t>(n - k_)];
}

int Potential::s(int n) const noexcept
{
    if (n < k_ || n > K())
        return 0;
    return s_[static_cast<std::size_t>(n - k_)];
}

int Potential::q_count(int m, int n) const
{
    if (m > n)
        fail(ErrorCode::EmptyInterval, "q_count requires m <= n");
    const int lo = std::max(m, k_);
    const int hi = std::min(n, K());
    if (lo > hi)
        return 0;
    return qprefix_[static_cast<std::size_t>(hi - k_ + 1)]
        - qprefix_[static_cast<std::size_t>(lo - k_)];
}

Mat2 Potential::site_matrix(int n) const
{
    return Mat2(RatFun::w(1), RatFun::integer(r(n)), RatFun::integer(s(n)), RatFun::w(-1));
}

Mat2 Potential::site_matrix_reg(int n) const
{
    if (!degenerate(n))
        return site_matrix(n);
    BiLaurent top = BiLaurent::w(1) + BiLaurent::monomial(1, 1, 1); // (lambda + 1) w
    return Mat2(RatFun(std::move(top)), RatFun::integer(r(n)), RatFun::integer(s(n)),
                RatFun::w(-1));
}

Mat2 Potential::site_adjugate(int n) const
{
    return Mat2(RatFun::w(-1), RatFun::integer(-r(n)), RatFun::integer(-s(n)), RatFun::w(1));
}

Mat2 Potential::ordered_product(int lo, int hi, bool regularized) const
{
    if (hi < lo - 1)
        fail(ErrorCode::InvalidRange, "ordered product needs hi >= lo - 1");
    Mat2 acc = Mat2::identity();
    for (int l = lo; l <= hi; ++l)
        acc = site(l, regularized) * acc;
    return acc;
}

Mat2 Potential::selective_product(int m, int n, int j) const
{
    if (m > n)
        fail(ErrorCode::InvalidRange, "selective product needs m <= n");
    if (j < 0)
        fail(ErrorCode::InvalidArgument, "selective product needs j >= 0");

    std::vector<int> sites;
    for (int l : degenerate_)
        if (l >= m && l <= n)
            sites.push_back(l);
    if (j > static_cast<int>(sites.size()))
        return Mat2::zero();

    // enumerate all j-subsets of the degenerate sites in [m, n]
    Mat2 acc = Mat2::zero();
    std::vector<int> idx(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    const Mat2 replacement = Mat2::lower_projector();
    while (true) {
        Mat2 prod = Mat2::identity();
        std::size_t next = 0;
        for (int l = m; l <= n; ++l) {
            bool replaced = false;
            if (next < idx.size() && sites[static_cast<std::size_t>(idx[next])] == l) {
                replaced = true;
                ++next;
            }
            prod = prod * (replaced ? replacement : site_adjugate(l));
        }
        acc = acc + prod;
        if (j == 0)
            break;
        // advance the combination
        int pos = j - 1;
        while (pos >= 0
               && idx[static_cast<std::size_t>(pos)]
                   == static_cast<int>(sites.size()) - j + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < j; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return acc;
}

std::vector<Mat2> Potential::selective_products_all(int m, int n) const
{
    if (m > n)
        fail(ErrorCode::InvalidRange, "selective product needs m <= n");
    Mat2 acc = Mat2::identity();
    for (int l = m; l <= n; ++l) {
        Mat2 factor = site_adjugate(l);
        if (degenerate(l))
            factor.at(1, 1) = factor.at(1, 1) + RatFun::lam();
        acc = acc * factor;
    }
    const int q = q_count(m, n);
    std::vector<Mat2> out;
    out.reserve(static_cast<std::size_t>(q) + 1);
    for (int j = 0; j <= q; ++j)
        out.push_back(acc.lambda_coefficient(j));
    return out;
}

} // namespace alres
