#pragma once

#include <vector>

#include "alres/mat2.hpp"

namespace alres {

/**
 * Binary potential with finite support [k, K]: two sequences r, s with
 * entries in {0, 1}, identically zero outside the support.  Queries at
 * any site are valid; sites outside [k, K] answer with free-site values.
 *
 * A site with r_n * s_n = 1 is degenerate: its site matrix has zero
 * determinant and is regularized to determinant lambda.
 */
class Potential {
public:
    Potential(int k, std::vector<int> r, std::vector<int> s);

    static Potential zero() { return Potential(0, {0}, {0}); }

    int k() const noexcept { return k_; }
    int K() const noexcept { return k_ + static_cast<int>(r_.size()) - 1; }
    int support_length() const noexcept { return static_cast<int>(r_.size()); }

    int r(int n) const noexcept;
    int s(int n) const noexcept;
    bool degenerate(int n) const noexcept { return r(n) == 1 && s(n) == 1; }
    const std::vector<int>& degenerate_sites() const noexcept { return degenerate_; }

    // Number of degenerate sites in [m, n]; m > n is an error.
    int q_count(int m, int n) const;
    int Q() const noexcept { return static_cast<int>(degenerate_.size()); }

    // [[w, r_n], [s_n, 1/w]]; the free matrix diag(w, 1/w) off support.
    Mat2 site_matrix(int n) const;
    // [[(lambda*r_n*s_n + 1)*w, r_n], [s_n, 1/w]]: determinant 1 at
    // non-degenerate sites, lambda at degenerate ones.
    Mat2 site_matrix_reg(int n) const;
    // [[1/w, -r_n], [-s_n, w]], the adjugate of site_matrix: the product
    // with site_matrix is (1 - r_n*s_n) * I identically.
    Mat2 site_adjugate(int n) const;

    Mat2 site(int n, bool regularized) const
    {
        return regularized ? site_matrix_reg(n) : site_matrix(n);
    }

    // Index-ordered product u_hi * u_{hi-1} * ... * u_lo with the largest
    // index leftmost; hi == lo - 1 gives the identity (empty product).
    Mat2 ordered_product(int lo, int hi, bool regularized) const;

    // Sum over all choices of j degenerate sites l_1 < ... < l_j in [m, n]
    // of the ascending-ordered adjugate product u~_m * u~_{m+1} * ... * u~_n
    // with each chosen factor replaced by diag(0, 1).  j exceeding the
    // degenerate count yields the zero matrix.
    Mat2 selective_product(int m, int n, int j) const;

    // All selective products for j = 0..q(m, n) in one sweep, computed by
    // grading the product of (u~_l + lambda * [l degenerate] * diag(0,1))
    // by powers of lambda.
    std::vector<Mat2> selective_products_all(int m, int n) const;

private:
    int k_;
    std::vector<int> r_, s_;
    std::vector<int> degenerate_;
    std::vector<int> qprefix_; // qprefix_[i] = count of degenerate sites among first i
};

} // namespace alres
