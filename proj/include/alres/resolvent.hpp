#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alres/potential.hpp"

namespace alres {

/**
 * The four continuity regions of the (|w|, h) plane.  The kernel has one
 * closed form per region and is discontinuous across the two boundary
 * surfaces |w| = h and |w| * h = 1.
 */
enum class RegionTag {
    BothBelow, // h > |w| and h > 1/|w|
    WAbove,    // |w| > h > 1/|w|
    WinvAbove, // 1/|w| > h > |w|
    BothAbove, // |w| > h and 1/|w| > h
};

const char* region_name(RegionTag t);
std::optional<RegionTag> region_from_name(const std::string& name);

// Classifies (|w|, h); throws BoundarySurface on |w| == h or |w| * h == 1.
RegionTag region_classify(double abs_w, double h);

struct WindowBounds {
    int m_lo = 0;
    int m_hi = 0;
    int n_lo = 0;
    int n_hi = 0;

    static WindowBounds square(int lo, int hi) { return {lo, hi, lo, hi}; }
    bool contains(int m, int n) const
    {
        return m >= m_lo && m <= m_hi && n >= n_lo && n <= n_hi;
    }
    int rows() const { return m_hi - m_lo + 1; }
    int cols() const { return n_hi - n_lo + 1; }
};

// Default window [k - extra - Q, K + extra + Q]^2.
WindowBounds default_window(const Potential& p, int extra = 3);

/**
 * Rectangular block of kernel entries.  An entry stores the h-free matrix
 * part; the full kernel entry is h^(n-m) times it, so the h-dependence is
 * carried entirely by the integer exponent n - m and the region tag.
 */
class KernelWindow {
public:
    KernelWindow(WindowBounds b, RegionTag region, bool regularized);

    const WindowBounds& bounds() const noexcept { return bounds_; }
    RegionTag region() const noexcept { return region_; }
    bool regularized() const noexcept { return regularized_; }

    const Mat2& at(int m, int n) const;
    Mat2& at(int m, int n);

    static int h_exponent(int m, int n) noexcept { return n - m; }

private:
    WindowBounds bounds_;
    RegionTag region_;
    bool regularized_;
    std::vector<Mat2> cells_;
};

// Column solution of the regularized lattice equation: w^(m*sigma) at and
// below the lower support border, swept upward through the site matrices
// above it.  Satisfies x_{m+1} = u_m * x_m for every m.
Mat2 annihilator_column(const Potential& p, int m, bool regularized);

// Row solution, the dual sweep: w^(-n*sigma) at and above the upper border,
// satisfying y_{n-1} = y_n * u_n.
Mat2 annihilator_row(const Potential& p, int n, bool regularized);

// w^(-K*sigma) * u_K * ... * u_k * w^(k*sigma); its determinant is lambda^Q
// in the regularized case.
Mat2 transition_matrix(const Potential& p, bool regularized);

// Region-dependent coupling matrix: 0, diag(1,0)/a11, diag(0,1)/a22, or the
// full inverse of the transition matrix, which requires regularization.
Mat2 gamma_matrix(const Potential& p, RegionTag region, bool regularized);

// Closed form of the zero-potential kernel entry (h-free part).
Mat2 free_resolvent_entry(RegionTag region, int m, int n);

// Kernel window per the region's closed form.  In BothAbove the entries are
// computed as the negated inverses of the ascending-index ordered products,
// which avoids the divergent annihilator series; the coupling-matrix form is
// available separately as a cross-check.
KernelWindow resolvent_window(const Potential& p, RegionTag region, WindowBounds b,
                              bool regularized);

// The annihilator/coupling form of the kernel, valid in every region; in
// BothAbove it must agree entrywise with resolvent_window.
KernelWindow resolvent_window_via_gamma(const Potential& p, RegionTag region, WindowBounds b,
                                        bool regularized);

// Coefficients of lambda^-Q .. lambda^0 of the inverse transition matrix,
// assembled from selective adjugate products.  Q = 0 gives the single
// regular term.
std::vector<Mat2> transition_inverse_expansion(const Potential& p);

// Residue kernel of order j (coefficient of lambda^-j), 1 <= j <= Q.
KernelWindow residue_window(const Potential& p, int j, WindowBounds b);

// Kernel of the original (unregularized) operator: the lambda -> 0 limit in
// the first three regions, the lambda^0 part of the expansion in BothAbove.
KernelWindow limit_resolvent_window(const Potential& p, RegionTag region, WindowBounds b);

struct LambdaExpansion {
    int Q = 0;
    std::vector<KernelWindow> residues; // order 1..Q
    KernelWindow regular;               // lambda^0 part, region BothAbove
};

LambdaExpansion lambda_expansion(const Potential& p, WindowBounds b);

} // namespace alres
