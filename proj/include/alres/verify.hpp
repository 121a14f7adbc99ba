#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alres/resolvent.hpp"

namespace alres {

struct FailSite {
    int m = 0;
    int n = 0;
    Mat2 residual;
};

/**
 * Outcome of one identity check on one window.  pass means every checked
 * entry residual is the exact zero rational function.  Non-gating reports
 * are informational probes that do not affect suite success.
 */
struct IdentityReport {
    std::string name;
    std::string region = "-";
    WindowBounds window{};
    bool pass = true;
    bool gating = true;
    std::optional<FailSite> first_fail;
    std::string note;
};

bool all_pass(const std::vector<IdentityReport>& reports);

// D entry at site n: diag(w,0) on degenerate sites, zero elsewhere, so that
// the regularized operator is L(w) - lambda * D.  The operator has exactly
// Q nonzero entries, all inside the support.
Mat2 degenerate_projector_entry(const Potential& p, int n);

// Exact finite composition (A * D * B)_{m,n} = sum over degenerate sites l
// of A_{m,l} * diag(w,0) * B_{l,n}; h-exponents add as (l-m) + (n-l).
// A's column range and B's row range must cover the support.
KernelWindow compose_through_D(const KernelWindow& A, const KernelWindow& B,
                               const Potential& p);

// Both defining recursions of the kernel, checked on every interior entry:
// W(m+1,n) - u_m W(m,n) = delta and W(m,n-1) - W(m,n) u_n = delta, with u
// regularized per the window's flag.
IdentityReport check_inverse_on(const Potential& p, const KernelWindow& w);
IdentityReport check_inverse(const Potential& p, RegionTag region, WindowBounds b,
                             bool regularized = true);

// The modified inverse relations of the unregularized operator in the
// upper-triangular region: L M = I + D M1 and its dual, the residue chains
// L Mj = D M(j+1) with M(Q+1) = 0, plus informational probes of the
// variant chain carrying an extra identity term.
std::vector<IdentityReport> check_modified_inverse(const Potential& p, WindowBounds b);

// Resolvent-difference identity M(t1) - M(t2) = (t1 - t2) M(t2) D M(t1)
// with t1, t2 arbitrary distinct ring elements substituted for lambda.
IdentityReport check_hilbert(const Potential& p, RegionTag region, const RatFun& t1,
                             const RatFun& t2, WindowBounds b);

// Residue algebra: Mj = -Mj D M1 = -M1 D Mj, Mj D M = M D Mj = 0, the
// product ladder Mj D Ml = -[Q+1 >= l+j] M(l+j-1), and shift invariance.
// Empty for potentials without degenerate sites.
std::vector<IdentityReport> check_residue_algebra(const Potential& p, WindowBounds b);

// x_{m+1} = u_m x_m and y_{n-1} = y_n u_n over [lo, hi].
IdentityReport check_annihilators(const Potential& p, int lo, int hi,
                                  bool regularized = true,
                                  std::optional<int> corrupt_at = std::nullopt);

// Cross-checks used by the acceptance gate and the verify command.
IdentityReport check_triangular_consistency(const Potential& p, WindowBounds b);
IdentityReport check_lambda_structure(const Potential& p, WindowBounds b);
IdentityReport check_residues_vs_series(const Potential& p, WindowBounds b);
IdentityReport check_expansion_resummation(const Potential& p, WindowBounds b);

// The selective-product expansion of the inverse transition matrix against
// direct inversion followed by series extraction; fixes the scalar w power
// carried by each order.
IdentityReport check_transition_expansion(const Potential& p);

struct BoundaryPairReport {
    double h_minus = 0.0;
    double h_plus = 0.0;
    std::string region_minus;
    std::string region_plus;
    double lambda0 = 0.0;
    double max_abs_jump = 0.0;
    double max_rel_mismatch = 0.0; // jump vs coupling-difference prediction
    bool pass = false;
};

// Numeric probe of the kernel discontinuity across the boundary surfaces:
// for each (h-, h+) pair the h-free entry jump must match
// -x_m (Gamma+ - Gamma-) y_n evaluated at (w0, lambda0).  Pairs inside one
// region must show no jump; pairs straddling both surfaces are rejected.
std::vector<BoundaryPairReport>
discontinuity_probe(const Potential& p, std::complex<double> w0,
                    const std::vector<std::pair<double, double>>& h_pairs,
                    double tol = 1e-9, double lambda0 = -1.0, int margin = 2);

// Modified inverse, residue algebra, and the resolvent-difference identity
// in every region, sharing one expansion computation.
std::vector<IdentityReport> check_identity_ladder(const Potential& p, WindowBounds b,
                                                  long hilbert_constant = 2);

struct SuiteOptions {
    std::optional<WindowBounds> window;
    std::optional<std::pair<int, int>> corrupt; // bump e11 of this entry by 1
    long hilbert_constant = 2;                  // second lambda marker
};

// Every identity suite for one potential, across all four regions where a
// region applies; deterministic report order.
std::vector<IdentityReport> run_all_suites(const Potential& p, const SuiteOptions& opts = {});

} // namespace alres
