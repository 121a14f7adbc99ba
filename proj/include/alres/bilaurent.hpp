#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "alres/bigint.hpp"
#include "alres/errors.hpp"

namespace alres {

/**
 * Exact Laurent polynomial in w that is an ordinary polynomial in the
 * regularization variable lambda: integer coefficients, w-exponents of
 * either sign, lambda-exponents >= 0.  No coefficient stored is zero,
 * so term maps compare canonically.
 */
class BiLaurent {
public:
    using Key = std::pair<int, int>; // (w exponent, lambda exponent)
    using TermMap = std::map<Key, Int>;

    BiLaurent() = default;

    static BiLaurent constant(Int c);
    static BiLaurent monomial(Int c, int w_exp, int l_exp = 0);
    static BiLaurent w(int e = 1);
    static BiLaurent lam(int e = 1);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_single_term() const noexcept { return terms_.size() == 1; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    bool operator==(const BiLaurent&) const = default;

    Int coeff(int w_exp, int l_exp) const;

    // Accumulates c into the (w_exp, l_exp) slot, dropping the term if the
    // sum cancels.  Enforces l_exp >= 0 and the exponent guard.
    void add_term(int w_exp, int l_exp, const Int& c);

    BiLaurent operator-() const;
    BiLaurent operator+(const BiLaurent& o) const;
    BiLaurent operator-(const BiLaurent& o) const;
    BiLaurent operator*(const BiLaurent& o) const;
    BiLaurent pow(int e) const; // e >= 0

    // Exponent ranges; only meaningful on nonzero values (zero yields 0).
    int min_wexp() const;
    int max_wexp() const;
    int min_lexp() const;
    int max_lexp() const;

    // Multiplies by w^dw * lambda^dl (dl may be negative only when every
    // stored lambda exponent stays >= 0).
    BiLaurent shifted(int dw, int dl) const;

    Int content() const;                      // gcd of |coefficients|, 0 for zero
    BiLaurent divided_by(const Int& g) const; // exact, throws on inexact division

    // Coefficient of lambda^j as a w-only Laurent polynomial.
    BiLaurent lambda_coefficient(int j) const;
    std::map<int, BiLaurent> lambda_grading() const;

    std::complex<double> eval(std::complex<double> w0, std::complex<double> l0) const;
    double coeff_l1_norm() const;

    std::string str() const;

    // Fail-fast cap on |exponent| to catch runaway window computations.
    static int exponent_guard;

private:
    TermMap terms_;
};

} // namespace alres
