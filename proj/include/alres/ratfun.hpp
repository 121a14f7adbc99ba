#pragma once

#include <complex>
#include <map>
#include <string>

#include "alres/bilaurent.hpp"

namespace alres {

/**
 * Exact rational function num/den over BiLaurent.  Equality is decided by
 * cross-multiplication, never by floating comparison, so values need no
 * canonical form.  Normalization is lazy: common integer content and
 * common monomial factors are stripped, the denominator's w-range is
 * anchored at exponent zero, and its leading sign is made positive.
 * Full polynomial gcd reduction is deliberately not attempted.
 */
class RatFun {
public:
    RatFun() : num_(), den_(BiLaurent::constant(1)) {}
    RatFun(BiLaurent num) : num_(std::move(num)), den_(BiLaurent::constant(1)) { reduce(); }
    RatFun(BiLaurent num, BiLaurent den);

    static RatFun integer(long v) { return RatFun(BiLaurent::constant(Int(v))); }
    static RatFun w(int e = 1) { return RatFun(BiLaurent::w(e)); }
    static RatFun lam(int e = 1) { return RatFun(BiLaurent::lam(e)); }

    const BiLaurent& num() const noexcept { return num_; }
    const BiLaurent& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool operator==(const RatFun& o) const; // num1*den2 == num2*den1
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const; // throws ZeroDivide on zero divisor

    bool is_lambda_free() const;
    // True when the reduced denominator is a single lambda-free monomial,
    // i.e. the value is itself a Laurent polynomial over the rationals
    // that happens to have integer coefficients.
    bool is_laurent_poly() const;
    BiLaurent as_bilaurent() const; // throws UnsupportedDenominator otherwise

    // Coefficients of lambda^low..lambda^high of the Laurent expansion at
    // lambda = 0, each a lambda-free rational function of w.  Orders with
    // zero coefficient are omitted from the map.
    std::map<int, RatFun> lambda_series(int low, int high) const;
    RatFun lambda_coefficient(int j) const;

    // Substitutes lambda := t, with t any ring element.
    RatFun lambda_substitute(const RatFun& t) const;

    std::complex<double> eval(std::complex<double> w0, std::complex<double> l0) const;

    std::string str() const;

    // Near-singular evaluation threshold, relative to the denominator's
    // coefficient 1-norm.
    static double near_singular_rel_threshold;

private:
    BiLaurent num_;
    BiLaurent den_;
    void reduce();
};

inline RatFun operator*(const BiLaurent& a, const RatFun& b) { return RatFun(a) * b; }

} // namespace alres
