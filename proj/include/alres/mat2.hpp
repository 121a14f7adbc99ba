#pragma once

#include <array>
#include <complex>

#include "alres/ratfun.hpp"

namespace alres {

/// 2x2 matrix over RatFun; the value type every kernel entry lives in.
class Mat2 {
public:
    Mat2() = default; // zero matrix
    Mat2(RatFun e11, RatFun e12, RatFun e21, RatFun e22)
        : e_{std::move(e11), std::move(e12), std::move(e21), std::move(e22)}
    {
    }

    static Mat2 zero() { return {}; }
    static Mat2 identity();
    static Mat2 diag(RatFun a, RatFun b);
    // diag(w^k, w^-k): the free site matrix raised to an integer power.
    static Mat2 w_sigma(int k);
    static Mat2 upper_projector(); // diag(1, 0)
    static Mat2 lower_projector(); // diag(0, 1)

    const RatFun& at(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }
    RatFun& at(int i, int j) { return e_[static_cast<std::size_t>(2 * i + j)]; }

    const RatFun& e11() const { return e_[0]; }
    const RatFun& e12() const { return e_[1]; }
    const RatFun& e21() const { return e_[2]; }
    const RatFun& e22() const { return e_[3]; }

    bool is_zero() const;
    bool operator==(const Mat2& o) const;
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    Mat2 operator-() const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 scaled(const RatFun& s) const;

    RatFun det() const;
    Mat2 adjugate() const;
    Mat2 inverse() const; // throws SingularMatrix when det == 0

    Mat2 lambda_coefficient(int j) const;
    Mat2 lambda_substitute(const RatFun& t) const;

    std::array<std::complex<double>, 4> eval(std::complex<double> w0,
                                             std::complex<double> l0) const;

    std::string str() const;

private:
    std::array<RatFun, 4> e_{};
};

inline Mat2 operator*(const RatFun& s, const Mat2& m) { return m.scaled(s); }

} // namespace alres
