#include "alres/mat2.hpp"

#include <sstream>

namespace alres {

Mat2 Mat2::identity()
{
    return diag(RatFun::integer(1), RatFun::integer(1));
}

Mat2 Mat2::diag(RatFun a, RatFun b)
{
    return Mat2(std::move(a), RatFun(), RatFun(), std::move(b));
}

Mat2 Mat2::w_sigma(int k)
{
    return diag(RatFun::w(k), RatFun::w(-k));
}

Mat2 Mat2::upper_projector()
{
    return diag(RatFun::integer(1), RatFun());
}

Mat2 Mat2::lower_projector()
{
    return diag(RatFun(), RatFun::integer(1));
}

bool Mat2::is_zero() const
{
    return e_[0].is_zero() && e_[1].is_zero() && e_[2].is_zero() && e_[3].is_zero();
}

bool Mat2::operator==(const Mat2& o) const
{
    return e_[0] == o.e_[0] && e_[1] == o.e_[1] && e_[2] == o.e_[2] && e_[3] == o.e_[3];
}

Mat2 Mat2::operator-() const
{
    return Mat2(-e_[0], -e_[1], -e_[2], -e_[3]);
}

Mat2 Mat2::operator+(const Mat2& o) const
{
    return Mat2(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3]);
}

Mat2 Mat2::operator-(const Mat2& o) const
{
    return Mat2(e_[0] - o.e_[0], e_[1] - o.e_[1], e_[2] - o.e_[2], e_[3] - o.e_[3]);
}

Mat2 Mat2::operator*(const Mat2& o) const
{
    return Mat2(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
}

Mat2 Mat2::scaled(const RatFun& s) const
{
    return Mat2(s * e_[0], s * e_[1], s * e_[2], s * e_[3]);
}

RatFun Mat2::det() const
{
    return e_[0] * e_[3] - e_[1] * e_[2];
}

Mat2 Mat2::adjugate() const
{
    return Mat2(e_[3], -e_[1], -e_[2], e_[0]);
}

Mat2 Mat2::inverse() const
{
    const RatFun d = det();
    if (d.is_zero())
        fail(ErrorCode::SingularMatrix, "matrix determinant is identically zero");
    const RatFun inv_d = RatFun::integer(1) / d;
    return adjugate().scaled(inv_d);
}

Mat2 Mat2::lambda_coefficient(int j) const
{
    return Mat2(e_[0].lambda_coefficient(j), e_[1].lambda_coefficient(j),
                e_[2].lambda_coefficient(j), e_[3].lambda_coefficient(j));
}

Mat2 Mat2::lambda_substitute(const RatFun& t) const
{
    return Mat2(e_[0].lambda_substitute(t), e_[1].lambda_substitute(t),
                e_[2].lambda_substitute(t), e_[3].lambda_substitute(t));
}

std::array<std::complex<double>, 4> Mat2::eval(std::complex<double> w0,
                                               std::complex<double> l0) const
{
    return {e_[0].eval(w0, l0), e_[1].eval(w0, l0), e_[2].eval(w0, l0), e_[3].eval(w0, l0)};
}

std::string Mat2::str() const
{
    std::ostringstream os;
    os << "[[" << e_[0].str() << ", " << e_[1].str() << "], [" << e_[2].str() << ", "
       << e_[3].str() << "]]";
    return os.str();
}

} // namespace alres
