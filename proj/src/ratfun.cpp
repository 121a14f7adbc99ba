#include "alres/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace alres {

double RatFun::near_singular_rel_threshold = 1e-9;

RatFun::RatFun(BiLaurent num, BiLaurent den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        fail(ErrorCode::ZeroDivide, "rational function with zero denominator");
    reduce();
}

void RatFun::reduce()
{
    if (num_.is_zero()) {
        den_ = BiLaurent::constant(1);
        return;
    }
    // strip the common lambda power (lambda exponents must stay >= 0)
    const int dl = std::min(num_.min_lexp(), den_.min_lexp());
    // anchor the denominator's lowest w-exponent at zero (w is a unit)
    const int dw = den_.min_wexp();
    if (dl != 0 || dw != 0) {
        num_ = num_.shifted(-dw, -dl);
        den_ = den_.shifted(-dw, -dl);
    }
    const Int g = int_gcd(num_.content(), den_.content());
    if (g > 1) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    if (den_.terms().begin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RatFun::operator==(const RatFun& o) const
{
    if (num_.is_zero())
        return o.num_.is_zero();
    if (o.num_.is_zero())
        return false;
    if (den_ == o.den_)
        return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

RatFun RatFun::operator-() const
{
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    if (den_ == o.den_)
        return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return -o;
    if (den_ == o.den_)
        return RatFun(num_ - o.num_, den_);
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const
{
    if (is_zero() || o.is_zero())
        return RatFun();
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const
{
    if (o.is_zero())
        fail(ErrorCode::ZeroDivide, "division by the zero rational function");
    if (is_zero())
        return RatFun();
    return RatFun(num_ * o.den_, den_ * o.num_);
}

bool RatFun::is_lambda_free() const
{
    return num_.max_lexp() == 0 && num_.min_lexp() == 0 && den_.max_lexp() == 0
        && den_.min_lexp() == 0;
}

bool RatFun::is_laurent_poly() const
{
    if (!den_.is_single_term())
        return false;
    const auto& [key, c] = *den_.terms().begin();
    if (key.second != 0)
        return false;
    // integer coefficients required: every numerator coefficient divisible
    for (const auto& [k, a] : num_.terms())
        if (a % c != 0)
            return false;
    return true;
}

BiLaurent RatFun::as_bilaurent() const
{
    if (num_.is_zero())
        return {};
    if (!den_.is_single_term())
        fail(ErrorCode::UnsupportedDenominator, "denominator is not a monomial");
    const auto& [key, c] = *den_.terms().begin();
    if (key.second != 0)
        fail(ErrorCode::UnsupportedDenominator, "denominator carries a lambda power");
    return num_.shifted(-key.first, 0).divided_by(c);
}

std::map<int, RatFun> RatFun::lambda_series(int low, int high) const
{
    std::map<int, RatFun> out;
    if (num_.is_zero() || low > high)
        return out;

    // den = lambda^p * d with d(w, 0) nonzero by minimality of p; the
    // series of num/den is lambda^{s-p} times the regular series of
    // (num/lambda^s) / d, computed by the standard division recurrence.
    const int p = den_.min_lexp();
    const int s = num_.min_lexp();
    const BiLaurent d = den_.shifted(0, -p);
    const BiLaurent n = num_.shifted(0, -s);
    const int base = s - p;

    const auto d_parts = d.lambda_grading();
    const auto n_parts = n.lambda_grading();
    const RatFun d0 = RatFun(d_parts.begin()->second); // lambda^0 part, nonzero

    const int orders = high - base; // need c_0 .. c_orders
    if (orders < 0)
        return out;

    std::vector<RatFun> c(static_cast<std::size_t>(orders) + 1);
    for (int i = 0; i <= orders; ++i) {
        RatFun acc;
        if (auto it = n_parts.find(i); it != n_parts.end())
            acc = RatFun(it->second);
        for (int t = 1; t <= i; ++t) {
            auto it = d_parts.find(t);
            if (it == d_parts.end())
                continue;
            acc = acc - RatFun(it->second) * c[static_cast<std::size_t>(i - t)];
        }
        c[static_cast<std::size_t>(i)] = acc / d0;
        const int order = base + i;
        if (order >= low && order <= high && !c[static_cast<std::size_t>(i)].is_zero())
            out.emplace(order, c[static_cast<std::size_t>(i)]);
    }
    return out;
}

RatFun RatFun::lambda_coefficient(int j) const
{
    auto m = lambda_series(j, j);
    auto it = m.find(j);
    return it == m.end() ? RatFun() : it->second;
}

RatFun RatFun::lambda_substitute(const RatFun& t) const
{
    auto subst = [&t](const BiLaurent& p) {
        const auto parts = p.lambda_grading();
        RatFun acc;
        int prev = -1;
        for (auto rit = parts.rbegin(); rit != parts.rend(); ++rit) {
            RatFun part = RatFun(rit->second);
            if (prev < 0) {
                acc = part;
            } else {
                RatFun tp = RatFun::integer(1);
                for (int i = 0; i < prev - rit->first; ++i)
                    tp = tp * t;
                acc = acc * tp + part;
            }
            prev = rit->first;
        }
        if (prev > 0) {
            RatFun tp = RatFun::integer(1);
            for (int i = 0; i < prev; ++i)
                tp = tp * t;
            acc = acc * tp;
        }
        return acc;
    };
    const RatFun n = subst(num_);
    const RatFun d = subst(den_);
    if (d.is_zero())
        fail(ErrorCode::ZeroDivide, "lambda substitution makes the denominator vanish");
    return n / d;
}

std::complex<double> RatFun::eval(std::complex<double> w0, std::complex<double> l0) const
{
    if (w0 == std::complex<double>(0.0, 0.0))
        fail(ErrorCode::PoleAtOrigin, "evaluation requires w != 0");
    const std::complex<double> dv = den_.eval(w0, l0);
    const double floor = near_singular_rel_threshold * den_.coeff_l1_norm();
    if (std::abs(dv) < floor) {
        std::ostringstream os;
        os << "denominator " << den_.str() << " evaluates to |" << std::abs(dv)
           << "| below threshold " << floor;
        fail(ErrorCode::NearSingularEvaluation, os.str());
    }
    return num_.eval(w0, l0) / dv;
}

std::string RatFun::str() const
{
    if (den_ == BiLaurent::constant(1))
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace alres
