#include "alres/bilaurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace alres {

int BiLaurent::exponent_guard = 1'000'000;

namespace {

void check_exponents(int w_exp, int l_exp)
{
    if (l_exp < 0)
        fail(ErrorCode::InvalidArgument, "lambda exponent must be non-negative");
    const int guard = BiLaurent::exponent_guard;
    if (w_exp > guard || w_exp < -guard || l_exp > guard)
        fail(ErrorCode::ExponentGuard,
             "exponent exceeds guard of " + std::to_string(guard));
}

std::complex<double> ipow(std::complex<double> x, long e)
{
    if (e < 0)
        return 1.0 / ipow(x, -e);
    std::complex<double> acc(1.0, 0.0);
    std::complex<double> base = x;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace

BiLaurent BiLaurent::constant(Int c)
{
    return monomial(std::move(c), 0, 0);
}

BiLaurent BiLaurent::monomial(Int c, int w_exp, int l_exp)
{
    BiLaurent p;
    p.add_term(w_exp, l_exp, c);
    return p;
}

BiLaurent BiLaurent::w(int e)
{
    return monomial(1, e, 0);
}

BiLaurent BiLaurent::lam(int e)
{
    return monomial(1, 0, e);
}

Int BiLaurent::coeff(int w_exp, int l_exp) const
{
    auto it = terms_.find({w_exp, l_exp});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiLaurent::add_term(int w_exp, int l_exp, const Int& c)
{
    if (c == 0)
        return;
    check_exponents(w_exp, l_exp);
    auto [it, inserted] = terms_.try_emplace({w_exp, l_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BiLaurent BiLaurent::operator-() const
{
    BiLaurent r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

BiLaurent BiLaurent::operator+(const BiLaurent& o) const
{
    BiLaurent r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = r.terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                r.terms_.erase(it);
        }
    }
    return r;
}

BiLaurent BiLaurent::operator-(const BiLaurent& o) const
{
    BiLaurent r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = r.terms_.try_emplace(k, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                r.terms_.erase(it);
        }
    }
    return r;
}

BiLaurent BiLaurent::operator*(const BiLaurent& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    BiLaurent r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            const int we = ka.first + kb.first;
            const int le = ka.second + kb.second;
            check_exponents(we, le);
            auto [it, inserted] = r.terms_.try_emplace({we, le}, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    }
    return r;
}

BiLaurent BiLaurent::pow(int e) const
{
    if (e < 0)
        fail(ErrorCode::InvalidArgument, "BiLaurent::pow expects e >= 0");
    BiLaurent acc = constant(1);
    BiLaurent base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int BiLaurent::min_wexp() const
{
    int m = std::numeric_limits<int>::max();
    for (const auto& [k, c] : terms_)
        m = std::min(m, k.first);
    return terms_.empty() ? 0 : m;
}

int BiLaurent::max_wexp() const
{
    int m = std::numeric_limits<int>::min();
    for (const auto& [k, c] : terms_)
        m = std::max(m, k.first);
    return terms_.empty() ? 0 : m;
}

int BiLaurent::min_lexp() const
{
    int m = std::numeric_limits<int>::max();
    for (const auto& [k, c] : terms_)
        m = std::min(m, k.second);
    return terms_.empty() ? 0 : m;
}

int BiLaurent::max_lexp() const
{
    int m = std::numeric_limits<int>::min();
    for (const auto& [k, c] : terms_)
        m = std::max(m, k.second);
    return terms_.empty() ? 0 : m;
}

BiLaurent BiLaurent::shifted(int dw, int dl) const
{
    BiLaurent r;
    for (const auto& [k, c] : terms_) {
        check_exponents(k.first + dw, k.second + dl);
        r.terms_.emplace(Key{k.first + dw, k.second + dl}, c);
    }
    return r;
}

Int BiLaurent::content() const
{
    Int g = 0;
    for (const auto& [k, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1)
            break;
    }
    return g;
}

BiLaurent BiLaurent::divided_by(const Int& g) const
{
    if (g == 0)
        fail(ErrorCode::ZeroDivide, "division of polynomial by zero integer");
    BiLaurent r;
    for (const auto& [k, c] : terms_) {
        if (c % g != 0)
            fail(ErrorCode::UnsupportedDenominator, "inexact integer division of coefficient");
        r.terms_.emplace(k, c / g);
    }
    return r;
}

BiLaurent BiLaurent::lambda_coefficient(int j) const
{
    BiLaurent r;
    for (const auto& [k, c] : terms_)
        if (k.second == j)
            r.terms_.emplace(Key{k.first, 0}, c);
    return r;
}

std::map<int, BiLaurent> BiLaurent::lambda_grading() const
{
    std::map<int, BiLaurent> g;
    for (const auto& [k, c] : terms_)
        g[k.second].terms_.emplace(Key{k.first, 0}, c);
    return g;
}

std::complex<double> BiLaurent::eval(std::complex<double> w0, std::complex<double> l0) const
{
    if (terms_.empty())
        return {0.0, 0.0};
    if (w0 == std::complex<double>(0.0, 0.0) && min_wexp() < 0)
        fail(ErrorCode::PoleAtOrigin, "evaluation at w = 0 with negative w powers");

    // Two-level Horner over the sparse exponent grid: within each
    // w-exponent group accumulate the lambda polynomial, then fold the
    // groups together walking the w-exponents downward.
    std::map<int, std::complex<double>> by_w;
    {
        auto it = terms_.begin();
        while (it != terms_.end()) {
            const int we = it->first.first;
            // terms within one w-group are ordered by ascending lambda exponent
            std::complex<double> acc(0.0, 0.0);
            int prev_le = -1;
            std::map<int, std::complex<double>> lam_terms;
            while (it != terms_.end() && it->first.first == we) {
                lam_terms[it->first.second] = it->second.convert_to<double>();
                ++it;
            }
            for (auto rit = lam_terms.rbegin(); rit != lam_terms.rend(); ++rit) {
                if (prev_le < 0)
                    acc = rit->second;
                else
                    acc = acc * ipow(l0, prev_le - rit->first) + rit->second;
                prev_le = rit->first;
            }
            acc *= ipow(l0, prev_le);
            by_w[we] = acc;
        }
    }
    std::complex<double> acc(0.0, 0.0);
    int prev_we = 0;
    bool first = true;
    for (auto rit = by_w.rbegin(); rit != by_w.rend(); ++rit) {
        if (first) {
            acc = rit->second;
            first = false;
        } else {
            acc = acc * ipow(w0, prev_we - rit->first) + rit->second;
        }
        prev_we = rit->first;
    }
    return acc * ipow(w0, prev_we);
}

double BiLaurent::coeff_l1_norm() const
{
    double s = 0.0;
    for (const auto& [k, c] : terms_)
        s += int_abs(c).convert_to<double>();
    return s;
}

std::string BiLaurent::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        const bool has_var = k.first != 0 || k.second != 0;
        if (a != 1 || !has_var)
            os << a.str();
        bool need_star = a != 1;
        if (k.first != 0) {
            if (need_star)
                os << "*";
            os << "w";
            if (k.first != 1)
                os << "^" << k.first;
            need_star = true;
        }
        if (k.second != 0) {
            if (need_star)
                os << "*";
            os << "lambda";
            if (k.second != 1)
                os << "^" << k.second;
        }
    }
    return os.str();
}

} // namespace alres
