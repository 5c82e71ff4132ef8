#include <qdrg/number.hpp>
#include <qdrg/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <regex>
#include <stdexcept>

namespace qdrg {

Rational ratio(const Integer & n, const Integer & d)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational & x)
{
    return x.get_str();
}

Rational parse_rational(std::string_view text)
{
    static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
    std::match_results<std::string_view::const_iterator> m;
    if (! std::regex_match(text.begin(), text.end(), m, pattern))
        throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    std::string num = m[1].str();
    if (num.front() == '+')
        num.erase(0, 1);
    Rational r(Integer(num), m[2].matched ? Integer(m[2].str()) : Integer(1));
    if (r.get_den() == 0)
        throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::pair<Integer, Integer> split_square(const Integer & n)
{
    if (n < 0)
        throw std::domain_error("split_square of a negative integer");
    Integer square = 1, free = 1, rest = n;
    if (rest == 0)
        return {0, 1};
    for (Integer p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i)
            square *= p;
        if (e % 2)
            free *= p;
    }
    free *= rest;
    return {square, free};
}

Surd::Surd(const Rational & a, const Rational & b, const Integer & radicand) : _a(a)
{
    if (radicand < 0)
        throw std::domain_error("negative radicand");
    if (b == 0 || radicand == 0)
        return;
    auto [s, d] = split_square(radicand);
    if (d == 1) {
        _a += b * Rational(s);
        return;
    }
    _b = b * Rational(s);
    _d = d;
}

const Integer & Surd::field_of(const Surd & x, const Surd & y)
{
    if (! compatible(x, y))
        throw std::domain_error("mixing quadratic fields sqrt(" + x._d.get_str() + ") and sqrt(" +
                                y._d.get_str() + ")");
    return x.is_rational() ? y._d : x._d;
}

int Surd::sign() const
{
    int sa = sgn(_a), sb = sgn(_b);
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    Rational lhs = _a * _a, rhs = _b * _b * Rational(_d);
    return lhs > rhs ? sa : sb;
}

double Surd::to_double() const
{
    if (is_rational())
        return _a.get_d();
    double root = std::sqrt(_d.get_d());
    if (sgn(_a) * sgn(_b) >= 0)
        return _a.get_d() + _b.get_d() * root;
    // a + b*sqrt(d) = (a^2 - b^2 d) / (a - b*sqrt(d)) avoids cancellation
    Rational num = _a * _a - _b * _b * Rational(_d);
    return num.get_d() / (_a.get_d() - _b.get_d() * root);
}

Surd Surd::conjugate() const
{
    Surd r = *this;
    r._b = -r._b;
    return r;
}

std::string Surd::str() const
{
    if (is_rational())
        return to_string(_a);
    std::string out;
    if (_a != 0)
        out = to_string(_a);
    Rational mag = abs(_b);
    if (_b < 0)
        out += "-";
    else if (! out.empty())
        out += "+";
    if (mag != 1)
        out += to_string(mag) + "*";
    out += "sqrt(" + _d.get_str() + ")";
    return out;
}

Surd Surd::parse(std::string_view text)
{
    static const std::regex pattern(
            R"(\s*([+-]?\d+(?:/\d+)?)?\s*(?:([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(\d+)\s*\))?\s*)");
    std::match_results<std::string_view::const_iterator> m;
    if (text.empty() || ! std::regex_match(text.begin(), text.end(), m, pattern) ||
        (! m[1].matched && ! m[4].matched))
        throw Error(Errc::ParseError, "not a quadratic surd: '" + std::string(text) + "'");
    Rational a = m[1].matched ? parse_rational(m[1].str()) : Rational(0);
    if (! m[4].matched)
        return Surd(a);
    if (m[1].matched && m[2].length() == 0)
        throw Error(Errc::ParseError, "missing sign before sqrt in '" + std::string(text) + "'");
    Rational b = m[3].matched ? parse_rational(m[3].str()) : Rational(1);
    if (m[2].str() == "-")
        b = -b;
    return Surd(a, b, Integer(m[4].str()));
}

Surd Surd::operator-() const
{
    Surd r = *this;
    r._a = -r._a;
    r._b = -r._b;
    return r;
}

Surd operator+(const Surd & x, const Surd & y)
{
    return Surd(x._a + y._a, x._b + y._b, Surd::field_of(x, y));
}

Surd operator-(const Surd & x, const Surd & y)
{
    return x + (-y);
}

Surd operator*(const Surd & x, const Surd & y)
{
    const Integer & d = Surd::field_of(x, y);
    Rational dq(d);
    return Surd(x._a * y._a + x._b * y._b * dq, x._a * y._b + x._b * y._a, d);
}

Surd operator/(const Surd & x, const Surd & y)
{
    if (y._a == 0 && y._b == 0)
        throw std::domain_error("division by zero");
    const Integer & d = Surd::field_of(x, y);
    Rational norm = y._a * y._a - y._b * y._b * Rational(d);
    Surd inv(y._a / norm, -y._b / norm, d);
    return x * inv;
}

namespace {

template <class ExactOp, class FloatOp>
Number combine(const Number & x, const Number & y, ExactOp exact, FloatOp approx)
{
    if (x.is_exact() && y.is_exact() && compatible(*x.exact(), *y.exact()))
        return Number(exact(*x.exact(), *y.exact()));
    return Number(approx(x.value(), y.value()));
}

} // namespace

Number operator+(const Number & x, const Number & y)
{
    return combine(x, y, std::plus<Surd>(), std::plus<double>());
}

Number operator-(const Number & x, const Number & y)
{
    return combine(x, y, std::minus<Surd>(), std::minus<double>());
}

Number operator*(const Number & x, const Number & y)
{
    return combine(x, y, std::multiplies<Surd>(), std::multiplies<double>());
}

Number operator/(const Number & x, const Number & y)
{
    return combine(x, y, std::divides<Surd>(), std::divides<double>());
}

Number Number::operator-() const
{
    if (_exact)
        return Number(-*_exact);
    return Number(-_approx);
}

std::string Number::str() const
{
    if (_exact)
        return _exact->str();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", _approx);
    return buf;
}

bool nearly_equal(double x, double y, double tol)
{
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

bool coincide(const Number & x, const Number & y, double tol)
{
    if (x.is_exact() && y.is_exact() && compatible(*x.exact(), *y.exact()))
        return *x.exact() == *y.exact();
    return nearly_equal(x.value(), y.value(), tol);
}

} // namespace qdrg

namespace qdrg {

int compare(const Number & x, const Number & y)
{
    if (x.is_exact() && y.is_exact() && compatible(*x.exact(), *y.exact()))
        return (*x.exact() - *y.exact()).sign();
    return (x.value() > y.value()) - (x.value() < y.value());
}

} // namespace qdrg
