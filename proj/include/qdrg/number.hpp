#pragma once

#include <gmpxx.h>

#include <cstdint>

#include <optional>
#include <string>
#include <string_view>

namespace qdrg {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms; d != 0.
Rational ratio(const Integer & n, const Integer & d);

/// Prints `p` or `p/q` in lowest terms.
std::string to_string(const Rational & x);

/// Accepts `p`, `-p`, `p/q` (q > 0); throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// An element a + b*sqrt(d) of a real quadratic field, d squarefree.
///
/// Rationals are the b = 0 case and combine with any field. Mixing two
/// distinct radicands throws std::domain_error; callers test `compatible`
/// first and fall back to floating point.
class Surd {
public:
    Surd() = default;
    Surd(std::int64_t a) : _a(a) {}
    Surd(const Rational & a) : _a(a) {}
    /// a + b*sqrt(radicand), radicand >= 0 any integer; square factors are pulled out.
    Surd(const Rational & a, const Rational & b, const Integer & radicand);

    static Surd sqrt(const Integer & radicand) { return Surd(0, 1, radicand); }

    const Rational & rational_part() const { return _a; }
    const Rational & irrational_part() const { return _b; }
    /// 1 for rationals.
    const Integer & radicand() const { return _d; }

    bool is_rational() const { return _b == 0; }
    bool is_integer() const { return is_rational() && _a.get_den() == 1; }

    double to_double() const;
    int sign() const;
    Surd conjugate() const;

    /// `3`, `-1/2`, `2+sqrt(2)`, `-5/2+1/2*sqrt(105)`.
    std::string str() const;
    static Surd parse(std::string_view text);

    friend bool compatible(const Surd & x, const Surd & y)
    {
        return x.is_rational() || y.is_rational() || x._d == y._d;
    }

    Surd operator-() const;
    friend Surd operator+(const Surd & x, const Surd & y);
    friend Surd operator-(const Surd & x, const Surd & y);
    friend Surd operator*(const Surd & x, const Surd & y);
    friend Surd operator/(const Surd & x, const Surd & y);
    friend bool operator==(const Surd & x, const Surd & y)
    {
        return x._a == y._a && x._b == y._b && (x._b == 0 || x._d == y._d);
    }
    friend bool operator<(const Surd & x, const Surd & y) { return (x - y).sign() < 0; }

private:
    static const Integer & field_of(const Surd & x, const Surd & y);

    Rational _a = 0;
    Rational _b = 0;
    Integer _d = 1;
};

/// Real number carried exactly when it lives in Q or a quadratic field,
/// otherwise as a double. Arithmetic stays exact while both operands are
/// exact and compatible.
class Number {
public:
    Number() = default;
    Number(double approx) : _approx(approx) {}
    Number(std::int64_t x) : _approx(double(x)), _exact(Surd(x)) {}
    Number(int x) : Number(static_cast<std::int64_t>(x)) {}
    Number(const Rational & x) : _approx(x.get_d()), _exact(Surd(x)) {}
    Number(const Surd & x) : _approx(x.to_double()), _exact(x) {}

    double value() const { return _approx; }
    const std::optional<Surd> & exact() const { return _exact; }
    bool is_exact() const { return _exact.has_value(); }
    bool is_rational() const { return _exact && _exact->is_rational(); }
    bool is_integer() const { return _exact && _exact->is_integer(); }

    /// Exact form when known, otherwise %.17g.
    std::string str() const;

    friend Number operator+(const Number & x, const Number & y);
    friend Number operator-(const Number & x, const Number & y);
    friend Number operator*(const Number & x, const Number & y);
    friend Number operator/(const Number & x, const Number & y);
    Number operator-() const;

    friend bool operator==(const Number & x, const Number & y)
    {
        return x._approx == y._approx && x._exact == y._exact;
    }

private:
    double _approx = 0.0;
    std::optional<Surd> _exact;
};

/// Relative tolerance of the distinctness rule.
inline constexpr double coincidence_tolerance = 1e-8;

/// |x - y| <= tol * max(1, |x|, |y|).
bool nearly_equal(double x, double y, double tol = coincidence_tolerance);

/// Distinctness rule used throughout: exact equality when both values are
/// exact in a common field, the relative tolerance rule otherwise.
bool coincide(const Number & x, const Number & y, double tol = coincidence_tolerance);

/// Largest s with s*s | n, returned with the squarefree cofactor.
std::pair<Integer, Integer> split_square(const Integer & n);

} // namespace qdrg

namespace qdrg {

/// Sign of x - y; exact when possible, plain double comparison otherwise.
int compare(const Number & x, const Number & y);

} // namespace qdrg
