#include <qdrg/intersection_array.hpp>
#include <qdrg/error.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace qdrg {

namespace {

std::string join(const std::vector<std::int64_t> & xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<std::int64_t> parse_list(std::string_view text, std::string_view whole)
{
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw Error(Errc::ParseError, "bad entry '" + std::string(field) + "' in '" + std::string(whole) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

Surd evaluate(const std::vector<Integer> & poly, const Surd & x)
{
    Surd acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * x + Surd(Rational(*it));
    return acc;
}

/// Remainder-free division of an integer polynomial by x^2 - s x + p.
bool divides_quadratic(const std::vector<Integer> & poly, const Integer & s, const Integer & p)
{
    // synthetic division from the top coefficient down
    std::vector<Integer> rem(poly.rbegin(), poly.rend());
    for (std::size_t i = 0; i + 2 < rem.size(); ++i) {
        Integer lead = rem[i];
        rem[i + 1] += s * lead;
        rem[i + 2] -= p * lead;
    }
    return rem.size() < 2 || (rem[rem.size() - 2] == 0 && rem.back() == 0);
}

/// Upgrades numeric roots of a monic integer polynomial with simple roots to
/// exact integers or conjugate quadratic pairs where they are such.
std::vector<Number> identify_roots(const std::vector<Integer> & poly, const std::vector<double> & roots)
{
    std::vector<Number> out(roots.begin(), roots.end());
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        double x = roots[i];
        double m = std::round(x);
        if (std::abs(x - m) <= 1e-7 * std::max(1.0, std::abs(x)) &&
            evaluate(poly, Surd(static_cast<std::int64_t>(m))).sign() == 0) {
            out[i] = Number(static_cast<std::int64_t>(m));
        }
        else
            open.push_back(i);
    }
    for (std::size_t p = 0; p < open.size(); ++p) {
        for (std::size_t q = p + 1; q < open.size(); ++q) {
            std::size_t i = open[p], j = open[q];
            if (out[i].is_exact() || out[j].is_exact())
                continue;
            double sum = roots[i] + roots[j], prod = roots[i] * roots[j];
            double rs = std::round(sum), rp = std::round(prod);
            if (! nearly_equal(sum, rs, 1e-7) || ! nearly_equal(prod, rp, 1e-7))
                continue;
            Integer s(rs), pr(rp);
            Integer disc = s * s - 4 * pr;
            if (disc <= 0 || ! divides_quadratic(poly, s, pr))
                continue;
            Surd hi(ratio(s, 2), ratio(1, 2), disc);
            Surd lo = hi.conjugate();
            if (hi.is_rational())
                continue;
            bool i_larger = roots[i] > roots[j];
            out[i] = Number(i_larger ? hi : lo);
            out[j] = Number(i_larger ? lo : hi);
        }
    }
    return out;
}

/// Real roots of a monic cubic with three distinct real roots, descending.
std::vector<double> cubic_roots(double e2, double e1, double e0)
{
    double p = e1 - e2 * e2 / 3.0;
    double q = 2.0 * e2 * e2 * e2 / 27.0 - e2 * e1 / 3.0 + e0;
    if (p >= 0)
        throw Error(Errc::NumericalFailure, "cubic factor does not have three distinct real roots");
    double amp = 2.0 * std::sqrt(-p / 3.0);
    double arg = std::clamp(3.0 * q / (p * amp), -1.0, 1.0);
    double phi = std::acos(arg) / 3.0;
    std::vector<double> out;
    for (int j = 0; j < 3; ++j) {
        long double x = amp * std::cos(phi - 2.0 * std::numbers::pi * j / 3.0) - e2 / 3.0;
        for (int it = 0; it < 3; ++it) {
            long double f = ((x + e2) * x + e1) * x + e0;
            long double df = (3 * x + 2 * e2) * x + e1;
            if (df == 0)
                break;
            x -= f / df;
        }
        out.push_back(static_cast<double>(x));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<Number> closed_form_diameter3(const IntersectionArray & ia, const std::vector<Integer> & poly)
{
    std::int64_t k = ia.valency();
    std::vector<Number> out;
    if (is_antipodal(ia)) {
        // theta^2 + (c_2 - a_1) theta - k = 0, with theta_2 = -1
        std::int64_t lin = ia.c(2) - ia.a(1);
        Integer disc = Integer(lin) * lin + 4 * Integer(k);
        Surd hi(ratio(-lin, 2), ratio(1, 2), disc), lo(ratio(-lin, 2), ratio(-1, 2), disc);
        out = {Number(k), Number(hi), Number(-1), Number(lo)};
    }
    else if (is_bipartite(ia)) {
        Surd root = Surd::sqrt(Integer(k - ia.c(2)));
        out = {Number(k), Number(root), Number(-root), Number(-k)};
    }
    else
        return out;
    for (const auto & theta : out)
        if (evaluate(poly, *theta.exact()).sign() != 0)
            return {};
    return out;
}

std::vector<double> numeric_roots(const IntersectionArray & ia, const std::vector<Integer> & poly)
{
    if (ia.diameter() != 3)
        return tridiagonal_eigenvalues(ia);
    // divide out (x - k), leaving a monic cubic
    std::vector<Integer> top(poly.rbegin(), poly.rend());
    Integer k(ia.valency());
    std::vector<Integer> quotient;
    Integer carry = 0;
    for (std::size_t i = 0; i + 1 < top.size(); ++i) {
        carry = top[i] + carry * k;
        quotient.push_back(carry);
    }
    auto cubic = cubic_roots(quotient[1].get_d(), quotient[2].get_d(), quotient[3].get_d());
    std::vector<double> out{static_cast<double>(ia.valency())};
    out.insert(out.end(), cubic.begin(), cubic.end());
    return out;
}

} // namespace

IntersectionArray::IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c, bool monotone) :
    _b(std::move(b)), _c(std::move(c))
{
    auto text = "{" + join(_b) + ";" + join(_c) + "}";
    if (_b.size() != _c.size())
        throw Error(Errc::InvalidArray, "b and c have different lengths in " + text);
    if (_b.size() < 2)
        throw Error(Errc::InvalidArray, "diameter must be at least 2 in " + text);
    for (std::size_t i = 0; i < _b.size(); ++i)
        if (_b[i] <= 0 || _c[i] <= 0)
            throw Error(Errc::InvalidArray, "entries must be positive in " + text);
    if (_c[0] != 1)
        throw Error(Errc::InvalidArray, "c_1 must be 1 in " + text);

    const int d = diameter();
    _a.resize(d + 1);
    for (int i = 0; i <= d; ++i) {
        _a[i] = _b[0] - this->b(i) - this->c(i);
        if (_a[i] < 0)
            throw Error(Errc::InvalidArray, "a_" + std::to_string(i) + " < 0 in " + text);
    }
    if (monotone) {
        for (int i = 1; i < d; ++i)
            if (_b[i] > _b[i - 1] || _c[i] < _c[i - 1])
                throw Error(Errc::InvalidArray, "b must be nonincreasing and c nondecreasing in " + text);
    }
    _k.assign(d + 1, 1);
    for (int i = 1; i <= d; ++i) {
        __int128 num = static_cast<__int128>(_k[i - 1]) * this->b(i - 1);
        if (num % this->c(i) != 0)
            throw Error(Errc::NonIntegralValency, "k_" + std::to_string(i) + " is not an integer in " + text);
        __int128 ki = num / this->c(i);
        if (ki > static_cast<__int128>(1) << 62)
            throw Error(Errc::InvalidArray, "valencies overflow in " + text);
        _k[i] = static_cast<std::int64_t>(ki);
    }
    for (std::int64_t ki : _k)
        _n += ki;
}

IntersectionArray IntersectionArray::create(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
{
    return IntersectionArray(std::move(b), std::move(c), true);
}

IntersectionArray IntersectionArray::permissive(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
{
    return IntersectionArray(std::move(b), std::move(c), false);
}

IntersectionArray IntersectionArray::parse(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (! std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw Error(Errc::ParseError, "expected {b...;c...}, got '" + std::string(text) + "'");
    std::string_view body(s);
    body = body.substr(1, body.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string_view::npos || body.find(';', semi + 1) != std::string_view::npos)
        throw Error(Errc::ParseError, "expected exactly one ';' in '" + std::string(text) + "'");
    return create(parse_list(body.substr(0, semi), text), parse_list(body.substr(semi + 1), text));
}

std::string IntersectionArray::str() const
{
    return "{" + join(_b) + ";" + join(_c) + "}";
}

DerivedParams derive(const IntersectionArray & ia)
{
    DerivedParams p;
    for (int i = 0; i <= ia.diameter(); ++i) {
        p.a.push_back(ia.a(i));
        p.kseq.push_back(ia.k(i));
    }
    p.n = ia.vertices();
    return p;
}

IntMatrix intersection_matrix(const IntersectionArray & ia)
{
    const int d = ia.diameter();
    IntMatrix m(d + 1, std::vector<std::int64_t>(d + 1, 0));
    for (int i = 0; i <= d; ++i) {
        m[i][i] = ia.a(i);
        if (i < d) {
            m[i][i + 1] = ia.b(i);
            m[i + 1][i] = ia.c(i + 1);
        }
    }
    return m;
}

std::vector<Integer> characteristic_polynomial(const IntersectionArray & ia)
{
    // f_{i+1} = (x - a_i) f_i - b_{i-1} c_i f_{i-1}
    std::vector<Integer> prev{1}, cur{Integer(-ia.a(0)), 1};
    for (int i = 1; i <= ia.diameter(); ++i) {
        std::vector<Integer> next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] += cur[j];
            next[j] -= Integer(ia.a(i)) * cur[j];
        }
        Integer off = Integer(ia.b(i - 1)) * ia.c(i);
        for (std::size_t j = 0; j < prev.size(); ++j)
            next[j] -= off * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<double> tridiagonal_eigenvalues(const IntersectionArray & ia)
{
    const int d = ia.diameter();
    Eigen::VectorXd diag(d + 1), sub(d);
    for (int i = 0; i <= d; ++i)
        diag(i) = static_cast<double>(ia.a(i));
    for (int i = 0; i < d; ++i)
        sub(i) = std::sqrt(static_cast<double>(ia.b(i)) * static_cast<double>(ia.c(i + 1)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error(Errc::NumericalFailure, "tridiagonal eigensolve failed for " + ia.str());
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + d + 1);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<Number> AdjacencySpectrum::eigenvalues() const
{
    std::vector<Number> out;
    for (const auto & e : entries)
        out.push_back(e.theta);
    return out;
}

AdjacencySpectrum adjacency_spectrum(const IntersectionArray & ia)
{
    auto poly = characteristic_polynomial(ia);
    std::vector<Number> thetas;
    if (ia.diameter() == 3)
        thetas = closed_form_diameter3(ia, poly);
    if (thetas.empty())
        thetas = identify_roots(poly, numeric_roots(ia, poly));
    thetas.front() = Number(ia.valency());

    AdjacencySpectrum spectrum;
    for (const auto & theta : thetas)
        spectrum.entries.push_back({theta, multiplicity(ia, theta)});
    return spectrum;
}

std::vector<Number> recurrence_values(const IntersectionArray & ia, const Number & theta)
{
    const int d = ia.diameter();
    std::vector<Number> v{Number(1), theta};
    for (int i = 1; i < d; ++i) {
        Number next = ((theta - Number(ia.a(i))) * v[i] - Number(ia.b(i - 1)) * v[i - 1]) / Number(ia.c(i + 1));
        v.push_back(next);
    }
    return v;
}

bool is_eigenvalue(const IntersectionArray & ia, const Number & theta)
{
    const int d = ia.diameter();
    auto v = recurrence_values(ia, theta);
    Number lhs = (theta - Number(ia.a(d))) * v[d];
    Number rhs = Number(ia.b(d - 1)) * v[d - 1];
    if (lhs.is_exact() && rhs.is_exact() && compatible(*lhs.exact(), *rhs.exact()))
        return *lhs.exact() == *rhs.exact();
    double scale = std::abs(theta.value() * v[d].value()) + std::abs(ia.a(d) * v[d].value()) + std::abs(rhs.value());
    return std::abs(lhs.value() - rhs.value()) <= 1e-7 * std::max(1.0, scale);
}

std::vector<Number> standard_sequence(const IntersectionArray & ia, const Number & theta)
{
    if (! is_eigenvalue(ia, theta))
        throw Error(Errc::NotAnEigenvalue, theta.str() + " is not an eigenvalue of " + ia.str());
    auto v = recurrence_values(ia, theta);
    for (int i = 0; i <= ia.diameter(); ++i)
        v[i] = v[i] / Number(ia.k(i));
    return v;
}

Number multiplicity(const IntersectionArray & ia, const Number & theta)
{
    auto u = standard_sequence(ia, theta);
    Number norm(0);
    for (int i = 0; i <= ia.diameter(); ++i)
        norm = norm + Number(ia.k(i)) * u[i] * u[i];
    return Number(ia.vertices()) / norm;
}

std::optional<std::int64_t> is_antipodal(const IntersectionArray & ia)
{
    const int big_d = ia.diameter();
    const int d = big_d / 2;
    for (int i = 0; i < big_d; ++i)
        if (i != d && ia.b(i) != ia.c(big_d - i))
            return std::nullopt;
    std::int64_t num = ia.b(d), den = ia.c(big_d - d);
    if (num % den != 0)
        return std::nullopt;
    std::int64_t r = 1 + num / den;
    if (r < 2)
        return std::nullopt;
    return r;
}

bool is_bipartite(const IntersectionArray & ia)
{
    for (int i = 0; i <= ia.diameter(); ++i)
        if (ia.a(i) != 0)
            return false;
    return true;
}

std::vector<std::string> diameter3_bound_violations(const IntersectionArray & ia, const AdjacencySpectrum & spectrum)
{
    std::vector<std::string> out;
    if (ia.diameter() != 3)
        return out;
    const Number gap(ia.a(3) - ia.b(2));
    const Number zero(0), minus_one(-1);
    const Number minus_sqrt2(-Surd::sqrt(2));
    const Number & t1 = spectrum.theta(1);
    const Number & t2 = spectrum.theta(2);
    const Number & t3 = spectrum.theta(3);

    if (! (compare(t1, gap) > 0 && compare(t1, zero) > 0))
        out.push_back("theta1 <= max(a3-b2, 0)");
    if (! (compare(t3, gap) < 0 && compare(t3, minus_sqrt2) < 0))
        out.push_back("theta3 >= min(a3-b2, -sqrt2)");
    const Number & lo = compare(gap, minus_one) < 0 ? gap : minus_one;
    const Number & hi = compare(gap, minus_one) < 0 ? minus_one : gap;
    if (compare(t2, lo) < 0 || compare(t2, hi) > 0)
        out.push_back("theta2 not between -1 and a3-b2");
    for (int l = 1; l <= 3; ++l) {
        bool at_gap = coincide(spectrum.theta(l), gap);
        bool at_minus_one = coincide(spectrum.theta(l), minus_one);
        if (at_gap != at_minus_one || (at_gap && l != 2))
            out.push_back("theta" + std::to_string(l) + " = a3-b2 does not match theta = -1 at index 2");
    }
    return out;
}

std::vector<std::string> feasibility_check(const IntersectionArray & ia)
{
    std::vector<std::string> out;
    // k_i integrality is enforced at construction; kept here for completeness
    for (int i = 0; i <= ia.diameter(); ++i)
        if (ia.k(i) <= 0)
            out.push_back("k" + std::to_string(i) + " not a positive integer");

    auto spectrum = adjacency_spectrum(ia);
    for (const auto & e : spectrum.entries) {
        bool integral = false;
        if (e.mult.is_exact() && e.mult.exact()->is_rational())
            integral = e.mult.is_integer() && e.mult.exact()->sign() > 0;
        else if (! e.mult.is_exact()) {
            double m = e.mult.value();
            integral = std::abs(m - std::round(m)) <= multiplicity_tolerance && std::round(m) >= 1;
        }
        if (! integral)
            out.push_back("multiplicity of theta=" + e.theta.str() + " is not a positive integer (" + e.mult.str() + ")");
    }
    if ((static_cast<__int128>(ia.a(1)) * ia.valency()) % 2 != 0)
        out.push_back("a1k odd");
    for (auto & v : diameter3_bound_violations(ia, spectrum))
        out.push_back(v);
    return out;
}

} // namespace qdrg
