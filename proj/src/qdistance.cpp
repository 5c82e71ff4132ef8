#include <qdrg/qdistance.hpp>
#include <qdrg/error.hpp>

#include <algorithm>
#include <cmath>

namespace qdrg {

std::string_view to_string(QRegion region)
{
    switch (region) {
        case QRegion::Positive: return "positive";
        case QRegion::OpenUnitBelow: return "in(-1,0)";
        case QRegion::MinusOne: return "equal-1";
        case QRegion::BelowMinusOne: return "below-1";
    }
    return "unknown";
}

QRegion region_of(double q)
{
    if (q > 0)
        return QRegion::Positive;
    if (q > -1)
        return QRegion::OpenUnitBelow;
    if (q == -1)
        return QRegion::MinusOne;
    return QRegion::BelowMinusOne;
}

RationalQ::RationalQ(const Rational & value) : _value(value)
{
    if (_value == 0)
        throw Error(Errc::OutOfRange, "q must be nonzero");
}

RationalQ::RationalQ(std::int64_t num, std::int64_t den) : RationalQ(ratio(Integer(num), Integer(den)))
{
}

RationalQ RationalQ::parse(std::string_view text)
{
    Rational value = parse_rational(text);
    if (value == 0)
        throw Error(Errc::ParseError, "q must be nonzero");
    return RationalQ(value);
}

QRegion RationalQ::region() const
{
    if (_value > 0)
        return QRegion::Positive;
    if (_value > -1)
        return QRegion::OpenUnitBelow;
    if (_value == -1)
        return QRegion::MinusOne;
    return QRegion::BelowMinusOne;
}

Rational weight(const RationalQ & q, int i)
{
    Rational inv = 1 / q.value(), term = 1, sum = 0;
    for (int j = 0; j < i; ++j) {
        sum += term;
        term *= inv;
    }
    return sum;
}

Number weight(const Number & q, int i)
{
    Number inv = Number(1) / q, term(1), sum(0);
    for (int j = 0; j < i; ++j) {
        sum = sum + term;
        term = term * inv;
    }
    return sum;
}

Eigen::MatrixXd QDistanceMatrix::to_dense() const
{
    Eigen::MatrixXd m(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            m(x, y) = (*this)(x, y).get_d();
    return m;
}

QDistanceMatrix build_dq(const Graph & g, const RationalQ & q)
{
    auto dist = distances(g);
    std::vector<Rational> w(dist.diameter() + 1, 0);
    for (int i = 1; i <= dist.diameter(); ++i)
        w[i] = weight(q, i);
    QDistanceMatrix out{g.size(), {}};
    out.entries.reserve(static_cast<std::size_t>(g.size()) * g.size());
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
            out.entries.push_back(w[dist(x, y)]);
    return out;
}

std::vector<Number> distance_polys(const IntersectionArray & ia, const Number & theta)
{
    return recurrence_values(ia, theta);
}

Number rq_value(const IntersectionArray & ia, const Number & theta, const Number & q)
{
    auto v = distance_polys(ia, theta);
    Number sum(0);
    for (int i = 1; i <= ia.diameter(); ++i)
        sum = sum + weight(q, i) * v[i];
    return sum;
}

Number rq_value(const IntersectionArray & ia, const Number & theta, const RationalQ & q)
{
    return rq_value(ia, theta, Number(q.value()));
}

double QSpectrum::total_multiplicity() const
{
    double total = 0;
    for (const auto & e : entries)
        total += e.mult;
    return total;
}

double QSpectrum::trace() const
{
    double total = 0;
    for (const auto & e : entries)
        total += e.mult * e.value.value();
    return total;
}

std::vector<QSpectrum::Entry> cluster(std::vector<QSpectrum::Entry> values)
{
    std::stable_sort(values.begin(), values.end(),
                     [](const auto & x, const auto & y) { return x.value.value() > y.value.value(); });
    std::vector<QSpectrum::Entry> out;
    double weighted = 0;  // mult-weighted sum of the current inexact cluster
    for (const auto & e : values) {
        if (! out.empty() && coincide(out.back().value, e.value)) {
            auto & last = out.back();
            if (! last.value.is_exact() && e.value.is_exact())
                last.value = e.value;
            last.mult += e.mult;
            weighted += e.mult * e.value.value();
            if (! last.value.is_exact())
                last.value = Number(weighted / last.mult);
            continue;
        }
        out.push_back(e);
        weighted = e.mult * e.value.value();
    }
    return out;
}

namespace {

// Multiplicities of a feasible array are integers; snap float noise.
double as_double_mult(const Number & m)
{
    double r = std::round(m.value());
    return std::abs(m.value() - r) <= multiplicity_tolerance ? r : m.value();
}

} // namespace

QSpectrum dq_spectrum_formula(const IntersectionArray & ia, const RationalQ & q)
{
    auto spectrum = adjacency_spectrum(ia);
    std::vector<QSpectrum::Entry> values;
    for (const auto & e : spectrum.entries)
        values.push_back({rq_value(ia, e.theta, q), as_double_mult(e.mult)});
    QSpectrum out;
    out.entries = cluster(std::move(values));
    out.q = q;
    out.q_value = q.to_double();
    return out;
}

QSpectrum dq_spectrum_formula(const IntersectionArray & ia, double q)
{
    if (q == 0)
        throw Error(Errc::OutOfRange, "q must be nonzero");
    auto spectrum = adjacency_spectrum(ia);
    std::vector<QSpectrum::Entry> values;
    for (const auto & e : spectrum.entries)
        values.push_back({Number(rq_value(ia, e.theta, Number(q)).value()), as_double_mult(e.mult)});
    QSpectrum out;
    out.entries = cluster(std::move(values));
    out.q_value = q;
    out.approximate = true;
    return out;
}

QSpectrum dq_spectrum_oracle(const Graph & g, const RationalQ & q)
{
    if (g.size() > 4000)
        throw Error(Errc::OutOfRange, "dense oracle limited to 4000 vertices");
    auto eig = dense_eigenvalues(build_dq(g, q).to_dense());
    std::vector<QSpectrum::Entry> values;
    for (double x : eig)
        values.push_back({Number(x), 1.0});
    QSpectrum out;
    out.entries = cluster(std::move(values));
    out.q = q;
    out.q_value = q.to_double();
    return out;
}

std::size_t count_distinct(const QSpectrum & s)
{
    return s.entries.size();
}

bool spectra_match(const QSpectrum & x, const QSpectrum & y, double tol)
{
    if (x.entries.size() != y.entries.size())
        return false;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        if (! nearly_equal(x.entries[i].value.value(), y.entries[i].value.value(), tol))
            return false;
        if (std::abs(x.entries[i].mult - y.entries[i].mult) > multiplicity_tolerance)
            return false;
    }
    return true;
}

nlohmann::json mult_json(double m)
{
    if (m == std::round(m) && std::abs(m) < 9e15)
        return static_cast<std::int64_t>(m);
    return m;
}

nlohmann::json to_json(const QSpectrum & s)
{
    auto out = nlohmann::json::array();
    for (const auto & e : s.entries) {
        nlohmann::json item;
        item["value"] = e.value.value();
        item["value_exact"] = e.value.is_exact() ? nlohmann::json(e.value.exact()->str()) : nlohmann::json(nullptr);
        item["mult"] = mult_json(e.mult);
        out.push_back(item);
    }
    return out;
}

QSpectrum spectrum_from_json(const nlohmann::json & j)
{
    QSpectrum out;
    for (const auto & item : j) {
        QSpectrum::Entry e;
        if (item.at("value_exact").is_string())
            e.value = Number(Surd::parse(item.at("value_exact").get<std::string>()));
        else
            e.value = Number(item.at("value").get<double>());
        e.mult = item.at("mult").get<double>();
        out.entries.push_back(e);
    }
    return out;
}

} // namespace qdrg
