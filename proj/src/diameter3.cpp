#include <qdrg/diameter3.hpp>
#include <qdrg/error.hpp>

#include <cmath>

namespace qdrg {

namespace {

void require_diameter3(const IntersectionArray & ia)
{
    if (ia.diameter() != 3)
        throw Error(Errc::WrongDiameter, "diameter 3 required, got " + std::to_string(ia.diameter()));
}

bool is_zero(const Number & x)
{
    return x.is_exact() ? x.exact()->sign() == 0 : x.value() == 0;
}

int sign_of(const Number & x)
{
    if (x.is_exact())
        return x.exact()->sign();
    return (x.value() > 0) - (x.value() < 0);
}

// q in (-1, 0], decided exactly when q is exact.
bool in_excluded_interval(const Number & q)
{
    return sign_of(q) <= 0 && sign_of(q + Number(1)) > 0;
}

Number num(std::int64_t x)
{
    return Number(x);
}

} // namespace

Number rq_cubic(const IntersectionArray & ia, const Number & theta, const Number & q)
{
    require_diameter3(ia);
    const Number k = num(ia.valency()), a1 = num(ia.a(1)), a2 = num(ia.a(2)), b1 = num(ia.b(1));
    const Number c2 = num(ia.c(2)), c3 = num(ia.c(3));
    const Number s = q * q + q + Number(1);  // q^2 + q + 1
    const Number p = q * q + q;              // q^2 + q
    Number t0 = (s * a2 - p * c3) * k;
    Number t1 = (q * q * c2 * c3 - p * a1 * c3 + s * (a1 * a2 - b1 * c2 - k)) * theta;
    Number t2 = (p * c3 - s * (a1 + a2)) * theta * theta;
    Number t3 = s * theta * theta * theta;
    return (t0 + t1 + t2 + t3) / (c2 * c3 * q * q);
}

Number rq_quadratic(const IntersectionArray & ia, const Number & theta, const Number & q)
{
    require_diameter3(ia);
    const Number k = num(ia.valency());
    if (coincide(theta, k))
        throw Error(Errc::TrivialEigenvalue, "use the R_q(k) form for theta = k");
    const Number a1 = num(ia.a(1)), c2 = num(ia.c(2));
    const Number s = q * q + q + Number(1);
    Number inner = s * c2 - k + ((q + Number(1)) * c2 - a1) * theta + theta * theta;
    return -inner / (c2 * q * q);
}

Number rq_k_quadratic(const IntersectionArray & ia, const Number & q)
{
    require_diameter3(ia);
    const Number k = num(ia.valency()), a1 = num(ia.a(1)), c2 = num(ia.c(2));
    const Number n = num(ia.vertices());
    const Number s = q * q + q + Number(1);
    Number inner = c2 * s * n - s * c2 - ((q + Number(1)) * c2 - a1 - Number(1)) * k - k * k;
    return inner / (c2 * q * q);
}

CriticalQ critical_q(const IntersectionArray & ia)
{
    require_diameter3(ia);
    auto spectrum = adjacency_spectrum(ia);
    const Number shift = num(ia.b(2) - ia.a(3)), c2 = num(ia.c(2));
    CriticalQ out;
    for (int l = 1; l <= 3; ++l) {
        out.theta[l - 1] = spectrum.theta(l);
        out.q[l - 1] = (spectrum.theta(l) + shift) / c2;
    }
    out.q2_degenerate = is_zero(out.q[1]);
    return out;
}

std::vector<std::pair<int, int>> coincidence_pairs(const IntersectionArray & ia, const Number & q)
{
    require_diameter3(ia);
    auto spectrum = adjacency_spectrum(ia);
    const Number target = q * num(ia.c(2)) - num(ia.b(2)) + num(ia.a(3));
    std::vector<std::pair<int, int>> out;
    for (int l = 3; l >= 1; --l) {
        if (! coincide(spectrum.theta(l), target))
            continue;
        int i = l == 1 ? 2 : 1;
        int j = l == 3 ? 2 : 3;
        out.emplace_back(i, j);
    }
    return out;
}

std::string_view to_string(CountCase c)
{
    switch (c) {
        case CountCase::I: return "i";
        case CountCase::II: return "ii";
        case CountCase::III: return "iii";
        case CountCase::IV: return "iv";
    }
    return "?";
}

CountCaseResult distinct_count_case(const IntersectionArray & ia, const Number & q)
{
    require_diameter3(ia);
    if (is_zero(q))
        throw Error(Errc::OutOfRange, "q must be nonzero");
    auto crit = critical_q(ia);
    bool critical = false;
    for (int l = 1; l <= 3; ++l)
        critical = critical || (crit.usable(l) && coincide(q, crit[l]));
    bool inside = in_excluded_interval(q);

    CountCaseResult out;
    if (! critical && ! inside)
        out = {CountCase::I, 0, 4, 4};
    else if (! critical)
        out = {CountCase::II, 0, 3, 4};
    else if (! inside)
        out = {CountCase::III, 0, 3, 3};
    else
        out = {CountCase::IV, 0, 2, 3};

    auto spectrum = adjacency_spectrum(ia);
    std::vector<QSpectrum::Entry> values;
    for (const auto & e : spectrum.entries)
        values.push_back({rq_value(ia, e.theta, q), 1.0});
    out.count = static_cast<int>(cluster(std::move(values)).size());
    return out;
}

bool three_distinct_at_unit_q(const IntersectionArray & ia)
{
    require_diameter3(ia);
    auto spectrum = adjacency_spectrum(ia);
    const Number target = num(ia.c(2) + ia.a(3) - ia.b(2));
    for (int l = 1; l <= 3; ++l)
        if (coincide(spectrum.theta(l), target))
            return true;
    return false;
}

std::vector<BipartiteQ> bipartite_three_distinct_q(const IntersectionArray & ia)
{
    require_diameter3(ia);
    if (! is_bipartite(ia))
        throw Error(Errc::NotBipartite, ia.str() + " is not bipartite");
    auto spectrum = adjacency_spectrum(ia);
    const Number k = num(ia.valency()), c2 = num(ia.c(2));
    std::vector<BipartiteQ> out;
    for (int l = 1; l <= 3; ++l) {
        BipartiteQ item;
        item.l = l;
        item.q = (k + spectrum.theta(l)) / c2 - Number(1);
        item.excluded = in_excluded_interval(item.q);
        if (item.excluded)
            item.region = QRegion::OpenUnitBelow;
        else if (sign_of(item.q + Number(1)) == 0)
            item.region = QRegion::MinusOne;
        else
            item.region = region_of(item.q.value());
        out.push_back(item);
    }
    return out;
}

bool antipodal_three_distinct(const IntersectionArray & ia, const Number & q)
{
    require_diameter3(ia);
    auto r = is_antipodal(ia);
    if (! r)
        throw Error(Errc::NotAntipodal, ia.str() + " is not antipodal");
    if (in_excluded_interval(q))
        throw Error(Errc::InvalidQRegion, "q in (-1, 0] is outside the criterion");
    auto spectrum = adjacency_spectrum(ia);
    const Number target = -num(*r) / q - Number(1);
    return coincide(spectrum.theta(sign_of(q) > 0 ? 3 : 1), target);
}

std::optional<TwoDistinctWitness> two_distinct_search(const IntersectionArray & ia)
{
    require_diameter3(ia);
    auto crit = critical_q(ia);
    auto spectrum = adjacency_spectrum(ia);
    for (int l = 2; l <= 3; ++l) {
        const Number & q = crit[l];
        if (! crit.usable(l) || ! in_excluded_interval(q) || is_zero(q))
            continue;
        std::array<Number, 4> r;
        std::vector<QSpectrum::Entry> values;
        for (int j = 0; j < 4; ++j) {
            r[j] = rq_value(ia, spectrum.theta(j), q);
            values.push_back({r[j], spectrum.entries[j].mult.value()});
        }
        auto merged = cluster(values);
        if (merged.size() != 2)
            continue;
        auto eq = [&](int x, int y) { return coincide(r[x], r[y]); };
        std::string id = "unclassified";
        if (eq(1, 2) && eq(0, 3))
            id = "i";
        else if (eq(1, 3) && eq(0, 2))
            id = "ii";
        else if (eq(0, 1) && eq(1, 2))
            id = "iii";
        else if (eq(0, 1) && eq(1, 3))
            id = "iv";
        return TwoDistinctWitness{q, id, merged};
    }
    return std::nullopt;
}

std::int64_t antipodal_vertex_bound(std::int64_t r)
{
    const std::int64_t r2 = r * r, r3 = r2 * r, r4 = r3 * r;
    return r4 * r2 + 3 * r4 * r + r4 - 4 * r3 - 4 * r2;
}

std::vector<AntipodalCandidate> enumerate_antipodal_r(std::int64_t r)
{
    if (r < 2 || r > 20)
        throw Error(Errc::OutOfRange, "cover index must satisfy 2 <= r <= 20");
    const std::int64_t product = r * (r + 1) * (r - 1) * (r + 2);
    std::vector<AntipodalCandidate> out;
    for (std::int64_t d = r + 2; d <= product; ++d) {
        if (product % d != 0)
            continue;
        const std::int64_t theta = d - r - 1;
        const std::int64_t k = theta * (r + 1);
        std::optional<IntersectionArray> ia;
        try {
            ia = IntersectionArray::create({k, (theta + 1) * (r - 1), 1}, {1, theta + 1, k});
        } catch (const Error &) {
            continue;
        }
        if (! feasibility_check(*ia).empty())
            continue;
        const std::int64_t n = ia->vertices();
        out.push_back({r, theta, *ia, multiplicity(*ia, Number(theta)), n, n <= antipodal_vertex_bound(r)});
    }
    return out;
}

IntersectionArray family_gq_spread(std::int64_t s, std::int64_t t)
{
    if (s < 1 || t < 2)
        throw Error(Errc::InvalidArray, "spread family needs s >= 1 and t >= 2");
    return IntersectionArray::create({s * t, s * (t - 1), 1}, {1, t - 1, s * t});
}

IntersectionArray family_alazemi(std::int64_t r)
{
    if (r < 2)
        throw Error(Errc::InvalidArray, "family needs r >= 2");
    return IntersectionArray::create({(r + 1) * (r + 1), (r - 1) * (r + 2), 1}, {1, r + 2, (r + 1) * (r + 1)});
}

IntersectionArray family_koolen_park(std::int64_t b)
{
    if (b < 4 || (b % 4 != 0 && b % 4 != 1))
        throw Error(Errc::InfeasibleB, "b must be >= 4 and 0 or 1 mod 4, got " + std::to_string(b));
    const std::int64_t m = b * (b - 1) / 4;
    return IntersectionArray::create({b * b * (b - 1) / 2, (b - 1) * (b * b - b + 2) / 2, m},
                                     {1, m, b * (b - 1) * (b - 1) / 2});
}

bool kpy_bounds_check(const IntersectionArray & ia)
{
    require_diameter3(ia);
    return diameter3_bound_violations(ia, adjacency_spectrum(ia)).empty();
}

bool antipodal_c2_at_boundary(const IntersectionArray & ia)
{
    return ia.diameter() == 3 && is_antipodal(ia) && ia.c(2) == ia.valency() - 1;
}

} // namespace qdrg
