#include <qdrg/antipodal_cover.hpp>
#include <qdrg/error.hpp>

#include <cmath>

namespace qdrg {

namespace {

bool near_zero(const Number & x, double scale)
{
    if (x.is_exact())
        return x.exact()->sign() == 0;
    return std::abs(x.value()) <= coincidence_tolerance * scale;
}

bool near_one(const Number & x)
{
    if (x.is_exact())
        return *x.exact() == Surd(1);
    return std::abs(x.value() - 1) <= multiplicity_tolerance;
}

} // namespace

FoldedSpectrum folded_spectrum(const IntersectionArray & ia)
{
    auto r = is_antipodal(ia);
    if (! r)
        throw Error(Errc::NotAntipodal, ia.str() + " is not antipodal");
    const int d = ia.diameter();
    FoldedSpectrum out;
    out.r = *r;
    for (const auto & e : adjacency_spectrum(ia).entries) {
        auto u = standard_sequence(ia, e.theta);
        if (! near_one(u[d])) {
            out.nonfolded.push_back(e.theta);
            continue;
        }
        out.folded.push_back(e.theta);
        for (int i = 0; i <= d; ++i)
            if (! coincide(u[i], u[d - i], multiplicity_tolerance))
                out.palindromic = false;
    }
    return out;
}

ZeroMultiplicityReport zero_bounds_from_spectrum(const QSpectrum & s, int diameter, std::int64_t n)
{
    ZeroMultiplicityReport out;
    for (const auto & e : s.entries)
        if (near_zero(e.value, static_cast<double>(n)))
            out.zero_mult += e.mult;
    out.floor_half = diameter / 2;
    out.distinct = static_cast<int>(count_distinct(s));
    out.distinct_bound = (diameter + 1) / 2 + 2;
    out.pass = out.zero_mult + multiplicity_tolerance >= out.floor_half && out.distinct <= out.distinct_bound;
    return out;
}

ZeroMultiplicityReport zero_multiplicity_check(const IntersectionArray & ia)
{
    auto folded = folded_spectrum(ia);
    if (folded.r != 2)
        throw Error(Errc::WrongCoverIndex, "cover index " + std::to_string(folded.r) + ", need 2");
    const auto n = ia.vertices();
    auto out = zero_bounds_from_spectrum(dq_spectrum_formula(ia, RationalQ(1)), ia.diameter(), n);
    out.array = ia.str();
    out.r = folded.r;
    for (std::size_t i = 1; i < folded.folded.size(); ++i) {
        Number value = rq_value(ia, folded.folded[i], Number(1));
        out.folded_r1.push_back(value);
        out.folded_zero = out.folded_zero && near_zero(value, static_cast<double>(n));
    }
    out.pass = out.pass && out.folded_zero && folded.palindromic;
    return out;
}

ZeroMultiplicityReport theorem41_check(const IntersectionArray & ia)
{
    const int d = ia.diameter();
    for (int i = 0; i < d; ++i)
        if (ia.b(i) != ia.c(d - i))
            throw Error(Errc::HypothesisFailed,
                        "b_" + std::to_string(i) + " != c_" + std::to_string(d - i) + " in " + ia.str());
    return zero_multiplicity_check(ia);
}

nlohmann::json to_json(const ZeroMultiplicityReport & report)
{
    nlohmann::json folded = nlohmann::json::array();
    for (const auto & v : report.folded_r1)
        folded.push_back(v.str());
    return {
        {"array", report.array},
        {"r", report.r},
        {"zero_mult", mult_json(report.zero_mult)},
        {"floor_D_over_2", report.floor_half},
        {"distinct", report.distinct},
        {"bound", report.distinct_bound},
        {"folded_r1", folded},
        {"pass", report.pass},
    };
}

} // namespace qdrg
