#pragma once

#include <qdrg/intersection_array.hpp>
#include <qdrg/number.hpp>
#include <qdrg/qdistance.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace qdrg {

/// Eigenvalues split by u_D(theta) = 1 (the folded graph's spectrum) or not.
struct FoldedSpectrum {
    std::vector<Number> folded;     ///< descending, starts with k
    std::vector<Number> nonfolded;  ///< descending
    std::int64_t r = 0;
    /// u_i = u_{D-i} held for every folded eigenvalue.
    bool palindromic = true;
};

/// Throws NotAntipodal.
FoldedSpectrum folded_spectrum(const IntersectionArray & ia);

struct ZeroMultiplicityReport {
    std::string array;
    std::int64_t r = 2;
    double zero_mult = 0;
    int floor_half = 0;       ///< floor(D/2)
    int distinct = 0;
    int distinct_bound = 0;   ///< ceil(D/2) + 2
    /// R_1 at each non-trivial folded eigenvalue, in folded order.
    std::vector<Number> folded_r1;
    bool folded_zero = true;  ///< every folded_r1 within 1e-8 n of 0
    bool pass = false;
};

/// Zero count and distinct count bounds read off a distance spectrum (q = 1) of a graph on n vertices.
ZeroMultiplicityReport zero_bounds_from_spectrum(const QSpectrum & s, int diameter, std::int64_t n);

/// Formula route. Throws NotAntipodal, WrongCoverIndex unless r = 2.
ZeroMultiplicityReport zero_multiplicity_check(const IntersectionArray & ia);

/// Requires b_i = c_{D-i} for 0 <= i <= D-1, else HypothesisFailed.
ZeroMultiplicityReport theorem41_check(const IntersectionArray & ia);

nlohmann::json to_json(const ZeroMultiplicityReport & report);

} // namespace qdrg
