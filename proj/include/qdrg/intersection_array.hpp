#pragma once

#include <qdrg/number.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdrg {

/// Intersection array {b_0, ..., b_{D-1}; c_1, ..., c_D} of a distance-regular
/// graph, validated on construction. Derived a_i, k_i and n are cached.
///
/// Indices follow the usual conventions: b(D) = 0, c(0) = 0, k(0) = 1.
class IntersectionArray {
public:
    /// Checks positivity, c_1 = 1, a_i >= 0, integral k_i and monotonicity.
    static IntersectionArray create(std::vector<std::int64_t> b, std::vector<std::int64_t> c);

    /// Same as create() but without the monotonicity check.
    static IntersectionArray permissive(std::vector<std::int64_t> b, std::vector<std::int64_t> c);

    /// Parses `{b0,b1,...;c1,c2,...}`; whitespace is ignored.
    static IntersectionArray parse(std::string_view text);

    /// Canonical text form, `{9,4,1;1,4,9}`.
    std::string str() const;

    int diameter() const { return static_cast<int>(_b.size()); }
    std::int64_t valency() const { return _b.front(); }
    std::int64_t b(int i) const { return i < diameter() ? _b[i] : 0; }
    std::int64_t c(int i) const { return i == 0 ? 0 : _c[i - 1]; }
    std::int64_t a(int i) const { return _a[i]; }
    std::int64_t k(int i) const { return _k[i]; }
    std::int64_t vertices() const { return _n; }

    const std::vector<std::int64_t> & b_sequence() const { return _b; }
    const std::vector<std::int64_t> & c_sequence() const { return _c; }

    friend bool operator==(const IntersectionArray & x, const IntersectionArray & y)
    {
        return x._b == y._b && x._c == y._c;
    }

private:
    IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c, bool monotone);

    std::vector<std::int64_t> _b, _c, _a, _k;
    std::int64_t _n = 0;
};

struct DerivedParams {
    std::vector<std::int64_t> a;      ///< a_0..a_D
    std::vector<std::int64_t> kseq;   ///< k_0..k_D
    std::int64_t n = 0;
};

DerivedParams derive(const IntersectionArray & ia);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Tridiagonal L_1 with (i,i) = a_i, (i,i+1) = b_i, (i+1,i) = c_{i+1}.
IntMatrix intersection_matrix(const IntersectionArray & ia);

/// det(xI - L_1) as integer coefficients, constant term first.
std::vector<Integer> characteristic_polynomial(const IntersectionArray & ia);

/// Eigenvalues of L_1 from the symmetrized tridiagonal eigensolve, descending.
std::vector<double> tridiagonal_eigenvalues(const IntersectionArray & ia);

struct SpectrumEntry {
    Number theta;
    Number mult;
};

/// The D+1 distinct adjacency eigenvalues, descending, with multiplicities.
struct AdjacencySpectrum {
    std::vector<SpectrumEntry> entries;

    std::size_t size() const { return entries.size(); }
    const Number & theta(std::size_t i) const { return entries[i].theta; }
    std::vector<Number> eigenvalues() const;
};

/// Eigenvalues are exact whenever they are integers or quadratic irrationals
/// (verified against the characteristic polynomial); other values stay
/// double precision. Multiplicities come from the standard sequences.
AdjacencySpectrum adjacency_spectrum(const IntersectionArray & ia);

/// Three-term recurrence c_{i+1} v_{i+1} = (theta - a_i) v_i - b_{i-1} v_{i-1},
/// v_0 = 1, v_1 = theta; these are the distance polynomials evaluated at theta.
std::vector<Number> recurrence_values(const IntersectionArray & ia, const Number & theta);

/// Whether (theta - a_D) v_D = b_{D-1} v_{D-1}, exactly or within tolerance.
bool is_eigenvalue(const IntersectionArray & ia, const Number & theta);

/// u_i = v_i / k_i. Throws Error(NotAnEigenvalue) if theta fails the terminal check.
std::vector<Number> standard_sequence(const IntersectionArray & ia, const Number & theta);

/// n / sum_i k_i u_i^2. Throws Error(NotAnEigenvalue).
Number multiplicity(const IntersectionArray & ia, const Number & theta);

/// Cover index r when b_i = c_{D-i} for all i != floor(D/2) and
/// r = 1 + b_d / c_{D-d} is an integer >= 2.
std::optional<std::int64_t> is_antipodal(const IntersectionArray & ia);

bool is_bipartite(const IntersectionArray & ia);

/// Clause-by-clause eigenvalue bounds for diameter 3 (empty when all hold):
/// theta_1 > max(a_3 - b_2, 0), theta_3 < min(a_3 - b_2, -sqrt 2),
/// theta_2 between -1 and a_3 - b_2, and theta_l = a_3 - b_2 iff theta_l = -1 (then l = 2).
std::vector<std::string> diameter3_bound_violations(const IntersectionArray & ia,
                                                    const AdjacencySpectrum & spectrum);

/// Necessary existence conditions; an empty result means feasible.
std::vector<std::string> feasibility_check(const IntersectionArray & ia);

inline constexpr double multiplicity_tolerance = 1e-6;

} // namespace qdrg
