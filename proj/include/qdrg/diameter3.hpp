#pragma once

#include <qdrg/intersection_array.hpp>
#include <qdrg/number.hpp>
#include <qdrg/qdistance.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdrg {

/// Closed cubic form in theta with leading factor 1/(c_2 c_3 q^2); valid for theta = k too.
Number rq_cubic(const IntersectionArray & ia, const Number & theta, const Number & q);
/// Quadratic form for a non-trivial eigenvalue. Throws TrivialEigenvalue for theta = k.
Number rq_quadratic(const IntersectionArray & ia, const Number & theta, const Number & q);
/// Quadratic form for R_q(k).
Number rq_k_quadratic(const IntersectionArray & ia, const Number & q);

/// q_l = (theta_l - a_3 + b_2) / c_2 for l = 1, 2, 3.
struct CriticalQ {
    std::array<Number, 3> q;
    std::array<Number, 3> theta;
    /// q_2 = 0 happens exactly when theta_2 = -1; such a q is not usable.
    bool q2_degenerate = false;

    const Number & operator[](int l) const { return q[l - 1]; }
    bool usable(int l) const { return ! (l == 2 && q2_degenerate); }
};

CriticalQ critical_q(const IntersectionArray & ia);

/// Index pairs (i, j), i < j in {1,2,3}, with R_q(theta_i) = R_q(theta_j).
std::vector<std::pair<int, int>> coincidence_pairs(const IntersectionArray & ia, const Number & q);

enum class CountCase { I, II, III, IV };

std::string_view to_string(CountCase c);

struct CountCaseResult {
    CountCase which;
    int count = 0;          ///< exact count by direct evaluation
    int lower = 0, upper = 0;  ///< range the case predicts
    bool within_bounds() const { return lower <= count && count <= upper; }
};

/// Throws OutOfRange for q = 0.
CountCaseResult distinct_count_case(const IntersectionArray & ia, const Number & q);

bool three_distinct_at_unit_q(const IntersectionArray & ia);

struct BipartiteQ {
    int l = 0;
    Number q;
    QRegion region = QRegion::Positive;
    bool excluded = false;  ///< q in (-1, 0]
};

/// q = (k + theta_l)/c_2 - 1 for l = 1, 2, 3. Throws NotBipartite.
std::vector<BipartiteQ> bipartite_three_distinct_q(const IntersectionArray & ia);

/// Throws NotAntipodal, InvalidQRegion for q in (-1, 0].
bool antipodal_three_distinct(const IntersectionArray & ia, const Number & q);

struct TwoDistinctWitness {
    Number q;
    std::string case_id;  ///< "i".."iv"
    std::vector<QSpectrum::Entry> values;
};

/// Tries the usable critical values q_2, q_3 that lie in (-1, 0).
std::optional<TwoDistinctWitness> two_distinct_search(const IntersectionArray & ia);

/// With theta_3 = -r-1 and c_2 = theta_1 + 1, theta_1 theta_3 = -k gives k = theta_1 (r+1),
/// and b_1 = (r-1) c_2 is the antipodal shape with a_1 = k - 1 - b_1.
struct AntipodalCandidate {
    std::int64_t r = 0;
    std::int64_t theta1 = 0;
    IntersectionArray array;
    Number m1;
    std::int64_t n = 0;
    bool bound_ok = false;
    /// Feasibility of the parameters only; no claim that a graph exists.
    static constexpr std::string_view status = "array-feasible";
};

std::int64_t antipodal_vertex_bound(std::int64_t r);

/// Throws OutOfRange unless 2 <= r <= 20.
std::vector<AntipodalCandidate> enumerate_antipodal_r(std::int64_t r);

/// {st, s(t-1), 1; 1, t-1, st}.
IntersectionArray family_gq_spread(std::int64_t s, std::int64_t t);
/// {(r+1)^2, (r-1)(r+2), 1; 1, r+2, (r+1)^2}.
IntersectionArray family_alazemi(std::int64_t r);
/// b >= 4 with b = 0, 1 mod 4, else InfeasibleB. Existence of the graphs is open.
IntersectionArray family_koolen_park(std::int64_t b);

bool kpy_bounds_check(const IntersectionArray & ia);

/// Antipodal diameter-3 array with c_2 = k - 1 (the 3-cube shape).
bool antipodal_c2_at_boundary(const IntersectionArray & ia);

} // namespace qdrg
