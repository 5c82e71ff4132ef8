#pragma once

#include <qdrg/graph_atlas.hpp>
#include <qdrg/intersection_array.hpp>
#include <qdrg/number.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdrg {

enum class QRegion {
    Positive,       ///< q > 0
    OpenUnitBelow,  ///< -1 < q < 0
    MinusOne,       ///< q = -1, the boundary of the irreducible regime
    BelowMinusOne,  ///< q < -1
};

std::string_view to_string(QRegion region);

/// QRegion of a real q != 0.
QRegion region_of(double q);

/// Nonzero rational deformation parameter.
class RationalQ {
public:
    /// Throws Error(OutOfRange) for q = 0.
    explicit RationalQ(const Rational & value);
    RationalQ(std::int64_t num, std::int64_t den = 1);

    /// `p/r` or an integer literal. Throws Error(ParseError).
    static RationalQ parse(std::string_view text);

    const Rational & value() const { return _value; }
    Integer numerator() const { return _value.get_num(); }
    Integer denominator() const { return _value.get_den(); }
    double to_double() const { return _value.get_d(); }
    QRegion region() const;
    /// q in (-1, 0], the interval where D_q may lose nonnegativity.
    bool in_open_unit_below() const { return region() == QRegion::OpenUnitBelow; }
    std::string str() const { return to_string(_value); }

    friend bool operator==(const RationalQ & x, const RationalQ & y) { return x._value == y._value; }

private:
    Rational _value;
};

/// w_i = 1 + 1/q + ... + 1/q^{i-1}, exact.
Rational weight(const RationalQ & q, int i);
/// Same sum for any q representable as a Number.
Number weight(const Number & q, int i);

/// Row-major n x n matrix of exact rational entries.
struct QDistanceMatrix {
    int n = 0;
    std::vector<Rational> entries;

    const Rational & operator()(int x, int y) const { return entries[static_cast<std::size_t>(x) * n + y]; }
    Eigen::MatrixXd to_dense() const;
};

/// Entry (x,y) = w_{d(x,y)}, zero diagonal. Throws Error(DisconnectedInput).
QDistanceMatrix build_dq(const Graph & g, const RationalQ & q);

/// v_i(theta) from the distance-matrix recurrence A A_i = c_{i+1} A_{i+1} + a_i A_i + b_{i-1} A_{i-1}.
std::vector<Number> distance_polys(const IntersectionArray & ia, const Number & theta);

/// R_q(theta) = sum_{i=1}^{D} w_i v_i(theta); defined for any theta.
Number rq_value(const IntersectionArray & ia, const Number & theta, const Number & q);
Number rq_value(const IntersectionArray & ia, const Number & theta, const RationalQ & q);

/// Distinct eigenvalues of D_q with multiplicities, descending by value.
struct QSpectrum {
    struct Entry {
        Number value;
        double mult = 0;

        friend bool operator==(const Entry &, const Entry &) = default;
    };

    std::vector<Entry> entries;
    std::optional<RationalQ> q;  ///< absent in approximate (irrational q) mode
    double q_value = 0;
    bool approximate = false;

    double total_multiplicity() const;
    /// sum mult * value.
    double trace() const;

    friend bool operator==(const QSpectrum &, const QSpectrum &) = default;
};

/// Merges coinciding values (transitively) and sorts descending.
std::vector<QSpectrum::Entry> cluster(std::vector<QSpectrum::Entry> values);

/// Pairs (R_q(theta_j), m(theta_j)) from the intersection array, clustered.
QSpectrum dq_spectrum_formula(const IntersectionArray & ia, const RationalQ & q);
/// Floating-point q, for irrational parameters; the result is flagged approximate.
QSpectrum dq_spectrum_formula(const IntersectionArray & ia, double q);

/// Dense eigensolve of D_q(g), clustered. Throws Error(OutOfRange) above 4000 vertices.
QSpectrum dq_spectrum_oracle(const Graph & g, const RationalQ & q);

std::size_t count_distinct(const QSpectrum & s);

/// Same number of values, pairwise coinciding, equal multiplicities (within 1e-6).
bool spectra_match(const QSpectrum & x, const QSpectrum & y, double tol = coincidence_tolerance);

/// `[{"value": float, "value_exact": "p/r" | "a+b*sqrt(d)" | null, "mult": int}]`.
nlohmann::json to_json(const QSpectrum & s);
QSpectrum spectrum_from_json(const nlohmann::json & j);

/// JSON number for a multiplicity: integer when integral, float otherwise.
nlohmann::json mult_json(double m);

} // namespace qdrg
