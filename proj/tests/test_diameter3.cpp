#include <doctest.h>

#include <qdrg/diameter3.hpp>
#include <qdrg/error.hpp>
#include <qdrg/graph_atlas.hpp>

#include <cmath>

using namespace qdrg;

namespace {

IntersectionArray arr(const char * text)
{
    return IntersectionArray::parse(text);
}

Number rq(long n, long d = 1)
{
    return Number(ratio(Integer(n), Integer(d)));
}

Errc error_of(auto && f)
{
    try {
        f();
    } catch (const Error & e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::ParseError;
}

const std::vector<const char *> d3_arrays = {
    "{9,4,1;1,4,9}", "{3,2,1;1,2,3}", "{15,8,3;1,4,9}", "{2,1,1;1,1,1}", "{4,3,3;1,1,2}", "{3,2,2;1,1,3}",
    "{35,18,1;1,18,35}", "{27,16,1;1,16,27}", "{15,6,1;1,6,15}", "{15,8,1;1,8,15}", "{63,22,1;1,22,63}",
    "{5,4,1;1,4,5}", "{4,3,1;1,3,4}", "{6,5,1;1,5,6}", "{7,6,1;1,6,7}", "{24,21,3;1,3,18}", "{50,44,5;1,5,40}",
    "{8,6,1;1,3,8}", "{16,10,1;1,5,16}",
};

std::vector<Number> q_grid()
{
    std::vector<Number> out;
    for (auto [n, d] : std::vector<std::pair<long, long>>{{-2, 1}, {-1, 1}, {-1, 2}, {-1, 3}, {1, 2}, {1, 1},
                                                          {2, 1}, {3, 1}, {-3, 2}, {5, 7}})
        out.push_back(rq(n, d));
    for (int j = 1; j <= 100; ++j)
        out.push_back(rq(-j, 101));
    return out;
}

std::vector<IntersectionArray> atlas_d3()
{
    std::vector<IntersectionArray> out;
    for (const auto & entry : atlas()) {
        auto ia = verify_drg(entry.build());
        if (ia && ia->diameter() == 3)
            out.push_back(*ia);
    }
    return out;
}

} // namespace

TEST_CASE("cubic form examples")
{
    auto j = arr("{9,4,1;1,4,9}");
    CHECK(rq_cubic(j, Number(3), rq(-1, 2)) == Number(3));
    CHECK(rq_cubic(j, Number(9), rq(-1, 2)) == Number(3));
    CHECK(rq_cubic(arr("{35,18,1;1,18,35}"), Number(5), rq(-1, 3)) == Number(8));
    CHECK(error_of([] { rq_cubic(arr("{3,2;1,1}"), Number(1), rq(1)); }) == Errc::WrongDiameter);
}

TEST_CASE("quadratic form examples")
{
    auto j83 = arr("{15,8,3;1,4,9}");
    CHECK(rq_quadratic(j83, Number(7), rq(-1, 2)) == Number(-9));
    CHECK(rq_quadratic(j83, Number(-3), rq(-1, 2)) == Number(-9));
    CHECK(rq_quadratic(arr("{9,4,1;1,4,9}"), Number(-3), rq(-1, 2)) == Number(-9));
    CHECK(error_of([&] { rq_quadratic(j83, Number(15), rq(1)); }) == Errc::TrivialEigenvalue);
    CHECK(error_of([] { rq_quadratic(arr("{2,1,1,1;1,1,1,2}"), Number(0), rq(1)); }) == Errc::WrongDiameter);
}

TEST_CASE("R_q(k) quadratic form examples")
{
    CHECK(rq_k_quadratic(arr("{15,8,3;1,4,9}"), rq(-1, 2)) == Number(15));
    CHECK(rq_k_quadratic(arr("{35,18,1;1,18,35}"), rq(-1, 3)) == Number(-28));
    CHECK(rq_k_quadratic(arr("{9,4,1;1,4,9}"), rq(-1, 2)) == Number(3));
    CHECK(error_of([] { rq_k_quadratic(arr("{3,2;1,1}"), rq(1)); }) == Errc::WrongDiameter);
}

TEST_CASE("cubic, quadratic and recurrence agree")
{
    for (const char * t : d3_arrays) {
        auto ia = arr(t);
        auto s = adjacency_spectrum(ia);
        for (const auto & q : q_grid()) {
            CAPTURE(t);
            CAPTURE(q.str());
            for (std::size_t i = 0; i < s.size(); ++i) {
                Number general = rq_value(ia, s.theta(i), q);
                Number cubic = rq_cubic(ia, s.theta(i), q);
                Number quad = i == 0 ? rq_k_quadratic(ia, q) : rq_quadratic(ia, s.theta(i), q);
                CHECK(nearly_equal(general.value(), cubic.value(), 1e-9));
                CHECK(nearly_equal(general.value(), quad.value(), 1e-9));
                if (general.is_exact()) {
                    CHECK(general == cubic);
                    CHECK(general == quad);
                }
            }
        }
    }
}

TEST_CASE("critical q")
{
    auto a = critical_q(arr("{9,4,1;1,4,9}"));
    CHECK(a[1] == rq(1));
    CHECK(a[2] == rq(0));
    CHECK(a.q2_degenerate);
    CHECK(a[3] == rq(-1, 2));
    auto b = critical_q(arr("{35,18,1;1,18,35}"));
    CHECK(b[1] == rq(1, 3));
    CHECK(b.q2_degenerate);
    CHECK(b[3] == rq(-1, 3));
    auto c = critical_q(arr("{15,8,3;1,4,9}"));
    CHECK(c[1] == rq(1));
    CHECK(c[2] == rq(-1, 2));
    CHECK_FALSE(c.q2_degenerate);
    CHECK(c[3] == rq(-3, 2));
    for (const char * t : d3_arrays) {
        auto x = critical_q(arr(t));
        CHECK(x[1].value() > 0);
        CHECK(x[3].value() < 0);
        CHECK(x.q2_degenerate == (x.theta[1] == Number(-1)));
    }
    CHECK(error_of([] { critical_q(arr("{3,2;1,1}")); }) == Errc::WrongDiameter);
}

TEST_CASE("coincidence pairs")
{
    using P = std::vector<std::pair<int, int>>;
    CHECK(coincidence_pairs(arr("{9,4,1;1,4,9}"), rq(-1, 2)) == P{{1, 2}});
    CHECK(coincidence_pairs(arr("{9,4,1;1,4,9}"), rq(2)).empty());
    CHECK(coincidence_pairs(arr("{35,18,1;1,18,35}"), rq(-1, 3)) == P{{1, 2}});
}

TEST_CASE("coincidence pairs agree with direct comparison")
{
    for (const char * t : d3_arrays) {
        auto ia = arr(t);
        auto s = adjacency_spectrum(ia);
        auto crit = critical_q(ia);
        auto qs = q_grid();
        for (int l = 1; l <= 3; ++l)
            if (crit.usable(l))
                qs.push_back(crit[l]);
        for (const auto & q : qs) {
            std::vector<std::pair<int, int>> direct;
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j)
                    if (coincide(rq_quadratic(ia, s.theta(i), q), rq_quadratic(ia, s.theta(j), q)))
                        direct.emplace_back(i, j);
            std::sort(direct.begin(), direct.end());
            auto claimed = coincidence_pairs(ia, q);
            std::sort(claimed.begin(), claimed.end());
            CAPTURE(t);
            CAPTURE(q.str());
            CHECK(claimed == direct);
        }
    }
}

TEST_CASE("at least two distinct non-trivial values")
{
    for (const char * t : d3_arrays) {
        auto ia = arr(t);
        auto s = adjacency_spectrum(ia);
        for (const auto & q : q_grid()) {
            std::vector<QSpectrum::Entry> values;
            for (int i = 1; i <= 3; ++i)
                values.push_back({rq_value(ia, s.theta(i), q), 1.0});
            CHECK(cluster(values).size() >= 2);
        }
    }
}

TEST_CASE("distinct count cases")
{
    auto j = arr("{9,4,1;1,4,9}");
    auto a = distinct_count_case(j, rq(2));
    CHECK(a.which == CountCase::I);
    CHECK(a.count == 4);
    auto b = distinct_count_case(j, rq(1));
    CHECK(b.which == CountCase::III);
    CHECK(b.count == 3);
    auto c = distinct_count_case(j, rq(-1, 2));
    CHECK(c.which == CountCase::IV);
    CHECK(c.count == 2);
    CHECK(distinct_count_case(j, rq(-1, 3)).which == CountCase::II);
    CHECK(to_string(CountCase::IV) == "iv");
    CHECK(error_of([&] { distinct_count_case(j, rq(0)); }) == Errc::OutOfRange);
}

TEST_CASE("case bounds hold and count matches the formula spectrum")
{
    for (const char * t : d3_arrays) {
        auto ia = arr(t);
        auto crit = critical_q(ia);
        auto qs = q_grid();
        for (int l = 1; l <= 3; ++l)
            if (crit.usable(l))
                qs.push_back(crit[l]);
        for (const auto & q : qs) {
            CAPTURE(t);
            CAPTURE(q.str());
            auto c = distinct_count_case(ia, q);
            CHECK(c.within_bounds());
            if (q.is_rational())
                CHECK(static_cast<std::size_t>(c.count)
                      == count_distinct(dq_spectrum_formula(ia, RationalQ(q.exact()->rational_part()))));
        }
    }
}

TEST_CASE("three distinct values at q = 1")
{
    CHECK(three_distinct_at_unit_q(arr("{9,4,1;1,4,9}")));
    CHECK_FALSE(three_distinct_at_unit_q(arr("{2,1,1;1,1,1}")));
    CHECK_FALSE(three_distinct_at_unit_q(arr("{4,3,3;1,1,2}")));
    CHECK(count_distinct(dq_spectrum_oracle(kneser_graph_73(), RationalQ(1))) != 3);
    CHECK(count_distinct(dq_spectrum_oracle(cycle_graph(7), RationalQ(1))) == 4);
    for (const auto & entry : atlas()) {
        auto g = entry.build();
        auto ia = verify_drg(g);
        if (! ia || ia->diameter() != 3)
            continue;
        CAPTURE(entry.name);
        CHECK(three_distinct_at_unit_q(*ia) == (count_distinct(dq_spectrum_oracle(g, RationalQ(1))) == 3));
    }
}

TEST_CASE("bipartite three-distinct q values")
{
    auto cube = bipartite_three_distinct_q(arr("{3,2,1;1,2,3}"));
    REQUIRE(cube.size() == 3);
    CHECK(cube[0].q == rq(1));
    CHECK_FALSE(cube[0].excluded);
    CHECK(cube[1].q == rq(0));
    CHECK(cube[1].excluded);
    CHECK(cube[2].q == rq(-1));
    CHECK(cube[2].region == QRegion::MinusOne);

    auto heawood = bipartite_three_distinct_q(arr("{3,2,2;1,1,3}"));
    CHECK(heawood[0].q == Number(Surd::parse("2+sqrt(2)")));
    CHECK(heawood[1].q == Number(Surd::parse("2-sqrt(2)")));
    CHECK(heawood[2].q == rq(-1));
    for (const auto & b : heawood)
        CHECK_FALSE(b.excluded);

    auto crown = bipartite_three_distinct_q(arr("{5,4,1;1,4,5}"));
    CHECK(crown[0].q == rq(1, 2));
    CHECK(crown[1].excluded);
    CHECK(crown[2].q == rq(-1));
    CHECK(error_of([] { bipartite_three_distinct_q(arr("{9,4,1;1,4,9}")); }) == Errc::NotBipartite);
}

TEST_CASE("bipartite three-distinct q values give three values")
{
    for (const char * t : {"{3,2,1;1,2,3}", "{3,2,2;1,1,3}", "{5,4,1;1,4,5}", "{4,3,1;1,3,4}"}) {
        auto ia = arr(t);
        for (const auto & b : bipartite_three_distinct_q(ia)) {
            if (b.excluded)
                continue;
            CAPTURE(t);
            CAPTURE(b.q.str());
            CHECK(distinct_count_case(ia, b.q).count == 3);
            CHECK(count_distinct(dq_spectrum_formula(ia, b.q.value())) == 3);
        }
    }
}

TEST_CASE("bipartite arrays never have two distinct values on (-1, 0)")
{
    for (const char * t : {"{3,2,1;1,2,3}", "{3,2,2;1,1,3}", "{5,4,1;1,4,5}"})
        for (int j = 1; j <= 100; ++j)
            CHECK(count_distinct(dq_spectrum_formula(arr(t), RationalQ(-j, 101))) >= 3);
}

TEST_CASE("antipodal three-distinct criterion")
{
    CHECK(antipodal_three_distinct(arr("{9,4,1;1,4,9}"), rq(1)));
    CHECK_FALSE(antipodal_three_distinct(arr("{35,18,1;1,18,35}"), rq(1)));
    CHECK(antipodal_three_distinct(arr("{63,22,1;1,22,63}"), rq(1)));
    CHECK(error_of([] { antipodal_three_distinct(arr("{15,8,3;1,4,9}"), rq(1)); }) == Errc::NotAntipodal);
    CHECK(error_of([] { antipodal_three_distinct(arr("{9,4,1;1,4,9}"), rq(-1, 2)); }) == Errc::InvalidQRegion);
    // criterion matches the direct count on both branches
    for (const char * t : {"{9,4,1;1,4,9}", "{35,18,1;1,18,35}", "{27,16,1;1,16,27}", "{8,6,1;1,3,8}",
                           "{3,2,1;1,2,3}", "{63,22,1;1,22,63}"}) {
        auto ia = arr(t);
        for (const auto & q : {rq(1), rq(2), rq(1, 2), rq(-1), rq(-2), rq(-3, 2), rq(2, 3), rq(-7)}) {
            CAPTURE(t);
            CAPTURE(q.str());
            CHECK(antipodal_three_distinct(ia, q) == (distinct_count_case(ia, q).count == 3));
        }
    }
}

TEST_CASE("antipodal arrays keep R(theta_1) and R(theta_3) apart")
{
    for (const char * t : {"{9,4,1;1,4,9}", "{35,18,1;1,18,35}", "{27,16,1;1,16,27}", "{15,6,1;1,6,15}",
                           "{15,8,1;1,8,15}", "{63,22,1;1,22,63}", "{3,2,1;1,2,3}", "{8,6,1;1,3,8}"}) {
        auto ia = arr(t);
        auto s = adjacency_spectrum(ia);
        for (const auto & q : q_grid())
            CHECK_FALSE(coincide(rq_value(ia, s.theta(1), q), rq_value(ia, s.theta(3), q)));
    }
}

TEST_CASE("two-distinct search examples")
{
    auto a = two_distinct_search(arr("{9,4,1;1,4,9}"));
    REQUIRE(a);
    CHECK(a->q == rq(-1, 2));
    CHECK(a->case_id == "iii");
    REQUIRE(a->values.size() == 2);
    CHECK(a->values[0].value == Number(3));
    CHECK(a->values[0].mult == 15);
    CHECK(a->values[1].value == Number(-9));
    CHECK(a->values[1].mult == 5);

    auto b = two_distinct_search(arr("{15,8,3;1,4,9}"));
    REQUIRE(b);
    CHECK(b->q == rq(-1, 2));
    CHECK(b->case_id == "ii");
    CHECK(b->values[0].value == Number(15));
    CHECK(b->values[1].value == Number(-9));

    auto c = two_distinct_search(arr("{35,18,1;1,18,35}"));
    REQUIRE(c);
    CHECK(c->q == rq(-1, 3));
    CHECK(c->case_id == "i");  // R(theta_1) = R(theta_2) = 8, R(k) = R(theta_3) = -28

    CHECK_FALSE(two_distinct_search(arr("{2,1,1;1,1,1}")));
}

TEST_CASE("two-distinct search agrees with an oracle grid scan")
{
    // every grid q with two distinct oracle values must be the reported witness
    for (const auto & entry : atlas()) {
        auto g = entry.build();
        auto ia = verify_drg(g);
        if (! ia || ia->diameter() != 3)
            continue;
        CAPTURE(entry.name);
        auto witness = two_distinct_search(*ia);
        for (int j = 1; j <= 100; ++j) {
            RationalQ q(-j, 101 - (j % 2));  // mixes denominators 100 and 101, hitting -1/2 and -1/4
            if (count_distinct(dq_spectrum_oracle(g, q)) == 2) {
                REQUIRE(witness);
                CHECK(witness->q == Number(q.value()));
            }
        }
        if (witness && witness->q.is_rational())
            CHECK(count_distinct(dq_spectrum_oracle(g, RationalQ(witness->q.exact()->rational_part()))) == 2);
    }
}

TEST_CASE("antipodal enumeration for r = 2")
{
    auto rows = enumerate_antipodal_r(2);
    std::vector<std::int64_t> thetas, m1, n;
    std::vector<std::string> arrays;
    for (const auto & c : rows) {
        thetas.push_back(c.theta1);
        REQUIRE(c.m1.is_integer());
        m1.push_back(c.m1.exact()->rational_part().get_num().get_si());
        n.push_back(c.n);
        arrays.push_back(c.array.str());
        CHECK(c.bound_ok);
        CHECK(c.r == 2);
        CHECK(c.n == c.r * (c.array.valency() + 1));
        CHECK(adjacency_spectrum(c.array).theta(3) == Number(-c.r - 1));
    }
    CHECK(thetas == std::vector<std::int64_t>{1, 3, 5, 9, 21});
    CHECK(m1 == std::vector<std::int64_t>{3, 5, 6, 7, 8});
    CHECK(arrays == std::vector<std::string>{"{3,2,1;1,2,3}", "{9,4,1;1,4,9}", "{15,6,1;1,6,15}",
                                             "{27,10,1;1,10,27}", "{63,22,1;1,22,63}"});
    CHECK(antipodal_vertex_bound(2) == 128);
    CHECK(n.back() == 128);
    CHECK(AntipodalCandidate::status == "array-feasible");
}

TEST_CASE("antipodal enumeration for r = 3")
{
    auto rows = enumerate_antipodal_r(3);
    std::vector<std::int64_t> thetas, m1, n;
    for (const auto & c : rows) {
        thetas.push_back(c.theta1);
        m1.push_back(c.m1.exact()->rational_part().get_num().get_si());
        n.push_back(c.n);
        CHECK(c.bound_ok);
    }
    CHECK(thetas == std::vector<std::int64_t>{2, 4, 6, 8, 11, 16, 20, 26, 36, 56, 116});
    CHECK(m1 == std::vector<std::int64_t>{12, 17, 20, 22, 24, 26, 27, 28, 29, 30, 31});
    CHECK(n.back() == antipodal_vertex_bound(3));
    CHECK(antipodal_vertex_bound(3) == 1395);
}

TEST_CASE("antipodal enumeration matches an independent scan")
{
    // Walk every theta up to the divisibility limit and apply the conditions directly:
    // a_1 = 2 theta - r >= 0, a_1 k even, and m_1 = (r+1)(r-1)(theta(r+1)+1)/(theta+r+1),
    // m_2 = k, m_3 = (r-1)(k+1) - m_1 all positive integers.
    for (std::int64_t r = 2; r <= 8; ++r) {
        std::vector<std::int64_t> expected;
        const std::int64_t limit = r * (r + 1) * (r - 1) * (r + 2);
        for (std::int64_t theta = 1; theta <= limit; ++theta) {
            const std::int64_t k = theta * (r + 1), a1 = 2 * theta - r;
            if (a1 < 0 || (a1 * k) % 2 != 0)
                continue;
            Rational m1 = ratio(Integer((r + 1) * (r - 1) * (theta * (r + 1) + 1)), Integer(theta + r + 1));
            Rational m3 = Rational((r - 1) * (k + 1)) - m1;
            if (m1.get_den() != 1 || m3.get_den() != 1 || m1 <= 0 || m3 <= 0)
                continue;
            expected.push_back(theta);
        }
        std::vector<std::int64_t> got;
        for (const auto & c : enumerate_antipodal_r(r)) {
            got.push_back(c.theta1);
            CHECK(c.bound_ok);
        }
        CAPTURE(r);
        CHECK(got == expected);
    }
}

TEST_CASE("antipodal enumeration range")
{
    CHECK(error_of([] { enumerate_antipodal_r(1); }) == Errc::OutOfRange);
    CHECK(error_of([] { enumerate_antipodal_r(21); }) == Errc::OutOfRange);
    CHECK_FALSE(enumerate_antipodal_r(20).empty());
}

TEST_CASE("spread family")
{
    CHECK(family_gq_spread(1, 3) == arr("{3,2,1;1,2,3}"));
    CHECK(adjacency_spectrum(family_gq_spread(1, 3)).theta(3) == Number(-3));
    auto a = family_gq_spread(2, 4);
    CHECK(a == arr("{8,6,1;1,3,8}"));
    CHECK(adjacency_spectrum(a).theta(3) == Number(-4));
    CHECK(is_antipodal(a) == 3);
    CHECK(three_distinct_at_unit_q(a));
    CHECK(family_gq_spread(3, 5) == arr("{15,12,1;1,4,15}"));
    for (std::int64_t t = 3; t <= 9; ++t) {
        auto ia = family_gq_spread(t - 2, t);
        CHECK(three_distinct_at_unit_q(ia));
        CHECK(adjacency_spectrum(ia).theta(3) == Number(-t));
    }
    CHECK(error_of([] { family_gq_spread(0, 3); }) == Errc::InvalidArray);
    CHECK(error_of([] { family_gq_spread(2, 1); }) == Errc::InvalidArray);
}

TEST_CASE("second antipodal family")
{
    CHECK(family_alazemi(2) == arr("{9,4,1;1,4,9}"));
    auto a3 = family_alazemi(3);
    CHECK(a3 == arr("{16,10,1;1,5,16}"));
    CHECK(a3.k(3) == 2);
    CHECK(adjacency_spectrum(a3).theta(3) == Number(-4));
    auto a4 = family_alazemi(4);
    CHECK(a4 == arr("{25,18,1;1,6,25}"));
    CHECK(adjacency_spectrum(a4).theta(3) == Number(-5));
    for (std::int64_t r = 2; r <= 12; ++r) {
        auto ia = family_alazemi(r);
        CHECK(adjacency_spectrum(ia).theta(3) == Number(-r - 1));
        CHECK(ia.k(3) == r - 1);
    }
    CHECK(error_of([] { family_alazemi(1); }) == Errc::InvalidArray);
}

TEST_CASE("arrays with open existence")
{
    CHECK(family_koolen_park(4) == arr("{24,21,3;1,3,18}"));
    CHECK(family_koolen_park(5) == arr("{50,44,5;1,5,40}"));
    CHECK(error_of([] { family_koolen_park(6); }) == Errc::InfeasibleB);
    CHECK(error_of([] { family_koolen_park(3); }) == Errc::InfeasibleB);
    CHECK(error_of([] { family_koolen_park(2); }) == Errc::InfeasibleB);
    for (std::int64_t b : {4, 5, 8, 9, 12, 13}) {
        auto ia = family_koolen_park(b);
        CAPTURE(b);
        CHECK(three_distinct_at_unit_q(ia));
        CHECK(distinct_count_case(ia, rq(1)).count == 3);
        CHECK(feasibility_check(ia).empty());
    }
}

TEST_CASE("eigenvalue bound check")
{
    CHECK(kpy_bounds_check(arr("{9,4,1;1,4,9}")));
    CHECK(kpy_bounds_check(arr("{2,1,1;1,1,1}")));
    CHECK(kpy_bounds_check(arr("{3,2,2;1,1,3}")));
    for (const auto & ia : atlas_d3())
        CHECK(kpy_bounds_check(ia));
    CHECK(error_of([] { kpy_bounds_check(arr("{3,2;1,1}")); }) == Errc::WrongDiameter);
}

TEST_CASE("boundary flag for c_2 = k - 1")
{
    CHECK(antipodal_c2_at_boundary(arr("{3,2,1;1,2,3}")));
    CHECK_FALSE(antipodal_c2_at_boundary(arr("{9,4,1;1,4,9}")));
    CHECK_FALSE(antipodal_c2_at_boundary(arr("{3,2,2;1,1,3}")));
}
