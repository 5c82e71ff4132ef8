#include <doctest.h>

#include <qdrg/antipodal_cover.hpp>
#include <qdrg/error.hpp>
#include <qdrg/graph_atlas.hpp>

#include <cmath>
#include <map>

using namespace qdrg;

namespace {

IntersectionArray arr(const char * text)
{
    return IntersectionArray::parse(text);
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

std::vector<double> values(const std::vector<Number> & xs)
{
    std::vector<double> out;
    for (const auto & x : xs)
        out.push_back(x.value());
    return out;
}

// Quotient by the antipodal classes (vertices at distance 0 or D).
Graph fold(const Graph & g, int diameter)
{
    auto d = distances(g);
    std::vector<int> cls(g.size(), -1);
    int count = 0;
    for (int v = 0; v < g.size(); ++v) {
        if (cls[v] >= 0)
            continue;
        for (int u = 0; u < g.size(); ++u)
            if (u == v || d(u, v) == diameter)
                cls[u] = count;
        ++count;
    }
    Graph out(count);
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.neighbors(v))
            if (cls[u] != cls[v])
                out.add_edge(cls[u], cls[v]);
    return out;
}

std::vector<double> distinct(std::vector<double> xs)
{
    std::vector<double> out;
    for (double x : xs)
        if (out.empty() || ! nearly_equal(out.back(), x))
            out.push_back(x);
    return out;
}

const std::vector<std::string> cover_graphs = {
    "H(3,2)", "H(4,2)", "H(5,2)", "H(6,2)", "H(7,2)", "C(6)", "C(8)", "C(10)", "C(12)", "C(14)",
    "crown(4)", "crown(5)", "crown(6)", "crown(7)", "crown(8)", "J(6,3)", "halved2(6)",
};

} // namespace

TEST_CASE("folded spectrum examples")
{
    auto cube = folded_spectrum(arr("{3,2,1;1,2,3}"));
    CHECK(cube.folded == std::vector<Number>{Number(3), Number(-1)});
    CHECK(cube.nonfolded == std::vector<Number>{Number(1), Number(-3)});
    CHECK(cube.r == 2);
    CHECK(cube.palindromic);

    auto j = folded_spectrum(arr("{9,4,1;1,4,9}"));
    CHECK(j.folded == std::vector<Number>{Number(9), Number(-1)});
    CHECK(j.nonfolded == std::vector<Number>{Number(3), Number(-3)});

    auto c8 = folded_spectrum(arr("{2,1,1,1;1,1,1,2}"));
    CHECK(c8.folded == std::vector<Number>{Number(2), Number(0), Number(-2)});
    REQUIRE(c8.nonfolded.size() == 2);
    CHECK(c8.nonfolded[0] == Number(Surd::sqrt(Integer(2))));
    CHECK(c8.nonfolded[1] == Number(-Surd::sqrt(Integer(2))));

    CHECK(error_of([] { folded_spectrum(arr("{2,1,1;1,1,1}")); }) == Errc::NotAntipodal);
}

TEST_CASE("folded part matches the quotient graph spectrum")
{
    for (const auto & name : cover_graphs) {
        CAPTURE(name);
        auto g = graph_by_name(name);
        auto ia = verify_drg(g);
        REQUIRE(ia);
        auto folded = folded_spectrum(*ia);
        CHECK(folded.palindromic);
        CHECK(folded.folded.size() == static_cast<std::size_t>(ia->diameter() / 2 + 1));
        auto quotient = distinct(dense_eigenvalues(adjacency_matrix(fold(g, ia->diameter()))));
        auto want = values(folded.folded);
        REQUIRE(quotient.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i)
            CHECK(nearly_equal(quotient[i], want[i]));
    }
}

TEST_CASE("zero multiplicity examples")
{
    auto cube = zero_multiplicity_check(arr("{3,2,1;1,2,3}"));
    CHECK(cube.zero_mult == 4);
    CHECK(cube.floor_half == 1);
    CHECK(cube.distinct == 3);
    CHECK(cube.distinct_bound == 4);
    CHECK(cube.pass);

    auto c8 = zero_multiplicity_check(arr("{2,1,1,1;1,1,1,2}"));
    CHECK(c8.zero_mult >= 2);
    CHECK(c8.distinct <= 4);
    CHECK(c8.pass);

    auto h7 = zero_multiplicity_check(arr("{7,6,5,4,3,2,1;1,2,3,4,5,6,7}"));
    CHECK(h7.zero_mult >= 3);
    CHECK(h7.distinct <= 6);
    CHECK(h7.distinct_bound == 6);
    CHECK(h7.pass);
    for (const auto & v : h7.folded_r1)
        CHECK(v == Number(0));

    CHECK(error_of([] { zero_multiplicity_check(arr("{2,1,1;1,1,1}")); }) == Errc::NotAntipodal);
    CHECK(error_of([] { zero_multiplicity_check(arr("{8,6,1;1,3,8}")); }) == Errc::WrongCoverIndex);
}

TEST_CASE("formula and oracle routes agree on the cover graphs")
{
    for (const auto & name : cover_graphs) {
        CAPTURE(name);
        auto g = graph_by_name(name);
        auto ia = verify_drg(g);
        REQUIRE(ia);
        auto formula = zero_multiplicity_check(*ia);
        auto oracle = zero_bounds_from_spectrum(dq_spectrum_oracle(g, RationalQ(1)), ia->diameter(), ia->vertices());
        CHECK(formula.pass);
        CHECK(formula.folded_zero);
        CHECK(oracle.pass);
        CHECK(formula.zero_mult == oracle.zero_mult);
        CHECK(formula.distinct == oracle.distinct);
        CHECK(formula.zero_mult >= ia->diameter() / 2);
        CHECK(formula.distinct <= (ia->diameter() + 1) / 2 + 2);
        const double n = static_cast<double>(ia->vertices());
        for (const auto & v : formula.folded_r1)
            CHECK(std::abs(v.value()) <= 1e-8 * n);
    }
}

TEST_CASE("theorem hypothesis variant")
{
    CHECK(theorem41_check(arr("{3,2,1;1,2,3}")).pass);
    auto j = theorem41_check(arr("{9,4,1;1,4,9}"));
    CHECK(j.pass);
    CHECK(j.zero_mult >= 1);
    CHECK(error_of([] { theorem41_check(arr("{2,1,1;1,1,1}")); }) == Errc::HypothesisFailed);
    CHECK(error_of([] { theorem41_check(arr("{8,6,1;1,3,8}")); }) == Errc::HypothesisFailed);
    for (const auto & name : cover_graphs) {
        auto ia = verify_drg(graph_by_name(name));
        bool hypothesis = true;
        for (int i = 0; i < ia->diameter(); ++i)
            hypothesis = hypothesis && ia->b(i) == ia->c(ia->diameter() - i);
        if (! hypothesis)
            continue;
        auto a = theorem41_check(*ia), b = zero_multiplicity_check(*ia);
        CHECK(a.pass == b.pass);
        CHECK(a.zero_mult == b.zero_mult);
    }
}

TEST_CASE("formula-only covers")
{
    for (const char * t : {"{35,18,1;1,18,35}", "{27,16,1;1,16,27}", "{63,22,1;1,22,63}", "{15,8,1;1,8,15}",
                           "{2,1,1,1,1,1,1,1,1,1;1,1,1,1,1,1,1,1,1,2}"}) {
        CAPTURE(t);
        auto report = zero_multiplicity_check(arr(t));
        CHECK(report.pass);
        CHECK(report.folded_zero);
    }
}

TEST_CASE("report json")
{
    auto j = to_json(zero_multiplicity_check(arr("{3,2,1;1,2,3}")));
    CHECK(j["array"] == "{3,2,1;1,2,3}");
    CHECK(j["r"] == 2);
    CHECK(j["zero_mult"] == 4);
    CHECK(j["floor_D_over_2"] == 1);
    CHECK(j["distinct"] == 3);
    CHECK(j["bound"] == 4);
    CHECK(j["pass"] == true);
}
