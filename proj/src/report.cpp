#include <qdrg/report.hpp>
#include <qdrg/error.hpp>
#include <qdrg/graph_atlas.hpp>

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace qdrg {

using nlohmann::json;

namespace {

int sign_of(const Number & x)
{
    if (x.is_exact())
        return x.exact()->sign();
    return (x.value() > 0) - (x.value() < 0);
}

std::string region_text(const Number & q)
{
    int s = sign_of(q), t = sign_of(q + Number(1));
    if (s == 0)
        return "zero";
    if (s > 0)
        return std::string(to_string(QRegion::Positive));
    if (t > 0)
        return std::string(to_string(QRegion::OpenUnitBelow));
    if (t == 0)
        return std::string(to_string(QRegion::MinusOne));
    return std::string(to_string(QRegion::BelowMinusOne));
}

json optional_json(const std::optional<int> & x)
{
    return x ? json(*x) : json(nullptr);
}

std::string spectrum_text(const QSpectrum & s)
{
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i)
            out << ", ";
        out << s.entries[i].value.str() << ":" << mult_json(s.entries[i].mult).dump();
    }
    out << "}";
    return out.str();
}

} // namespace

json number_json(const Number & x)
{
    return {{"value", x.value()}, {"value_exact", x.is_exact() ? json(x.exact()->str()) : json(nullptr)}};
}

Number number_from_json(const json & j)
{
    if (j.at("value_exact").is_string())
        return Number(Surd::parse(j.at("value_exact").get<std::string>()));
    return Number(j.at("value").get<double>());
}

json witness_json(const TwoDistinctWitness & w)
{
    QSpectrum s;
    s.entries = w.values;
    return {{"q", number_json(w.q)}, {"case", w.case_id}, {"values", to_json(s)}};
}

AnalysisReport analyze(std::string_view array_text, std::string_view q_text, const AnalysisOptions & options)
{
    auto ia = IntersectionArray::parse(array_text);
    auto q = RationalQ::parse(q_text);
    const Number qn(q.value());

    AnalysisReport out;
    out.array = ia.str();
    out.q = q.str();
    out.diameter = ia.diameter();
    out.n = ia.vertices();
    auto spectrum = dq_spectrum_formula(ia, q);
    out.distinct = static_cast<int>(count_distinct(spectrum));
    out.spectrum = spectrum;

    auto & cls = out.classifications;
    auto r = is_antipodal(ia);
    cls["antipodal_r"] = r ? json(*r) : json(nullptr);
    cls["bipartite"] = is_bipartite(ia);
    cls["feasibility"] = feasibility_check(ia);

    if (ia.diameter() == 3) {
        auto cc = distinct_count_case(ia, qn);
        out.count_case = std::string(to_string(cc.which));
        cls["case_bounds"] = {cc.lower, cc.upper};
        auto crit = critical_q(ia);
        out.critical_q = crit.q;
        out.q2_degenerate = crit.q2_degenerate;
        json pairs = json::array();
        for (auto [i, j] : coincidence_pairs(ia, qn))
            pairs.push_back({i, j});
        cls["coincidence_pairs"] = pairs;
        cls["three_distinct_at_unit_q"] = three_distinct_at_unit_q(ia);
        auto witness = two_distinct_search(ia);
        cls["two_distinct_witness"] = witness ? witness_json(*witness) : json(nullptr);
        cls["kpy_bounds"] = kpy_bounds_check(ia);
        if (r) {
            cls["c2_at_boundary"] = antipodal_c2_at_boundary(ia);
            if (! q.in_open_unit_below())
                cls["antipodal_three_distinct"] = antipodal_three_distinct(ia, qn);
        }
        if (is_bipartite(ia)) {
            json rows = json::array();
            for (const auto & b : bipartite_three_distinct_q(ia))
                rows.push_back({{"l", b.l}, {"q", number_json(b.q)}, {"excluded", b.excluded}});
            cls["bipartite_three_distinct_q"] = rows;
        }
    } else {
        out.skipped.push_back("diameter3");
    }

    if (r && *r == 2)
        cls["zero_multiplicity"] = to_json(zero_multiplicity_check(ia));
    else
        out.skipped.push_back("antipodal_cover");

    if (options.oracle) {
        if (! options.graph)
            throw Error(Errc::ParseError, "--oracle needs --graph=<atlas-name>");
        auto g = graph_by_name(*options.graph);
        auto found = verify_drg(g);
        cls["oracle_graph"] = *options.graph;
        cls["oracle_array"] = found ? json(found->str()) : json(nullptr);
        out.oracle_match = found && *found == ia && spectra_match(spectrum, dq_spectrum_oracle(g, q));
    }
    return out;
}

json to_json(const AnalysisReport & report)
{
    json out;
    out["array"] = report.array;
    out["q"] = report.q;
    out["diameter"] = report.diameter;
    out["n"] = report.n;
    out["spectrum"] = report.spectrum ? to_json(*report.spectrum) : json(nullptr);
    out["distinct"] = report.distinct;
    out["case"] = report.count_case ? json(*report.count_case) : json(nullptr);
    if (report.critical_q) {
        const auto & c = *report.critical_q;
        out["critical_q"] = {{"q1", number_json(c[0])},
                             {"q2", number_json(c[1])},
                             {"q3", number_json(c[2])},
                             {"q2_degenerate", report.q2_degenerate}};
    } else {
        out["critical_q"] = nullptr;
    }
    out["classifications"] = report.classifications;
    out["skipped"] = report.skipped;
    out["oracle_match"] = report.oracle_match ? json(*report.oracle_match) : json(nullptr);
    return out;
}

AnalysisReport report_from_json(const json & j)
{
    AnalysisReport out;
    out.array = j.at("array").get<std::string>();
    out.q = j.at("q").get<std::string>();
    out.diameter = j.at("diameter").get<int>();
    out.n = j.at("n").get<std::int64_t>();
    if (! j.at("spectrum").is_null()) {
        auto s = spectrum_from_json(j.at("spectrum"));
        auto q = RationalQ::parse(out.q);
        s.q = q;
        s.q_value = q.to_double();
        out.spectrum = s;
    }
    out.distinct = j.at("distinct").get<int>();
    if (! j.at("case").is_null())
        out.count_case = j.at("case").get<std::string>();
    if (! j.at("critical_q").is_null()) {
        const auto & c = j.at("critical_q");
        out.critical_q = std::array<Number, 3>{
            number_from_json(c.at("q1")), number_from_json(c.at("q2")), number_from_json(c.at("q3"))};
        out.q2_degenerate = c.at("q2_degenerate").get<bool>();
    }
    out.classifications = j.at("classifications");
    out.skipped = j.at("skipped").get<std::vector<std::string>>();
    if (! j.at("oracle_match").is_null())
        out.oracle_match = j.at("oracle_match").get<bool>();
    return out;
}

std::string to_text(const AnalysisReport & report)
{
    std::ostringstream out;
    out << "array      " << report.array << "\n";
    out << "q          " << report.q << "\n";
    out << "diameter   " << report.diameter << "   vertices " << report.n << "\n";
    if (report.spectrum) {
        out << "spectrum   " << spectrum_text(*report.spectrum) << "\n";
        out << "distinct   " << report.distinct << "\n";
    }
    if (report.count_case)
        out << "case       " << *report.count_case << "\n";
    if (report.critical_q) {
        const auto & c = *report.critical_q;
        out << "critical q " << c[0].str() << ", " << c[1].str() << (report.q2_degenerate ? " (degenerate)" : "")
            << ", " << c[2].str() << "\n";
    }
    for (const auto & [name, value] : report.classifications.items())
        out << name << ": " << value.dump() << "\n";
    for (const auto & s : report.skipped)
        out << "skipped    " << s << "\n";
    if (report.oracle_match)
        out << "oracle     " << (*report.oracle_match ? "match" : "MISMATCH") << "\n";
    return out.str();
}

ScanReport scan(std::string_view array_text)
{
    auto ia = IntersectionArray::parse(array_text);
    auto crit = critical_q(ia);
    ScanReport out;
    out.array = ia.str();
    for (int l = 1; l <= 3; ++l) {
        ScanRow row;
        row.l = l;
        row.q = crit[l];
        row.usable = crit.usable(l) && sign_of(crit[l]) != 0;
        row.region = region_text(crit[l]);
        if (row.usable) {
            auto cc = distinct_count_case(ia, crit[l]);
            row.distinct = cc.count;
            row.count_case = std::string(to_string(cc.which));
        }
        out.rows.push_back(row);
    }
    out.witness = two_distinct_search(ia);
    if (is_bipartite(ia)) {
        out.bipartite_q = bipartite_three_distinct_q(ia);
        for (const auto & b : out.bipartite_q) {
            if (b.excluded) {
                out.bipartite_distinct.push_back(std::nullopt);
            } else if (b.q.is_rational()) {
                auto s = dq_spectrum_formula(ia, RationalQ(b.q.exact()->rational_part()));
                out.bipartite_distinct.push_back(static_cast<int>(count_distinct(s)));
            } else {
                auto s = dq_spectrum_formula(ia, b.q.value());
                out.bipartite_distinct.push_back(static_cast<int>(count_distinct(s)));
            }
        }
    }
    return out;
}

json to_json(const ScanReport & report)
{
    json rows = json::array();
    for (const auto & r : report.rows) {
        rows.push_back({{"l", r.l},
                        {"q", number_json(r.q)},
                        {"usable", r.usable},
                        {"region", r.region},
                        {"distinct", optional_json(r.distinct)},
                        {"case", r.count_case ? json(*r.count_case) : json(nullptr)}});
    }
    json bip = json::array();
    for (std::size_t i = 0; i < report.bipartite_q.size(); ++i) {
        const auto & b = report.bipartite_q[i];
        bip.push_back({{"l", b.l},
                       {"q", number_json(b.q)},
                       {"region", b.excluded ? "excluded" : std::string(to_string(b.region))},
                       {"distinct", optional_json(report.bipartite_distinct[i])}});
    }
    return {{"array", report.array},
            {"critical_q", rows},
            {"witness", report.witness ? witness_json(*report.witness) : json(nullptr)},
            {"bipartite_three_distinct_q", bip}};
}

std::string to_text(const ScanReport & report)
{
    std::ostringstream out;
    out << "array " << report.array << "\n";
    for (const auto & r : report.rows) {
        out << "q" << r.l << " = " << r.q.str() << "  [" << r.region << "]";
        if (r.usable)
            out << "  distinct " << *r.distinct << "  case " << *r.count_case;
        else
            out << "  degenerate";
        out << "\n";
    }
    if (report.witness) {
        QSpectrum s;
        s.entries = report.witness->values;
        out << "two-distinct witness: q = " << report.witness->q.str() << ", case " << report.witness->case_id
            << ", values " << spectrum_text(s) << "\n";
    } else {
        out << "two-distinct witness: none\n";
    }
    for (std::size_t i = 0; i < report.bipartite_q.size(); ++i) {
        const auto & b = report.bipartite_q[i];
        out << "bipartite three-distinct q (l=" << b.l << ") = " << b.q.str();
        if (b.excluded)
            out << "  excluded";
        else
            out << "  [" << to_string(b.region) << "]  distinct " << *report.bipartite_distinct[i];
        out << "\n";
    }
    return out.str();
}

json to_json(const std::vector<AntipodalCandidate> & rows)
{
    json out = json::array();
    for (const auto & c : rows) {
        out.push_back({{"r", c.r},
                       {"theta1", c.theta1},
                       {"array", c.array.str()},
                       {"m1", number_json(c.m1)},
                       {"n", c.n},
                       {"bound", antipodal_vertex_bound(c.r)},
                       {"bound_ok", c.bound_ok},
                       {"status", std::string(AntipodalCandidate::status)}});
    }
    return out;
}

std::string to_text(const std::vector<AntipodalCandidate> & rows)
{
    std::ostringstream out;
    out << "theta1  array                               m1     n      bound_ok\n";
    for (const auto & c : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-7lld %-35s %-6s %-6lld %s\n", static_cast<long long>(c.theta1),
                      c.array.str().c_str(), c.m1.str().c_str(), static_cast<long long>(c.n),
                      c.bound_ok ? "yes" : "no");
        out << line;
    }
    if (! rows.empty())
        out << rows.size() << " array-feasible candidates, vertex bound " << antipodal_vertex_bound(rows.front().r)
            << "\n";
    return out.str();
}

const std::vector<RationalQ> & q_grid()
{
    static const std::vector<RationalQ> grid = {
        RationalQ(-2), RationalQ(-1), RationalQ(-1, 2), RationalQ(-1, 3),
        RationalQ(1, 2), RationalQ(1), RationalQ(2), RationalQ(3),
    };
    return grid;
}

std::size_t VerifySummary::failed() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto & c) { return ! c.passed; }));
}

namespace {

struct Verifier {
    std::set<std::string> tags;
    VerifySummary summary;

    bool want(const std::string & tag) const { return tags.empty() || tags.count(tag) > 0; }

    void add(const std::string & tag, const std::string & subject, const std::string & name, bool passed,
             std::string detail = {})
    {
        summary.checks.push_back({tag, subject, name, passed, std::move(detail)});
    }

    // Formula route against dense eigensolve on every grid q.
    void formula_vs_oracle(const std::string & tag, const std::string & subject, const Graph & g,
                           const IntersectionArray & ia)
    {
        std::string failures;
        bool within_degree = true;
        for (const auto & q : q_grid()) {
            auto formula = dq_spectrum_formula(ia, q);
            if (! spectra_match(formula, dq_spectrum_oracle(g, q)))
                failures += " q=" + q.str();
            within_degree = within_degree && count_distinct(formula) <= static_cast<std::size_t>(ia.diameter() + 1);
        }
        add(tag, subject, "formula-matches-oracle", failures.empty(), failures.empty() ? "" : "mismatch at" + failures);
        add(tag, subject, "distinct-at-most-D+1", within_degree);
    }

    void antipodal(const std::string & subject, const Graph & g, const IntersectionArray & ia)
    {
        auto formula = zero_multiplicity_check(ia);
        add("antipodal", subject, "zero-multiplicity-formula", formula.pass,
            "zero_mult " + mult_json(formula.zero_mult).dump() + ", distinct " + std::to_string(formula.distinct));
        add("antipodal", subject, "folded-R1-zero", formula.folded_zero);
        auto oracle = zero_bounds_from_spectrum(dq_spectrum_oracle(g, RationalQ(1)), ia.diameter(), ia.vertices());
        add("antipodal", subject, "zero-multiplicity-oracle", oracle.pass,
            "zero_mult " + mult_json(oracle.zero_mult).dump() + ", distinct " + std::to_string(oracle.distinct));
        add("antipodal", subject, "folded-palindrome", folded_spectrum(ia).palindromic);
    }

    void diameter3(const std::string & subject, const Graph & g, const IntersectionArray & ia)
    {
        auto spectrum = adjacency_spectrum(ia);
        auto oracle1 = dq_spectrum_oracle(g, RationalQ(1));
        add("diameter3", subject, "three-distinct-at-q=1", three_distinct_at_unit_q(ia) == (count_distinct(oracle1) == 3));
        add("diameter3", subject, "eigenvalue-bounds", kpy_bounds_check(ia));

        std::vector<Number> grid;
        for (const auto & q : q_grid())
            grid.emplace_back(q.value());
        for (int j = 1; j <= 100; ++j)
            grid.emplace_back(ratio(Integer(-j), Integer(101)));

        bool triple = true, at_least_two = true, pairs_sound = true;
        for (const auto & q : grid) {
            std::vector<QSpectrum::Entry> nontrivial;
            for (std::size_t i = 0; i < spectrum.size(); ++i) {
                const Number & t = spectrum.theta(i);
                Number general = rq_value(ia, t, q);
                Number cubic = rq_cubic(ia, t, q);
                Number quad = i == 0 ? rq_k_quadratic(ia, q) : rq_quadratic(ia, t, q);
                triple = triple && nearly_equal(general.value(), cubic.value(), 1e-9)
                         && nearly_equal(general.value(), quad.value(), 1e-9);
                if (i > 0)
                    nontrivial.push_back({quad, 1.0});
            }
            auto merged = cluster(nontrivial);
            at_least_two = at_least_two && merged.size() >= 2;
            pairs_sound = pairs_sound && (coincidence_pairs(ia, q).empty() == (merged.size() == 3));
        }
        add("diameter3", subject, "cubic=quadratic=recurrence", triple);
        add("diameter3", subject, "nontrivial-values-at-least-2", at_least_two);
        add("diameter3", subject, "coincidence-pairs-sound", pairs_sound);

        // The witness search against the oracle at each rational candidate q.
        auto witness = two_distinct_search(ia);
        auto crit = critical_q(ia);
        bool agree = true;
        for (int l = 2; l <= 3; ++l) {
            const Number & q = crit[l];
            if (! crit.usable(l) || ! q.is_rational() || q.value() <= -1 || q.value() >= 0)
                continue;
            RationalQ rq(q.exact()->rational_part());
            bool two = count_distinct(dq_spectrum_oracle(g, rq)) == 2;
            bool claimed = witness && witness->q == q;
            agree = agree && two == claimed;
        }
        add("diameter3", subject, "two-distinct-search-matches-oracle", agree);

        if (is_bipartite(ia)) {
            bool ok = true;
            for (int j = 1; j <= 100; ++j)
                ok = ok && count_distinct(dq_spectrum_formula(ia, RationalQ(-j, 101))) >= 3;
            add("diameter3", subject, "bipartite-never-two-distinct", ok);
        }
        if (is_antipodal(ia)) {
            bool ok = true;
            for (const auto & q : grid)
                ok = ok && ! coincide(rq_value(ia, spectrum.theta(1), q), rq_value(ia, spectrum.theta(3), q));
            add("diameter3", subject, "antipodal-R1-ne-R3", ok);
        }
    }

    void expect_spectrum(const std::string & array, const RationalQ & q, const std::string & expected)
    {
        auto s = dq_spectrum_formula(IntersectionArray::parse(array), q);
        std::string got = spectrum_text(s);
        add("regression", array, "spectrum-at-q=" + q.str(), got == expected, "got " + got + ", want " + expected);
    }

    void regressions()
    {
        expect_spectrum("{9,4,1;1,4,9}", RationalQ(-1, 2), "{3:15, -9:5}");
        expect_spectrum("{35,18,1;1,18,35}", RationalQ(-1, 3), "{8:56, -28:16}");
        expect_spectrum("{15,8,3;1,4,9}", RationalQ(-1, 2), "{15:21, -9:35}");
        auto j83 = IntersectionArray::parse("{15,8,3;1,4,9}");
        add("regression", "J(8,3)", "oracle-at-q=-1/2",
            spectra_match(dq_spectrum_formula(j83, RationalQ(-1, 2)), dq_spectrum_oracle(johnson_graph(8, 3), RationalQ(-1, 2))));
        std::vector<std::int64_t> thetas;
        for (const auto & c : enumerate_antipodal_r(2))
            thetas.push_back(c.theta1);
        add("regression", "r=2", "antipodal-enumeration", thetas == std::vector<std::int64_t>{1, 3, 5, 9, 21});
    }

    void fixture(const std::string & path)
    {
        std::ifstream in(path);
        if (! in) {
            add("fixture", path, "fixture-readable", false, "cannot open");
            return;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        static const std::regex header(R"(#\s*array:\s*(\{[^}]*\}))");
        std::smatch m;
        if (! std::regex_search(text, m, header)) {
            add("fixture", path, "fixture-header", false, "no '# array:' line");
            return;
        }
        try {
            auto expected = IntersectionArray::parse(m[1].str());
            auto g = parse_adjacency_list(text);
            auto found = verify_drg(g);
            bool same = found && *found == expected;
            add("fixture", path, "fixture-array-matches", same,
                found ? "graph has " + found->str() : "graph is not distance-regular");
            if (same)
                formula_vs_oracle("fixture", path, g, expected);
        } catch (const Error & e) {
            add("fixture", path, "fixture-parse", false, e.what());
        }
    }
};

} // namespace

VerifySummary verify_atlas(const std::string & filter, const std::vector<std::string> & fixtures)
{
    Verifier v;
    std::stringstream tags(filter);
    for (std::string tag; std::getline(tags, tag, ',');)
        if (! tag.empty())
            v.tags.insert(tag);

    for (const auto & entry : atlas()) {
        if (! (v.want("drg") || v.want("formula") || v.want("antipodal") || v.want("diameter3")))
            break;
        auto g = entry.build();
        auto ia = verify_drg(g);
        if (v.want("drg") || ! ia)
            v.add("drg", entry.name, "distance-regular", ia.has_value(), ia ? ia->str() : "");
        if (! ia)
            continue;
        if (v.want("formula"))
            v.formula_vs_oracle("formula", entry.name, g, *ia);
        auto r = is_antipodal(*ia);
        if (v.want("antipodal") && r && *r == 2)
            v.antipodal(entry.name, g, *ia);
        if (v.want("diameter3") && ia->diameter() == 3)
            v.diameter3(entry.name, g, *ia);
    }
    if (v.want("regression"))
        v.regressions();
    for (const auto & path : fixtures)
        v.fixture(path);
    return v.summary;
}

json to_json(const VerifySummary & summary)
{
    json checks = json::array();
    for (const auto & c : summary.checks)
        checks.push_back(
            {{"tag", c.tag}, {"subject", c.subject}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"checks", checks}, {"total", summary.checks.size()}, {"failed", summary.failed()}};
}

std::string to_text(const VerifySummary & summary)
{
    std::ostringstream out;
    for (const auto & c : summary.checks)
        if (! c.passed)
            out << "FAILED [" << c.tag << "] " << c.subject << ": " << c.name
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    if (summary.ok())
        out << "all " << summary.checks.size() << " checks passed\n";
    else
        out << summary.failed() << " of " << summary.checks.size() << " checks failed\n";
    return out.str();
}

} // namespace qdrg
