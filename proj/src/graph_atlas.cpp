#include <qdrg/graph_atlas.hpp>
#include <qdrg/error.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <charconv>
#include <queue>
#include <regex>
#include <sstream>

namespace qdrg {

namespace {

void require(bool ok, const std::string & what)
{
    if (! ok)
        throw Error(Errc::OutOfRange, what);
}

/// All k-subsets of {0..v-1} as bitmasks, in lexicographic order of the sets.
std::vector<unsigned> subsets(int v, int k)
{
    std::vector<unsigned> out;
    for (unsigned mask = 0; mask < (1u << v); ++mask)
        if (std::popcount(mask) == k)
            out.push_back(mask);
    return out;
}

std::string set_label(unsigned mask)
{
    std::string out = "{";
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) {
            if (out.size() > 1)
                out += ",";
            out += std::to_string(i);
        }
    return out + "}";
}

Graph subset_graph(int v, int k, int meet)
{
    auto sets = subsets(v, k);
    Graph g(static_cast<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        g.labels.push_back(set_label(sets[i]));
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (std::popcount(sets[i] & sets[j]) == meet)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

int to_int(const std::string & s)
{
    return std::stoi(s);
}

} // namespace

Graph::Graph(int n) : _adj(n)
{
}

void Graph::add_edge(int u, int v)
{
    if (u == v)
        throw Error(Errc::OutOfRange, "loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw Error(Errc::OutOfRange, "edge endpoint out of range");
    auto insert = [](std::vector<int> & list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x)
            list.insert(it, x);
    };
    insert(_adj[u], v);
    insert(_adj[v], u);
}

bool Graph::adjacent(int u, int v) const
{
    return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
}

std::int64_t Graph::edge_count() const
{
    std::int64_t twice = 0;
    for (const auto & list : _adj)
        twice += static_cast<std::int64_t>(list.size());
    return twice / 2;
}

bool Graph::is_connected() const
{
    if (size() == 0)
        return true;
    auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

int DistanceMatrix::diameter() const
{
    return _dist.empty() ? 0 : *std::max_element(_dist.begin(), _dist.end());
}

std::vector<int> bfs_distances(const Graph & g, int root)
{
    std::vector<int> dist(g.size(), -1);
    std::queue<int> todo;
    dist[root] = 0;
    todo.push(root);
    while (! todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                todo.push(w);
            }
    }
    return dist;
}

DistanceMatrix distances(const Graph & g)
{
    const int n = g.size();
    std::vector<int> all;
    all.reserve(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        auto d = bfs_distances(g, x);
        if (std::any_of(d.begin(), d.end(), [](int v) { return v < 0; }))
            throw Error(Errc::DisconnectedInput, "graph is disconnected");
        all.insert(all.end(), d.begin(), d.end());
    }
    return DistanceMatrix(n, std::move(all));
}

Graph johnson_graph(int v, int k)
{
    require(v <= 12 && k >= 1 && k <= v - 1, "johnson_graph needs 1 <= k <= v-1 and v <= 12");
    return subset_graph(v, k, k - 1);
}

Graph hamming_graph(int d, int s)
{
    require(d >= 1 && s >= 2, "hamming_graph needs d >= 1 and s >= 2");
    std::int64_t n = 1;
    for (int i = 0; i < d; ++i) {
        n *= s;
        require(n <= 20000, "hamming_graph limited to s^d <= 20000");
    }
    Graph g(static_cast<int>(n));
    for (int x = 0; x < n; ++x) {
        std::string label;
        for (int i = 0, rest = x; i < d; ++i, rest /= s)
            label += std::to_string(rest % s);
        g.labels.push_back(label);
        // neighbors differ in exactly one coordinate
        int place = 1;
        for (int i = 0; i < d; ++i, place *= s) {
            int digit = (x / place) % s;
            for (int t = digit + 1; t < s; ++t)
                g.add_edge(x, x + (t - digit) * place);
        }
    }
    return g;
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle_graph needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph kneser_graph_73()
{
    return subset_graph(7, 3, 0);
}

Graph petersen_graph()
{
    return subset_graph(5, 2, 0);
}

Graph heawood_graph()
{
    // lines of the Fano plane are the translates of the difference set {0,1,3} mod 7
    Graph g(14);
    for (int line = 0; line < 7; ++line)
        for (int offset : {0, 1, 3})
            g.add_edge((line + offset) % 7, 7 + line);
    return g;
}

Graph crown_graph(int m)
{
    require(m >= 3, "crown_graph needs m >= 3");
    Graph g(2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j)
                g.add_edge(i, m + j);
    return g;
}

Graph halved_cube(int d)
{
    require(d >= 4 && d <= 8, "halved_cube needs 4 <= d <= 8");
    std::vector<unsigned> even;
    for (unsigned x = 0; x < (1u << d); ++x)
        if (std::popcount(x) % 2 == 0)
            even.push_back(x);
    Graph g(static_cast<int>(even.size()));
    for (std::size_t i = 0; i < even.size(); ++i)
        for (std::size_t j = i + 1; j < even.size(); ++j)
            if (std::popcount(even[i] ^ even[j]) == 2)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

DistancePower distance_power(const Graph & g, int i)
{
    auto dist = distances(g);
    require(i >= 1 && i <= dist.diameter(), "distance_power needs 1 <= i <= diameter");
    DistancePower out{Graph(g.size()), false};
    out.graph.labels = g.labels;
    for (int x = 0; x < g.size(); ++x)
        for (int y = x + 1; y < g.size(); ++y)
            if (dist(x, y) == i)
                out.graph.add_edge(x, y);
    out.disconnected = ! out.graph.is_connected();
    return out;
}

std::optional<IntersectionArray> verify_drg(const Graph & g)
{
    const int n = g.size();
    if (n < 2 || ! g.is_connected())
        return std::nullopt;
    auto dist = distances(g);
    const int diam = dist.diameter();
    std::vector<int> b(diam + 1, -1), c(diam + 1, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int i = dist(x, y);
            int below = 0, above = 0;
            for (int z : g.neighbors(y)) {
                int dz = dist(x, z);
                below += dz == i - 1;
                above += dz == i + 1;
            }
            if (b[i] < 0) {
                b[i] = above;
                c[i] = below;
            }
            else if (b[i] != above || c[i] != below)
                return std::nullopt;
        }
    }
    // constant b_i and c_i on a regular graph force constant a_i
    for (int x = 1; x < n; ++x)
        if (g.degree(x) != g.degree(0))
            return std::nullopt;
    try {
        return IntersectionArray::create(std::vector<std::int64_t>(b.begin(), b.end() - 1),
                                         std::vector<std::int64_t>(c.begin() + 1, c.end()));
    }
    catch (const Error &) {
        return std::nullopt;
    }
}

Eigen::MatrixXd adjacency_matrix(const Graph & g)
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.size(), g.size());
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.neighbors(v))
            m(v, w) = 1.0;
    return m;
}

std::vector<double> dense_eigenvalues(const Eigen::MatrixXd & m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error(Errc::NumericalFailure, "dense eigensolve did not converge");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string to_adjacency_list(const Graph & g)
{
    std::ostringstream out;
    for (int v = 0; v < g.size(); ++v) {
        out << v << ":";
        for (int w : g.neighbors(v))
            out << " " << w;
        out << "\n";
    }
    return out.str();
}

Graph parse_adjacency_list(std::string_view text)
{
    std::vector<std::pair<int, std::vector<int>>> rows;
    int max_vertex = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": missing ':'");
        std::vector<int> nbrs;
        int v = 0;
        try {
            v = std::stoi(line.substr(0, colon));
            std::istringstream rest(line.substr(colon + 1));
            std::string tok;
            while (rest >> tok) {
                std::size_t used = 0;
                nbrs.push_back(std::stoi(tok, &used));
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            }
        }
        catch (const std::exception &) {
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad vertex number");
        }
        if (v < 0 || std::any_of(nbrs.begin(), nbrs.end(), [](int w) { return w < 0; }))
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": negative vertex");
        max_vertex = std::max(max_vertex, v);
        for (int w : nbrs)
            max_vertex = std::max(max_vertex, w);
        rows.emplace_back(v, std::move(nbrs));
    }
    Graph g(max_vertex + 1);
    for (const auto & [v, nbrs] : rows)
        for (int w : nbrs) {
            if (v == w)
                throw Error(Errc::ParseError, "loop at vertex " + std::to_string(v));
            g.add_edge(v, w);
        }
    return g;
}

const std::vector<AtlasEntry> & atlas()
{
    static const std::vector<AtlasEntry> entries = [] {
        std::vector<std::string> names = {
            "J(4,2)", "petersen", "H(2,3)", "halved(4)",
            "H(3,2)", "J(6,3)", "J(8,3)", "C(7)", "O4", "heawood", "H(3,3)",
            "crown(4)", "crown(5)", "crown(6)", "crown(7)", "crown(8)",
            "halved(6)", "halved2(6)",
            "C(6)", "C(8)", "C(9)", "C(10)", "C(12)", "C(14)",
            "H(4,2)", "H(5,2)", "H(6,2)", "H(7,2)", "J(8,4)", "halved(8)",
        };
        std::vector<AtlasEntry> out;
        for (auto & name : names)
            out.push_back({name, [name] { return graph_by_name(name); }});
        return out;
    }();
    return entries;
}

Graph graph_by_name(std::string_view name)
{
    static const std::regex two(R"((J|H)\((\d+),(\d+)\))");
    static const std::regex one(R"((C|crown|halved|halved2)\((\d+)\))");
    std::string s(name);
    std::smatch m;
    if (std::regex_match(s, m, two)) {
        int x = to_int(m[2]), y = to_int(m[3]);
        return m[1] == "J" ? johnson_graph(x, y) : hamming_graph(x, y);
    }
    if (std::regex_match(s, m, one)) {
        int x = to_int(m[2]);
        if (m[1] == "C")
            return cycle_graph(x);
        if (m[1] == "crown")
            return crown_graph(x);
        if (m[1] == "halved")
            return halved_cube(x);
        return distance_power(halved_cube(x), 2).graph;
    }
    if (s == "O4")
        return kneser_graph_73();
    if (s == "petersen")
        return petersen_graph();
    if (s == "heawood")
        return heawood_graph();
    throw Error(Errc::OutOfRange, "unknown atlas graph '" + s + "'");
}

} // namespace qdrg
