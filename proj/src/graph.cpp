#include "matcharr/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace matcharr {

GraphError::GraphError(GraphErrorKind kind, const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind), line_(line) {}

namespace {

void validate_edges(std::size_t vertex_count, const std::vector<Edge>& edges,
                    const std::vector<std::size_t>* lines = nullptr)
{
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        const std::size_t line = lines ? (*lines)[i] : 0;
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw GraphError(GraphErrorKind::vertex_out_of_range,
                             "edge " + std::to_string(i + 1) + " has an endpoint outside 1.." +
                                 std::to_string(vertex_count),
                             line);
        if (e.u == e.v)
            throw GraphError(GraphErrorKind::loop, "edge " + std::to_string(i + 1) + " is a loop",
                             line);
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw GraphError(GraphErrorKind::parallel_edge,
                             "edge " + std::to_string(i + 1) + " repeats an earlier edge", line);
    }
}

} // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incident_(vertex_count)
{
    validate_edges(vertex_count_, edges_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        incident_[edges_[i].u].push_back(i);
        incident_[edges_[i].v].push_back(i);
    }
}

std::optional<std::size_t> Graph::edge_between(std::size_t a, std::size_t b) const
{
    if (a >= vertex_count_ || b >= vertex_count_)
        return std::nullopt;
    const auto& small = degree(a) <= degree(b) ? incident_[a] : incident_[b];
    for (std::size_t e : small) {
        const Edge& ed = edges_[e];
        if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))
            return e;
    }
    return std::nullopt;
}

std::vector<std::size_t> Graph::degree_sequence() const
{
    std::vector<std::size_t> d(vertex_count_);
    for (std::size_t v = 0; v < vertex_count_; ++v)
        d[v] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

EdgeNumbering::EdgeNumbering(std::vector<std::size_t> numbers) : numbers_(std::move(numbers))
{
    std::vector<bool> used(numbers_.size() + 1, false);
    for (std::size_t k : numbers_) {
        if (k < 1 || k > numbers_.size() || used[k])
            throw std::invalid_argument("edge numbering is not a permutation of 1.." +
                                        std::to_string(numbers_.size()));
        used[k] = true;
    }
}

EdgeNumbering EdgeNumbering::identity(std::size_t n)
{
    std::vector<std::size_t> numbers(n);
    std::iota(numbers.begin(), numbers.end(), std::size_t{1});
    return EdgeNumbering(std::move(numbers));
}

EdgeNumbering EdgeNumbering::random(std::size_t n, std::mt19937_64& rng)
{
    std::vector<std::size_t> numbers(n);
    std::iota(numbers.begin(), numbers.end(), std::size_t{1});
    std::shuffle(numbers.begin(), numbers.end(), rng);
    return EdgeNumbering(std::move(numbers));
}

std::size_t EdgeNumbering::position_of(std::size_t number) const
{
    auto it = std::find(numbers_.begin(), numbers_.end(), number);
    if (it == numbers_.end())
        throw std::out_of_range("no edge numbered " + std::to_string(number));
    return static_cast<std::size_t>(it - numbers_.begin());
}

namespace {

bool parse_count(std::string_view token, std::size_t& out)
{
    if (token.empty())
        return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::vector<std::size_t> lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        if (tokens.size() != 2)
            throw GraphError(GraphErrorKind::malformed, "expected two integers", line_no);
        std::size_t a = 0;
        std::size_t b = 0;
        if (!parse_count(tokens[0], a) || !parse_count(tokens[1], b))
            throw GraphError(GraphErrorKind::malformed, "expected two non-negative integers",
                             line_no);
        if (!have_header) {
            vertex_count = a;
            edge_count = b;
            have_header = true;
            continue;
        }
        if (edges.size() == edge_count)
            throw GraphError(GraphErrorKind::malformed,
                             "more edge lines than the declared " + std::to_string(edge_count),
                             line_no);
        if (a < 1 || b < 1 || a > vertex_count || b > vertex_count)
            throw GraphError(GraphErrorKind::vertex_out_of_range,
                             "vertex id outside 1.." + std::to_string(vertex_count), line_no);
        edges.push_back({a - 1, b - 1});
        lines.push_back(line_no);
    }
    if (!have_header)
        throw GraphError(GraphErrorKind::malformed, "missing \"V E\" header line");
    if (edges.size() != edge_count)
        throw GraphError(GraphErrorKind::malformed, "declared " + std::to_string(edge_count) +
                                                        " edges, found " +
                                                        std::to_string(edges.size()));
    validate_edges(vertex_count, edges, &lines);
    return Graph(vertex_count, std::move(edges));
}

std::string format_graph(const Graph& g)
{
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        os << e.u + 1 << ' ' << e.v + 1 << '\n';
    return os.str();
}

std::vector<Component> connected_components(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> comp(n, n);
    std::vector<Component> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != n)
            continue;
        const std::size_t id = out.size();
        std::vector<std::size_t> members{s};
        comp[s] = id;
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (std::size_t e : g.incident(members[k])) {
                std::size_t w = g.edge(e).other(members[k]);
                if (comp[w] == n) {
                    comp[w] = id;
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        Component c;
        c.vertices = members;
        out.push_back(std::move(c));
    }

    std::vector<std::size_t> local(n);
    for (const Component& c : out)
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            local[c.vertices[i]] = i;

    std::vector<std::vector<Edge>> edges(out.size());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const std::size_t id = comp[ed.u];
        edges[id].push_back({local[ed.u], local[ed.v]});
        out[id].edge_indices.push_back(e);
    }
    for (std::size_t id = 0; id < out.size(); ++id)
        out[id].graph = Graph(out[id].vertices.size(), std::move(edges[id]));
    return out;
}

Graph line_graph(const Graph& g)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
            const Edge& a = g.edge(i);
            const Edge& b = g.edge(j);
            if (a.touches(b.u) || a.touches(b.v))
                edges.push_back({i, j});
        }
    return Graph(g.edge_count(), std::move(edges));
}

namespace {

// Depth-first search over bijections a -> b, assigning vertices of a in order
// and pruning on degree and on adjacency to already-mapped vertices.
bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<std::size_t>& map,
                        std::vector<bool>& used, std::size_t next)
{
    const std::size_t n = a.vertex_count();
    if (next == n)
        return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || a.degree(next) != b.degree(cand))
            continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < next && ok; ++prev)
            ok = a.adjacent(next, prev) == b.adjacent(cand, map[prev]);
        if (!ok)
            continue;
        map[next] = cand;
        used[cand] = true;
        if (extend_isomorphism(a, b, map, used, next + 1))
            return true;
        used[cand] = false;
    }
    return false;
}

} // namespace

bool is_isomorphic(const Graph& a, const Graph& b, const Limits& limits)
{
    check_guard("max_iso_vertices", a.vertex_count(), limits.max_iso_vertices);
    check_guard("max_iso_vertices", b.vertex_count(), limits.max_iso_vertices);
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    if (a.degree_sequence() != b.degree_sequence())
        return false;
    std::vector<std::size_t> map(a.vertex_count());
    std::vector<bool> used(a.vertex_count(), false);
    return extend_isomorphism(a, b, map, used, 0);
}

namespace {

using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

IntPolynomial chromatic_rec(std::size_t n, const EdgeSet& edges)
{
    if (edges.empty())
        return IntPolynomial::monomial(n);
    const auto [u, v] = *edges.begin(); // lexicographically first, u < v

    EdgeSet deleted = edges;
    deleted.erase(deleted.begin());

    // contract v into u, then shift ids above v down by one
    auto relabel = [u = u, v = v](std::size_t w) {
        if (w == v)
            w = u;
        return w > v ? w - 1 : w;
    };
    EdgeSet contracted;
    for (auto [a, b] : deleted) {
        std::size_t x = relabel(a);
        std::size_t y = relabel(b);
        if (x != y)
            contracted.emplace(std::min(x, y), std::max(x, y));
    }
    return chromatic_rec(n, deleted) - chromatic_rec(n - 1, contracted);
}

} // namespace

IntPolynomial chromatic_polynomial(const Graph& g, const Limits& limits)
{
    check_guard("max_chromatic_edges", g.edge_count(), limits.max_chromatic_edges);
    EdgeSet edges;
    for (const Edge& e : g.edges())
        edges.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    return chromatic_rec(g.vertex_count(), edges);
}

std::uint64_t count_acyclic_orientations(const Graph& g, const Limits& limits)
{
    check_guard("max_orientation_edges", g.edge_count(), limits.max_orientation_edges);
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    std::uint64_t count = 0;
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> indeg(n);
    std::vector<std::size_t> queue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (auto& o : out)
            o.clear();
        std::fill(indeg.begin(), indeg.end(), 0);
        for (std::size_t e = 0; e < m; ++e) {
            auto [from, to] = g.edge(e);
            if ((mask >> e) & 1U)
                std::swap(from, to);
            out[from].push_back(to);
            ++indeg[to];
        }
        queue.clear();
        for (std::size_t v = 0; v < n; ++v)
            if (indeg[v] == 0)
                queue.push_back(v);
        for (std::size_t k = 0; k < queue.size(); ++k)
            for (std::size_t w : out[queue[k]])
                if (--indeg[w] == 0)
                    queue.push_back(w);
        if (queue.size() == n)
            ++count;
    }
    return count;
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t edges)
{
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges; ++i)
        es.push_back({i, i + 1});
    return Graph(edges + 1, std::move(es));
}

Graph star_graph(std::size_t leaves)
{
    std::vector<Edge> es;
    for (std::size_t i = 1; i <= leaves; ++i)
        es.push_back({0, i});
    return Graph(leaves + 1, std::move(es));
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("a simple cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i)
        es.push_back({i, (i + 1) % n});
    return Graph(n, std::move(es));
}

Graph edgeless_graph(std::size_t n) { return Graph(n, {}); }

Graph disjoint_union(const Graph& a, const Graph& b)
{
    std::vector<Edge> es = a.edges();
    const std::size_t shift = a.vertex_count();
    for (const Edge& e : b.edges())
        es.push_back({e.u + shift, e.v + shift});
    return Graph(a.vertex_count() + b.vertex_count(), std::move(es));
}

Graph glue(const Graph& a, std::size_t at_a, const Graph& b, std::size_t at_b)
{
    if (at_a >= a.vertex_count() || at_b >= b.vertex_count())
        throw std::out_of_range("glue vertex out of range");
    std::vector<std::size_t> map(b.vertex_count());
    std::size_t next = a.vertex_count();
    for (std::size_t v = 0; v < b.vertex_count(); ++v)
        map[v] = v == at_b ? at_a : next++;
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges())
        es.push_back({map[e.u], map[e.v]});
    return Graph(next, std::move(es));
}

} // namespace matcharr
