#include "matcharr/paths.hpp"

#include <algorithm>
#include <set>

namespace matcharr {

bool is_valid_sequence(const Graph& g, const EdgeSequence& seq)
{
    const auto& es = seq.edges;
    const auto& vs = seq.vertices;
    if (es.empty() || vs.size() != es.size() + 1)
        return false;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i] >= g.edge_count())
            return false;
        const Edge& e = g.edge(es[i]);
        if (!(e.touches(vs[i]) && e.other(vs[i]) == vs[i + 1]))
            return false;
    }
    std::set<std::size_t> distinct_edges(es.begin(), es.end());
    if (distinct_edges.size() != es.size())
        return false;
    if (seq.kind == SequenceKind::path) {
        std::set<std::size_t> distinct(vs.begin(), vs.end());
        return distinct.size() == vs.size();
    }
    if (vs.front() != vs.back() || es.size() < 4 || es.size() % 2 != 0)
        return false;
    std::set<std::size_t> distinct(vs.begin(), vs.end() - 1);
    return distinct.size() == vs.size() - 1;
}

EdgeSequence reversed(const EdgeSequence& seq)
{
    EdgeSequence r = seq;
    std::reverse(r.edges.begin(), r.edges.end());
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

EdgeSequence canonicalize(const EdgeSequence& seq)
{
    if (seq.edges.empty())
        return seq;
    if (seq.kind == SequenceKind::path) {
        const bool flip = seq.edges.size() == 1 ? seq.vertices.front() > seq.vertices.back()
                                                : seq.edges.front() > seq.edges.back();
        return flip ? reversed(seq) : seq;
    }

    // Cycle: edge i joins vertices[i] and vertices[i + 1], vertices.back() == vertices.front().
    const std::size_t len = seq.edges.size();
    const std::size_t k = static_cast<std::size_t>(
        std::min_element(seq.edges.begin(), seq.edges.end()) - seq.edges.begin());
    const std::size_t next = seq.edges[(k + 1) % len];
    const std::size_t prev = seq.edges[(k + len - 1) % len];

    EdgeSequence out;
    out.kind = SequenceKind::even_cycle;
    if (next < prev) {
        for (std::size_t i = 0; i < len; ++i) {
            out.edges.push_back(seq.edges[(k + i) % len]);
            out.vertices.push_back(seq.vertices[(k + i) % len]);
        }
    } else {
        for (std::size_t i = 0; i < len; ++i) {
            out.edges.push_back(seq.edges[(k + len - i) % len]);
            out.vertices.push_back(seq.vertices[(k + 1 + len - i) % len]);
        }
    }
    out.vertices.push_back(out.vertices.front());
    return out;
}

namespace {

bool shorter_then_lex(const EdgeSequence& a, const EdgeSequence& b)
{
    if (a.edges.size() != b.edges.size())
        return a.edges.size() < b.edges.size();
    if (a.edges != b.edges)
        return a.edges < b.edges;
    return a.vertices < b.vertices;
}

struct PathWalker {
    const Graph& g;
    std::vector<bool> on_path;
    EdgeSequence current;
    std::vector<EdgeSequence> out;

    void extend(std::size_t v)
    {
        for (std::size_t e : g.incident(v)) {
            const std::size_t w = g.edge(e).other(v);
            if (on_path[w])
                continue;
            on_path[w] = true;
            current.edges.push_back(e);
            current.vertices.push_back(w);
            if (canonicalize(current) == current)
                out.push_back(current);
            extend(w);
            current.edges.pop_back();
            current.vertices.pop_back();
            on_path[w] = false;
        }
    }
};

struct CycleWalker {
    const Graph& g;
    std::size_t start = 0;
    std::vector<bool> on_path;
    EdgeSequence current;
    std::set<std::vector<std::size_t>> seen;
    std::vector<EdgeSequence> out;

    // Only vertices above `start` are visited, so each cycle is found from its
    // smallest vertex, once per direction.
    void extend(std::size_t v)
    {
        for (std::size_t e : g.incident(v)) {
            const std::size_t w = g.edge(e).other(v);
            if (w == start && current.edges.size() >= 3 && (current.edges.size() + 1) % 2 == 0) {
                EdgeSequence cyc = current;
                cyc.kind = SequenceKind::even_cycle;
                cyc.edges.push_back(e);
                cyc.vertices.push_back(w);
                EdgeSequence canon = canonicalize(cyc);
                if (seen.insert(canon.edges).second)
                    out.push_back(std::move(canon));
                continue;
            }
            if (w <= start || on_path[w])
                continue;
            on_path[w] = true;
            current.edges.push_back(e);
            current.vertices.push_back(w);
            extend(w);
            current.edges.pop_back();
            current.vertices.pop_back();
            on_path[w] = false;
        }
    }
};

} // namespace

std::vector<EdgeSequence> enumerate_simple_paths(const Graph& g, const Limits& limits)
{
    check_guard("max_path_edges", g.edge_count(), limits.max_path_edges);
    PathWalker walker{g, std::vector<bool>(g.vertex_count(), false), {}, {}};
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        walker.current = EdgeSequence{SequenceKind::path, {}, {s}};
        walker.on_path[s] = true;
        walker.extend(s);
        walker.on_path[s] = false;
    }
    std::sort(walker.out.begin(), walker.out.end(), shorter_then_lex);
    return std::move(walker.out);
}

std::vector<EdgeSequence> enumerate_even_cycles(const Graph& g, const Limits& limits)
{
    check_guard("max_path_edges", g.edge_count(), limits.max_path_edges);
    CycleWalker walker{g, 0, std::vector<bool>(g.vertex_count(), false), {}, {}, {}};
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        walker.start = s;
        walker.current = EdgeSequence{SequenceKind::path, {}, {s}};
        walker.on_path[s] = true;
        walker.extend(s);
        walker.on_path[s] = false;
    }
    std::sort(walker.out.begin(), walker.out.end(), shorter_then_lex);
    return std::move(walker.out);
}

} // namespace matcharr
