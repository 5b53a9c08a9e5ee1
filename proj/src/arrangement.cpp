#include "matcharr/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace matcharr {

Normal normalize_sign(Normal n)
{
    auto it = std::find_if(n.begin(), n.end(), [](int x) { return x != 0; });
    if (it != n.end() && *it < 0)
        for (int& x : n)
            x = -x;
    return n;
}

Arrangement::Arrangement(std::size_t dimension, std::vector<Hyperplane> hyperplanes)
    : dimension_(dimension)
{
    std::map<Normal, std::vector<EdgeSequence>, std::greater<>> merged;
    for (Hyperplane& h : hyperplanes) {
        if (h.normal.size() != dimension_)
            throw std::invalid_argument("hyperplane normal has length " +
                                        std::to_string(h.normal.size()) + ", expected " +
                                        std::to_string(dimension_));
        if (std::all_of(h.normal.begin(), h.normal.end(), [](int x) { return x == 0; }))
            throw std::invalid_argument("hyperplane with a zero normal");
        auto& sources = merged[normalize_sign(std::move(h.normal))];
        for (auto& s : h.sources)
            sources.push_back(std::move(s));
    }
    hyperplanes_.reserve(merged.size());
    for (auto& [normal, sources] : merged)
        hyperplanes_.push_back({normal, std::move(sources)});
}

std::vector<Normal> Arrangement::normals() const
{
    std::vector<Normal> out;
    out.reserve(hyperplanes_.size());
    for (const auto& h : hyperplanes_)
        out.push_back(h.normal);
    return out;
}

std::size_t Arrangement::find(const Normal& n) const
{
    const Normal key = normalize_sign(n);
    auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), key,
                               [](const Hyperplane& h, const Normal& k) { return h.normal > k; });
    if (it != hyperplanes_.end() && it->normal == key)
        return static_cast<std::size_t>(it - hyperplanes_.begin());
    return hyperplanes_.size();
}

Hyperplane normal_vector(const EdgeSequence& seq, const EdgeNumbering& numbering)
{
    Normal n(numbering.size(), 0);
    int sign = 1;
    for (std::size_t e : seq.edges) {
        n.at(numbering.coordinate(e)) = sign;
        sign = -sign;
    }
    return {normalize_sign(std::move(n)), {seq}};
}

Arrangement build_matching_arrangement(const Graph& g, const EdgeNumbering& numbering,
                                       const Limits& limits)
{
    if (numbering.size() != g.edge_count())
        throw std::invalid_argument("numbering size differs from the edge count");
    std::vector<Hyperplane> hs;
    for (const EdgeSequence& p : enumerate_simple_paths(g, limits))
        hs.push_back(normal_vector(p, numbering));
    for (const EdgeSequence& c : enumerate_even_cycles(g, limits))
        hs.push_back(normal_vector(c, numbering));
    return Arrangement(g.edge_count(), std::move(hs));
}

Arrangement build_matching_arrangement(const Graph& g, const Limits& limits)
{
    return build_matching_arrangement(g, EdgeNumbering::identity(g.edge_count()), limits);
}

Arrangement build_graphical_arrangement(const Graph& g)
{
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        Normal n(g.vertex_count(), 0);
        n[e.u] = 1;
        n[e.v] = -1;
        hs.push_back({std::move(n), {EdgeSequence{SequenceKind::path, {i}, {e.u, e.v}}}});
    }
    return Arrangement(g.vertex_count(), std::move(hs));
}

bool arrangements_identical(const Arrangement& a, const Arrangement& b)
{
    if (a.dimension() != b.dimension() || a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.normal(i) != b.normal(i))
            return false;
    return true;
}

Graph reconstruct_line_graph(const Arrangement& a)
{
    const std::size_t n = a.dimension();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Normal d(n, 0);
            d[i] = 1;
            d[j] = -1;
            if (a.find(d) < a.size())
                edges.push_back({i, j});
        }
    return Graph(n, std::move(edges));
}

} // namespace matcharr
