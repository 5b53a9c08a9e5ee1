#include "matcharr/matching.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace matcharr {

OnHyperplane::OnHyperplane(std::size_t index)
    : std::runtime_error("point lies on hyperplane " + std::to_string(index)), index_(index) {}

bool is_matching(const Graph& g, const Matching& m)
{
    std::vector<bool> used(g.vertex_count(), false);
    for (std::size_t e : m.edges) {
        if (e >= g.edge_count())
            return false;
        const Edge& ed = g.edge(e);
        if (used[ed.u] || used[ed.v])
            return false;
        used[ed.u] = used[ed.v] = true;
    }
    return true;
}

namespace {

void collect_matchings(const Graph& g, std::size_t next, std::vector<bool>& used,
                       std::vector<std::size_t>& current, std::vector<Matching>& out)
{
    if (next == g.edge_count()) {
        out.push_back({current});
        return;
    }
    collect_matchings(g, next + 1, used, current, out);
    const Edge& e = g.edge(next);
    if (!used[e.u] && !used[e.v]) {
        used[e.u] = used[e.v] = true;
        current.push_back(next);
        collect_matchings(g, next + 1, used, current, out);
        current.pop_back();
        used[e.u] = used[e.v] = false;
    }
}

} // namespace

std::vector<Matching> enumerate_matchings(const Graph& g, const Limits& limits)
{
    check_guard("max_path_edges", g.edge_count(), limits.max_path_edges);
    std::vector<Matching> out;
    std::vector<bool> used(g.vertex_count(), false);
    std::vector<std::size_t> current;
    collect_matchings(g, 0, used, current, out);
    std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
        if (a.edges.size() != b.edges.size())
            return a.edges.size() < b.edges.size();
        return a.edges < b.edges;
    });
    return out;
}

Rational matching_weight(const Matching& m, const WeightPoint& w, const EdgeNumbering& numbering)
{
    Rational total = 0;
    for (std::size_t e : m.edges)
        total += w.at(numbering.coordinate(e));
    return total;
}

std::vector<Matching> max_weight_matchings(const Graph& g, const WeightPoint& w,
                                           const EdgeNumbering& numbering, const Limits& limits)
{
    if (w.size() != g.edge_count() || numbering.size() != g.edge_count())
        throw std::invalid_argument("weight vector length " + std::to_string(w.size()) +
                                    " differs from edge count " +
                                    std::to_string(g.edge_count()));
    std::vector<Matching> best;
    Rational best_weight;
    for (Matching& m : enumerate_matchings(g, limits)) {
        Rational wt = matching_weight(m, w, numbering);
        if (best.empty() || wt > best_weight) {
            best.clear();
            best_weight = wt;
            best.push_back(std::move(m));
        } else if (wt == best_weight) {
            best.push_back(std::move(m));
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<Matching> max_weight_matchings(const Graph& g, const WeightPoint& w,
                                           const Limits& limits)
{
    return max_weight_matchings(g, w, EdgeNumbering::identity(g.edge_count()), limits);
}

namespace {

Rational inner(const Normal& n, const WeightPoint& p)
{
    Rational s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] > 0)
            s += p[i];
        else if (n[i] < 0)
            s -= p[i];
    }
    return s;
}

} // namespace

SignVector sign_vector(const Arrangement& a, const WeightPoint& p)
{
    if (p.size() != a.dimension())
        throw std::invalid_argument("point dimension differs from arrangement dimension");
    SignVector out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int s = sgn(inner(a.normal(i), p));
        if (s == 0)
            throw OnHyperplane(i);
        out.push_back(s > 0 ? Sign::positive : Sign::negative);
    }
    return out;
}

WeightPoint sample_generic_point(const Arrangement& a, std::uint64_t seed)
{
    constexpr long range = 1'000'000;
    constexpr int max_draws = 10'000;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-range, range);
    WeightPoint p(a.dimension());
    for (int draw = 0; draw < max_draws; ++draw) {
        for (auto& x : p)
            x = coord(rng);
        bool generic = true;
        for (std::size_t i = 0; i < a.size() && generic; ++i)
            generic = inner(a.normal(i), p) != 0;
        if (generic)
            return p;
    }
    throw std::runtime_error("no generic point found in " + std::to_string(max_draws) + " draws");
}

std::vector<SymDiffComponent> symdiff_decompose(const Matching& m1, const Matching& m2,
                                                const Graph& g)
{
    std::vector<std::size_t> diff;
    std::set_symmetric_difference(m1.edges.begin(), m1.edges.end(), m2.edges.begin(),
                                  m2.edges.end(), std::back_inserter(diff));
    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (std::size_t e : diff) {
        incident[g.edge(e).u].push_back(e);
        incident[g.edge(e).v].push_back(e);
    }

    std::vector<bool> taken(g.edge_count(), false);
    auto walk_from = [&](std::size_t start, std::size_t first_edge, SequenceKind kind) {
        EdgeSequence seq{kind, {}, {start}};
        std::size_t v = start;
        std::size_t e = first_edge;
        while (true) {
            taken[e] = true;
            seq.edges.push_back(e);
            v = g.edge(e).other(v);
            seq.vertices.push_back(v);
            auto next = std::find_if(incident[v].begin(), incident[v].end(),
                                     [&](std::size_t f) { return !taken[f]; });
            if (next == incident[v].end())
                break;
            e = *next;
        }
        return canonicalize(seq);
    };

    std::vector<SymDiffComponent> out;
    // paths first start from their degree-1 ends
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (incident[v].size() == 1 && !taken[incident[v][0]])
            out.push_back(walk_from(v, incident[v][0], SequenceKind::path));
    for (std::size_t e : diff)
        if (!taken[e])
            out.push_back(walk_from(g.edge(e).u, e, SequenceKind::even_cycle));
    std::sort(out.begin(), out.end(), [](const SymDiffComponent& a, const SymDiffComponent& b) {
        return a.edges.front() < b.edges.front();
    });
    return out;
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index)
{
    // splitmix64 finalizer over (seed, index)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RegionReport probe_theorem2(const Graph& g, const EdgeNumbering& numbering, std::size_t samples,
                            std::uint64_t seed, const Limits& limits)
{
    const Arrangement a = build_matching_arrangement(g, numbering, limits);
    RegionReport report;
    report.samples = samples;
    report.seed = seed;

    std::map<SignVector, std::vector<Matching>> by_region;
    std::set<std::vector<Matching>> argmax_sets;
    for (std::size_t i = 0; i < samples; ++i) {
        const WeightPoint p = sample_generic_point(a, sample_seed(seed, i));
        SignVector sv = sign_vector(a, p);
        std::vector<Matching> argmax = max_weight_matchings(g, p, numbering, limits);
        if (argmax.size() != 1)
            ++report.uniqueness_violations;
        auto [it, inserted] = by_region.emplace(std::move(sv), argmax);
        if (!inserted && it->second != argmax)
            ++report.constancy_violations;
        argmax_sets.insert(std::move(argmax));
    }
    report.sign_vectors_seen = by_region.size();
    report.distinct_argmax_seen = argmax_sets.size();
    return report;
}

} // namespace matcharr
