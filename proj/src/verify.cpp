#include "matcharr/verify.hpp"
#include "matcharr/json_io.hpp"
#include "matcharr/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace matcharr {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 9> theorem_names{{
    {TheoremId::T1_reconstruction, "T1_reconstruction"},
    {TheoremId::T1_exception, "T1_exception"},
    {TheoremId::T2_regions, "T2_regions"},
    {TheoremId::T3_invariance, "T3_invariance"},
    {TheoremId::T4_product, "T4_product"},
    {TheoremId::T5_tree, "T5_tree"},
    {TheoremId::T6_tails, "T6_tails"},
    {TheoremId::chromatic_graphical, "chromatic_graphical"},
    {TheoremId::remark_unions, "remark_unions"},
}};

std::string describe(const Graph& g)
{
    std::ostringstream os;
    os << "V=" << g.vertex_count() << " E=[";
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        os << (i ? "," : "") << '(' << g.edge(i).u + 1 << ',' << g.edge(i).v + 1 << ')';
    os << ']';
    return os.str();
}

nlohmann::json poly_details(const IntPolynomial& p)
{
    return {{"coefficients", coefficients_json(p)}, {"text", p.to_factored_string()}};
}

IntPolynomial chi_of(const Graph& g, const EdgeNumbering& numbering, const Limits& limits)
{
    return characteristic_polynomial(build_matching_arrangement(g, numbering, limits), limits);
}

IntPolynomial chi_of(const Graph& g, const Limits& limits)
{
    return chi_of(g, EdgeNumbering::identity(g.edge_count()), limits);
}

bool is_prime(std::uint64_t q)
{
    if (q < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

} // namespace

std::string_view theorem_name(TheoremId id)
{
    for (const auto& [tid, name] : theorem_names)
        if (tid == id)
            return name;
    return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name)
{
    for (const auto& [tid, n] : theorem_names)
        if (n == name)
            return tid;
    return std::nullopt;
}

bool is_tree(const Graph& g)
{
    return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() &&
           connected_components(g).size() == 1;
}

std::vector<Graph> all_trees(std::size_t v, const Limits& limits)
{
    if (v < limits.min_tree_vertices)
        throw GuardError("min_tree_vertices", v, limits.min_tree_vertices);
    check_guard("max_tree_vertices", v, limits.max_tree_vertices);

    // Every tree on k + 1 vertices is a tree on k vertices plus one leaf.
    std::vector<Graph> level{path_graph(1)};
    for (std::size_t k = 2; k < v; ++k) {
        std::vector<Graph> next;
        for (const Graph& t : level) {
            for (std::size_t at = 0; at < t.vertex_count(); ++at) {
                std::vector<Edge> edges = t.edges();
                edges.push_back({at, t.vertex_count()});
                Graph cand(t.vertex_count() + 1, std::move(edges));
                const bool seen = std::any_of(next.begin(), next.end(), [&](const Graph& r) {
                    return is_isomorphic(r, cand, limits);
                });
                if (!seen)
                    next.push_back(std::move(cand));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> all_graphs(std::size_t v, const Limits& limits)
{
    check_guard("all_graphs_vertices", v, 6);
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            pairs.push_back({i, j});

    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<Graph>> buckets;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U)
                edges.push_back(pairs[k]);
        Graph g(v, std::move(edges));
        auto& bucket = buckets[{g.edge_count(), g.degree_sequence()}];
        const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Graph& r) {
            return is_isomorphic(r, g, limits);
        });
        if (!seen) {
            bucket.push_back(g);
            out.push_back(std::move(g));
        }
    }
    return out;
}

Graph random_graph(std::size_t v, std::size_t e, std::uint64_t seed)
{
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            pairs.push_back({i, j});
    if (e > pairs.size())
        throw std::invalid_argument(std::to_string(e) + " edges do not fit on " +
                                    std::to_string(v) + " vertices");
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(e);
    std::sort(pairs.begin(), pairs.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return Graph(v, std::move(pairs));
}

BigInt finite_field_count(const Arrangement& a, std::uint64_t q, const Limits& limits)
{
    check_guard("max_field_dimension", a.dimension(), limits.max_field_dimension);
    if (q <= 16 || q >= (std::uint64_t{1} << 20) || !is_prime(q))
        throw std::invalid_argument("field size must be a prime in (16, 2^20), got " +
                                    std::to_string(q));
    const std::size_t n = a.dimension();
    const std::size_t m = a.size();
    if (n == 0)
        return m == 0 ? BigInt(1) : BigInt(0);

    const auto mod = [q](long long x) {
        long long r = x % static_cast<long long>(q);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(q) : r);
    };

    // Enumerate the first n - 1 coordinates; the last one is counted directly:
    // hyperplane h forbids exactly one residue when its last coefficient is
    // nonzero, and all residues when it is zero and the partial sum vanishes.
    const auto inverse = [q](std::uint64_t v) {
        std::uint64_t result = 1, base = v % q;
        for (std::uint64_t e = q - 2; e > 0; e >>= 1, base = base * base % q)
            if (e & 1)
                result = result * base % q;
        return result;
    };

    std::vector<std::uint64_t> x(n - 1, 0);
    std::vector<std::uint64_t> forbidden;
    BigInt total = 0;
    while (true) {
        forbidden.clear();
        bool dead = false;
        for (std::size_t h = 0; h < m && !dead; ++h) {
            const Normal& c = a.normal(h);
            long long partial = 0;
            for (std::size_t i = 0; i + 1 < n; ++i)
                partial += c[i] * static_cast<long long>(x[i]);
            const std::uint64_t last = mod(c[n - 1]);
            if (last == 0) {
                dead = mod(partial) == 0;
            } else {
                // last * y + partial = 0  =>  y = -partial / last
                forbidden.push_back(mod(-partial) * inverse(last) % q);
            }
        }
        if (!dead) {
            std::sort(forbidden.begin(), forbidden.end());
            const auto distinct = static_cast<std::uint64_t>(
                std::unique(forbidden.begin(), forbidden.end()) - forbidden.begin());
            total += static_cast<unsigned long>(q - distinct);
        }
        std::size_t k = 0;
        while (k < x.size() && ++x[k] == q)
            x[k++] = 0;
        if (k == x.size())
            break;
    }
    return total;
}

namespace {

void count_regions(const Arrangement& a, std::size_t depth, StrictSystem& prefix,
                   const Limits& limits, BigInt& count)
{
    if (depth == a.size()) {
        ++count;
        return;
    }
    for (Strict s : {Strict::positive, Strict::negative}) {
        StrictSystem next = prefix;
        next.add(to_rational(a.normal(depth)), s);
        if (fm_feasible(next, limits))
            count_regions(a, depth + 1, next, limits, count);
    }
}

} // namespace

BigInt enumerate_regions_exact(const Arrangement& a, const Limits& limits)
{
    check_guard("max_region_dimension", a.dimension(), limits.max_region_dimension);
    check_guard("max_region_hyperplanes", a.size(), limits.max_region_hyperplanes);
    BigInt count = 0;
    StrictSystem empty(a.dimension());
    count_regions(a, 0, empty, limits, count);
    return count;
}

TheoremReport verify_reconstruction(const Graph& g, const EdgeNumbering& numbering,
                                    const Limits& limits)
{
    const Arrangement a = build_matching_arrangement(g, numbering, limits);
    const Graph rebuilt = reconstruct_line_graph(a);
    const Graph expected = line_graph(g);

    // Exact check as well: line-graph vertex = edge position, rebuilt vertex =
    // coordinate N(edge) - 1.
    std::vector<Edge> relabeled;
    for (const Edge& e : expected.edges()) {
        std::size_t x = numbering.coordinate(e.u);
        std::size_t y = numbering.coordinate(e.v);
        relabeled.push_back({std::min(x, y), std::max(x, y)});
    }
    std::vector<Edge> got = rebuilt.edges();
    const auto by_pair = [](const Edge& p, const Edge& q) {
        return std::pair(p.u, p.v) < std::pair(q.u, q.v);
    };
    std::sort(relabeled.begin(), relabeled.end(), by_pair);
    std::sort(got.begin(), got.end(), by_pair);

    TheoremReport r;
    r.id = TheoremId::T1_reconstruction;
    r.instance = describe(g);
    const bool iso = is_isomorphic(rebuilt, expected, limits);
    r.pass = iso && relabeled == got;
    r.details = {{"hyperplanes", a.size()},
                 {"reconstructed", graph_json(rebuilt)},
                 {"line_graph", graph_json(expected)},
                 {"isomorphic", iso},
                 {"identical_under_numbering", relabeled == got}};
    return r;
}

TheoremReport verify_k3_star_exception(const Limits& limits)
{
    const Arrangement k3 = build_matching_arrangement(complete_graph(3), limits);
    const Arrangement star = build_matching_arrangement(star_graph(3), limits);
    // the six equations of the exceptional pair, x3 - x1 = 0 last
    const Arrangement expected(3, {
                                      {{1, 0, 0}, {}},
                                      {{0, 1, 0}, {}},
                                      {{0, 0, 1}, {}},
                                      {{1, -1, 0}, {}},
                                      {{0, 1, -1}, {}},
                                      {{-1, 0, 1}, {}},
                                  });
    const IntPolynomial chi_k3 = characteristic_polynomial(k3, limits);
    const IntPolynomial chi_star = characteristic_polynomial(star, limits);
    const IntPolynomial formula = IntPolynomial::from_roots({1, 2, 3});
    const BigInt regions = region_count(chi_k3, 3);

    TheoremReport r;
    r.id = TheoremId::T1_exception;
    r.instance = "K3 vs K1,3";
    const bool same = arrangements_identical(k3, star);
    const bool listed_match = arrangements_identical(k3, expected);
    r.pass = same && listed_match && chi_k3 == formula && chi_star == formula && regions == 24;
    r.details = {{"identical", same},
                 {"matches_listed_equations", listed_match},
                 {"arrangement", arrangement_json(k3)},
                 {"chi_K3", poly_details(chi_k3)},
                 {"chi_K1_3", poly_details(chi_star)},
                 {"regions", bigint_json(regions)}};
    return r;
}

TheoremReport verify_regions(const Graph& g, const EdgeNumbering& numbering, std::size_t samples,
                             std::uint64_t seed, const Limits& limits)
{
    const RegionReport rep = probe_theorem2(g, numbering, samples, seed, limits);
    TheoremReport r;
    r.id = TheoremId::T2_regions;
    r.instance = describe(g);
    r.pass = rep.constancy_violations == 0 && rep.uniqueness_violations == 0;
    r.details = region_report_json(rep);
    return r;
}

TheoremReport verify_numbering_invariance(const Graph& g, std::size_t numberings,
                                          std::uint64_t seed, const Limits& limits)
{
    const IntPolynomial reference = chi_of(g, limits);
    std::mt19937_64 rng(seed);
    std::size_t mismatches = 0;
    nlohmann::json tried = nlohmann::json::array();
    for (std::size_t k = 0; k < numberings; ++k) {
        const EdgeNumbering num = EdgeNumbering::random(g.edge_count(), rng);
        const IntPolynomial chi = chi_of(g, num, limits);
        if (chi != reference) {
            ++mismatches;
            tried.push_back({{"numbering", num.numbers()}, {"chi", coefficients_json(chi)}});
        }
    }
    TheoremReport r;
    r.id = TheoremId::T3_invariance;
    r.instance = describe(g);
    r.pass = mismatches == 0;
    r.details = {{"chi", poly_details(reference)},
                 {"numberings", numberings},
                 {"seed", seed},
                 {"mismatches", mismatches},
                 {"mismatching", tried}};
    return r;
}

TheoremReport verify_product(const Graph& g1, const Graph& g2, const Limits& limits)
{
    const Graph joined = disjoint_union(g1, g2);
    const IntPolynomial chi = chi_of(joined, limits);
    const IntPolynomial chi1 = chi_of(g1, limits);
    const IntPolynomial chi2 = chi_of(g2, limits);
    TheoremReport r;
    r.id = TheoremId::T4_product;
    r.instance = describe(g1) + " + " + describe(g2);
    r.pass = chi == chi1 * chi2;
    r.details = {{"chi_union", poly_details(chi)},
                 {"chi_first", poly_details(chi1)},
                 {"chi_second", poly_details(chi2)}};
    return r;
}

TheoremReport verify_component_product(const Graph& g, const Limits& limits)
{
    const IntPolynomial chi = chi_of(g, limits);
    IntPolynomial product{1};
    nlohmann::json parts = nlohmann::json::array();
    for (const Component& c : connected_components(g)) {
        const IntPolynomial part = chi_of(c.graph, limits);
        product = product * part;
        parts.push_back({{"edges", c.edge_indices}, {"chi", coefficients_json(part)}});
    }
    TheoremReport r;
    r.id = TheoremId::T4_product;
    r.instance = describe(g) + " (components)";
    r.pass = chi == product;
    r.details = {{"chi", poly_details(chi)}, {"product", poly_details(product)}, {"components", parts}};
    return r;
}

TheoremReport verify_tree_formula(const Graph& tree, const Limits& limits)
{
    if (!is_tree(tree))
        throw std::invalid_argument("tree formula check needs a tree");
    std::vector<long> roots(tree.edge_count());
    std::iota(roots.begin(), roots.end(), 1L);
    const IntPolynomial expected = IntPolynomial::from_roots(roots);
    const IntPolynomial chi = chi_of(tree, limits);
    TheoremReport r;
    r.id = TheoremId::T5_tree;
    r.instance = describe(tree);
    r.pass = chi == expected;
    r.details = {{"chi", poly_details(chi)}, {"expected", poly_details(expected)}};
    return r;
}

TheoremReport verify_tails(const Graph& head, std::size_t u, const Graph& tail1, std::size_t root1,
                           const Graph& tail2, std::size_t root2, const Limits& limits)
{
    if (!is_tree(tail1) || !is_tree(tail2) || tail1.edge_count() != tail2.edge_count() ||
        tail1.edge_count() == 0)
        throw std::invalid_argument("tails must be trees with the same positive edge count");
    const Graph g1 = glue(head, u, tail1, root1);
    const Graph g2 = glue(head, u, tail2, root2);
    const IntPolynomial chi1 = chi_of(g1, limits);
    const IntPolynomial chi2 = chi_of(g2, limits);
    TheoremReport r;
    r.id = TheoremId::T6_tails;
    r.instance = describe(g1) + " vs " + describe(g2);
    r.pass = chi1 == chi2;
    r.details = {{"chi_first", poly_details(chi1)}, {"chi_second", poly_details(chi2)}};
    if (g1.vertex_count() <= limits.max_iso_vertices)
        r.details["isomorphic"] = is_isomorphic(g1, g2, limits);
    return r;
}

TheoremReport verify_remark_unions(const Limits& limits)
{
    const Graph k3 = complete_graph(3);
    const Graph g1 = disjoint_union(k3, k3);
    const Graph g2 = disjoint_union(k3, star_graph(3));
    // identity numberings: edges of the first component take 1..3, the second 4..6
    const Arrangement a1 = build_matching_arrangement(g1, limits);
    const Arrangement a2 = build_matching_arrangement(g2, limits);
    const bool identical = arrangements_identical(a1, a2);
    const bool iso = is_isomorphic(g1, g2, limits);
    TheoremReport r;
    r.id = TheoremId::remark_unions;
    r.instance = "K3+K3 vs K3+K1,3";
    r.pass = identical && !iso;
    r.details = {{"identical", identical}, {"isomorphic", iso}, {"hyperplanes", a1.size()}};
    return r;
}

TheoremReport verify_chromatic_graphical(const Graph& g, const Limits& limits)
{
    const Arrangement a = build_graphical_arrangement(g);
    const IntPolynomial chi = characteristic_polynomial(a, limits);
    const IntPolynomial chromatic = chromatic_polynomial(g, limits);
    const BigInt regions = region_count(chi, a.dimension());
    const std::uint64_t acyclic = count_acyclic_orientations(g, limits);
    TheoremReport r;
    r.id = TheoremId::chromatic_graphical;
    r.instance = describe(g);
    r.pass = chi == chromatic && regions == static_cast<unsigned long>(acyclic);
    r.details = {{"chi", poly_details(chi)},
                 {"chromatic", poly_details(chromatic)},
                 {"regions", bigint_json(regions)},
                 {"acyclic_orientations", acyclic}};
    return r;
}

TheoremReport verify_theorem(TheoremId id, const Graph& g, const GraphCheckOptions& options,
                             const Limits& limits)
{
    const EdgeNumbering identity = EdgeNumbering::identity(g.edge_count());
    switch (id) {
    case TheoremId::T1_reconstruction:
        return verify_reconstruction(g, identity, limits);
    case TheoremId::T2_regions:
        return verify_regions(g, identity, options.samples, options.seed, limits);
    case TheoremId::T3_invariance:
        return verify_numbering_invariance(g, options.numberings, options.seed, limits);
    case TheoremId::T4_product:
        return verify_component_product(g, limits);
    case TheoremId::T5_tree:
        return verify_tree_formula(g, limits);
    case TheoremId::chromatic_graphical:
        return verify_chromatic_graphical(g, limits);
    case TheoremId::T1_exception:
    case TheoremId::T6_tails:
    case TheoremId::remark_unions:
        break;
    }
    throw std::invalid_argument(std::string(theorem_name(id)) +
                                " does not run on a single input graph");
}

std::vector<TheoremReport> default_suite(const Limits& limits)
{
    const Graph k3 = complete_graph(3);
    const Graph c4 = cycle_graph(4);
    const Graph paw = glue(k3, 0, path_graph(1), 0);
    const Graph k4 = complete_graph(4);

    std::vector<TheoremReport> out;
    for (const Graph& g : {k3, c4, paw, k4})
        out.push_back(verify_reconstruction(g, EdgeNumbering::identity(g.edge_count()), limits));
    out.push_back(verify_k3_star_exception(limits));
    for (const Graph& g : {k3, c4, paw})
        out.push_back(verify_regions(g, EdgeNumbering::identity(g.edge_count()), 200, 7, limits));
    for (const Graph& g : {c4, paw})
        out.push_back(verify_numbering_invariance(g, 5, 7, limits));
    out.push_back(verify_product(k3, path_graph(2), limits));
    out.push_back(verify_component_product(
        disjoint_union(disjoint_union(k3, path_graph(1)), star_graph(2)), limits));
    for (std::size_t v = 2; v <= 6; ++v)
        for (const Graph& t : all_trees(v, limits))
            out.push_back(verify_tree_formula(t, limits));
    out.push_back(verify_tails(k3, 0, path_graph(2), 0, star_graph(2), 0, limits));
    out.push_back(verify_remark_unions(limits));
    for (const Graph& g : {k3, c4, k4})
        out.push_back(verify_chromatic_graphical(g, limits));
    return out;
}

} // namespace matcharr
