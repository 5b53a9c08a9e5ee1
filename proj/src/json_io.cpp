#include "matcharr/json_io.hpp"

namespace matcharr {

nlohmann::json bigint_json(const BigInt& value)
{
    if (value.fits_slong_p())
        return value.get_si();
    return value.get_str();
}

nlohmann::json arrangement_json(const Arrangement& a)
{
    nlohmann::json hs = nlohmann::json::array();
    for (const Hyperplane& h : a.hyperplanes())
        hs.push_back(h.normal);
    return {{"dimension", a.dimension()}, {"hyperplanes", hs}};
}

nlohmann::json coefficients_json(const IntPolynomial& p)
{
    nlohmann::json cs = nlohmann::json::array();
    for (const BigInt& c : p.coefficients())
        cs.push_back(bigint_json(c));
    return cs;
}

nlohmann::json polynomial_json(const IntPolynomial& chi) { return {{"chi", coefficients_json(chi)}}; }

nlohmann::json region_report_json(const RegionReport& r)
{
    return {{"sign_vectors_seen", r.sign_vectors_seen},
            {"constancy_violations", r.constancy_violations},
            {"uniqueness_violations", r.uniqueness_violations},
            {"samples", r.samples},
            {"seed", r.seed}};
}

nlohmann::json theorem_report_json(const TheoremReport& r)
{
    return {{"theorem_id", std::string(theorem_name(r.id))},
            {"instance_description", r.instance},
            {"pass", r.pass},
            {"details", r.details}};
}

nlohmann::json matchings_json(const std::vector<Matching>& ms, const EdgeNumbering& numbering)
{
    nlohmann::json out = nlohmann::json::array();
    for (const Matching& m : ms) {
        std::vector<std::size_t> numbers;
        for (std::size_t e : m.edges)
            numbers.push_back(numbering.number(e));
        std::sort(numbers.begin(), numbers.end());
        out.push_back(numbers);
    }
    return out;
}

nlohmann::json graph_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u + 1, e.v + 1});
    return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

} // namespace matcharr
