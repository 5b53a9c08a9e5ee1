#include "matcharr/cli.hpp"
#include "matcharr/flat_lattice.hpp"
#include "matcharr/json_io.hpp"
#include "matcharr/matching.hpp"
#include "matcharr/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace matcharr::cli {

namespace {

const std::map<std::string, Command> command_names{
    {"arrangement", Command::arrangement}, {"charpoly", Command::charpoly},
    {"regions", Command::regions},         {"matching", Command::matching},
    {"probe", Command::probe},             {"verify", Command::verify},
};

std::size_t* limit_field(Limits& l, std::string name)
{
    if (name.rfind("max_", 0) == 0)
        name = name.substr(4);
    if (name == "path_edges") return &l.max_path_edges;
    if (name == "iso_vertices") return &l.max_iso_vertices;
    if (name == "chromatic_edges") return &l.max_chromatic_edges;
    if (name == "orientation_edges") return &l.max_orientation_edges;
    if (name == "fm_constraints") return &l.max_fm_constraints;
    if (name == "fm_dimension") return &l.max_fm_dimension;
    if (name == "lattice_hyperplanes") return &l.max_lattice_hyperplanes;
    if (name == "field_dimension") return &l.max_field_dimension;
    if (name == "region_dimension") return &l.max_region_dimension;
    if (name == "region_hyperplanes") return &l.max_region_hyperplanes;
    if (name == "tree_vertices") return &l.max_tree_vertices;
    return nullptr;
}

template <typename T>
std::vector<T> split_list(const std::string& text, const char* what)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("malformed ") + what + " entry '" + item + "'");
        }
        if (used != item.size())
            throw std::invalid_argument(std::string("malformed ") + what + " entry '" + item + "'");
        if constexpr (std::is_unsigned_v<T>) {
            if (v < 0)
                throw std::invalid_argument(std::string(what) + " entries must be positive");
        }
        out.push_back(static_cast<T>(v));
    }
    return out;
}

Graph read_graph(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string equation(const Normal& n)
{
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0)
            continue;
        const std::string var = "x" + std::to_string(i + 1);
        if (s.empty())
            s = (n[i] < 0 ? "-" : "") + var;
        else
            s += (n[i] < 0 ? " - " : " + ") + var;
    }
    return s + " = 0";
}

std::string matching_text(const Matching& m, const EdgeNumbering& numbering)
{
    std::vector<std::size_t> numbers;
    for (std::size_t e : m.edges)
        numbers.push_back(numbering.number(e));
    std::sort(numbers.begin(), numbers.end());
    std::string s = "{";
    for (std::size_t i = 0; i < numbers.size(); ++i)
        s += (i ? ", e" : "e") + std::to_string(numbers[i]);
    return s + "}";
}

int run_verify(const CliConfig& config, std::ostream& out)
{
    std::vector<TheoremReport> reports;
    std::optional<TheoremId> only;
    if (config.theorem) {
        only = theorem_from_name(*config.theorem);
        if (!only)
            throw std::invalid_argument("unknown theorem id '" + *config.theorem + "'");
    }

    if (config.input_path.empty()) {
        for (TheoremReport& r : default_suite(config.limits))
            if (!only || r.id == *only)
                reports.push_back(std::move(r));
    } else {
        const Graph g = read_graph(config.input_path);
        GraphCheckOptions options;
        options.samples = config.samples;
        options.seed = config.seed;
        if (only) {
            reports.push_back(verify_theorem(*only, g, options, config.limits));
        } else {
            std::vector<TheoremId> ids{TheoremId::T2_regions, TheoremId::T3_invariance,
                                       TheoremId::T4_product};
            if (g.edge_count() <= config.limits.max_iso_vertices)
                ids.insert(ids.begin(), TheoremId::T1_reconstruction);
            if (is_tree(g))
                ids.push_back(TheoremId::T5_tree);
            if (g.edge_count() <= config.limits.max_orientation_edges)
                ids.push_back(TheoremId::chromatic_graphical);
            for (TheoremId id : ids)
                reports.push_back(verify_theorem(id, g, options, config.limits));
        }
    }

    bool all_pass = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const TheoremReport& r : reports) {
        all_pass = all_pass && r.pass;
        if (config.format == Format::json)
            arr.push_back(theorem_report_json(r));
        else
            out << (r.pass ? "PASS " : "FAIL ") << theorem_name(r.id) << "  " << r.instance << '\n';
    }
    if (config.format == Format::json)
        out << arr.dump() << '\n';
    else
        out << reports.size() << " checks, " << (all_pass ? "all passed" : "FAILURES") << '\n';
    return all_pass ? exit_ok : exit_failed;
}

} // namespace

Limits parse_limits(const std::string& text, Limits base)
{
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("limit '" + item + "' is not name=value");
        std::size_t* field = limit_field(base, item.substr(0, eq));
        if (!field)
            throw std::invalid_argument("unknown limit '" + item.substr(0, eq) + "'");
        const auto values = split_list<std::size_t>(item.substr(eq + 1), "limit");
        if (values.size() != 1)
            throw std::invalid_argument("limit '" + item + "' needs one value");
        *field = values[0];
    }
    if (base.max_lattice_hyperplanes > Limits::hard_lattice_cap)
        throw std::invalid_argument("lattice_hyperplanes cannot exceed " +
                                    std::to_string(Limits::hard_lattice_cap));
    return base;
}

std::optional<CliConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code)
{
    CLI::App app{"Matching arrangements of graphs: hyperplanes, characteristic polynomials, "
                 "region counts and theorem checks"};
    app.set_help_flag("-h,--help", "Print this help message and exit");

    std::string command;
    std::string numbering;
    std::string weights;
    std::string format = "text";
    std::string limits;
    CliConfig config;
    std::string theorem;

    app.add_option("command", command, "arrangement | charpoly | regions | matching | probe | verify")
        ->required();
    app.add_option("-i,--input", config.input_path, "Graph file ('V E' header, then 'u v' lines)");
    app.add_option("--numbering", numbering, "Edge numbers in file order, e.g. 2,1,3");
    app.add_option("--weights", weights, "Integer edge weights indexed by edge number");
    app.add_option("--samples", config.samples, "Probe sample count");
    app.add_option("--seed", config.seed, "Probe / verify seed");
    app.add_option("--format", format, "text | json");
    app.add_option("--limits", limits, "Raise guards: name=value[,name=value...]");
    app.add_option("--theorem", theorem, "Restrict verify to one theorem id");

    try {
        app.parse(argc, argv);
        auto it = command_names.find(command);
        if (it == command_names.end())
            throw CLI::ValidationError("command", "unknown command '" + command + "'");
        config.command = it->second;
        if (format == "json")
            config.format = Format::json;
        else if (format != "text")
            throw CLI::ValidationError("--format", "must be text or json");
        if (!numbering.empty())
            config.numbering = split_list<std::size_t>(numbering, "numbering");
        if (!weights.empty())
            config.weights = split_list<long>(weights, "weights");
        if (!limits.empty()) {
            config.limits = parse_limits(limits);
            config.limits_raised = true;
        }
        if (!theorem.empty())
            config.theorem = theorem;
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e, out, err);
        if (exit_code != 0)
            exit_code = exit_input_error;
        return std::nullopt;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        exit_code = exit_input_error;
        return std::nullopt;
    }
    exit_code = exit_ok;
    return config;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.limits_raised)
            err << "warning: guard limits raised; computation may be slow\n";
        if (config.command == Command::verify)
            return run_verify(config, out);

        if (config.input_path.empty())
            throw std::invalid_argument("missing --input graph file");
        const Graph g = read_graph(config.input_path);
        const EdgeNumbering numbering = config.numbering
                                            ? EdgeNumbering(*config.numbering)
                                            : EdgeNumbering::identity(g.edge_count());
        if (numbering.size() != g.edge_count())
            throw std::invalid_argument("numbering has " + std::to_string(numbering.size()) +
                                        " entries, graph has " + std::to_string(g.edge_count()) +
                                        " edges");
        const bool json = config.format == Format::json;

        switch (config.command) {
        case Command::arrangement: {
            const Arrangement a = build_matching_arrangement(g, numbering, config.limits);
            if (json) {
                out << arrangement_json(a).dump() << '\n';
            } else {
                out << "dimension " << a.dimension() << ", " << a.size() << " hyperplanes\n";
                for (const Hyperplane& h : a.hyperplanes())
                    out << equation(h.normal) << '\n';
            }
            return exit_ok;
        }
        case Command::charpoly: {
            const IntPolynomial chi = characteristic_polynomial(
                build_matching_arrangement(g, numbering, config.limits), config.limits);
            if (json) {
                out << polynomial_json(chi).dump() << '\n';
            } else {
                out << chi.to_string();
                if (chi.integer_roots())
                    out << " = " << chi.to_factored_string();
                out << '\n';
            }
            return exit_ok;
        }
        case Command::regions: {
            const BigInt regions =
                region_count(build_matching_arrangement(g, numbering, config.limits), config.limits);
            if (json)
                out << nlohmann::json{{"regions", bigint_json(regions)}}.dump() << '\n';
            else
                out << regions.get_str() << '\n';
            return exit_ok;
        }
        case Command::matching: {
            if (!config.weights)
                throw std::invalid_argument("matching needs --weights");
            WeightPoint w;
            for (long x : *config.weights)
                w.emplace_back(x);
            const auto best = max_weight_matchings(g, w, numbering, config.limits);
            if (json) {
                out << nlohmann::json{{"argmax", matchings_json(best, numbering)}}.dump() << '\n';
            } else {
                for (const Matching& m : best)
                    out << matching_text(m, numbering) << '\n';
            }
            return exit_ok;
        }
        case Command::probe: {
            const RegionReport r =
                probe_theorem2(g, numbering, config.samples, config.seed, config.limits);
            if (json) {
                out << region_report_json(r).dump() << '\n';
            } else {
                out << "samples " << r.samples << "\nseed " << r.seed << "\nsign_vectors_seen "
                    << r.sign_vectors_seen << "\nconstancy_violations " << r.constancy_violations
                    << "\nuniqueness_violations " << r.uniqueness_violations << '\n';
            }
            return r.constancy_violations == 0 && r.uniqueness_violations == 0 ? exit_ok
                                                                                : exit_failed;
        }
        case Command::verify:
            break;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_ok;
}

} // namespace matcharr::cli
