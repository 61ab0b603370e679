// mptkit command line. Exit codes: 0 success, 1 valid input with a negative
// verdict, 2 malformed input or usage.

#include "mptkit/certificates.hpp"
#include "mptkit/error.hpp"
#include "mptkit/families.hpp"
#include "mptkit/geometry.hpp"
#include "mptkit/io.hpp"
#include "mptkit/optimization.hpp"
#include "mptkit/oracles.hpp"
#include "mptkit/orders.hpp"
#include "mptkit/representations.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

using namespace mptkit;

namespace {

// Negative verdict on valid input; message goes to stdout like any verdict.
struct Negative {
    std::string message;
};

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file || !(file << text))
        throw InputError(out + ": cannot write file");
}

std::string join(const std::vector<Vertex>& vs, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? sep : "") + std::to_string(vs[i]);
    return out;
}

std::string kind_of(const io::Document& doc, const std::string& fallback)
{
    return doc.kind.value_or(fallback);
}

Graph read_graph(const std::string& path)
{
    return io::parse_graph(io::read_document(path));
}

MptRepresentation read_rep(const std::string& path)
{
    return io::parse_rep(io::read_document(path));
}

VertexOrder read_order_for(const Graph& g, const std::string& path)
{
    const auto doc = io::read_document(path);
    VertexOrder ord = io::parse_order(doc);
    try {
        validate_order(g, ord);
    } catch (const InputError& e) {
        io::fail(doc, doc.lines.empty() ? 0 : doc.lines.front().number, e.what());
    }
    return ord;
}

// Canonical form for the solvers; the graph is unchanged.
MptRepresentation solver_rep(const std::string& path)
{
    auto rep = read_rep(path);
    return is_canonical(rep) ? rep : normalize(rep);
}

bool is_random_family(const std::string& name)
{
    return name.rfind("random-", 0) == 0;
}

std::string generate(const std::string& name, int n, std::optional<std::uint64_t> seed)
{
    if (is_random_family(name)) {
        if (!seed)
            throw InputError("--seed is required for random family '" + name + "'");
        if (n < 0)
            throw InputError("--n must be non-negative");
        if (name == "random-mpt")
            return io::format_rep(random_mpt_rep(n, *seed));
        if (name == "random-interval")
            return io::format_intervals(random_interval_rep(n, *seed));
        if (name == "random-circular-arc")
            return io::format_arcs(random_circular_arcs(n, *seed));
        if (name == "random-maximal-outerplanar")
            return io::format_graph(random_maximal_outerplanar(n, *seed));
        throw InputError("unknown random family '" + name + "'");
    }
    if (name.rfind("full-subdivision-of:", 0) == 0 || name.rfind("universal-extension-of:", 0) == 0)
        return io::format_graph(non_mpt_family(name));
    if (name.find(':') != std::string::npos || n == 0)
        return io::format_graph(family(name));
    return io::format_graph(family(name, n));
}

// Intersection graph of whatever geometric artifact the file holds.
Graph adjacency_of(const io::Document& doc)
{
    const std::string kind = kind_of(doc, "rep");
    if (kind == "rep")
        return mpt_adjacency(io::parse_rep(doc));
    if (kind == "interval")
        return interval_adjacency(io::parse_intervals(doc));
    if (kind == "lsystem")
        return lsystem_adjacency(io::parse_lsystem(doc));
    if (kind == "contact")
        return contact_graph(io::parse_contact(doc));
    if (kind == "rays")
        return ray_adjacency(io::parse_rays(doc));
    if (kind == "segments")
        return segment_intersection_graph(io::parse_segments(doc));
    if (kind == "arcs")
        return circular_arc_graph(io::parse_arcs(doc));
    if (kind == "graph")
        return io::parse_graph(doc);
    io::fail(doc, 0, "no intersection graph for kind '" + kind + "'");
}

std::optional<VertexOrder> mpt_order_of(const Graph& g, int max_n, std::string& why)
{
    const auto result = recognize(g, max_n);
    if (result.verdict == Verdict::mpt)
        return result.order;
    why = std::string(to_string(result.verdict));
    for (const auto& c : result.certificates)
        why += "\n" + format_certificate(c);
    return std::nullopt;
}

struct ConvertArgs {
    std::string from;
    std::string to;
    std::string input = "-";
    std::string graph;
    std::string order;
    int max_n = kOrderOracleLimit;
};

std::string convert(const ConvertArgs& a)
{
    const std::string pair = a.from + "->" + a.to;
    if (a.from == "order+graph") {
        if (a.graph.empty() || a.order.empty())
            throw InputError("order+graph needs --graph and --order");
        const Graph g = read_graph(a.graph);
        const VertexOrder ord = read_order_for(g, a.order);
        if (a.to == "rep")
            return io::format_rep(rep_from_order(g, ord));
        if (a.to == "segments")
            return io::format_segments(cyclic_segments_from_order(g, ord));
        throw InputError("unsupported conversion " + pair);
    }
    const auto doc = io::read_document(a.input);
    if (a.from == "graph") {
        const Graph g = io::parse_graph(doc);
        std::string why;
        const auto ord = mpt_order_of(g, a.max_n, why);
        if (!ord)
            throw Negative { why };
        if (a.to == "rep")
            return io::format_rep(rep_from_order(g, *ord));
        if (a.to == "order")
            return io::format_order(*ord);
        throw InputError("unsupported conversion " + pair);
    }
    if (a.from == "rep") {
        const auto rep = io::parse_rep(doc);
        if (a.to == "lsystem")
            return io::format_lsystem(rep_to_lsystem(has_distinct_points(rep) ? rep : normalize(rep)));
        if (a.to == "order")
            return io::format_order(order_from_rep(rep));
        if (a.to == "canonical" || a.to == "rep")
            return io::format_rep(normalize(rep));
        if (a.to == "graph")
            return io::format_graph(mpt_adjacency(rep));
        throw InputError("unsupported conversion " + pair);
    }
    if (a.from == "lsystem") {
        const auto sys = io::parse_lsystem(doc);
        if (a.to == "rep")
            return io::format_rep(lsystem_to_rep(sys));
        if (a.to == "interval") {
            if (!anchor_of(sys))
                throw Negative { "NOT-ANCHORED no common anchor value for the L-system" };
            return io::format_intervals(anchored_lsystem_to_intervals(sys));
        }
        if (a.to == "graph")
            return io::format_graph(lsystem_adjacency(sys));
        throw InputError("unsupported conversion " + pair);
    }
    if (a.from == "interval") {
        const auto iv = io::parse_intervals(doc);
        if (a.to == "lsystem")
            return io::format_lsystem(interval_to_anchored_lsystem(iv));
        if (a.to == "graph")
            return io::format_graph(interval_adjacency(iv));
        throw InputError("unsupported conversion " + pair);
    }
    if (a.from == "rays") {
        const auto rs = io::parse_rays(doc);
        if (a.to == "lsystem")
            return io::format_lsystem(rays_to_lsystem(rs));
        if (a.to == "graph")
            return io::format_graph(ray_adjacency(rs));
        throw InputError("unsupported conversion " + pair);
    }
    throw InputError("unsupported conversion " + pair);
}

std::string solve_wis(const std::string& rep_path, const std::string& weights_path)
{
    const auto rep = solver_rep(rep_path);
    std::vector<Rational> weights;
    if (!weights_path.empty())
        weights = io::parse_weights(io::read_document(weights_path), rep.size());
    const auto result = max_weight_independent_set(rep, weights);
    return io::header("wis") + "value " + to_string(result.value) + "\nset " + join(result.set) + "\n";
}

std::string solve_clique_cover(const std::string& rep_path)
{
    const auto report = clique_cover_2approx_report(solver_rep(rep_path));
    std::string out = io::header("clique-cover");
    out += "# independent set of size " + std::to_string(report.greedy.size()) + ": " + join(report.greedy) + "\n";
    out += "cliques " + std::to_string(report.cover.size()) + "\n";
    for (const auto& c : report.cover.cliques)
        out += join(c) + "\n";
    return out;
}

std::string solve_color(const std::string& rep_path, bool exact)
{
    const auto rep = solver_rep(rep_path);
    Coloring coloring;
    std::string note;
    if (exact) {
        coloring = brute_force_chi_exact(mpt_adjacency(rep));
        note = "# exact chromatic number\n";
    } else {
        const auto greedy = greedy_coloring(rep);
        coloring = greedy.coloring;
        note = "# first-fit in corner order";
        if (greedy.clique_number)
            note += ", clique number " + std::to_string(*greedy.clique_number);
        note += "\n";
    }
    std::string out = io::header("coloring") + note + "colors " + std::to_string(coloring.k) + "\n";
    for (std::size_t v = 0; v < coloring.color.size(); ++v)
        out += std::to_string(v) + " " + std::to_string(coloring.color[v]) + "\n";
    return out;
}

std::string check_order(const std::string& graph_path, const std::string& order_path, const std::string& kind)
{
    const Graph g = read_graph(graph_path);
    const VertexOrder ord = read_order_for(g, order_path);
    std::optional<OrderViolation> violation;
    if (kind == "mpt")
        violation = verify_mpt_order(g, ord);
    else if (kind == "interval")
        violation = verify_i_order(g, ord);
    else
        throw InputError("--kind must be mpt or interval");
    if (violation)
        throw Negative { "VIOLATION " + violation->describe() };
    return "OK " + kind + "-order\n";
}

std::string check_interval(const std::string& graph_path)
{
    const auto verdict = is_interval_graph(read_graph(graph_path));
    if (!verdict.is_interval) {
        const char* what = verdict.witness_kind == IntervalWitness::chordless_cycle ? "chordless-cycle" : "asteroidal-triple";
        throw Negative { std::string("NOT-INTERVAL ") + what + "=" + join(verdict.witness, ",") };
    }
    return "INTERVAL i-order=" + join(verdict.i_order->sequence, ",") + "\n";
}

std::string check_mpt_necessary(const std::string& graph_path)
{
    const auto certs = common_neighborhood_certificates(read_graph(graph_path));
    if (certs.empty())
        return "PASS no common-neighborhood certificate\n";
    std::string out = "NOT-MPT";
    for (const auto& c : certs)
        out += "\n" + format_certificate(c);
    throw Negative { out };
}

std::string check_contact(const std::string& path)
{
    const auto check = verify_contact(io::parse_lsystem(io::read_document(path)));
    if (!check.ok())
        throw Negative { "CROSSING " + std::to_string(check.violation->first) + " "
            + std::to_string(check.violation->second) };
    return std::string("CONTACT ok equilateral=") + (check.equilateral ? "yes" : "no") + "\n";
}

std::string run_recognize(const std::string& graph_path, int max_n)
{
    const auto result = recognize(read_graph(graph_path), max_n);
    std::string out(to_string(result.verdict));
    if (result.order)
        out += "\nORDER " + join(result.order->sequence);
    for (const auto& c : result.certificates)
        out += "\n" + format_certificate(c);
    if (result.exhausted)
        out += "\nEXHAUSTED no MPT-order exists";
    if (result.verdict == Verdict::unknown)
        out += "\nNo certificate, and " + std::to_string(read_graph(graph_path).order())
            + " vertices exceed --max-n " + std::to_string(max_n);
    if (result.verdict != Verdict::mpt)
        throw Negative { out };
    return out + "\n";
}

std::string run_reduce(const std::string& arcs_path, int k, const std::string& cut_text, const std::string& prefix)
{
    const auto arcs = io::parse_arcs(io::read_document(arcs_path));
    std::optional<Rational> cut;
    if (!cut_text.empty())
        cut = parse_rational(cut_text);
    const auto out = coloring_hardness_reduction(arcs, k, cut);
    emit(io::format_graph(out.g_prime), prefix + ".graph");
    emit(io::format_rep(out.rep), prefix + ".rep");
    emit(io::format_mapping(out), prefix + ".map");
    std::string summary = "case " + std::string(to_string(out.kind)) + "\n";
    summary += "cut " + to_string(out.cut) + "\n";
    summary += "crossing " + std::to_string(out.crossing) + "\n";
    summary += "vertices " + std::to_string(out.g_prime.order()) + "\n";
    summary += "clique " + join(out.clique_vertices) + "\n";
    return summary;
}

std::string run_render(const std::string& path, const RenderOptions& options)
{
    const auto doc = io::read_document(path);
    const std::string kind = kind_of(doc, "rep");
    if (kind == "rep")
        return render_svg(io::parse_rep(doc), options);
    if (kind == "lsystem")
        return render_svg(io::parse_lsystem(doc), options);
    if (kind == "contact")
        return render_svg(io::parse_contact(doc), options);
    if (kind == "interval")
        return render_svg(interval_to_anchored_lsystem(io::parse_intervals(doc)), options);
    if (kind == "rays")
        return render_svg(rays_to_lsystem(io::parse_rays(doc)), options);
    if (kind == "segments")
        return render_svg(CyclicSegmentSystem { io::parse_segments(doc), {} }, options);
    io::fail(doc, 0, "nothing to draw for kind '" + kind + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "mptkit: max point-tolerance graphs, their representations and algorithms" };
    app.require_subcommand(1);
    std::function<std::string()> action;
    std::string out;

    auto with_out = [&](CLI::App* sub) { sub->add_option("--out", out, "Write the artifact here instead of stdout"); };

    // gen
    std::string gen_family;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "Generate an instance file");
    gen->add_option("--family", gen_family, "Family name, e.g. net, cycle:5, random-mpt")->required();
    gen->add_option("--n", gen_n, "Vertex count for parameterised families");
    auto* seed_opt = gen->add_option("--seed", gen_seed, "Seed, mandatory for random families");
    with_out(gen);
    gen->callback([&] {
        action = [&] {
            return generate(gen_family, gen_n, seed_opt->count() ? std::optional(gen_seed) : std::nullopt);
        };
    });

    // adjacency
    std::string adj_input = "-";
    auto* adj = app.add_subcommand("adjacency", "Intersection graph of a representation file");
    adj->add_option("--rep", adj_input, "Representation file of any geometric kind (default stdin)");
    with_out(adj);
    adj->callback([&] { action = [&] { return io::format_graph(adjacency_of(io::read_document(adj_input))); }; });

    // convert
    ConvertArgs conv;
    auto* cv = app.add_subcommand("convert", "Convert between representation kinds");
    cv->add_option("--from", conv.from, "rep, lsystem, interval, rays, graph or order+graph")->required();
    cv->add_option("--to", conv.to, "rep, canonical, lsystem, interval, order, segments or graph")->required();
    cv->add_option("--input", conv.input, "Input file (default stdin)");
    cv->add_option("--graph", conv.graph, "Graph file for order+graph");
    cv->add_option("--order", conv.order, "Order file for order+graph");
    cv->add_option("--max-n", conv.max_n, "Largest graph the order search may try");
    with_out(cv);
    cv->callback([&] { action = [&] { return convert(conv); }; });

    // solve
    auto* solve = app.add_subcommand("solve", "Optimization on a representation");
    solve->require_subcommand(1);
    std::string solve_rep, solve_weights;
    bool solve_exact = false;
    auto* wis = solve->add_subcommand("wis", "Maximum weight independent set");
    wis->add_option("--rep", solve_rep, "Representation file")->required();
    wis->add_option("--weights", solve_weights, "Weights file (default unit weights)");
    with_out(wis);
    wis->callback([&] { action = [&] { return solve_wis(solve_rep, solve_weights); }; });
    auto* cover = solve->add_subcommand("clique-cover", "Clique cover within twice the independence number");
    cover->add_option("--rep", solve_rep, "Representation file")->required();
    with_out(cover);
    cover->callback([&] { action = [&] { return solve_clique_cover(solve_rep); }; });
    auto* color = solve->add_subcommand("color", "First-fit coloring, or exact with --exact");
    color->add_option("--rep", solve_rep, "Representation file")->required();
    color->add_flag("--exact", solve_exact, "Exact chromatic number by exhaustive search");
    with_out(color);
    color->callback([&] { action = [&] { return solve_color(solve_rep, solve_exact); }; });

    // check
    auto* check = app.add_subcommand("check", "Verify a property");
    check->require_subcommand(1);
    std::string check_graph, check_order_path, check_kind = "mpt", check_lsystem;
    auto* ck_order = check->add_subcommand("order", "Verify an MPT-order or I-order");
    ck_order->add_option("--graph", check_graph, "Graph file")->required();
    ck_order->add_option("--order", check_order_path, "Order file")->required();
    ck_order->add_option("--kind", check_kind, "mpt (default) or interval");
    ck_order->callback([&] { action = [&] { return check_order(check_graph, check_order_path, check_kind); }; });
    auto* ck_interval = check->add_subcommand("interval", "Interval graph recognition");
    ck_interval->add_option("--graph", check_graph, "Graph file")->required();
    ck_interval->callback([&] { action = [&] { return check_interval(check_graph); }; });
    auto* ck_necessary = check->add_subcommand("mpt-necessary", "Common-neighborhood certificates");
    ck_necessary->add_option("--graph", check_graph, "Graph file")->required();
    ck_necessary->callback([&] { action = [&] { return check_mpt_necessary(check_graph); }; });
    auto* ck_contact = check->add_subcommand("contact", "Verify that L-shapes only touch");
    ck_contact->add_option("--lsystem", check_lsystem, "L-system or contact file")->required();
    ck_contact->callback([&] { action = [&] { return check_contact(check_lsystem); }; });

    // recognize
    std::string rec_graph;
    int rec_max_n = kOrderOracleLimit;
    auto* rec = app.add_subcommand("recognize", "Decide MPT membership with a certificate");
    rec->add_option("--graph", rec_graph, "Graph file")->required();
    rec->add_option("--max-n", rec_max_n, "Largest graph the order search may try");
    rec->callback([&] { action = [&] { return run_recognize(rec_graph, rec_max_n); }; });

    // decompose
    auto* dec = app.add_subcommand("decompose", "Factor a representation");
    dec->require_subcommand(1);
    std::string dec_rep, dec_h1, dec_h2;
    auto* two = dec->add_subcommand("two-interval", "Interval graphs H1, H2 with E = E1 and E2");
    two->add_option("--rep", dec_rep, "Representation file")->required();
    two->add_option("--h1", dec_h1, "Output file for the [p, e] intervals")->required();
    two->add_option("--h2", dec_h2, "Output file for the [s, p] intervals")->required();
    two->callback([&] {
        action = [&] {
            const auto d = two_interval_decomposition(read_rep(dec_rep));
            emit(io::format_intervals(d.h1), dec_h1);
            emit(io::format_intervals(d.h2), dec_h2);
            return std::string();
        };
    });

    // segments
    std::string seg_rep;
    auto* seg = app.add_subcommand("segments", "Cyclic segment system of a representation");
    seg->add_option("--rep", seg_rep, "Representation file")->required();
    with_out(seg);
    seg->callback([&] {
        action = [&] {
            const auto rep = read_rep(seg_rep);
            return io::format_segments(cyclic_segments_from_order(mpt_adjacency(rep), order_from_rep(rep)));
        };
    });

    // contact
    std::string contact_graph_path, contact_tri;
    auto* con = app.add_subcommand("contact", "Equilateral contact L-system of a maximal outerplanar graph");
    con->add_option("--graph", contact_graph_path, "Graph file")->required();
    con->add_option("--triangulation", contact_tri, "Maximal outerplanar supergraph for non-maximal input");
    with_out(con);
    con->callback([&] {
        action = [&] {
            const Graph g = read_graph(contact_graph_path);
            if (contact_tri.empty())
                return io::format_contact(contact_lsystem_from_outerplanar(g));
            return io::format_contact(contact_lsystem_from_outerplanar(g, read_graph(contact_tri)));
        };
    });

    // reduce
    auto* red = app.add_subcommand("reduce", "Hardness reductions");
    red->require_subcommand(1);
    std::string red_arcs, red_cut, red_prefix;
    int red_k = 0;
    auto* red_color = red->add_subcommand("coloring", "Circular-arc k-coloring to MPT k-coloring");
    red_color->add_option("--arcs", red_arcs, "Circular-arc file")->required();
    red_color->add_option("--k", red_k, "Number of colors")->required();
    red_color->add_option("--cut", red_cut, "Cut point in [0, 1), not an arc endpoint");
    red_color->add_option("--prefix", red_prefix, "Writes PREFIX.graph, PREFIX.rep and PREFIX.map")->required();
    red_color->callback([&] { action = [&] { return run_reduce(red_arcs, red_k, red_cut, red_prefix); }; });

    // render
    std::string render_input;
    RenderOptions render_options;
    auto* ren = app.add_subcommand("render", "SVG drawing of a representation");
    ren->add_option("--input", render_input, "Representation, L-system, contact or segment file")->required();
    ren->add_option("--scale", render_options.scale, "Pixels per unit");
    ren->add_flag("--labels", render_options.labels, "Label shapes with vertex ids");
    with_out(ren);
    ren->callback([&] { action = [&] { return run_render(render_input, render_options); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "mptkit: " << e.what() << "\n";
        return 2;
    }

    try {
        emit(action(), out);
        return 0;
    } catch (const Negative& n) {
        std::cout << n.message << "\n";
        return 1;
    } catch (const OrderViolationError& e) {
        std::cout << "VIOLATION " << e.violation().describe() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cout << "FAILED " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "mptkit: " << e.what() << "\n";
        return 2;
    } catch (const RefusalError& e) {
        std::cerr << "mptkit: " << e.what() << "\n";
        return 2;
    }
}
