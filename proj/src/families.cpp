#include "mptkit/families.hpp"

#include "mptkit/error.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace mptkit::families {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw InputError(message);
}

} // namespace

Graph net()
{
    const std::vector<Edge> edges { { 0, 1 }, { 1, 3 }, { 1, 5 }, { 3, 5 }, { 2, 3 }, { 4, 5 } };
    return Graph::from_edges(6, edges);
}

Graph k222()
{
    return universal_extension(cycle(4));
}

Graph cycle(int n)
{
    require(n >= 3, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n)
{
    require(n >= 0, "path needs a non-negative vertex count");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph complete(int n)
{
    require(n >= 0, "complete graph needs a non-negative vertex count");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complement_cycle(int n)
{
    return complement(cycle(n));
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 0 && b >= 0, "complete bipartite sides must be non-negative");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(a + b, edges);
}

Graph long_claw()
{
    const std::vector<Edge> edges { { 0, 1 }, { 1, 2 }, { 0, 3 }, { 3, 4 }, { 0, 5 }, { 5, 6 } };
    return Graph::from_edges(7, edges);
}

Graph tent()
{
    const std::vector<Edge> edges { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 3, 0 }, { 3, 1 }, { 4, 1 },
        { 4, 2 }, { 5, 0 }, { 5, 2 } };
    return Graph::from_edges(6, edges);
}

Graph fan(int n)
{
    require(n >= 1, "fan needs at least one vertex");
    std::vector<Edge> edges;
    const Vertex apex = n - 1;
    for (Vertex v = 0; v + 1 < apex; ++v)
        edges.emplace_back(v, v + 1);
    for (Vertex v = 0; v < apex; ++v)
        edges.emplace_back(v, apex);
    return Graph::from_edges(n, edges);
}

} // namespace mptkit::families

namespace mptkit {

namespace {

std::vector<int> parse_parameters(std::string_view text, std::string_view spec)
{
    std::vector<int> values;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size())
            throw InputError("bad family parameter in '" + std::string(spec) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return values;
}

} // namespace

Graph family(std::string_view spec)
{
    auto colon = spec.find(':');
    auto name = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string_view::npos)
        params = parse_parameters(spec.substr(colon + 1), spec);

    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw InputError("family '" + std::string(name) + "' takes " + std::to_string(count)
                + " parameter(s)");
    };

    if (name == "net") {
        need(0);
        return families::net();
    }
    if (name == "k222") {
        need(0);
        return families::k222();
    }
    if (name == "long-claw") {
        need(0);
        return families::long_claw();
    }
    if (name == "tent") {
        need(0);
        return families::tent();
    }
    if (name == "cycle") {
        need(1);
        return families::cycle(params[0]);
    }
    if (name == "path") {
        need(1);
        return families::path(params[0]);
    }
    if (name == "complete") {
        need(1);
        return families::complete(params[0]);
    }
    if (name == "complement-cycle") {
        need(1);
        return families::complement_cycle(params[0]);
    }
    if (name == "fan") {
        need(1);
        return families::fan(params[0]);
    }
    if (name == "complete-bipartite") {
        need(2);
        return families::complete_bipartite(params[0], params[1]);
    }
    throw InputError("unknown family '" + std::string(spec) + "'");
}

Graph family(std::string_view name, int n)
{
    if (name == "net" || name == "k222" || name == "long-claw" || name == "tent")
        return family(name);
    return family(std::string(name) + ":" + std::to_string(n));
}

} // namespace mptkit
