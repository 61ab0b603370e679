#include "mptkit/certificates.hpp"

#include "mptkit/error.hpp"
#include "mptkit/families.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace mptkit {

namespace {

// Maximum cardinality search; the reverse visit order is a perfect
// elimination order iff g is chordal.
std::vector<Vertex> mcs_visit_order(const Graph& g)
{
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best]))
                best = v;
        visited[best] = 1;
        order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!visited[w])
                ++weight[w];
    }
    return order;
}

bool is_chordal(const Graph& g)
{
    const auto order = mcs_visit_order(g);
    std::vector<int> at(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        at[order[i]] = static_cast<int>(i);
    for (Vertex v : order) {
        std::vector<Vertex> earlier;
        for (Vertex w : g.neighbors(v))
            if (at[w] < at[v])
                earlier.push_back(w);
        for (std::size_t i = 0; i < earlier.size(); ++i)
            for (std::size_t j = i + 1; j < earlier.size(); ++j)
                if (!g.adjacent(earlier[i], earlier[j]))
                    return false;
    }
    return true;
}

// Shortest a-b path inside the allowed vertices, or empty.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b, const std::vector<char>& allowed)
{
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> frontier;
    parent[a] = a;
    frontier.push(a);
    while (!frontier.empty()) {
        const Vertex v = frontier.front();
        frontier.pop();
        if (v == b)
            break;
        for (Vertex w : g.neighbors(v))
            if (allowed[w] && parent[w] < 0) {
                parent[w] = v;
                frontier.push(w);
            }
    }
    if (parent[b] < 0)
        return {};
    std::vector<Vertex> path { b };
    while (path.back() != a)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Vertex> chordless_cycle(const Graph& g)
{
    const int n = g.order();
    for (Vertex x = 0; x < n; ++x) {
        const auto nx = g.neighbors(x);
        for (std::size_t i = 0; i < nx.size(); ++i)
            for (std::size_t j = i + 1; j < nx.size(); ++j) {
                const Vertex a = nx[i], b = nx[j];
                if (g.adjacent(a, b))
                    continue;
                std::vector<char> allowed(static_cast<std::size_t>(n), 1);
                allowed[x] = 0;
                for (Vertex w : nx)
                    allowed[w] = 0;
                allowed[a] = allowed[b] = 1;
                auto path = shortest_path(g, a, b, allowed);
                if (path.empty())
                    continue;
                path.insert(path.begin(), x);
                return path;
            }
    }
    return {};
}

// component[z][v]: component id of v in G - N[z], or -1 for v in N[z].
std::vector<std::vector<int>> avoiding_components(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (Vertex z = 0; z < n; ++z) {
        auto& label = out[z];
        label.assign(static_cast<std::size_t>(n), -2);
        label[z] = -1;
        for (Vertex w : g.neighbors(z))
            label[w] = -1;
        int next = 0;
        for (Vertex s = 0; s < n; ++s) {
            if (label[s] != -2)
                continue;
            std::vector<Vertex> stack { s };
            label[s] = next;
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : g.neighbors(v))
                    if (label[w] == -2) {
                        label[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
    }
    return out;
}

bool together(const std::vector<int>& label, Vertex a, Vertex b)
{
    return label[a] >= 0 && label[a] == label[b];
}

std::vector<Vertex> asteroidal_triple(const Graph& g)
{
    const int n = g.order();
    const auto comp = avoiding_components(g);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (comp[a][b] < 0)
                continue;
            for (Vertex c = b + 1; c < n; ++c)
                if (together(comp[c], a, b) && together(comp[b], a, c) && together(comp[a], b, c))
                    return { a, b, c };
        }
    return {};
}

// Left-to-right prefix search. A placed vertex that still has unplaced
// neighbors must be adjacent to the next vertex, otherwise it is followed by
// a non-neighbor before one of its neighbors. Feasibility depends only on the
// placed set, so dead sets are memoized.
class IOrderSearch {
public:
    explicit IOrderSearch(const Graph& g)
        : g_(g)
        , placed_(static_cast<std::size_t>(g.order()), false)
        , pending_(static_cast<std::size_t>(g.order()))
    {
        for (Vertex v = 0; v < g.order(); ++v)
            pending_[v] = g.degree(v);
    }

    std::optional<VertexOrder> run()
    {
        if (!extend())
            return std::nullopt;
        return VertexOrder { sequence_ };
    }

private:
    bool extend()
    {
        const int n = g_.order();
        if (static_cast<int>(sequence_.size()) == n)
            return true;
        if (dead_.count(placed_))
            return false;
        std::vector<Vertex> open;
        for (Vertex u : sequence_)
            if (pending_[u] > 0)
                open.push_back(u);
        std::vector<Vertex> candidates;
        for (Vertex w = 0; w < n; ++w) {
            if (placed_[w])
                continue;
            bool fits = true;
            for (Vertex u : open)
                if (!g_.adjacent(u, w)) {
                    fits = false;
                    break;
                }
            if (fits)
                candidates.push_back(w);
        }
        // Fewest unplaced neighbors first: the earliest-starting remaining
        // interval tends to reach the fewest remaining vertices.
        std::stable_sort(candidates.begin(), candidates.end(),
            [&](Vertex x, Vertex y) { return pending_[x] < pending_[y]; });
        for (Vertex w : candidates) {
            place(w);
            if (extend())
                return true;
            unplace(w);
        }
        dead_.insert(placed_);
        return false;
    }

    void place(Vertex w)
    {
        placed_[w] = true;
        sequence_.push_back(w);
        for (Vertex x : g_.neighbors(w))
            --pending_[x];
    }

    void unplace(Vertex w)
    {
        placed_[w] = false;
        sequence_.pop_back();
        for (Vertex x : g_.neighbors(w))
            ++pending_[x];
    }

    const Graph& g_;
    std::vector<bool> placed_;
    std::vector<int> pending_; // unplaced neighbors per vertex
    std::vector<Vertex> sequence_;
    std::unordered_set<std::vector<bool>> dead_;
};

std::vector<Vertex> mapped(const std::vector<Vertex>& local, const VertexSet& host)
{
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local)
        out.push_back(host[v]);
    return out;
}

std::string join(const std::vector<Vertex>& vs)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
}

} // namespace

IntervalVerdict is_interval_graph(const Graph& g)
{
    IntervalVerdict verdict;
    if (!is_chordal(g)) {
        verdict.witness_kind = IntervalWitness::chordless_cycle;
        verdict.witness = chordless_cycle(g);
        if (verdict.witness.empty())
            throw std::logic_error("non-chordal graph without a chordless cycle");
        return verdict;
    }
    if (auto triple = asteroidal_triple(g); !triple.empty()) {
        verdict.witness_kind = IntervalWitness::asteroidal_triple;
        verdict.witness = std::move(triple);
        return verdict;
    }
    auto order = IOrderSearch(g).run();
    if (!order || verify_i_order(g, *order))
        throw std::logic_error("chordal AT-free graph without a valid I-order");
    verdict.is_interval = true;
    verdict.i_order = std::move(order);
    return verdict;
}

bool witness_holds(const Graph& g, const IntervalVerdict& verdict)
{
    const auto& w = verdict.witness;
    const int n = g.order();
    for (Vertex v : w)
        if (v < 0 || v >= n)
            return false;
    auto sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    switch (verdict.witness_kind) {
    case IntervalWitness::none:
        return false;
    case IntervalWitness::chordless_cycle: {
        const std::size_t k = w.size();
        if (k < 4)
            return false;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if (g.adjacent(w[i], w[j]) != consecutive)
                    return false;
            }
        return true;
    }
    case IntervalWitness::asteroidal_triple: {
        if (w.size() != 3)
            return false;
        const auto comp = avoiding_components(g);
        return together(comp[w[2]], w[0], w[1]) && together(comp[w[1]], w[0], w[2])
            && together(comp[w[0]], w[1], w[2]);
    }
    }
    return false;
}

std::vector<MptCertificate> common_neighborhood_certificates(const Graph& g)
{
    std::vector<MptCertificate> out;
    const int n = g.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            VertexSet common;
            std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                g.neighbors(v).end(), std::back_inserter(common));
            if (common.size() < 4)
                continue; // every graph on at most 3 vertices is interval
            auto verdict = is_interval_graph(induced_subgraph(g, common));
            if (verdict.is_interval)
                continue;
            verdict.witness = mapped(verdict.witness, common);
            out.push_back({ CertificateKind::common_neighborhood, { u, v }, std::move(common), std::move(verdict), {} });
        }
    return out;
}

std::string format_certificate(const MptCertificate& cert)
{
    switch (cert.kind) {
    case CertificateKind::common_neighborhood:
        return "PAIR " + std::to_string(cert.pair.first) + " " + std::to_string(cert.pair.second)
            + " : NOT-INTERVAL witness=" + join(cert.verdict.witness);
    case CertificateKind::order_found:
        return "ORDER " + join(cert.order ? cert.order->sequence : std::vector<Vertex> {});
    case CertificateKind::order_exhausted:
        return "EXHAUSTED no MPT-order";
    }
    return {};
}

NeighborhoodPartition neighborhood_partition(const MptRepresentation& rep, Vertex v)
{
    if (v < 0 || v >= rep.size())
        throw InputError("vertex " + std::to_string(v) + " out of range for " + std::to_string(rep.size())
            + " vertices");
    const Graph g = mpt_adjacency(rep);
    NeighborhoodPartition out;
    for (Vertex w : g.neighbors(v))
        (rep.items[w].p < rep.items[v].p ? out.left : out.right).push_back(w);
    for (Vertex a : out.left)
        for (Vertex b : out.right)
            if (g.adjacent(a, b))
                out.between.emplace_back(a, b);
    if (!is_interval_graph(induced_subgraph(g, out.left)).is_interval
        || !is_interval_graph(induced_subgraph(g, out.right)).is_interval)
        throw std::logic_error("neighborhood half of vertex " + std::to_string(v) + " is not interval");
    return out;
}

bool is_outerplanar(const Graph& g, int limit)
{
    const int n = g.order();
    if (n > limit)
        throw RefusalError("outerplanarity test limited to " + std::to_string(limit) + " vertices, got "
            + std::to_string(n));
    if (n >= 2 && g.edge_count() > 2 * n - 3)
        return false;
    using Planar = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Planar h(static_cast<std::size_t>(n + 1));
    for (const auto& [u, v] : g.edges())
        boost::add_edge(u, v, h);
    for (Vertex v = 0; v < n; ++v)
        boost::add_edge(v, n, h);
    return boost::boyer_myrvold_planarity_test(h);
}

Graph non_mpt_family(std::string_view spec)
{
    const auto rest_after = [&](std::string_view prefix) -> std::optional<std::string_view> {
        if (spec.substr(0, prefix.size()) == prefix)
            return spec.substr(prefix.size());
        return std::nullopt;
    };
    if (spec == "k222")
        return families::k222();
    if (spec == "complement-cycle:7" || spec == "complement-cycle")
        return families::complement_cycle(7);
    if (rest_after("complement-cycle:"))
        throw InputError("only the complement of the 7-cycle is a known non-MPT complement-cycle");
    if (auto base_name = rest_after("universal-extension-of:")) {
        const Graph base = family(*base_name);
        if (is_interval_graph(base).is_interval)
            throw InputError("universal-extension-of needs a non-interval base; " + std::string(*base_name)
                + " is interval");
        return universal_extension(base);
    }
    if (auto base_name = rest_after("full-subdivision-of:")) {
        const Graph base = family(*base_name);
        if (is_outerplanar(base))
            throw InputError("full-subdivision-of needs a non-outerplanar base; " + std::string(*base_name)
                + " is outerplanar");
        return full_subdivision(base);
    }
    throw InputError("unknown non-MPT family '" + std::string(spec) + "'");
}

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::mpt:
        return "MPT";
    case Verdict::not_mpt:
        return "NOT-MPT";
    case Verdict::unknown:
        return "UNKNOWN";
    }
    return "UNKNOWN";
}

Recognition recognize(const Graph& g, int max_n)
{
    Recognition out;
    if (auto interval = is_interval_graph(g); interval.is_interval) {
        // An I-order is an MPT-order.
        out.verdict = Verdict::mpt;
        out.order = interval.i_order;
        return out;
    }
    out.certificates = common_neighborhood_certificates(g);
    if (!out.certificates.empty()) {
        out.verdict = Verdict::not_mpt;
        return out;
    }
    if (g.order() <= max_n) {
        out.order = brute_force_mpt_order(g, max_n);
        out.verdict = out.order ? Verdict::mpt : Verdict::not_mpt;
        out.exhausted = !out.order;
    }
    return out;
}

} // namespace mptkit
