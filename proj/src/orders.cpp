#include "mptkit/orders.hpp"

#include "mptkit/error.hpp"

#include <algorithm>
#include <numeric>

namespace mptkit {

std::vector<int> VertexOrder::positions() const
{
    std::vector<int> pos(sequence.size(), -1);
    for (std::size_t i = 0; i < sequence.size(); ++i)
        pos[sequence[i]] = static_cast<int>(i);
    return pos;
}

VertexOrder identity_order(int n)
{
    VertexOrder ord;
    ord.sequence.resize(static_cast<std::size_t>(n));
    std::iota(ord.sequence.begin(), ord.sequence.end(), 0);
    return ord;
}

VertexOrder reversed(const VertexOrder& ord)
{
    return { { ord.sequence.rbegin(), ord.sequence.rend() } };
}

void validate_order(const Graph& g, const VertexOrder& ord)
{
    if (ord.size() != g.order())
        throw InputError("order lists " + std::to_string(ord.size()) + " vertices but the graph has "
            + std::to_string(g.order()));
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : ord.sequence) {
        if (v < 0 || v >= g.order() || seen[v])
            throw InputError("order is not a permutation of 0.." + std::to_string(g.order() - 1));
        seen[v] = 1;
    }
}

std::string OrderViolation::describe() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(vertices[i]);
    }
    return out + ")";
}

OrderViolationError::OrderViolationError(OrderViolation violation)
    : std::runtime_error(std::string(violation.kind == OrderKind::mpt_order ? "MPT" : "I")
        + "-order violated by " + violation.describe())
    , violation_(std::move(violation))
{
}

namespace {

// Positions of the first and last neighbor of the vertex at each position,
// -1 / n when there is none.
struct NeighborSpan {
    std::vector<int> first;
    std::vector<int> last;
};

NeighborSpan neighbor_spans(const Graph& g, const VertexOrder& ord, const std::vector<int>& pos)
{
    const int n = g.order();
    NeighborSpan span { std::vector<int>(static_cast<std::size_t>(n), n),
        std::vector<int>(static_cast<std::size_t>(n), -1) };
    for (int i = 0; i < n; ++i)
        for (Vertex w : g.neighbors(ord.sequence[i])) {
            span.first[i] = std::min(span.first[i], pos[w]);
            span.last[i] = std::max(span.last[i], pos[w]);
        }
    return span;
}

OrderViolation make_violation(OrderKind kind, const VertexOrder& ord, std::vector<int> positions)
{
    OrderViolation v { kind, {}, std::move(positions) };
    for (int p : v.positions)
        v.vertices.push_back(ord.sequence[p]);
    return v;
}

} // namespace

std::optional<OrderViolation> verify_mpt_order(const Graph& g, const VertexOrder& ord)
{
    validate_order(g, ord);
    const int n = g.order();
    const auto pos = ord.positions();
    const auto span = neighbor_spans(g, ord, pos);
    auto at = [&](int i) { return ord.sequence[i]; };

    // A violation exists iff some non-adjacent pair at positions j < k has
    // first[k] < j and last[j] > k.
    bool violated = false;
    for (int j = 0; j < n && !violated; ++j)
        for (int k = j + 1; k < n && !violated; ++k)
            violated = !g.adjacent(at(j), at(k)) && span.first[k] < j && span.last[j] > k;
    if (!violated)
        return std::nullopt;

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (span.last[b] <= b + 1)
                continue;
            for (int c = b + 1; c < span.last[b]; ++c) {
                if (!g.adjacent(at(a), at(c)) || g.adjacent(at(b), at(c)))
                    continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.adjacent(at(b), at(d)))
                        return make_violation(OrderKind::mpt_order, ord, { a, b, c, d });
            }
        }
    return std::nullopt;
}

std::optional<OrderViolation> verify_i_order(const Graph& g, const VertexOrder& ord)
{
    validate_order(g, ord);
    const int n = g.order();
    const auto pos = ord.positions();
    const auto span = neighbor_spans(g, ord, pos);
    auto at = [&](int i) { return ord.sequence[i]; };

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < span.last[a]; ++b) {
            if (g.adjacent(at(a), at(b)))
                continue;
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(at(a), at(c)))
                    return make_violation(OrderKind::i_order, ord, { a, b, c });
        }
    return std::nullopt;
}

MptRepresentation rep_from_order_unchecked(const Graph& g, const VertexOrder& ord)
{
    validate_order(g, ord);
    const int n = g.order();
    const auto pos = ord.positions();
    const auto span = neighbor_spans(g, ord, pos);
    MptRepresentation rep;
    rep.items.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const long s = std::min(i, span.first[i]) + 1;
        const long e = std::max(i, span.last[i]) + 1;
        rep.items[ord.sequence[i]] = { Rational(s), Rational(static_cast<long>(i + 1)), Rational(e) };
    }
    return rep;
}

MptRepresentation rep_from_order(const Graph& g, const VertexOrder& ord)
{
    if (auto violation = verify_mpt_order(g, ord))
        throw OrderViolationError(*violation);
    return rep_from_order_unchecked(g, ord);
}

VertexOrder order_from_rep(const MptRepresentation& rep)
{
    VertexOrder ord = identity_order(rep.size());
    std::stable_sort(ord.sequence.begin(), ord.sequence.end(),
        [&](Vertex a, Vertex b) { return rep.items[a].p < rep.items[b].p; });
    return ord;
}

namespace {

class MptOrderSearch {
public:
    explicit MptOrderSearch(const Graph& g)
        : g_(g)
        , n_(g.order())
        , placed_(static_cast<std::size_t>(n_), 0)
        , first_(static_cast<std::size_t>(n_), n_)
        , pos_(static_cast<std::size_t>(n_), n_)
    {
        ranking_.resize(static_cast<std::size_t>(n_));
        std::iota(ranking_.begin(), ranking_.end(), 0);
        std::stable_sort(ranking_.begin(), ranking_.end(),
            [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    }

    bool run() { return extend(); }
    VertexOrder result() const { return { prefix_ }; }

private:
    // Would appending x close a quadruple (u, v, w, x) with uw, vx in E and
    // vw not in E? first_[w] is the earliest placed neighbor of w.
    bool violates(Vertex x) const
    {
        const int k = static_cast<int>(prefix_.size());
        for (int j = 0; j < k; ++j) {
            const Vertex v = prefix_[j];
            if (!g_.adjacent(v, x))
                continue;
            for (int l = j + 1; l < k; ++l) {
                const Vertex w = prefix_[l];
                if (first_[w] < j && !g_.adjacent(v, w))
                    return true;
            }
        }
        return false;
    }

    bool extend()
    {
        const int k = static_cast<int>(prefix_.size());
        if (k == n_)
            return true;
        for (Vertex x : ranking_) {
            if (placed_[x] || violates(x))
                continue;
            std::vector<std::pair<Vertex, int>> saved;
            int own_first = n_;
            for (Vertex w : g_.neighbors(x)) {
                if (!placed_[w])
                    continue;
                own_first = std::min(own_first, pos_[w]);
                if (first_[w] > k) {
                    saved.emplace_back(w, first_[w]);
                    first_[w] = k;
                }
            }
            saved.emplace_back(x, first_[x]);
            first_[x] = own_first;
            placed_[x] = 1;
            prefix_.push_back(x);
            pos_[x] = k;

            if (extend())
                return true;

            prefix_.pop_back();
            placed_[x] = 0;
            for (auto it = saved.rbegin(); it != saved.rend(); ++it)
                first_[it->first] = it->second;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> ranking_;
    std::vector<Vertex> prefix_;
    std::vector<char> placed_;
    std::vector<int> first_;
    std::vector<int> pos_;
};

} // namespace

std::optional<VertexOrder> brute_force_mpt_order(const Graph& g, int limit)
{
    if (g.order() > limit)
        throw RefusalError("MPT-order oracle refuses n=" + std::to_string(g.order()) + " (limit "
            + std::to_string(limit) + ")");
    MptOrderSearch search(g);
    if (!search.run())
        return std::nullopt;
    return search.result();
}

std::optional<VertexOrder> brute_force_i_order(const Graph& g, int limit)
{
    if (g.order() > limit)
        throw RefusalError("I-order oracle refuses n=" + std::to_string(g.order()) + " (limit "
            + std::to_string(limit) + ")");
    VertexOrder ord = identity_order(g.order());
    do {
        if (!verify_i_order(g, ord))
            return ord;
    } while (std::next_permutation(ord.sequence.begin(), ord.sequence.end()));
    return std::nullopt;
}

TwoIntervalDecomposition two_interval_decomposition(const MptRepresentation& rep)
{
    validate(rep);
    TwoIntervalDecomposition out;
    for (const auto& it : rep.items) {
        out.h1.items.push_back({ it.p, it.e });
        out.h2.items.push_back({ it.s, it.p });
    }
    return out;
}

} // namespace mptkit
