#include "mptkit/oracles.hpp"

#include "mptkit/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

namespace mptkit {

namespace {

using Mask = std::uint64_t;

void check_limit(const Graph& g, int limit, const char* what)
{
    if (limit > 64)
        limit = 64;
    if (g.order() > limit)
        throw RefusalError(std::string(what) + " oracle refuses n=" + std::to_string(g.order())
            + " (limit " + std::to_string(limit) + ")");
}

// Scales rational weights to a common denominator so the search runs on
// machine integers.
std::vector<std::int64_t> integer_weights(int n, std::span<const Rational> weights, mpz_class& scale)
{
    scale = 1;
    if (weights.empty())
        return std::vector<std::int64_t>(static_cast<std::size_t>(n), 1);
    if (static_cast<int>(weights.size()) != n)
        throw InputError("expected " + std::to_string(n) + " weights, got "
            + std::to_string(weights.size()));
    for (const auto& w : weights) {
        if (sgn(w) < 0)
            throw InputError("negative weight " + to_string(w));
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), w.get_den().get_mpz_t());
    }
    std::vector<std::int64_t> result;
    mpz_class total = 0;
    for (const auto& w : weights) {
        mpz_class scaled = w.get_num() * (scale / w.get_den());
        total += scaled;
        result.push_back(scaled.get_si());
    }
    if (!total.fits_slong_p())
        throw RefusalError("weights too large for the exhaustive oracle");
    return result;
}

class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, std::vector<std::int64_t> weights)
        : weights_(std::move(weights))
    {
        const int n = g.order();
        neighbors_.assign(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v))
                neighbors_[v] |= Mask { 1 } << w;
        all_ = n == 64 ? ~Mask { 0 } : (Mask { 1 } << n) - 1;
    }

    void run()
    {
        best_value_ = -1;
        current_.clear();
        visit(all_, 0);
    }

    std::int64_t best_value() const { return best_value_; }
    const VertexSet& best_set() const { return best_set_; }

private:
    std::int64_t bound(Mask candidates) const
    {
        std::int64_t sum = 0;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            sum += weights_[v];
        }
        return sum;
    }

    // Pre-order over sets extended by increasing vertices visits sets in
    // lexicographic order, so the first optimum found is the smallest one.
    void visit(Mask candidates, std::int64_t value)
    {
        if (value > best_value_) {
            best_value_ = value;
            best_set_ = current_;
        }
        if (value + bound(candidates) <= best_value_)
            return;
        Mask rest = candidates;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            current_.push_back(v);
            visit(rest & ~neighbors_[v], value + weights_[v]);
            current_.pop_back();
            if (value + bound(rest) <= best_value_)
                return;
        }
    }

    std::vector<std::int64_t> weights_;
    std::vector<Mask> neighbors_;
    Mask all_ = 0;
    std::int64_t best_value_ = -1;
    VertexSet best_set_;
    VertexSet current_;
};

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k)
        : g_(g)
        , k_(k)
        , color_(static_cast<std::size_t>(g.order()), -1)
        , conflicts_(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(std::max(k, 1)), 0)
    {
    }

    bool run() { return extend(0, 0); }
    std::vector<int> colors() const { return color_; }

private:
    int& conflict(Vertex v, int c) { return conflicts_[static_cast<std::size_t>(v) * k_ + c]; }

    // Uncolored vertex with most distinct neighbor colors, then highest
    // degree, then lowest index.
    Vertex pick()
    {
        Vertex best = -1;
        int best_sat = -1;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (color_[v] != -1)
                continue;
            int sat = 0;
            for (int c = 0; c < k_; ++c)
                sat += conflict(v, c) > 0;
            if (sat > best_sat || (sat == best_sat && g_.degree(v) > g_.degree(best))) {
                best = v;
                best_sat = sat;
            }
        }
        return best;
    }

    bool extend(int colored, int used)
    {
        if (colored == g_.order())
            return true;
        Vertex v = pick();
        const int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (conflict(v, c) > 0)
                continue;
            color_[v] = c;
            for (Vertex w : g_.neighbors(v))
                ++conflict(w, c);
            if (extend(colored + 1, std::max(used, c + 1)))
                return true;
            for (Vertex w : g_.neighbors(v))
                --conflict(w, c);
            color_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<int> conflicts_;
};

} // namespace

IndependentSetResult brute_force_alpha(const Graph& g, std::span<const Rational> weights, int limit)
{
    check_limit(g, limit, "independent-set");
    mpz_class scale;
    auto integral = integer_weights(g.order(), weights, scale);
    IndependentSetSearch search(g, std::move(integral));
    search.run();
    Rational value(mpz_class(static_cast<long>(search.best_value())), scale);
    value.canonicalize();
    return { value, search.best_set() };
}

std::optional<Coloring> brute_force_chi(const Graph& g, int k, int limit)
{
    check_limit(g, limit, "coloring");
    if (k < 0)
        throw InputError("color count must be non-negative");
    if (g.order() == 0)
        return Coloring { {}, 0 };
    if (k == 0)
        return std::nullopt;
    ColoringSearch search(g, k);
    if (!search.run())
        return std::nullopt;
    Coloring result { search.colors(), 0 };
    result.k = *std::max_element(result.color.begin(), result.color.end()) + 1;
    return result;
}

Coloring brute_force_chi_exact(const Graph& g, int limit)
{
    check_limit(g, limit, "coloring");
    for (int k = 0;; ++k)
        if (auto coloring = brute_force_chi(g, k, limit))
            return *coloring;
}

CliqueCover brute_force_gamma(const Graph& g, int limit)
{
    check_limit(g, limit, "clique-cover");
    auto coloring = brute_force_chi_exact(complement(g), limit);
    CliqueCover cover;
    cover.cliques.resize(static_cast<std::size_t>(coloring.k));
    for (Vertex v = 0; v < g.order(); ++v)
        cover.cliques[coloring.color[v]].push_back(v);
    std::sort(cover.cliques.begin(), cover.cliques.end());
    return cover;
}

int brute_force_omega(const Graph& g, int limit)
{
    auto result = brute_force_alpha(complement(g), {}, limit);
    return static_cast<int>(result.set.size());
}

} // namespace mptkit
