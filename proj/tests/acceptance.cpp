// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "cli_harness.hpp"

#include "mptkit/certificates.hpp"
#include "mptkit/families.hpp"
#include "mptkit/geometry.hpp"
#include "mptkit/optimization.hpp"
#include "mptkit/oracles.hpp"
#include "mptkit/orders.hpp"
#include "mptkit/representations.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace mptkit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Graph random_graph(int n, double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

template <typename Visit>
void for_each_graph(int n, Visit visit)
{
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(all[i]);
        visit(Graph::from_edges(n, edges));
    }
}

struct WisInstance {
    MptRepresentation rep;
    Graph g;
    std::vector<Rational> weights;
};

// Shared by criteria 1 and 2.
std::vector<WisInstance> wis_corpus()
{
    std::vector<WisInstance> out;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> size(1, 18);
    std::uniform_int_distribution<int> weight(0, 9);
    for (int i = 0; i < 500; ++i) {
        WisInstance inst;
        inst.rep = random_mpt_rep(size(rng), rng());
        inst.g = mpt_adjacency(inst.rep);
        for (int v = 0; v < inst.rep.size(); ++v)
            inst.weights.emplace_back(weight(rng));
        out.push_back(std::move(inst));
    }
    return out;
}

Outcome wis_oracle()
{
    int bad = 0;
    const auto corpus = wis_corpus();
    for (const auto& inst : corpus) {
        const auto dp = max_weight_independent_set(inst.rep, inst.weights);
        const auto oracle = brute_force_alpha(inst.g, inst.weights);
        Rational total = 0;
        for (Vertex v : dp.set)
            total += inst.weights[v];
        if (dp.value != oracle.value || total != dp.value || !is_independent_set(inst.g, dp.set))
            ++bad;
    }
    return { bad == 0, std::to_string(corpus.size()) + " instances, " + std::to_string(bad) + " mismatches" };
}

Outcome clique_cover_bound()
{
    int bad = 0, with_gamma = 0;
    const auto corpus = wis_corpus();
    for (const auto& inst : corpus) {
        const auto cover = clique_cover_2approx(inst.rep);
        const int alpha = static_cast<int>(brute_force_alpha(inst.g).set.size());
        bool ok = is_valid_clique_cover(inst.g, cover) && cover.size() <= 2 * alpha;
        if (inst.g.order() <= kColoringOracleLimit) {
            ++with_gamma;
            ok = ok && cover.size() >= brute_force_gamma(inst.g).size();
        }
        bad += !ok;
    }
    return { bad == 0, std::to_string(corpus.size()) + " instances (" + std::to_string(with_gamma)
            + " with exact gamma), " + std::to_string(bad) + " violations" };
}

bool segments_realize(const Graph& g, const VertexOrder& ord)
{
    return segment_intersection_graph(cyclic_segments_from_order_unchecked(g, ord).segments) == g;
}

bool rep_realizes(const Graph& g, const VertexOrder& ord)
{
    return mpt_adjacency(rep_from_order_unchecked(g, ord)) == g;
}

Outcome characterization_closure()
{
    int graphs = 0, mpt = 0, disagree = 0;
    for_each_graph(6, [&](const Graph& g) {
        ++graphs;
        const auto ord = brute_force_mpt_order(g);
        if (ord) {
            ++mpt;
            disagree += !(rep_realizes(g, *ord) && segments_realize(g, *ord));
            return;
        }
        // No order from the oracle: no permutation may realize g either way.
        VertexOrder perm = identity_order(6);
        do {
            if (rep_realizes(g, perm) || segments_realize(g, perm)) {
                ++disagree;
                break;
            }
        } while (std::next_permutation(perm.sequence.begin(), perm.sequence.end()));
    });
    const bool k222_refuted = !brute_force_mpt_order(families::k222());
    const bool net_accepted = brute_force_mpt_order(families::net()).has_value();
    return { disagree == 0 && k222_refuted && net_accepted,
        std::to_string(graphs) + " graphs, " + std::to_string(mpt) + " MPT, " + std::to_string(disagree)
            + " disagreements, k222 " + (k222_refuted ? "refuted" : "ACCEPTED") + ", net "
            + (net_accepted ? "accepted" : "REFUTED") };
}

Outcome two_interval()
{
    int bad = 0;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> size(1, 50);
    for (int i = 0; i < 1000; ++i) {
        const auto rep = random_mpt_rep(size(rng), rng());
        const Graph g = mpt_adjacency(rep);
        const auto d = two_interval_decomposition(rep);
        const Graph h1 = interval_adjacency(d.h1);
        const Graph h2 = interval_adjacency(d.h2);
        bool ok = true;
        for (Vertex u = 0; u < g.order() && ok; ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (g.adjacent(u, v) != (h1.adjacent(u, v) && h2.adjacent(u, v))) {
                    ok = false;
                    break;
                }
        const auto sigma = order_from_rep(rep);
        ok = ok && !verify_i_order(h1, sigma) && !verify_i_order(h2, reversed(sigma));
        bad += !ok;
    }
    return { bad == 0, "1000 representations, " + std::to_string(bad) + " failures" };
}

Outcome interval_embedding()
{
    int bad = 0;
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<int> size(1, 50);
    for (int i = 0; i < 1000; ++i) {
        const auto iv = random_interval_rep(size(rng), rng());
        const auto sys = interval_to_anchored_lsystem(iv);
        bad += !(lsystem_adjacency(sys) == interval_adjacency(iv) && anchor_of(sys));
    }
    return { bad == 0, "1000 interval representations, " + std::to_string(bad) + " failures" };
}

// First gap midpoint whose cut crosses between 1 and k arcs.
std::optional<Rational> split_cut(const CircularArcRepresentation& arcs, int k)
{
    std::vector<Rational> ends;
    for (const auto& a : arcs.arcs) {
        ends.push_back(a.start);
        ends.push_back(a.end);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const Rational next = i + 1 < ends.size() ? ends[i + 1] : Rational(ends.front() + 1);
        Rational cut = (ends[i] + next) / 2;
        if (cut >= 1)
            cut -= 1;
        int crossing = 0;
        for (const auto& a : arcs.arcs)
            crossing += arc_contains(a, cut);
        if (crossing >= 1 && crossing <= k)
            return cut;
    }
    return std::nullopt;
}

Outcome coloring_reduction()
{
    int instances = 0, bad = 0, colorable = 0;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> size(3, 8);
    for (int trial = 0; instances < 90 && trial < 1000; ++trial) {
        const int k = 3 + trial % 3;
        const auto arcs = random_circular_arcs(size(rng), rng());
        const auto cut = split_cut(arcs, k);
        if (!cut)
            continue;
        ++instances;
        const auto out = coloring_hardness_reduction(arcs, k, cut);
        const Graph g = circular_arc_graph(arcs);
        const bool before = brute_force_chi(g, k, 24).has_value();
        const bool after = brute_force_chi(out.g_prime, k, 24).has_value();
        colorable += before;
        const bool sized = out.kind == ReductionCase::split && out.g_prime.order() == g.order() + out.crossing + k;
        bad += !(before == after && sized && mpt_adjacency(out.rep) == out.g_prime);
    }
    return { instances >= 50 && bad == 0,
        std::to_string(instances) + " instances (" + std::to_string(colorable) + " k-colorable), "
            + std::to_string(bad) + " failures" };
}

Outcome outerplanar_contact()
{
    int bad = 0;
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> size(1, 100);
    for (int i = 0; i < 100; ++i) {
        const Graph g = random_maximal_outerplanar(size(rng), rng());
        const auto sys = contact_lsystem_from_outerplanar(g);
        const auto check = verify_contact(sys.system);
        bool ok = check.ok() && check.equilateral && contact_graph(sys) == g;
        // Corners (c, -c) lie on y = -x by encoding; they must be distinct.
        std::vector<Rational> corners;
        for (const auto& l : sys.system.shapes)
            corners.push_back(l.c);
        std::sort(corners.begin(), corners.end());
        ok = ok && std::adjacent_find(corners.begin(), corners.end()) == corners.end();
        bad += !ok;
    }
    return { bad == 0, "100 graphs, " + std::to_string(bad) + " failures" };
}

Outcome refutation_soundness()
{
    int refuted = 0, unsound = 0;
    auto judge = [&](const Graph& g) {
        if (common_neighborhood_certificates(g).empty())
            return;
        ++refuted;
        unsound += brute_force_mpt_order(g).has_value();
    };
    for (int n = 1; n <= 6; ++n)
        for_each_graph(n, judge);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> size(1, 10);
    std::uniform_real_distribution<double> density(0.3, 0.9);
    for (int i = 0; i < 500; ++i)
        judge(random_graph(size(rng), density(rng), rng));
    const bool k4 = !brute_force_mpt_order(full_subdivision(families::complete(4)), 10).has_value();
    return { unsound == 0 && k4, std::to_string(refuted) + " certified graphs, " + std::to_string(unsound)
            + " with an MPT-order; full subdivision of K4 " + (k4 ? "refuted" : "NOT refuted") };
}

Outcome determinism()
{
    const auto first = cli::run_matrix(MPTKIT_CLI, "acceptance-a");
    const auto second = cli::run_matrix(MPTKIT_CLI, "acceptance-b");
    int differ = 0;
    for (std::size_t i = 0; i < first.results.size(); ++i)
        differ += !(first.results[i] == second.results[i]);
    const bool files = first.files == second.files;
    return { differ == 0 && files,
        std::to_string(first.results.size()) + " invocations, " + std::to_string(differ) + " differing, "
            + std::to_string(first.files.size()) + " files " + (files ? "identical" : "DIFFER") };
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria {
        { "WIS dynamic program equals the exhaustive oracle", wis_oracle },
        { "clique cover is valid, within twice alpha and at least gamma", clique_cover_bound },
        { "order, canonical representation and cyclic segments agree on all 6-vertex graphs",
            characterization_closure },
        { "E = E1 and E2 with I-orders sigma and reversed sigma", two_interval },
        { "anchored L-systems reproduce interval graphs", interval_embedding },
        { "coloring reduction preserves k-colorability with n + l + k vertices", coloring_reduction },
        { "contact L-systems of maximal outerplanar graphs", outerplanar_contact },
        { "common-neighborhood refutations are sound", refutation_soundness },
        { "CLI invocations are byte-reproducible", determinism },
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = { false, std::string("exception: ") + e.what() };
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !outcome.pass;
        std::printf("%s %zu %s: %s (%.1f s)\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
            outcome.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
