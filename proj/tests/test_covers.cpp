#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "otkit/errors.hpp"
#include "otkit/formality.hpp"

using namespace otk;
using fixtures::idx;

namespace {

RelationSet edge_relations_of(const Graph& g) {
    const Arrangement a = vertex_edge_arrangement(g);
    return RelationSet::validated(a, circuits(a, 3));
}

Relation sum_of(const RelationSet& r, const std::vector<std::size_t>& members) {
    QVector v(r.n());
    for (std::size_t m : members) {
        const QVector d = r.member(m).dense();
        for (std::size_t j = 0; j < r.n(); ++j) v[j] += d[j];
    }
    return Relation::from_dense(v);
}

}  // namespace

TEST_SUITE("covers") {

TEST_CASE("empty set is always a cover") {
    CHECK(is_cover({}, fixtures::wg_triangles()));
    CHECK(is_cover({}, RelationSet::empty(5)));
}

TEST_CASE("the spoke set covers the wheel triangles") {
    const RelationSet triangles = fixtures::wg_triangles();
    CHECK(is_cover(idx({5, 6, 7, 8}), triangles));
    CHECK_FALSE(is_cover(idx({5}), triangles));
    CHECK_FALSE(is_cover(idx({1, 2}), triangles));  // meets r1 once
}

TEST_CASE("split partitions by support disjointness") {
    const RelationSet triangles = fixtures::wg_triangles();

    const SplitResult all = split(triangles, {});
    CHECK(all.r0.size() == 4);
    CHECK(all.rplus.size() == 0);

    const SplitResult spokes = split(triangles, idx({5, 6, 7, 8}));
    CHECK(spokes.r0.size() == 0);
    CHECK(spokes.rplus.size() == 4);

    CHECK_THROWS_AS(split(triangles, idx({5})), NotACoverError);

    // the partition predicate, recomputed from the definition
    const IndexSet gamma = idx({1, 2, 5});
    REQUIRE(is_cover(gamma, triangles));
    const SplitResult parts = split(triangles, gamma);
    const std::uint64_t gm = index_mask(gamma);
    for (const Relation& r : parts.r0.members())
        CHECK((gm & r.support_mask()) == 0);
    for (const Relation& r : parts.rplus.members())
        CHECK((gm & r.support_mask()) != 0);
    CHECK(parts.r0.size() + parts.rplus.size() == triangles.size());
}

TEST_CASE("codim of the empty set is zero") {
    const CodimResult r = codim_J(RelationSet::empty(6));
    CHECK(r.codim == 0);
    CHECK(r.witness.empty());
}

TEST_CASE("codim of the Yuzvinsky-variant quadratic relations is five") {
    const Arrangement a = fixtures::yz();
    const RelationSet three = RelationSet::validated(a, circuits(a, 3));
    REQUIRE(three.size() == 6);
    CHECK(codim_J(three).codim == 5);
}

TEST_CASE("codim of the K5 vertex-edge relations is five") {
    const RelationSet r = edge_relations_of(complete_graph(5));
    REQUIRE(r.size() == 10);
    CHECK(codim_J(r).codim == 5);
    CHECK(codim_J(r).witness == idx({1, 2, 3, 4, 5}));
}

TEST_CASE("kill-set search matches exhaustive search on the fixtures") {
    std::vector<RelationSet> sets;
    sets.push_back(fixtures::wg_triangles());
    {
        const Arrangement a = fixtures::yz();
        sets.push_back(RelationSet::validated(a, circuits(a, 3)));
        sets.push_back(RelationSet::validated(a, circuits(a)).subset({0, 5, 11, 40}));
    }
    sets.push_back(edge_relations_of(complete_graph(4)));
    sets.push_back(edge_relations_of(complete_graph(5)));
    sets.push_back(edge_relations_of(cycle_graph(4)));
    sets.push_back(edge_relations_of(path_graph(4)));
    {
        const Arrangement g2 = graphic_arrangement(glued_wheel(2));
        sets.push_back(RelationSet::validated(g2, circuits(g2, 3)));
    }
    for (const RelationSet& r : sets) {
        REQUIRE(r.n() <= 16);
        const CodimResult a = codim_J_exhaustive(r);
        const CodimResult b = codim_J_killset(r);
        CHECK(a.codim == b.codim);
        CHECK(a.witness == b.witness);
        CHECK(a.codim <= r.span_dim());
    }
}

TEST_CASE("kill-set route matches exhaustive search on random subsets") {
    oracle::Rng rng(424242);
    std::vector<RelationSet> pools;
    {
        const Arrangement wg = fixtures::wg();
        pools.push_back(RelationSet::validated(wg, circuits(wg)));
        const Arrangement yz = fixtures::yz();
        pools.push_back(RelationSet::validated(yz, circuits(yz)));
        pools.push_back(edge_relations_of(complete_graph(5)));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const RelationSet& pool = pools[static_cast<std::size_t>(
            rng.integer(0, static_cast<int>(pools.size()) - 1))];
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < pool.size() && pick.size() < 10; ++i)
            if (rng.integer(0, 7) == 0) pick.push_back(i);
        const RelationSet r = pool.subset(pick);
        const CodimResult a = codim_J_exhaustive(r);
        const CodimResult b = codim_J_killset(r);
        CHECK(a.codim == b.codim);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("iota membership in the candidate primes") {
    const RelationSet triangles = fixtures::wg_triangles();
    const IndexSet gamma0 = idx({5, 6, 7, 8});

    const auto span_circuits = circuits_of_span(triangles);
    const auto rim = std::find_if(span_circuits.begin(), span_circuits.end(),
                                  [](const Relation& r) {
                                      return r.support() ==
                                             std::vector<std::size_t>{0, 1, 2, 3};
                                  });
    REQUIRE(rim != span_circuits.end());

    CHECK_FALSE(contains_iota(gamma0, triangles, *rim));
    CHECK(contains_iota(gamma0, triangles, triangles.member(0)));  // meets twice
    CHECK(contains_iota({}, triangles, triangles.member(2)));      // in span R0
    // member of R0 for a nonempty cover
    const IndexSet partial = idx({1, 2, 5});
    REQUIRE(is_cover(partial, triangles));
    CHECK(contains_iota(partial, triangles, triangles.member(2)));
    CHECK(contains_iota(partial, triangles, triangles.member(3)));
    CHECK_THROWS_AS(contains_iota(idx({5}), triangles, *rim), NotACoverError);
}

TEST_CASE("wheel triangles have exactly two minimal primes") {
    const auto primes = minimal_primes(fixtures::wg_triangles());
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].gamma.empty());
    CHECK(primes[0].codim == 4);
    CHECK(primes[0].r0.size() == 4);
    CHECK(primes[1].gamma == idx({5, 6, 7, 8}));
    CHECK(primes[1].codim == 4);
    CHECK(primes[1].r0.size() == 0);
    CHECK(primes[1].r0_circuits.empty());
}

TEST_CASE("a single relation has only the variable-free minimal prime") {
    const Arrangement a = fixtures::tri();
    const RelationSet r = RelationSet::validated(a, circuits(a));
    const auto primes = minimal_primes(r);
    REQUIRE(primes.size() == 1);
    CHECK(primes[0].gamma.empty());
    CHECK(primes[0].codim == 1);
}

TEST_CASE("quasi-acyclic sets have a unique minimal prime") {
    const RelationSet tree = edge_relations_of(path_graph(4));
    REQUIRE(prime_certificate(tree).has_value());
    const auto primes = minimal_primes(tree);
    REQUIRE(primes.size() == 1);
    CHECK(primes[0].gamma.empty());
    CHECK(primes[0].codim == tree.size());
    CHECK(codim_J(tree).codim == tree.size());
}

TEST_CASE("minimal primes dominate the codimension and pass is_cover") {
    std::vector<RelationSet> sets;
    sets.push_back(fixtures::wg_triangles());
    sets.push_back(edge_relations_of(complete_graph(4)));
    {
        const Arrangement a = fixtures::yz();
        sets.push_back(RelationSet::validated(a, circuits(a, 3)));
    }
    for (const RelationSet& r : sets) {
        const auto primes = minimal_primes(r);
        const CodimResult cd = codim_J(r);
        CHECK(!primes.empty());
        for (const PrimeCandidate& p : primes) {
            CHECK(is_cover(p.gamma, r));
            CHECK(cd.codim <= p.codim);
            CHECK(p.codim == p.gamma.size() + p.r0.span_dim());
        }
    }
}

TEST_CASE("minimal primes are pairwise incomparable") {
    std::vector<RelationSet> sets;
    sets.push_back(fixtures::wg_triangles());
    {
        const Arrangement a = fixtures::yz();
        sets.push_back(RelationSet::validated(a, circuits(a, 3)));
    }
    sets.push_back(edge_relations_of(complete_graph(4)));
    for (const RelationSet& r : sets) {
        const auto primes = minimal_primes(r);
        for (const PrimeCandidate& p : primes) {
            for (const PrimeCandidate& q : primes) {
                if (p.gamma == q.gamma) continue;
                const std::uint64_t pm = index_mask(p.gamma);
                const std::uint64_t qm = index_mask(q.gamma);
                if ((pm & qm) != pm) continue;  // containment needs gamma subset
                // p.gamma subset of q.gamma: some circuit generator of
                // I(R0(p.gamma)) must stay outside Q_{q.gamma}
                bool escape = false;
                for (const Relation& rel : p.r0_circuits)
                    if (!contains_iota(q.gamma, r, rel)) escape = true;
                CHECK(escape);
            }
        }
    }
}

TEST_CASE("symbolic containment of the subideal in each minimal prime") {
    // substitute the gamma variables to zero in every generator, then reduce
    // by the universal basis of I(R0(gamma)): must vanish
    std::vector<RelationSet> sets;
    sets.push_back(fixtures::wg_triangles());
    {
        const Arrangement a = fixtures::yz();
        sets.push_back(RelationSet::validated(a, circuits(a, 3)));
    }
    sets.push_back(edge_relations_of(complete_graph(4)));
    for (const RelationSet& r : sets) {
        for (const PrimeCandidate& p : minimal_primes(r)) {
            const std::vector<SparsePolynomial> gb =
                p.r0.size() == 0 ? std::vector<SparsePolynomial>{}
                                 : universal_gb(subspace_arrangement(p.r0));
            for (const Relation& member : r.members()) {
                const SparsePolynomial cut =
                    iota_of_relation(member).substitute_zero(p.gamma);
                if (cut.is_zero()) continue;
                CHECK(normal_form(cut, gb, TermOrder::grevlex()).is_zero());
            }
        }
    }
}

TEST_CASE("members and their admissible sums are induced") {
    const RelationSet triangles = fixtures::wg_triangles();
    CHECK(is_induced(triangles.member(0), triangles));
    // supp(r1) and supp(r2) share only index 5
    CHECK(is_induced(sum_of(triangles, {0, 1}), triangles));
    CHECK(is_induced(sum_of(triangles, {0, 1, 2}), triangles));
}

TEST_CASE("the rim cycle is not induced from the triangles") {
    const RelationSet triangles = fixtures::wg_triangles();
    const Relation rim = sum_of(triangles, {0, 1, 2, 3});
    CHECK(rim.support() == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK_FALSE(is_induced(rim, triangles));
}

TEST_CASE("intersection graph of the wheel triangles is a labeled 4-cycle") {
    const RelationSet triangles = fixtures::wg_triangles();
    const IntersectionGraph g = intersection_graph(triangles);
    CHECK(g.vertex_count == 4);
    REQUIRE(g.edges.size() == 4);
    std::set<std::size_t> labels;
    for (const auto& e : g.edges) labels.insert(e.label + 1);
    CHECK(labels == std::set<std::size_t>{5, 6, 7, 8});
    CHECK_FALSE(is_quasi_acyclic(g));
    CHECK_FALSE(is_simple(triangles));
}

TEST_CASE("intersection graph rejects large overlaps") {
    const Arrangement a = fixtures::yz();
    const RelationSet all = RelationSet::validated(a, circuits(a));
    bool found = false;
    for (std::size_t i = 0; i < all.size() && !found; ++i)
        for (std::size_t j = i + 1; j < all.size() && !found; ++j)
            if (std::popcount(all.member(i).support_mask() &
                              all.member(j).support_mask()) > 1) {
                CHECK_THROWS_AS(intersection_graph(all.subset({i, j})),
                                OverlapTooLargeError);
                found = true;
            }
    CHECK(found);
}

TEST_CASE("cycles with equal labels are not proper") {
    // star graph: the three edge relations pairwise share only the center
    // vertex index, so the intersection graph is a triangle whose labels all
    // coincide. No proper cycle exists.
    const Graph star = Graph::make(4, {{1, 2}, {1, 3}, {1, 4}});
    const RelationSet r = edge_relations_of(star);
    const IntersectionGraph g = intersection_graph(r);
    CHECK(g.edges.size() == 3);
    for (const auto& e : g.edges) CHECK(e.label == 0);
    CHECK(is_quasi_acyclic(g));
    CHECK(is_simple(r));
    CHECK(prime_certificate(r).has_value());
}

TEST_CASE("large overlaps make full enumeration impossible") {
    // any pair sharing two support indices blocks every enumeration order
    const Arrangement a = fixtures::yz();
    const RelationSet all = RelationSet::validated(a, circuits(a));
    bool found = false;
    for (std::size_t i = 0; i < all.size() && !found; ++i)
        for (std::size_t j = i + 1; j < all.size() && !found; ++j)
            if (std::popcount(all.member(i).support_mask() &
                              all.member(j).support_mask()) > 1) {
                CHECK_FALSE(is_simple(all.subset({i, j})));
                found = true;
            }
    CHECK(found);
}

TEST_CASE("tree relation sets are quasi-acyclic and simple") {
    for (const Graph& g : {path_graph(4), path_graph(5)}) {
        const RelationSet r = edge_relations_of(g);
        CHECK(is_quasi_acyclic(intersection_graph(r)));
        CHECK(is_simple(r));
    }
}

TEST_CASE("the K3 vertex-edge relations form a proper 3-cycle") {
    const RelationSet r = edge_relations_of(complete_graph(3));
    const IntersectionGraph g = intersection_graph(r);
    CHECK(g.vertex_count == 3);
    CHECK(g.edges.size() == 3);
    std::set<std::size_t> labels;
    for (const auto& e : g.edges) labels.insert(e.label + 1);
    CHECK(labels == std::set<std::size_t>{1, 2, 3});
    CHECK_FALSE(is_quasi_acyclic(g));
    CHECK_FALSE(is_simple(r));
}

TEST_CASE("simpleness matches quasi-acyclicity on random admissible subsets") {
    oracle::Rng rng(60214);
    std::vector<RelationSet> pools;
    pools.push_back(edge_relations_of(complete_graph(4)));
    pools.push_back(edge_relations_of(complete_graph(5)));
    pools.push_back(edge_relations_of(cycle_graph(5)));
    pools.push_back(edge_relations_of(path_graph(5)));
    pools.push_back(fixtures::wg_triangles());
    {
        const Arrangement g2 = graphic_arrangement(glued_wheel(2));
        pools.push_back(RelationSet::validated(g2, circuits(g2, 3)));
    }

    int accepted = 0, attempts = 0;
    while (accepted < 200 && attempts < 200000) {
        ++attempts;
        const RelationSet& pool = pools[static_cast<std::size_t>(
            rng.integer(0, static_cast<int>(pools.size()) - 1))];
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (rng.integer(0, 1)) pick.push_back(i);
        if (pick.empty()) continue;
        const RelationSet subset = pool.subset(pick);
        bool admissible = true;
        for (std::size_t i = 0; i < subset.size() && admissible; ++i)
            for (std::size_t j = i + 1; j < subset.size() && admissible; ++j)
                if (std::popcount(subset.member(i).support_mask() &
                                  subset.member(j).support_mask()) > 1)
                    admissible = false;
        if (!admissible) continue;
        ++accepted;
        CHECK(is_simple(subset) == is_quasi_acyclic(intersection_graph(subset)));
    }
    CHECK(accepted == 200);
}

TEST_CASE("prime certificates") {
    const RelationSet tree = edge_relations_of(path_graph(4));
    const auto cert = prime_certificate(tree);
    REQUIRE(cert.has_value());
    CHECK(cert->codim == 3);
    CHECK(cert->prime);
    CHECK(cert->complete_intersection);

    CHECK_FALSE(prime_certificate(fixtures::wg_triangles()).has_value());

    const Arrangement a = fixtures::tri();
    const RelationSet single = RelationSet::validated(a, circuits(a));
    const auto single_cert = prime_certificate(single);
    REQUIRE(single_cert.has_value());
    CHECK(single_cert->codim == 1);
}

TEST_CASE("a certificate forces a unique minimal prime of full codimension") {
    for (const Graph& g : {path_graph(3), path_graph(4), path_graph(5)}) {
        const RelationSet r = edge_relations_of(g);
        REQUIRE(prime_certificate(r).has_value());
        const auto primes = minimal_primes(r);
        REQUIRE(primes.size() == 1);
        CHECK(primes[0].gamma.empty());
        CHECK(codim_J(r).codim == r.size());
    }
}

TEST_CASE("minimal primes beyond n = 16 need a budget") {
    const Arrangement g3 = graphic_arrangement(glued_wheel(3));
    const RelationSet triangles = RelationSet::validated(g3, circuits(g3, 3));
    CHECK_THROWS_AS(minimal_primes(triangles), BudgetExceededError);
}

}  // TEST_SUITE
