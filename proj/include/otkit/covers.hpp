#ifndef OTKIT_COVERS_HPP
#define OTKIT_COVERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "otkit/arrangement.hpp"

namespace otk {

// Sorted 0-based hyperplane indices.
using IndexSet = std::vector<std::size_t>;

std::uint64_t index_mask(const IndexSet& s);
IndexSet mask_indices(std::uint64_t mask);

// Gamma is a cover when it meets every member support in 0 or >= 2 indices.
bool is_cover(const IndexSet& gamma, const RelationSet& r);

struct SplitResult {
    RelationSet r0;     // members whose support misses gamma
    RelationSet rplus;  // the rest
};
SplitResult split(const RelationSet& r, const IndexSet& gamma);

struct CodimResult {
    std::size_t codim = 0;
    IndexSet witness;  // lexicographically least minimizing cover
};

// min over covers of |Gamma| + dim span(members missed by Gamma); exhaustive
// for n <= 16, kill-set branch and bound beyond.
CodimResult codim_J(const RelationSet& r);
CodimResult codim_J_exhaustive(const RelationSet& r);
CodimResult codim_J_killset(const RelationSet& r);

// Membership of iota(relation) in Q_Gamma = (vars of Gamma) + I(R_0(Gamma)),
// decided combinatorially: |Gamma n supp| >= 2 or relation in span R_0.
bool contains_iota(const IndexSet& gamma, const RelationSet& r,
                   const Relation& relation);

struct PrimeCandidate {
    IndexSet gamma;
    RelationSet r0;
    std::vector<Relation> r0_circuits;  // circuit generators of I(R_0(Gamma))
    std::size_t codim = 0;
};

// Exactly the minimal elements of { Q_Gamma : Gamma cover }, sorted by
// gamma. Exhaustive for n <= 16; beyond that an explicit subset budget is
// required.
std::vector<PrimeCandidate> minimal_primes(
    const RelationSet& r, std::optional<std::size_t> budget = {});

// Whether the relation can be written as a combination r = sum a_i r_i over
// an ordering of members in which every later support meets the union of the
// earlier ones in at most one index.
bool is_induced(const Relation& relation, const RelationSet& r,
                std::size_t max_states = std::size_t{1} << 20);

struct IntersectionGraph {
    struct Edge {
        std::size_t a, b;    // member indices
        std::size_t label;   // the single shared support index
    };
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
};

// Defined only when supports pairwise share at most one index.
IntersectionGraph intersection_graph(const RelationSet& r);

// No cycle with pairwise distinct edge labels.
bool is_quasi_acyclic(const IntersectionGraph& g);

// Existence of a full admissible enumeration of the members.
bool is_simple(const RelationSet& r,
               std::size_t max_states = std::size_t{1} << 20);

struct PrimeCertificate {
    std::size_t codim = 0;  // = |R| = dim span R
    bool prime = true;
    bool equals_span_ideal = true;     // J(R) = I(R)
    bool complete_intersection = true;
};

// Present when pairwise overlaps are <= 1 and the intersection graph is
// quasi-acyclic; then J(R) is prime, equals I(R), and is a complete
// intersection of codimension |R|.
std::optional<PrimeCertificate> prime_certificate(const RelationSet& r);

}  // namespace otk

#endif
