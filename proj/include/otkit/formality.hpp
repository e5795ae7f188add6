#ifndef OTKIT_FORMALITY_HPP
#define OTKIT_FORMALITY_HPP

#include <map>
#include <optional>
#include <vector>

#include "otkit/covers.hpp"
#include "otkit/ideal.hpp"

namespace otk {

struct FormalityReport {
    std::size_t n = 0;
    std::size_t rank = 0;
    std::size_t codim_ideal = 0;       // n - rank
    std::size_t codim_quadratic = 0;   // cover search over 3-circuit relations
    IndexSet quadratic_witness;
    bool two_formal = false;
    std::map<std::size_t, bool> k_generated;  // k = 2 .. rank+1
    std::optional<Rational> ratio_note;       // codim_ideal / codim_quadratic
};

// F(A) spanned by the members of r.
bool is_R_generated(const Arrangement& a, const RelationSet& r);

// F(A) spanned by circuit relations of length at most k+1.
bool is_k_generated(const Arrangement& a, std::size_t k);

// iota images of the circuits of length at most k+1; k = 2 gives the
// quadratic generators.
std::vector<SparsePolynomial> truncated_ot_generators(const Arrangement& a,
                                                      std::size_t k);

FormalityReport formality_report(const Arrangement& a);

// RelationSet of all circuit relations, optionally length-capped.
RelationSet circuit_relations(const Arrangement& a,
                              std::optional<std::size_t> max_length = {});

struct SaturationEntry {
    Relation circuit;                    // element of C(K R)
    MembershipCertificate certificate;   // x_[n] * iota(circuit) in J(R)
};

struct ReductionEntry {
    Relation member;
    bool reduced_to_zero = false;
};

struct SaturationRecord {
    std::vector<SaturationEntry> circuit_certificates;   // direction I <= J : x
    std::vector<ReductionEntry> member_reductions;       // direction J <= I(A)
    bool passed() const;
};

// Certifies both inclusions behind I(R) = J(R) : x_[n]: every circuit of the
// span gets an explicit product certificate with cofactor degrees at most
// degree_bound, and every member's iota image reduces to zero against the
// universal Groebner basis of the parent arrangement.
SaturationRecord verify_spanning_saturation(const Arrangement& a,
                                            const RelationSet& r,
                                            std::size_t degree_bound,
                                            const TermOrder& ord = TermOrder::grevlex());

// Largest cofactor degree the product certificates can need for this set:
// n + max circuit length - min member length.
std::size_t saturation_degree_needed(const RelationSet& r);

}  // namespace otk

#endif
