#ifndef OTKIT_IDEAL_HPP
#define OTKIT_IDEAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "otkit/arrangement.hpp"
#include "otkit/polynomial.hpp"

namespace otk {

// The relation as a linear polynomial sum a_i x_i.
SparsePolynomial relation_polynomial(const Relation& r);

// iota(r) = sum a_i x_{supp(r)-i}, homogeneous of degree length(r)-1.
SparsePolynomial iota_of_relation(const Relation& r);

// x_1 ... x_n
Monomial full_variable_product(std::size_t n);

// { iota(r_C) : C circuit }, a universal Groebner basis of the Orlik-Terao
// ideal, in circuit order.
std::vector<SparsePolynomial> universal_gb(const Arrangement& a);

// Witness that target = sum cofactors[i] * gens[i]; checked by exact
// re-expansion, independent of how the cofactors were obtained.
struct MembershipCertificate {
    SparsePolynomial target;
    std::map<std::size_t, SparsePolynomial> cofactors;

    explicit MembershipCertificate(std::size_t n) : target(n) {}

    bool verify(const std::vector<SparsePolynomial>& gens) const;
    unsigned max_cofactor_degree() const;
};

struct DivisionResult {
    SparsePolynomial remainder;
    MembershipCertificate certificate;  // for f - remainder
};

// Multivariate division. No remainder term is divisible by any leading term
// of G; among several usable reducers the lowest index wins.
DivisionResult divide(const SparsePolynomial& f,
                      const std::vector<SparsePolynomial>& gens,
                      const TermOrder& ord);

SparsePolynomial normal_form(const SparsePolynomial& f,
                             const std::vector<SparsePolynomial>& gens,
                             const TermOrder& ord);

// Decides whether homogeneous f lies in (gens) with cofactor degrees at most
// degree_bound, by exact linear algebra on the degree slice. A returned
// certificate is always verified; an empty optional means no certificate
// with the given bound exists. Throws BudgetExceededError when the complete
// slice is too large to settle the question within work_budget.
std::optional<MembershipCertificate> bounded_membership(
    const SparsePolynomial& f, const std::vector<SparsePolynomial>& gens,
    unsigned degree_bound, std::size_t work_budget = 50'000'000);

}  // namespace otk

#endif
