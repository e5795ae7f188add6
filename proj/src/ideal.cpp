#include "otkit/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "otkit/errors.hpp"

namespace otk {

SparsePolynomial relation_polynomial(const Relation& r) {
    SparsePolynomial f(r.n());
    for (const auto& [idx, c] : r.terms())
        f.add_term(Monomial::squarefree(r.n(), {idx}), c);
    return f;
}

SparsePolynomial iota_of_relation(const Relation& r) {
    return iota(relation_polynomial(r));
}

Monomial full_variable_product(std::size_t n) {
    return Monomial(std::vector<unsigned>(n, 1));
}

std::vector<SparsePolynomial> universal_gb(const Arrangement& a) {
    std::vector<SparsePolynomial> gens;
    for (const Relation& r : circuits(a)) gens.push_back(iota_of_relation(r));
    return gens;
}

bool MembershipCertificate::verify(const std::vector<SparsePolynomial>& gens) const {
    SparsePolynomial sum(target.n());
    for (const auto& [idx, cofactor] : cofactors) {
        if (idx >= gens.size()) return false;
        sum += cofactor * gens[idx];
    }
    return sum == target;
}

unsigned MembershipCertificate::max_cofactor_degree() const {
    unsigned d = 0;
    for (const auto& [idx, cofactor] : cofactors)
        if (!cofactor.is_zero()) d = std::max(d, cofactor.degree());
    return d;
}

DivisionResult divide(const SparsePolynomial& f,
                      const std::vector<SparsePolynomial>& gens,
                      const TermOrder& ord) {
    const std::size_t n = f.n();
    std::vector<const Monomial*> lead;
    lead.reserve(gens.size());
    for (const auto& g : gens) {
        assert(g.n() == n);
        lead.push_back(g.is_zero() ? nullptr : &g.leading_monomial(ord));
    }

    SparsePolynomial p = f, remainder(n);
    MembershipCertificate cert(n);
    while (!p.is_zero()) {
        const Monomial lt = p.leading_monomial(ord);
        const Rational lc = p.coefficient(lt);
        bool reduced = false;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            if (!lead[gi] || !lead[gi]->divides(lt)) continue;
            const Monomial quotient = lt.divide_exact(*lead[gi]);
            const Rational factor = lc / gens[gi].coefficient(*lead[gi]);
            p -= gens[gi].times_term(quotient, factor);
            auto [it, unused] = cert.cofactors.emplace(gi, SparsePolynomial(n));
            it->second.add_term(quotient, factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(lt, lc);
            p.add_term(lt, -lc);
        }
    }
    std::erase_if(cert.cofactors,
                  [](const auto& kv) { return kv.second.is_zero(); });
    cert.target = f - remainder;
    return DivisionResult{std::move(remainder), std::move(cert)};
}

SparsePolynomial normal_form(const SparsePolynomial& f,
                             const std::vector<SparsePolynomial>& gens,
                             const TermOrder& ord) {
    return divide(f, gens, ord).remainder;
}

namespace {

// Sparse vector over the degree slice, indexed by monomials, plus the
// combination over original Macaulay columns that produced it.
struct SliceVector {
    std::map<Monomial, Rational> entries;
    std::map<std::size_t, Rational> combination;
};

class SliceSolver {
public:
    SliceSolver(std::size_t work_budget) : budget_(work_budget) {}

    void charge(std::size_t units) {
        if (units >= budget_)
            throw BudgetExceededError("membership search exceeded its work budget");
        budget_ -= units;
    }

    // Reduces v against the basis in place.
    void reduce(SliceVector& v) {
        bool progress = true;
        while (progress && !v.entries.empty()) {
            progress = false;
            for (const auto& [m, c] : v.entries) {
                auto hit = pivots_.find(m);
                if (hit == pivots_.end()) continue;
                const SliceVector& b = rows_[hit->second];
                const Rational factor = c;  // pivot entries are normalized to 1
                charge(b.entries.size() + b.combination.size());
                axpy(v, b, -factor);
                progress = true;
                break;
            }
        }
    }

    // Returns false if the column was dependent on the current basis.
    bool insert(SliceVector v) {
        reduce(v);
        if (v.entries.empty()) return false;
        const Monomial pivot = v.entries.begin()->first;
        const Rational inv = Rational(1) / v.entries.begin()->second;
        for (auto& [m, c] : v.entries) c *= inv;
        for (auto& [j, c] : v.combination) c *= inv;
        pivots_.emplace(pivot, rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

private:
    static void axpy(SliceVector& v, const SliceVector& b, const Rational& factor) {
        for (const auto& [m, c] : b.entries) {
            auto [it, inserted] = v.entries.emplace(m, c * factor);
            if (!inserted) {
                it->second += c * factor;
                if (sgn(it->second) == 0) v.entries.erase(it);
            }
        }
        for (const auto& [j, c] : b.combination) {
            auto [it, inserted] = v.combination.emplace(j, c * factor);
            if (!inserted) {
                it->second += c * factor;
                if (sgn(it->second) == 0) v.combination.erase(it);
            }
        }
    }

    std::map<Monomial, std::size_t> pivots_;
    std::vector<SliceVector> rows_;
    std::size_t budget_;
};

// All degree-d divisors of cap, in deterministic order.
void enumerate_divisors(const Monomial& cap, unsigned degree,
                        std::vector<Monomial>& out, std::size_t limit) {
    std::vector<unsigned> exps(cap.n(), 0);
    const auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> bool {
        if (var == cap.n()) {
            if (remaining == 0) {
                out.push_back(Monomial(exps));
                if (out.size() > limit) return false;
            }
            return true;
        }
        const unsigned top = std::min<unsigned>(cap.exp(var), remaining);
        for (unsigned e = 0; e <= top; ++e) {
            exps[var] = e;
            if (!self(self, var + 1, remaining - e)) return false;
        }
        exps[var] = 0;
        return true;
    };
    if (!rec(rec, 0, degree))
        throw BudgetExceededError("membership search column set too large");
}

struct MacaulayColumn {
    std::size_t gen;
    Monomial multiplier;
};

}  // namespace

std::optional<MembershipCertificate> bounded_membership(
    const SparsePolynomial& f, const std::vector<SparsePolynomial>& gens,
    unsigned degree_bound, std::size_t work_budget) {
    const std::size_t n = f.n();
    if (!f.is_homogeneous())
        throw InvalidParameterError("membership target must be homogeneous or zero");
    for (const auto& g : gens) {
        assert(g.n() == n);
        if (!g.is_homogeneous())
            throw InvalidParameterError("membership generators must be homogeneous");
    }
    if (f.is_zero()) return MembershipCertificate(n);

    const unsigned target_degree = f.degree();
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        const unsigned dg = gens[i].degree();
        if (dg <= target_degree && target_degree - dg <= degree_bound)
            usable.push_back(i);
    }
    if (usable.empty()) return std::nullopt;

    // Restricting all monomials to the divisors of a cap keeps the search
    // tiny whenever a certificate with bounded supports exists; only the
    // unrestricted slice can certify absence.
    std::vector<std::optional<Monomial>> phases;
    const Monomial lambda = lambda_of(f);
    const Monomial ones = full_variable_product(n);
    phases.emplace_back(lambda);
    phases.emplace_back(Monomial::lcm(lambda, ones));
    phases.emplace_back(lambda.times(ones));
    phases.emplace_back(std::nullopt);  // complete slice

    constexpr std::size_t kColumnLimit = 400'000;
    for (const auto& cap : phases) {
        std::vector<MacaulayColumn> columns;
        bool overflow = false;
        try {
            for (std::size_t gi : usable) {
                const unsigned mdeg = target_degree - gens[gi].degree();
                std::vector<Monomial> multipliers;
                if (cap) {
                    const Monomial g_lambda = lambda_of(gens[gi]);
                    if (!g_lambda.divides(*cap)) continue;
                    enumerate_divisors(cap->divide_exact(g_lambda), mdeg,
                                       multipliers, kColumnLimit);
                } else {
                    enumerate_divisors(Monomial(std::vector<unsigned>(n, mdeg)),
                                       mdeg, multipliers, kColumnLimit);
                }
                for (auto& m : multipliers)
                    columns.push_back(MacaulayColumn{gi, std::move(m)});
                if (columns.size() > kColumnLimit)
                    throw BudgetExceededError("membership search column set too large");
            }
        } catch (const BudgetExceededError&) {
            if (!cap) throw;  // cannot certify absence
            overflow = true;
        }
        if (overflow) continue;

        if (cap && !lambda.divides(*cap)) continue;  // f itself must fit the box

        SliceSolver solver(work_budget);
        SliceVector residual;
        for (const auto& [m, c] : f.terms()) residual.entries.emplace(m, c);

        bool found = false;
        for (std::size_t ci = 0; ci < columns.size() && !found; ++ci) {
            SliceVector col;
            for (const auto& [m, c] : gens[columns[ci].gen].terms())
                col.entries.emplace(m.times(columns[ci].multiplier), c);
            col.combination.emplace(ci, 1);
            if (!solver.insert(std::move(col))) continue;
            solver.reduce(residual);
            found = residual.entries.empty();
        }
        solver.reduce(residual);
        if (residual.entries.empty()) {
            MembershipCertificate cert(n);
            cert.target = f;
            for (const auto& [ci, c] : residual.combination) {
                auto [it, unused] =
                    cert.cofactors.emplace(columns[ci].gen, SparsePolynomial(n));
                it->second.add_term(columns[ci].multiplier, -c);
            }
            std::erase_if(cert.cofactors,
                          [](const auto& kv) { return kv.second.is_zero(); });
            if (!cert.verify(gens))
                throw Error("internal: membership certificate failed re-expansion");
            return cert;
        }
        // Not found: only the complete slice settles absence.
        if (!cap) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace otk
