#include "otkit/covers.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "otkit/errors.hpp"

namespace otk {

namespace {

int popcount(std::uint64_t x) { return std::popcount(x); }

std::vector<std::uint64_t> support_masks(const RelationSet& r) {
    std::vector<std::uint64_t> masks;
    masks.reserve(r.size());
    for (const Relation& rel : r.members()) masks.push_back(rel.support_mask());
    return masks;
}

bool is_cover_mask(std::uint64_t gamma,
                   const std::vector<std::uint64_t>& supports) {
    return std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) {
        return popcount(gamma & s) == 1;
    });
}

std::uint64_t kept_mask_of(std::uint64_t gamma,
                           const std::vector<std::uint64_t>& supports) {
    std::uint64_t kept = 0;
    for (std::size_t i = 0; i < supports.size(); ++i)
        if ((gamma & supports[i]) == 0) kept |= std::uint64_t{1} << i;
    return kept;
}

// Span dimensions of member subsets, memoized by member mask.
class SpanDimCache {
public:
    explicit SpanDimCache(const RelationSet& r) : r_(r) {}

    std::size_t dim(std::uint64_t member_mask) {
        auto [it, inserted] = cache_.emplace(member_mask, 0);
        if (inserted) {
            std::vector<QVector> rows;
            for (std::size_t i = 0; i < r_.size(); ++i)
                if (member_mask >> i & 1) rows.push_back(r_.member(i).dense());
            it->second = SubspaceBasis::from_vectors(r_.n(), rows).dim();
        }
        return it->second;
    }

private:
    const RelationSet& r_;
    std::map<std::uint64_t, std::size_t> cache_;
};

// Exact minimum-size set multicover: choose elements of `allowed` so that
// every required support receives at least two. Branches on the elements of
// a single deficient support, which keeps the tree narrow.
class Multicover {
public:
    Multicover(const std::vector<std::uint64_t>& required, std::uint64_t allowed)
        : required_(required) {
        for (std::uint64_t s : required_) universe_ |= s & allowed;
    }

    // Minimum size, or nothing when infeasible or not below `cap`.
    std::optional<std::size_t> min_size(std::size_t cap) {
        for (std::uint64_t s : required_)
            if (popcount(s & universe_) < 2) return std::nullopt;
        allowed_ = universe_;
        best_ = cap;
        descend(0);
        if (best_ >= cap) return std::nullopt;
        return best_;
    }

    // Lexicographically least solution of exactly the given size: scan the
    // elements in order; keep one exactly when some size-bounded solution
    // contains the kept prefix and avoids the declined elements.
    IndexSet lex_least(std::size_t size) {
        IndexSet fixed;
        std::uint64_t fixed_mask = 0, declined = 0;
        for (std::size_t e = 0; e < 64 && fixed.size() < size; ++e) {
            if (!(universe_ >> e & 1)) continue;
            const std::uint64_t bit = std::uint64_t{1} << e;
            if (feasible(fixed_mask | bit, declined, size)) {
                fixed_mask |= bit;
                fixed.push_back(e);
            } else {
                declined |= bit;
            }
        }
        assert(fixed.size() == size);
        return fixed;
    }

private:
    static int deficit(std::uint64_t chosen, std::uint64_t support) {
        return std::max(0, 2 - popcount(chosen & support));
    }

    bool feasible(std::uint64_t chosen, std::uint64_t declined, std::size_t cap) {
        allowed_ = universe_ & ~declined;
        best_ = cap + 1;
        descend(chosen);
        return best_ <= cap;
    }

    // Branches on the candidates of the most deficient support; prunes with
    // a coverage-per-element bound.
    void descend(std::uint64_t chosen) {
        const std::size_t used = static_cast<std::size_t>(popcount(chosen));
        if (used >= best_) return;
        int total_deficit = 0;
        std::uint64_t worst = 0;
        int worst_deficit = 0;
        for (std::uint64_t s : required_) {
            const int d = deficit(chosen, s);
            total_deficit += d;
            if (d > worst_deficit) {
                worst_deficit = d;
                worst = s;
            }
        }
        if (total_deficit == 0) {
            best_ = used;
            return;
        }
        int max_gain = 1;
        for (std::uint64_t e = allowed_ & ~chosen; e;) {
            const std::uint64_t bit = e & (~e + 1);
            e ^= bit;
            int gain = 0;
            for (std::uint64_t s : required_)
                if ((s & bit) && deficit(chosen, s) > 0) ++gain;
            max_gain = std::max(max_gain, gain);
        }
        const std::size_t lower =
            (static_cast<std::size_t>(total_deficit) + max_gain - 1) /
            static_cast<std::size_t>(max_gain);
        if (used + lower >= best_) return;
        for (std::uint64_t e = worst & allowed_ & ~chosen; e;) {
            const std::uint64_t bit = e & (~e + 1);
            e ^= bit;
            descend(chosen | bit);
        }
    }

    std::vector<std::uint64_t> required_;
    std::uint64_t universe_ = 0;
    std::uint64_t allowed_ = 0;
    std::size_t best_ = 0;
};

}  // namespace

std::uint64_t index_mask(const IndexSet& s) {
    std::uint64_t m = 0;
    for (std::size_t i : s) m |= std::uint64_t{1} << i;
    return m;
}

IndexSet mask_indices(std::uint64_t mask) {
    IndexSet s;
    for (std::size_t i = 0; i < 64; ++i)
        if (mask >> i & 1) s.push_back(i);
    return s;
}

bool is_cover(const IndexSet& gamma, const RelationSet& r) {
    for (std::size_t i : gamma)
        if (i >= r.n()) throw InvalidParameterError("cover index out of range");
    return is_cover_mask(index_mask(gamma), support_masks(r));
}

SplitResult split(const RelationSet& r, const IndexSet& gamma) {
    if (!is_cover(gamma, r))
        throw NotACoverError("index set meets some support in exactly one index");
    const std::uint64_t gm = index_mask(gamma);
    std::vector<std::size_t> zero, plus;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if ((gm & r.member(i).support_mask()) == 0)
            zero.push_back(i);
        else
            plus.push_back(i);
    }
    return SplitResult{r.subset(zero), r.subset(plus)};
}

CodimResult codim_J(const RelationSet& r) {
    return r.n() <= 16 ? codim_J_exhaustive(r) : codim_J_killset(r);
}

CodimResult codim_J_exhaustive(const RelationSet& r) {
    if (r.n() > 24)
        throw BudgetExceededError("exhaustive cover scan infeasible for n > 24");
    const auto supports = support_masks(r);
    SpanDimCache dims(r);
    std::optional<CodimResult> best;
    for (std::uint64_t gamma = 0; gamma < (std::uint64_t{1} << r.n()); ++gamma) {
        if (!is_cover_mask(gamma, supports)) continue;
        const std::size_t value =
            popcount(gamma) + dims.dim(kept_mask_of(gamma, supports));
        if (best && value > best->codim) continue;
        IndexSet witness = mask_indices(gamma);
        if (!best || value < best->codim ||
            (value == best->codim && witness < best->witness))
            best = CodimResult{value, std::move(witness)};
    }
    return *best;  // gamma = 0 is always a cover
}

CodimResult codim_J_killset(const RelationSet& r) {
    const std::size_t m = r.size();
    if (m > 26)
        throw BudgetExceededError("kill-set scan infeasible for more than 26 members");
    const auto supports = support_masks(r);
    const std::uint64_t all =
        r.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r.n()) - 1;
    SpanDimCache dims(r);
    std::optional<CodimResult> best;
    for (std::uint64_t kill = 0; kill < (std::uint64_t{1} << m); ++kill) {
        std::uint64_t kept_union = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (!(kill >> i & 1)) kept_union |= supports[i];
        const std::uint64_t allowed = all & ~kept_union;
        std::vector<std::uint64_t> required;
        bool feasible = true;
        for (std::size_t i = 0; i < m && feasible; ++i) {
            if (!(kill >> i & 1)) continue;
            if (popcount(supports[i] & allowed) < 2) feasible = false;
            required.push_back(supports[i] & allowed);
        }
        if (!feasible) continue;
        const std::size_t span_dim = dims.dim(~kill);
        if (best && span_dim > best->codim) continue;  // multicover only adds
        Multicover mc(required, allowed);
        const std::size_t cap = best ? best->codim - span_dim + 1 : 65;
        const auto mc_min = mc.min_size(cap);
        if (!mc_min) continue;
        const std::size_t value = *mc_min + span_dim;
        if (best && value == best->codim) {
            IndexSet witness = mc.lex_least(*mc_min);
            if (witness < best->witness)
                best = CodimResult{value, std::move(witness)};
        } else {
            best = CodimResult{value, mc.lex_least(*mc_min)};
        }
    }
    return *best;
}

bool contains_iota(const IndexSet& gamma, const RelationSet& r,
                   const Relation& relation) {
    SplitResult parts = split(r, gamma);  // validates the cover
    if (popcount(index_mask(gamma) & relation.support_mask()) >= 2) return true;
    return parts.r0.span().contains(relation.dense());
}

namespace {

// Circuits of the span of a member subset, memoized.
class SubsetCircuitCache {
public:
    explicit SubsetCircuitCache(const RelationSet& r) : r_(r) {}

    const std::vector<Relation>& circuits_of(std::uint64_t member_mask) {
        auto it = cache_.find(member_mask);
        if (it == cache_.end())
            it = cache_.emplace(member_mask,
                                circuits_of_span(r_.subset_mask(member_mask)))
                     .first;
        return it->second;
    }

private:
    const RelationSet& r_;
    std::map<std::uint64_t, std::vector<Relation>> cache_;
};

}  // namespace

std::vector<PrimeCandidate> minimal_primes(const RelationSet& r,
                                           std::optional<std::size_t> budget) {
    const auto supports = support_masks(r);
    std::uint64_t universe = 0;
    for (std::uint64_t s : supports) universe |= s;
    const auto universe_indices = mask_indices(universe);
    const std::size_t u = universe_indices.size();
    if (r.n() > 16 && !budget)
        throw BudgetExceededError(
            "cover enumeration beyond n = 16 requires an explicit budget");
    const std::uint64_t subset_cap =
        budget ? *budget : (std::uint64_t{1} << 16);
    if (u >= 63 || (std::uint64_t{1} << u) > subset_cap)
        throw BudgetExceededError("cover enumeration exceeds the subset budget");

    // Tight covers only: every element of gamma lies in a support met exactly
    // twice. Dropping a non-tight element keeps the kept set and shrinks the
    // ideal, so non-tight covers are never minimal and never needed as
    // comparison points.
    std::vector<std::uint64_t> tight;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << u); ++sub) {
        std::uint64_t gamma = 0;
        for (std::size_t i = 0; i < u; ++i)
            if (sub >> i & 1) gamma |= std::uint64_t{1} << universe_indices[i];
        if (!is_cover_mask(gamma, supports)) continue;
        std::uint64_t critical = 0;
        for (std::uint64_t s : supports)
            if (popcount(gamma & s) == 2) critical |= gamma & s;
        if (critical == gamma) tight.push_back(gamma);
    }
    std::sort(tight.begin(), tight.end(), [](std::uint64_t a, std::uint64_t b) {
        return mask_indices(a) < mask_indices(b);
    });

    SubsetCircuitCache circuit_cache(r);
    SpanDimCache dims(r);
    std::map<std::uint64_t, SubspaceBasis> span_cache;
    const auto kept_span = [&](std::uint64_t gamma) -> const SubspaceBasis& {
        const std::uint64_t kept = kept_mask_of(gamma, supports);
        auto it = span_cache.find(kept);
        if (it == span_cache.end())
            it = span_cache.emplace(kept, r.subset_mask(kept).span()).first;
        return it->second;
    };

    // Q_{gamma'} <= Q_gamma iff gamma' <= gamma and every circuit generator
    // of I(R_0(gamma')) lies in Q_gamma.
    const auto contained = [&](std::uint64_t small, std::uint64_t big) {
        const std::uint64_t kept_small = kept_mask_of(small, supports);
        for (const Relation& rel : circuit_cache.circuits_of(kept_small)) {
            if (popcount(big & rel.support_mask()) >= 2) continue;
            if (!kept_span(big).contains(rel.dense())) return false;
        }
        return true;
    };

    std::vector<PrimeCandidate> out;
    for (std::uint64_t gamma : tight) {
        bool minimal = true;
        for (std::uint64_t other : tight) {
            if (other == gamma || (other & gamma) != other) continue;
            if (contained(other, gamma)) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        const std::uint64_t kept = kept_mask_of(gamma, supports);
        PrimeCandidate candidate{mask_indices(gamma), r.subset_mask(kept),
                                 circuit_cache.circuits_of(kept), 0};
        candidate.codim = candidate.gamma.size() + candidate.r0.span_dim();
        out.push_back(std::move(candidate));
    }
    return out;  // tight list was produced in gamma order
}

bool is_induced(const Relation& relation, const RelationSet& r,
                std::size_t max_states) {
    const std::size_t m = r.size();
    if (m >= 63 || (std::uint64_t{1} << m) > max_states)
        throw BudgetExceededError("induced-relation search state space too large");
    const auto supports = support_masks(r);
    const std::size_t states = std::size_t{1} << m;
    std::vector<std::uint64_t> unions(states, 0);
    std::vector<char> reachable(states, 0);
    reachable[0] = 1;
    for (std::size_t mask = 1; mask < states; ++mask) {
        const std::size_t low = std::countr_zero(mask);
        unions[mask] = unions[mask & (mask - 1)] | supports[low];
        for (std::size_t t = 0; t < m && !reachable[mask]; ++t) {
            if (!(mask >> t & 1)) continue;
            const std::size_t prev = mask ^ (std::size_t{1} << t);
            if (!reachable[prev]) continue;
            if (prev == 0 || popcount(supports[t] & unions[prev]) <= 1)
                reachable[mask] = 1;
        }
    }

    // Membership in the span of any reachable subset; larger subsets span
    // more, so only subset-maximal reachable states need a linear solve.
    std::vector<std::size_t> order;
    for (std::size_t mask = 1; mask < states; ++mask)
        if (reachable[mask]) order.push_back(mask);
    std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
        return popcount(a) > popcount(b);
    });
    std::vector<std::size_t> tested;
    for (std::size_t mask : order) {
        if (std::any_of(tested.begin(), tested.end(), [&](std::size_t big) {
                return (mask & big) == mask;
            }))
            continue;
        tested.push_back(mask);
        if (r.subset_mask(mask).span().contains(relation.dense())) return true;
    }
    return false;
}

IntersectionGraph intersection_graph(const RelationSet& r) {
    IntersectionGraph g;
    g.vertex_count = r.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            const std::uint64_t common =
                r.member(i).support_mask() & r.member(j).support_mask();
            if (common == 0) continue;
            if (popcount(common) > 1) throw OverlapTooLargeError(i, j);
            g.edges.push_back(IntersectionGraph::Edge{
                i, j, static_cast<std::size_t>(std::countr_zero(common))});
        }
    }
    return g;
}

bool is_quasi_acyclic(const IntersectionGraph& g) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(
        g.vertex_count);
    for (const auto& e : g.edges) {
        adjacency[e.a].emplace_back(e.b, e.label);
        adjacency[e.b].emplace_back(e.a, e.label);
    }
    std::vector<char> on_path(g.vertex_count, 0);

    // Searches simple paths from `start` (the least vertex of the candidate
    // cycle) with pairwise distinct labels; closing back to start with a new
    // label is a proper cycle.
    const auto dfs = [&](auto&& self, std::size_t start, std::size_t current,
                         std::size_t depth, std::uint64_t labels) -> bool {
        for (const auto& [next, label] : adjacency[current]) {
            if (labels >> label & 1) continue;
            if (next == start && depth >= 3) return true;
            if (next <= start || on_path[next]) continue;
            on_path[next] = 1;
            const bool found =
                self(self, start, next, depth + 1, labels | std::uint64_t{1} << label);
            on_path[next] = 0;
            if (found) return true;
        }
        return false;
    };

    for (std::size_t start = 0; start < g.vertex_count; ++start) {
        on_path[start] = 1;
        if (dfs(dfs, start, start, 1, 0)) return false;
        on_path[start] = 0;
    }
    return true;
}

bool is_simple(const RelationSet& r, std::size_t max_states) {
    const std::size_t m = r.size();
    if (m == 0) return true;
    if (m >= 63 || (std::uint64_t{1} << m) > max_states)
        throw BudgetExceededError("simpleness search state space too large");
    const auto supports = support_masks(r);
    const std::size_t states = std::size_t{1} << m;
    std::vector<std::uint64_t> unions(states, 0);
    std::vector<char> reachable(states, 0);
    reachable[0] = 1;
    for (std::size_t mask = 1; mask < states; ++mask) {
        const std::size_t low = std::countr_zero(mask);
        unions[mask] = unions[mask & (mask - 1)] | supports[low];
        for (std::size_t t = 0; t < m && !reachable[mask]; ++t) {
            if (!(mask >> t & 1)) continue;
            const std::size_t prev = mask ^ (std::size_t{1} << t);
            if (!reachable[prev]) continue;
            if (prev == 0 || popcount(supports[t] & unions[prev]) <= 1)
                reachable[mask] = 1;
        }
    }
    return reachable[states - 1];
}

std::optional<PrimeCertificate> prime_certificate(const RelationSet& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (popcount(r.member(i).support_mask() &
                         r.member(j).support_mask()) > 1)
                return std::nullopt;
    if (!is_quasi_acyclic(intersection_graph(r))) return std::nullopt;
    assert(r.span_dim() == r.size());
    return PrimeCertificate{r.size(), true, true, true};
}

}  // namespace otk
