#include "otkit/arrangement.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "otkit/errors.hpp"
#include "otkit/parallel.hpp"

namespace otk {

namespace {

constexpr std::size_t kMaxHyperplanes = 64;  // support masks are 64-bit

// Column scaled so its first nonzero entry is 1; proportional columns agree.
QVector canonical_direction(const QVector& column) {
    QVector out = column;
    for (const Rational& x : out) {
        if (sgn(x) != 0) {
            const Rational inv = Rational(1) / x;
            for (Rational& y : out) y *= inv;
            return out;
        }
    }
    return out;
}

std::uint64_t mask_of(const std::vector<std::size_t>& indices) {
    std::uint64_t m = 0;
    for (std::size_t i : indices) m |= std::uint64_t{1} << i;
    return m;
}

}  // namespace

Graph Graph::make(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 1) throw InvalidParameterError("graph needs at least one vertex");
    std::vector<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > vertex_count || b < 1 || b > vertex_count)
            throw InvalidParameterError("edge endpoint out of range");
        if (a == b) throw InvalidParameterError("loop edges are not allowed");
        const auto key = std::minmax(a, b);
        if (std::find(seen.begin(), seen.end(),
                      std::pair<int, int>(key.first, key.second)) != seen.end())
            throw InvalidParameterError("duplicate edge");
        seen.emplace_back(key.first, key.second);
    }
    return Graph{vertex_count, std::move(edges)};
}

Graph wheel_graph() {
    // Rim cycle 1-2-3-4 with center 5. Edge order and orientation fix the
    // triangle relations x1+x5-x8, x2-x5+x6, x3-x6+x7, x4-x7+x8 and the rim
    // cycle relation x1+x2+x3+x4.
    return Graph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1},
                           {2, 5}, {3, 5}, {4, 5}, {1, 5}});
}

Graph glued_wheel(int copies) {
    if (copies < 1) throw InvalidParameterError("glued_wheel needs at least one copy");
    Graph g = wheel_graph();
    int rim_start = 5;   // center of the previous copy
    int center = 3;      // rim vertex of the previous copy whose spoke is shared
    for (int t = 2; t <= copies; ++t) {
        const int a = 3 * t, b = 3 * t + 1, c = 3 * t + 2;
        // Rim edges labeled before the three new spokes; the fourth spoke
        // (center, rim_start) already exists in the previous copy.
        g.edges.emplace_back(rim_start, a);
        g.edges.emplace_back(a, b);
        g.edges.emplace_back(b, c);
        g.edges.emplace_back(c, rim_start);
        g.edges.emplace_back(a, center);
        g.edges.emplace_back(b, center);
        g.edges.emplace_back(c, center);
        g.vertex_count = c;
        rim_start = center;
        center = b;
    }
    return Graph::make(g.vertex_count, g.edges);
}

Graph complete_graph(int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= vertex_count; ++i)
        for (int j = i + 1; j <= vertex_count; ++j) edges.emplace_back(i, j);
    return Graph::make(vertex_count, std::move(edges));
}

Graph path_graph(int vertex_count) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < vertex_count; ++i) edges.emplace_back(i, i + 1);
    return Graph::make(vertex_count, std::move(edges));
}

Graph cycle_graph(int vertex_count) {
    if (vertex_count < 3) throw InvalidParameterError("cycle needs at least 3 vertices");
    Graph g = path_graph(vertex_count);
    g.edges.emplace_back(vertex_count, 1);
    return Graph::make(g.vertex_count, g.edges);
}

Arrangement::Arrangement(RationalMatrix forms) : forms_(std::move(forms)) {
    rank_ = rank_of(forms_);
}

Arrangement Arrangement::from_columns(std::size_t dim,
                                      const std::vector<QVector>& columns) {
    if (columns.size() > kMaxHyperplanes)
        throw InvalidParameterError("at most 64 hyperplanes are supported");
    RationalMatrix forms(dim, columns.size());
    std::map<QVector, std::size_t> directions;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != dim)
            throw InvalidParameterError("form length does not match dimension");
        if (is_zero_vector(columns[j])) throw ZeroFormError(j + 1);
        const QVector dir = canonical_direction(columns[j]);
        if (auto [it, inserted] = directions.emplace(dir, j); !inserted)
            throw ProportionalFormsError(it->second + 1, j + 1);
        for (std::size_t i = 0; i < dim; ++i) forms.at(i, j) = columns[j][i];
    }
    return Arrangement(std::move(forms));
}

Relation::Relation(std::size_t n,
                   std::vector<std::pair<std::size_t, Rational>> terms)
    : n_(n), terms_(std::move(terms)) {
    if (n_ > kMaxHyperplanes)
        throw InvalidParameterError("at most 64 hyperplanes are supported");
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(terms_, [](const auto& t) { return sgn(t.second) == 0; });
    if (terms_.empty()) throw InvalidParameterError("relation must be nonzero");
    for (std::size_t i = 0; i + 1 < terms_.size(); ++i)
        if (terms_[i].first == terms_[i + 1].first)
            throw InvalidParameterError("duplicate index in relation");
    if (terms_.back().first >= n_)
        throw InvalidParameterError("relation index out of range");
    const Rational inv = Rational(1) / terms_.front().second;
    for (auto& [idx, c] : terms_) {
        c *= inv;
        mask_ |= std::uint64_t{1} << idx;
    }
}

Relation Relation::from_dense(const QVector& coefficients) {
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        if (sgn(coefficients[i]) != 0) terms.emplace_back(i, coefficients[i]);
    return Relation(coefficients.size(), std::move(terms));
}

std::vector<std::size_t> Relation::support() const {
    std::vector<std::size_t> s;
    s.reserve(terms_.size());
    for (const auto& [idx, c] : terms_) s.push_back(idx);
    return s;
}

QVector Relation::dense() const {
    QVector v(n_);
    for (const auto& [idx, c] : terms_) v[idx] = c;
    return v;
}

bool Relation::operator<(const Relation& other) const {
    const auto sa = support(), sb = other.support();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].second != other.terms_[i].second)
            return terms_[i].second < other.terms_[i].second;
    }
    return false;
}

RelationSet::RelationSet(std::size_t n, std::vector<Relation> members)
    : n_(n), members_(std::move(members)) {
    std::vector<QVector> rows;
    rows.reserve(members_.size());
    for (const Relation& r : members_) rows.push_back(r.dense());
    span_ = SubspaceBasis::from_vectors(n_, rows);
}

RelationSet RelationSet::validated(const Arrangement& parent,
                                   std::vector<Relation> members) {
    for (const Relation& r : members) {
        if (r.n() != parent.size())
            throw InvalidParameterError("relation length does not match arrangement");
        if (!is_zero_vector(parent.forms().apply(r.dense())))
            throw InvalidParameterError("relation is not in the relation space");
        assert(r.length() >= 3);
    }
    return RelationSet(parent.size(), std::move(members));
}

RelationSet RelationSet::empty(std::size_t n) { return RelationSet(n, {}); }

RelationSet RelationSet::subset(const std::vector<std::size_t>& member_indices) const {
    std::vector<Relation> picked;
    picked.reserve(member_indices.size());
    for (std::size_t i : member_indices) picked.push_back(members_.at(i));
    return RelationSet(n_, std::move(picked));
}

RelationSet RelationSet::subset_mask(std::uint64_t mask) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (mask >> i & 1) idx.push_back(i);
    return subset(idx);
}

SubspaceBasis relation_space(const Arrangement& a) {
    return kernel_basis(a.forms());
}

std::vector<Relation> circuits(const Arrangement& a,
                               std::optional<std::size_t> max_length) {
    const std::size_t n = a.size();
    if (a.rank() == n) return {};  // independent columns, no dependencies
    std::size_t maxlen = std::min<std::size_t>(a.rank() + 1, n);
    if (max_length) maxlen = std::min(maxlen, *max_length);

    std::vector<Relation> found;
    std::vector<std::uint64_t> found_masks;
    for (std::size_t size = 3; size <= maxlen; ++size) {
        // Candidates at this size: supports not containing a smaller circuit.
        std::vector<std::vector<std::size_t>> candidates;
        std::vector<std::size_t> subset(size);
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            const std::uint64_t m = mask_of(subset);
            bool pruned = false;
            for (std::uint64_t fm : found_masks)
                if ((fm & m) == fm) {
                    pruned = true;
                    break;
                }
            if (!pruned) candidates.push_back(subset);
            // next combination
            std::size_t i = size;
            while (i > 0 && subset[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }

        // A candidate containing no smaller circuit is a circuit exactly when
        // its columns are dependent; the kernel is then one-dimensional.
        std::vector<std::optional<Relation>> results(candidates.size());
        parallel_for(candidates.size(), [&](std::size_t c) {
            const RationalMatrix sub = a.forms().columns_subset(candidates[c]);
            const SubspaceBasis ker = kernel_basis(sub);
            if (ker.dim() == 0) return;
            assert(ker.dim() == 1);
            QVector dense(n);
            const QVector local = ker.vector(0);
            for (std::size_t j = 0; j < candidates[c].size(); ++j)
                dense[candidates[c][j]] = local[j];
            results[c] = Relation::from_dense(dense);
        });
        for (auto& r : results) {
            if (!r) continue;
            found_masks.push_back(r->support_mask());
            found.push_back(std::move(*r));
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

Arrangement subspace_arrangement(const RelationSet& r) {
    const SubspaceBasis zero_locus = kernel_basis(r.span().vectors());
    // The coordinates of x_i restricted to the zero locus, in the basis of
    // the locus, are exactly column i of the basis matrix.
    const RationalMatrix& z = zero_locus.vectors();
    std::vector<QVector> columns;
    columns.reserve(r.n());
    for (std::size_t i = 0; i < r.n(); ++i) columns.push_back(z.col(i));
    return Arrangement::from_columns(zero_locus.dim(), columns);
}

namespace {

// Minimal-support vectors of the span, found by intersecting the span with
// d-1 coordinate hyperplanes: every circuit of a d-dimensional subspace
// spans such an intersection.
std::vector<Relation> span_circuits_by_cuts(const RelationSet& r,
                                            std::optional<std::size_t> max_length) {
    const SubspaceBasis& w = r.span();
    const std::size_t d = w.dim();
    const std::size_t n = r.n();
    std::set<Relation> candidates;
    std::vector<std::size_t> cut(d - 1);
    std::iota(cut.begin(), cut.end(), 0);
    while (true) {
        RationalMatrix constraints(d - 1, d);
        for (std::size_t i = 0; i + 1 < d; ++i)
            for (std::size_t b = 0; b < d; ++b)
                constraints.at(i, b) = w.vectors().at(b, cut[i]);
        const SubspaceBasis combos = kernel_basis(constraints);
        if (combos.dim() == 1) {
            const QVector c = combos.vector(0);
            QVector dense(n);
            for (std::size_t b = 0; b < d; ++b) {
                if (sgn(c[b]) == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    dense[j] += c[b] * w.vectors().at(b, j);
            }
            candidates.insert(Relation::from_dense(dense));
        }
        if (d == 1) break;
        std::size_t i = d - 1;
        while (i > 0 && cut[i - 1] == n - d + i) --i;
        if (i == 0) break;
        ++cut[i - 1];
        for (std::size_t j = i; j + 1 < d; ++j) cut[j] = cut[j - 1] + 1;
    }

    std::vector<Relation> out;
    for (const Relation& c : candidates) {
        const std::uint64_t cm = c.support_mask();
        const bool minimal = std::none_of(
            candidates.begin(), candidates.end(), [&](const Relation& other) {
                const std::uint64_t om = other.support_mask();
                return om != cm && (om & cm) == om;
            });
        if (!minimal) continue;
        if (max_length && c.length() > *max_length) continue;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double subsets_up_to(std::size_t n, std::size_t k) {
    double total = 0, binom = 1;
    for (std::size_t s = 0; s <= std::min(k, n); ++s) {
        total += binom;
        binom = binom * static_cast<double>(n - s) / static_cast<double>(s + 1);
    }
    return total;
}

double binom_of(std::size_t n, std::size_t k) {
    double b = 1;
    for (std::size_t s = 0; s < std::min(k, n); ++s)
        b = b * static_cast<double>(n - s) / static_cast<double>(s + 1);
    return k > n ? 0 : b;
}

}  // namespace

std::vector<Relation> circuits_of_span(const RelationSet& r,
                                       std::optional<std::size_t> max_length) {
    const std::size_t d = r.span_dim();
    if (d == 0) return {};
    const std::size_t n = r.n();
    // Two equivalent routes: support scan over the derived arrangement, or
    // hyperplane cuts through the span. Pick by expected subset count.
    std::size_t scan_cap = n - d + 1;
    if (max_length) scan_cap = std::min(scan_cap, *max_length);
    if (binom_of(n, d - 1) < subsets_up_to(n, scan_cap))
        return span_circuits_by_cuts(r, max_length);
    return circuits(subspace_arrangement(r), max_length);
}

Arrangement graphic_arrangement(const Graph& g) {
    std::vector<QVector> columns;
    columns.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        QVector v(g.vertex_count);
        v[static_cast<std::size_t>(a) - 1] = 1;
        v[static_cast<std::size_t>(b) - 1] = -1;
        columns.push_back(std::move(v));
    }
    return Arrangement::from_columns(g.vertex_count, columns);
}

Arrangement vertex_edge_arrangement(const Graph& g) {
    std::vector<QVector> columns;
    columns.reserve(g.vertex_count + g.edges.size());
    for (int i = 0; i < g.vertex_count; ++i) {
        QVector v(g.vertex_count);
        v[static_cast<std::size_t>(i)] = 1;
        columns.push_back(std::move(v));
    }
    for (const auto& [a, b] : g.edges) {
        QVector v(g.vertex_count);
        v[static_cast<std::size_t>(a) - 1] = 1;
        v[static_cast<std::size_t>(b) - 1] = 1;
        columns.push_back(std::move(v));
    }
    return Arrangement::from_columns(g.vertex_count, columns);
}

Arrangement yuzvinsky_variant() {
    const std::vector<std::vector<int>> cols = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 1, 1},
        {2, 3, 1}, {2, 3, 4}, {1, 0, 1}, {2, 2, 3}};
    std::vector<QVector> columns;
    for (const auto& c : cols) columns.emplace_back(c.begin(), c.end());
    return Arrangement::from_columns(3, columns);
}

Arrangement triangle_arrangement() {
    return Arrangement::from_columns(2, {{1, 0}, {0, 1}, {1, 1}});
}

Arrangement generic4_arrangement() {
    return Arrangement::from_columns(
        3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

}  // namespace otk
