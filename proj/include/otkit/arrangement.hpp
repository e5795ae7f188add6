#ifndef OTKIT_ARRANGEMENT_HPP
#define OTKIT_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "otkit/matrix.hpp"

namespace otk {

// Simple graph with 1-based vertices. Edges are stored as ordered pairs; the
// order fixes the sign of the form y_tail - y_head in graphic arrangements,
// so builders can pin down exact relation vectors. As undirected edges they
// must be distinct.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    static Graph make(int vertex_count, std::vector<std::pair<int, int>> edges);
};

Graph wheel_graph();
Graph glued_wheel(int copies);
Graph complete_graph(int vertex_count);
Graph path_graph(int vertex_count);
Graph cycle_graph(int vertex_count);

// Central arrangement: n nonzero, pairwise non-proportional linear forms in
// d variables, stored as the columns of a d x n matrix.
class Arrangement {
public:
    static Arrangement from_columns(std::size_t dim,
                                    const std::vector<QVector>& columns);

    std::size_t dim() const { return forms_.rows(); }
    std::size_t size() const { return forms_.cols(); }
    const RationalMatrix& forms() const { return forms_; }
    QVector column(std::size_t i) const { return forms_.col(i); }
    std::size_t rank() const { return rank_; }

private:
    explicit Arrangement(RationalMatrix forms);

    RationalMatrix forms_;
    std::size_t rank_ = 0;
};

// A nonzero kernel vector of the forms matrix, stored sparsely over 0-based
// hyperplane indices. Canonical scaling: the coefficient at the smallest
// support index is 1. Length is always >= 3 for a valid arrangement.
class Relation {
public:
    Relation(std::size_t n, std::vector<std::pair<std::size_t, Rational>> terms);
    static Relation from_dense(const QVector& coefficients);

    std::size_t n() const { return n_; }
    const std::vector<std::pair<std::size_t, Rational>>& terms() const {
        return terms_;
    }
    std::vector<std::size_t> support() const;
    std::uint64_t support_mask() const { return mask_; }
    std::size_t length() const { return terms_.size(); }
    QVector dense() const;

    bool operator==(const Relation& other) const = default;
    bool operator<(const Relation& other) const;  // by support, then terms

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::size_t, Rational>> terms_;
    std::uint64_t mask_ = 0;
};

// A finite set of relations of one arrangement together with the basis of
// the subspace they span.
class RelationSet {
public:
    static RelationSet validated(const Arrangement& parent,
                                 std::vector<Relation> members);
    static RelationSet empty(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Relation>& members() const { return members_; }
    const Relation& member(std::size_t i) const { return members_[i]; }
    const SubspaceBasis& span() const { return span_; }
    std::size_t span_dim() const { return span_.dim(); }

    RelationSet subset(const std::vector<std::size_t>& member_indices) const;
    RelationSet subset_mask(std::uint64_t mask) const;

private:
    RelationSet(std::size_t n, std::vector<Relation> members);

    std::size_t n_ = 0;
    std::vector<Relation> members_;
    SubspaceBasis span_;
};

SubspaceBasis relation_space(const Arrangement& a);

// All circuits of the column matroid, one canonically scaled relation per
// circuit, sorted lexicographically by support. With max_length only
// supports of at most that size are visited.
std::vector<Relation> circuits(const Arrangement& a,
                               std::optional<std::size_t> max_length = {});

// The arrangement of the coordinate functionals restricted to the common
// kernel of the members; its relation space is exactly the span of r.
Arrangement subspace_arrangement(const RelationSet& r);

// Minimal-support vectors of the span, canonically scaled.
std::vector<Relation> circuits_of_span(const RelationSet& r,
                                       std::optional<std::size_t> max_length = {});

Arrangement graphic_arrangement(const Graph& g);
Arrangement vertex_edge_arrangement(const Graph& g);

Arrangement yuzvinsky_variant();
Arrangement triangle_arrangement();
Arrangement generic4_arrangement();

}  // namespace otk

#endif
