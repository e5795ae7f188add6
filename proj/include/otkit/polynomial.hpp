#ifndef OTKIT_POLYNOMIAL_HPP
#define OTKIT_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "otkit/rational.hpp"

namespace otk {

// Exponent vector over a fixed variable count. The all-zero monomial is 1.
class Monomial {
public:
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<unsigned> exponents)
        : exps_(std::move(exponents)) {}

    // x_S for a set of 0-based variable indices.
    static Monomial squarefree(std::size_t n, const std::vector<std::size_t>& vars);

    std::size_t n() const { return exps_.size(); }
    unsigned exp(std::size_t i) const { return exps_[i]; }
    unsigned degree() const;
    bool is_one() const;

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial divide_exact(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    const std::vector<unsigned>& exponents() const { return exps_; }

    // Structural order used as the map key order; not a term order.
    bool operator<(const Monomial& other) const { return exps_ < other.exps_; }
    bool operator==(const Monomial& other) const = default;

private:
    std::vector<unsigned> exps_;
};

// Term order: graded reverse lexicographic or lexicographic, composed with a
// variable priority permutation (perm[0] is the most significant variable,
// 0-based). An empty permutation means x1 > x2 > ... > xn.
struct TermOrder {
    enum class Kind { grevlex, lex };

    Kind kind = Kind::grevlex;
    std::vector<std::size_t> perm;

    static TermOrder grevlex() { return {}; }
    static TermOrder lex() { return {Kind::lex, {}}; }
    static TermOrder with_permutation(Kind kind, std::vector<std::size_t> perm) {
        return {kind, std::move(perm)};
    }

    bool less(const Monomial& a, const Monomial& b) const;
    std::string describe() const;
};

// Multivariate polynomial over the rationals with sparse term storage. No
// zero coefficients are kept; zero has an empty term map.
class SparsePolynomial {
public:
    explicit SparsePolynomial(std::size_t n) : n_(n) {}

    static SparsePolynomial zero(std::size_t n) { return SparsePolynomial(n); }
    static SparsePolynomial constant(std::size_t n, const Rational& c);
    static SparsePolynomial term(std::size_t n, const Monomial& m, const Rational& c);
    static SparsePolynomial variable(std::size_t n, std::size_t i);

    std::size_t n() const { return n_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    unsigned degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Rational& c);
    SparsePolynomial& operator+=(const SparsePolynomial& f);
    SparsePolynomial& operator-=(const SparsePolynomial& f);
    SparsePolynomial operator+(const SparsePolynomial& f) const;
    SparsePolynomial operator-(const SparsePolynomial& f) const;
    SparsePolynomial operator*(const SparsePolynomial& f) const;
    SparsePolynomial scaled(const Rational& c) const;
    SparsePolynomial times_term(const Monomial& m, const Rational& c) const;

    const Monomial& leading_monomial(const TermOrder& ord) const;
    const Rational& coefficient(const Monomial& m) const;

    // Sets x_i = 0 for every i in vars.
    SparsePolynomial substitute_zero(const std::vector<std::size_t>& vars) const;

    // Terms ascending in the given order, e.g. "x5*x8 + x1*x8 - x1*x5".
    std::string to_string(const TermOrder& ord = TermOrder::grevlex()) const;

    bool operator==(const SparsePolynomial& other) const = default;

private:
    std::size_t n_ = 0;
    std::map<Monomial, Rational> terms_;
};

// Least common multiple of the monomials of f; 1 for the zero polynomial.
Monomial lambda_of(const SparsePolynomial& f);

// The reciprocal transform: f(1/x) = iota(f)(x) / lambda(f)(x).
SparsePolynomial iota(const SparsePolynomial& f);

}  // namespace otk

#endif
