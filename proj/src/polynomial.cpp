#include "otkit/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "otkit/errors.hpp"

namespace otk {

Monomial Monomial::squarefree(std::size_t n, const std::vector<std::size_t>& vars) {
    std::vector<unsigned> e(n, 0);
    for (std::size_t v : vars) {
        assert(v < n);
        e[v] = 1;
    }
    return Monomial(std::move(e));
}

unsigned Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    assert(n() == m.n());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    assert(n() == m.n());
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += m.exps_[i];
    return out;
}

Monomial Monomial::divide_exact(const Monomial& m) const {
    assert(m.divides(*this));
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= m.exps_[i];
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.n() == b.n());
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i)
        out.exps_[i] = std::max(out.exps_[i], b.exps_[i]);
    return out;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    assert(a.n() == b.n());
    const std::size_t n = a.n();
    const auto at = [&](const Monomial& m, std::size_t k) {
        return perm.empty() ? m.exp(k) : m.exp(perm[k]);
    };
    if (kind == Kind::grevlex) {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        // a > b when the rightmost differing exponent is smaller in a.
        for (std::size_t k = n; k-- > 0;) {
            const unsigned ea = at(a, k), eb = at(b, k);
            if (ea != eb) return ea > eb;
        }
        return false;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const unsigned ea = at(a, k), eb = at(b, k);
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::string TermOrder::describe() const {
    std::string s = kind == Kind::grevlex ? "grevlex" : "lex";
    if (!perm.empty()) {
        s += ":";
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(perm[i] + 1);
        }
    }
    return s;
}

SparsePolynomial SparsePolynomial::constant(std::size_t n, const Rational& c) {
    SparsePolynomial f(n);
    f.add_term(Monomial(n), c);
    return f;
}

SparsePolynomial SparsePolynomial::term(std::size_t n, const Monomial& m,
                                        const Rational& c) {
    SparsePolynomial f(n);
    f.add_term(m, c);
    return f;
}

SparsePolynomial SparsePolynomial::variable(std::size_t n, std::size_t i) {
    return term(n, Monomial::squarefree(n, {i}), 1);
}

unsigned SparsePolynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.degree() == d; });
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    assert(m.n() == n_);
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& f) {
    assert(n_ == f.n_);
    for (const auto& [m, c] : f.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& f) {
    assert(n_ == f.n_);
    for (const auto& [m, c] : f.terms_) add_term(m, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& f) const {
    SparsePolynomial out = *this;
    out += f;
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& f) const {
    SparsePolynomial out = *this;
    out -= f;
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& f) const {
    assert(n_ == f.n_);
    SparsePolynomial out(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : f.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
    SparsePolynomial out(n_);
    if (sgn(c) == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

SparsePolynomial SparsePolynomial::times_term(const Monomial& m,
                                              const Rational& c) const {
    SparsePolynomial out(n_);
    if (sgn(c) == 0) return out;
    for (const auto& [mm, coeff] : terms_)
        out.terms_.emplace(mm.times(m), coeff * c);
    return out;
}

const Monomial& SparsePolynomial::leading_monomial(const TermOrder& ord) const {
    assert(!terms_.empty());
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (ord.less(*best, m)) best = &m;
    return *best;
}

const Rational& SparsePolynomial::coefficient(const Monomial& m) const {
    static const Rational zero = 0;
    auto it = terms_.find(m);
    return it == terms_.end() ? zero : it->second;
}

SparsePolynomial SparsePolynomial::substitute_zero(
    const std::vector<std::size_t>& vars) const {
    SparsePolynomial out(n_);
    for (const auto& [m, c] : terms_) {
        const bool vanishes = std::any_of(vars.begin(), vars.end(),
                                          [&](std::size_t v) { return m.exp(v) > 0; });
        if (!vanishes) out.terms_.emplace(m, c);
    }
    return out;
}

std::string SparsePolynomial::to_string(const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const Monomial*> order;
    order.reserve(terms_.size());
    for (const auto& [m, c] : terms_) order.push_back(&m);
    std::sort(order.begin(), order.end(),
              [&](const Monomial* a, const Monomial* b) { return ord.less(*a, *b); });
    std::ostringstream out;
    bool first = true;
    for (const Monomial* m : order) {
        Rational c = terms_.at(*m);
        if (first) {
            if (sgn(c) < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < n_; ++i) {
            for (unsigned e = 0; e < m->exp(i); ++e) {
                if (!vars.empty()) vars += "*";
                vars += "x" + std::to_string(i + 1);
            }
        }
        if (vars.empty()) {
            out << otk::to_string(c);
        } else if (c == 1) {
            out << vars;
        } else {
            out << otk::to_string(c) << "*" << vars;
        }
    }
    return out.str();
}

Monomial lambda_of(const SparsePolynomial& f) {
    Monomial lcm(f.n());
    for (const auto& [m, c] : f.terms()) lcm = Monomial::lcm(lcm, m);
    return lcm;
}

SparsePolynomial iota(const SparsePolynomial& f) {
    const Monomial lambda = lambda_of(f);
    SparsePolynomial out(f.n());
    for (const auto& [m, c] : f.terms()) out.add_term(lambda.divide_exact(m), c);
    return out;
}

}  // namespace otk
