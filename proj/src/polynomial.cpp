#include "homoggb/polynomial.hpp"

#include <algorithm>
#include <map>

namespace homoggb {

Polynomial Polynomial::zero(RingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::make(RingPtr ring, std::vector<Term> terms) {
    for (auto& t : terms) {
        validate_monomial(*ring, t.mono);
        if (!(t.coeff.field() == ring->field)) throw error("coefficient field mismatch");
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_compare(*ring, a.mono, b.mono) == Cmp::GT;
    });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff = merged.back().coeff + t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    Polynomial p;
    p.ring_ = std::move(ring);
    p.terms_ = std::move(merged);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    if (c.is_zero()) return zero(std::move(ring));
    Monomial one = identity_monomial(*ring);
    return make(std::move(ring), {Term{c, std::move(one)}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
    return make(std::move(ring), {Term{std::move(c), std::move(m)}});
}

const Term& Polynomial::leading_term() const {
    if (is_zero()) throw error("zero polynomial has no leading term");
    return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().mono; }
const Scalar& Polynomial::leading_coeff() const { return leading_term().coeff; }

long Polynomial::degree() const {
    if (is_zero()) throw error("zero polynomial has no degree");
    long d = mono_degree(*ring_, terms_.front().mono);
    for (const auto& t : terms_) d = std::max(d, mono_degree(*ring_, t.mono));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (is_zero()) return true;
    long d = mono_degree(*ring_, terms_.front().mono);
    for (const auto& t : terms_)
        if (mono_degree(*ring_, t.mono) != d) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.size() == 1 && is_identity(*ring_, terms_.front().mono);
}

Polynomial Polynomial::monic() const {
    const Scalar& lc = leading_coeff();
    if (lc.is_one()) return *this;
    return scalar_mul(lc.inverse(), *this);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_->same_ring(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

void check_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!f.ring()->same_ring(*g.ring())) throw error("polynomial ring mismatch");
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
    check_same_ring(f, g);
    const auto& ring = *f.ring();
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        Cmp c = mono_compare(ring, f.terms()[i].mono, g.terms()[j].mono);
        if (c == Cmp::GT) {
            out.push_back(f.terms()[i++]);
        } else if (c == Cmp::LT) {
            out.push_back(g.terms()[j++]);
        } else {
            Scalar s = f.terms()[i].coeff + g.terms()[j].coeff;
            if (!s.is_zero()) out.push_back(Term{std::move(s), f.terms()[i].mono});
            ++i, ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f.terms()[i]);
    for (; j < g.size(); ++j) out.push_back(g.terms()[j]);
    return Polynomial::make(f.ring(), std::move(out));
}

Polynomial neg(const Polynomial& f) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(Term{-t.coeff, t.mono});
    return Polynomial::make(f.ring(), std::move(out));
}

Polynomial sub(const Polynomial& f, const Polynomial& g) { return add(f, neg(g)); }

Polynomial mul(const Polynomial& f, const Polynomial& g) {
    check_same_ring(f, g);
    const auto& ring = *f.ring();
    std::vector<Term> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            out.push_back(Term{a.coeff * b.coeff, mono_mul(ring, a.mono, b.mono)});
    return Polynomial::make(f.ring(), std::move(out));
}

Polynomial scalar_mul(const Scalar& c, const Polynomial& f) {
    if (c.is_zero()) return Polynomial::zero(f.ring());
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(Term{c * t.coeff, t.mono});
    return Polynomial::make(f.ring(), std::move(out));
}

Polynomial term_mul(const Scalar& c, const Monomial& m, const Polynomial& f) {
    if (c.is_zero()) return Polynomial::zero(f.ring());
    const auto& ring = *f.ring();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(Term{c * t.coeff, mono_mul(ring, m, t.mono)});
    return Polynomial::make(f.ring(), std::move(out));
}

Polynomial sandwich_mul(const Scalar& c, const Monomial& u, const Polynomial& f,
                        const Monomial& v) {
    if (f.ring()->is_commutative()) throw error("sandwich_mul needs a free ring");
    if (c.is_zero()) return Polynomial::zero(f.ring());
    const auto& ring = *f.ring();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms())
        out.push_back(Term{c * t.coeff, mono_mul(ring, mono_mul(ring, u, t.mono), v)});
    return Polynomial::make(f.ring(), std::move(out));
}

Polynomial lh(const Polynomial& f) {
    if (f.is_zero()) throw error("leading homogeneous part of zero");
    long d = f.degree();
    std::vector<Term> out;
    for (const auto& t : f.terms())
        if (mono_degree(*f.ring(), t.mono) == d) out.push_back(t);
    return Polynomial::make(f.ring(), std::move(out));
}

std::vector<std::pair<long, Polynomial>> homogeneous_components(const Polynomial& f) {
    std::map<long, std::vector<Term>> buckets;
    for (const auto& t : f.terms()) buckets[mono_degree(*f.ring(), t.mono)].push_back(t);
    std::vector<std::pair<long, Polynomial>> out;
    for (auto it = buckets.rbegin(); it != buckets.rend(); ++it)
        out.emplace_back(it->first, Polynomial::make(f.ring(), std::move(it->second)));
    return out;
}

int poly_total_compare(const Polynomial& f, const Polynomial& g) {
    check_same_ring(f, g);
    const auto& ring = *f.ring();
    std::size_t n = std::min(f.size(), g.size());
    for (std::size_t i = 0; i < n; ++i) {
        Cmp c = mono_compare(ring, f.terms()[i].mono, g.terms()[i].mono);
        if (c != Cmp::EQ) return static_cast<int>(c);
        int s = f.terms()[i].coeff.cmp(g.terms()[i].coeff);
        if (s != 0) return s;
    }
    if (f.size() != g.size()) return f.size() > g.size() ? 1 : -1;
    return 0;
}

std::vector<Polynomial> canonical_set(std::vector<Polynomial> polys) {
    std::sort(polys.begin(), polys.end(),
              [](const Polynomial& a, const Polynomial& b) { return poly_total_compare(a, b) > 0; });
    polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
    return polys;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Scalar a = t.coeff.abs();
        bool negative = t.coeff.is_negative();
        if (i == 0) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        if (is_identity(*ring_, t.mono)) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono_str(*ring_, t.mono);
        } else {
            out += a.str() + "*" + mono_str(*ring_, t.mono);
        }
    }
    return out;
}

std::string poly_list_str(const std::vector<Polynomial>& polys, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) out += sep;
        out += polys[i].str();
    }
    return out;
}

}  // namespace homoggb
