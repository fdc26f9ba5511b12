#include "homoggb/homog_noncentral.hpp"

#include <algorithm>

#include "homoggb/gb_nc.hpp"

namespace homoggb {

NoncentralHomogenizer::NoncentralHomogenizer(RingPtr base, const std::string& homog_name)
    : base_(std::move(base)) {
    if (base_->is_commutative()) throw error("non-central homogenization needs a free ring");
    if (base_->is_extended()) throw error("base ring already has a homogenizing variable");
    ext_ = base_->with_homog_var(homog_name);

    const auto t = static_cast<std::uint32_t>(*ext_->homog_index);
    Scalar one = Scalar::one(ext_->field);
    for (std::uint32_t x = 0; x < base_->nvars(); ++x) {
        Monomial xt{{x, t}}, tx{{t, x}};
        commutators_.push_back(
            Polynomial::make(ext_, {Term{one, std::move(xt)}, Term{-one, std::move(tx)}}));
    }
}

Monomial NoncentralHomogenizer::extend_word(const Monomial& w, std::uint32_t t_prefix) const {
    Monomial e;
    e.data.assign(t_prefix, static_cast<std::uint32_t>(*ext_->homog_index));
    e.data.insert(e.data.end(), w.data.begin(), w.data.end());
    return e;
}

Monomial NoncentralHomogenizer::restrict_word(const Monomial& w) const {
    Monomial b;
    b.data.reserve(w.data.size());
    for (std::uint32_t v : w.data) {
        if (v == *ext_->homog_index) throw error("word involves the homogenizing letter");
        b.data.push_back(v);
    }
    return b;
}

Polynomial NoncentralHomogenizer::homogenize(const Polynomial& f) const {
    if (!f.ring()->same_ring(*base_)) throw error("polynomial ring mismatch");
    if (f.is_zero()) throw error("cannot homogenize the zero polynomial");
    long p = f.degree();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        long d = mono_degree(*base_, t.mono);
        out.push_back(Term{t.coeff, extend_word(t.mono, static_cast<std::uint32_t>(p - d))});
    }
    return Polynomial::make(ext_, std::move(out));
}

Polynomial NoncentralHomogenizer::dehomogenize(const Polynomial& F) const {
    if (!F.ring()->same_ring(*ext_)) throw error("polynomial ring mismatch");
    std::vector<Term> out;
    out.reserve(F.size());
    for (const auto& t : F.terms()) {
        Monomial m;
        m.data.reserve(t.mono.data.size());
        for (std::uint32_t v : t.mono.data)
            if (v != *ext_->homog_index) m.data.push_back(v);
        out.push_back(Term{t.coeff, std::move(m)});
    }
    return Polynomial::make(base_, std::move(out));
}

std::vector<Polynomial> NoncentralHomogenizer::homogenize_set(
    const std::vector<Polynomial>& S) const {
    std::vector<Polynomial> out;
    out.reserve(S.size() + commutators_.size());
    for (const auto& f : S) {
        if (f.is_zero()) throw error("set contains the zero polynomial");
        out.push_back(homogenize(f));
    }
    out.insert(out.end(), commutators_.begin(), commutators_.end());
    return canonical_set(std::move(out));
}

NoncentralHomogenizer::Decomposition NoncentralHomogenizer::decompose_mod_commutators(
    const Polynomial& F) const {
    if (!F.ring()->same_ring(*ext_)) throw error("polynomial ring mismatch");
    if (!F.is_homogeneous()) throw error("decomposition needs a homogeneous element");
    Decomposition d;
    d.normal_part = nc_divide(F, commutators_).remainder;
    d.commutator_part = sub(F, d.normal_part);
    d.t_power = 0;
    if (!d.normal_part.is_zero()) {
        // every word of H is T^r_i w_i; H = T^r (H_~)~ with r the least prefix
        std::uint32_t r = homog_multiplicity(*ext_, d.normal_part.terms().front().mono);
        for (const auto& t : d.normal_part.terms())
            r = std::min(r, homog_multiplicity(*ext_, t.mono));
        d.t_power = r;
    }
    return d;
}

}  // namespace homoggb
