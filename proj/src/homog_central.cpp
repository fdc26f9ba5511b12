#include "homoggb/homog_central.hpp"

namespace homoggb {

CentralHomogenizer::CentralHomogenizer(RingPtr base, const std::string& homog_name)
    : base_(std::move(base)) {
    if (!base_->is_commutative()) throw error("central homogenization needs a commutative ring");
    if (base_->is_extended()) throw error("base ring already has a homogenizing variable");
    ext_ = base_->with_homog_var(homog_name);
}

Monomial CentralHomogenizer::extend_monomial(const Monomial& m, std::uint32_t t_exp) const {
    Monomial e = m;
    e.data.push_back(t_exp);
    return e;
}

Monomial CentralHomogenizer::restrict_monomial(const Monomial& m) const {
    if (m.data.back() != 0) throw error("monomial involves the homogenizing variable");
    Monomial b = m;
    b.data.pop_back();
    return b;
}

Polynomial CentralHomogenizer::homogenize(const Polynomial& f) const {
    if (!f.ring()->same_ring(*base_)) throw error("polynomial ring mismatch");
    if (f.is_zero()) throw error("cannot homogenize the zero polynomial");
    long p = f.degree();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        long d = mono_degree(*base_, t.mono);
        out.push_back(Term{t.coeff, extend_monomial(t.mono, static_cast<std::uint32_t>(p - d))});
    }
    return Polynomial::make(ext_, std::move(out));
}

Polynomial CentralHomogenizer::dehomogenize(const Polynomial& F) const {
    if (!F.ring()->same_ring(*ext_)) throw error("polynomial ring mismatch");
    std::vector<Term> out;
    out.reserve(F.size());
    for (const auto& t : F.terms()) {
        Monomial m = t.mono;
        m.data.pop_back();  // t := 1
        out.push_back(Term{t.coeff, std::move(m)});
    }
    return Polynomial::make(base_, std::move(out));
}

std::vector<Polynomial> CentralHomogenizer::homogenize_set(
    const std::vector<Polynomial>& S) const {
    std::vector<Polynomial> out;
    out.reserve(S.size());
    for (const auto& f : S) {
        if (f.is_zero()) throw error("set contains the zero polynomial");
        out.push_back(homogenize(f));
    }
    return canonical_set(std::move(out));
}

}  // namespace homoggb
