#include "homoggb/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace homoggb {

namespace {

RingPtr make_ring(RingKind kind, std::vector<std::string> names, FieldSpec field,
                  std::vector<long> weights) {
    auto r = std::make_shared<RingDescriptor>();
    r->kind = kind;
    r->vars = std::move(names);
    if (weights.empty()) weights.assign(r->vars.size(), 1);
    r->weights = std::move(weights);
    r->field = field;
    const long n = static_cast<long>(r->vars.size());
    r->prec_rank.resize(r->vars.size());
    for (long i = 0; i < n; ++i) r->prec_rank[i] = n - 1 - i;  // first listed = greatest
    RingDescriptor::validate(*r);
    return r;
}

}  // namespace

void RingDescriptor::validate(const RingDescriptor& r) {
    auto& mut = const_cast<RingDescriptor&>(r);
    mut.lex_order.resize(r.vars.size());
    std::iota(mut.lex_order.begin(), mut.lex_order.end(), std::size_t{0});
    std::sort(mut.lex_order.begin(), mut.lex_order.end(),
              [&](std::size_t a, std::size_t b) { return r.prec_rank[a] > r.prec_rank[b]; });
    if (r.vars.empty()) throw error("ring needs at least one variable");
    if (r.weights.size() != r.vars.size()) throw error("weights length must match variables");
    for (long w : r.weights)
        if (w <= 0) throw error("variable weights must be strictly positive");
    std::set<std::string> seen(r.vars.begin(), r.vars.end());
    if (seen.size() != r.vars.size()) throw error("variable names must be unique");
    if (r.homog_index) {
        if (*r.homog_index >= r.vars.size()) throw error("homogenizing variable index out of range");
        if (r.weights[*r.homog_index] != 1) throw error("homogenizing variable must have weight 1");
    }
}

RingPtr RingDescriptor::commutative(std::vector<std::string> names, FieldSpec field,
                                    std::vector<long> weights) {
    return make_ring(RingKind::Commutative, std::move(names), field, std::move(weights));
}

RingPtr RingDescriptor::free_algebra(std::vector<std::string> names, FieldSpec field,
                                     std::vector<long> weights) {
    return make_ring(RingKind::Free, std::move(names), field, std::move(weights));
}

RingPtr RingDescriptor::with_homog_var(const std::string& name) const {
    if (homog_index) throw error("ring already has a homogenizing variable");
    if (var_index(name)) throw error("homogenizing variable name collides with a ring variable");
    auto r = std::make_shared<RingDescriptor>(*this);
    r->vars.push_back(name);
    r->weights.push_back(1);
    r->homog_index = r->vars.size() - 1;
    r->prec_rank.push_back(-1);  // least in every lex tie-break
    validate(*r);
    return r;
}

RingPtr RingDescriptor::base_ring() const {
    if (!homog_index) throw error("ring has no homogenizing variable");
    auto r = std::make_shared<RingDescriptor>(*this);
    r->vars.erase(r->vars.begin() + static_cast<long>(*homog_index));
    r->weights.erase(r->weights.begin() + static_cast<long>(*homog_index));
    r->prec_rank.erase(r->prec_rank.begin() + static_cast<long>(*homog_index));
    r->homog_index.reset();
    validate(*r);
    return r;
}

RingPtr RingDescriptor::with_precedence(const std::vector<std::string>& names_desc) const {
    std::size_t expected = nvars() - (homog_index ? 1 : 0);
    if (names_desc.size() != expected)
        throw error("precedence list must name every ring variable exactly once");
    auto r = std::make_shared<RingDescriptor>(*this);
    std::vector<bool> covered(nvars(), false);
    long rank = static_cast<long>(names_desc.size()) - 1;  // first listed gets the largest rank
    for (const auto& name : names_desc) {
        auto idx = var_index(name);
        if (!idx || (homog_index && *idx == *homog_index))
            throw error("unknown variable in precedence list: " + name);
        if (covered[*idx]) throw error("duplicate variable in precedence list: " + name);
        covered[*idx] = true;
        r->prec_rank[*idx] = rank--;
    }
    // homogenizing variable stays at rank -1, below every ring variable
    validate(*r);
    return r;
}

std::optional<std::size_t> RingDescriptor::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

bool RingDescriptor::same_ring(const RingDescriptor& o) const {
    if (this == &o) return true;
    return kind == o.kind && vars == o.vars && weights == o.weights &&
           homog_index == o.homog_index && field == o.field && prec_rank == o.prec_rank;
}

}  // namespace homoggb
