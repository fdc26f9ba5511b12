#include "homoggb/gb_comm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace homoggb {

namespace {

void check_divisors(const Polynomial& f, std::span<const Polynomial> G) {
    for (const auto& g : G) {
        if (g.is_zero()) throw error("division by a set containing zero");
        check_same_ring(f, g);
    }
}

// Fixed divisor order: leading monomial ascending, then the total order.
std::vector<std::size_t> divisor_order(const RingDescriptor& ring,
                                       std::span<const Polynomial> G) {
    std::vector<std::size_t> order(G.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        Cmp c = mono_compare(ring, G[a].leading_monomial(), G[b].leading_monomial());
        if (c != Cmp::EQ) return c == Cmp::LT;
        return poly_total_compare(G[a], G[b]) < 0;
    });
    return order;
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
    return elements.size() == 1 && elements.front().is_constant();
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> G) {
    if (!f.ring()->is_commutative()) throw error("divide needs a commutative ring");
    check_divisors(f, G);
    const auto& ring = *f.ring();
    auto order = divisor_order(ring, G);

    std::vector<std::vector<Term>> qterms(G.size());
    std::vector<Term> rterms;
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        bool reduced = false;
        for (std::size_t idx : order) {
            if (mono_divides(ring, G[idx].leading_monomial(), lt.mono)) {
                Scalar c = lt.coeff / G[idx].leading_coeff();
                Monomial m = mono_quotient(ring, lt.mono, G[idx].leading_monomial());
                qterms[idx].push_back(Term{c, m});
                h = sub(h, term_mul(c, m, G[idx]));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rterms.push_back(lt);
            std::vector<Term> rest(h.terms().begin() + 1, h.terms().end());
            h = Polynomial::make(f.ring(), std::move(rest));
        }
    }

    DivisionResult out;
    out.quotients.reserve(G.size());
    for (auto& q : qterms) out.quotients.push_back(Polynomial::make(f.ring(), std::move(q)));
    out.remainder = Polynomial::make(f.ring(), std::move(rterms));
    return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
    return divide(f, G).remainder;
}

namespace {

struct SpolyParts {
    Scalar cf, cg;    // 1/lc(f), 1/lc(g)
    Monomial uf, ug;  // lcm/LM(f), lcm/LM(g)
};

SpolyParts spoly_parts(const Polynomial& f, const Polynomial& g) {
    const auto& ring = *f.ring();
    Monomial l = mono_lcm(ring, f.leading_monomial(), g.leading_monomial());
    return SpolyParts{f.leading_coeff().inverse(), g.leading_coeff().inverse(),
                      mono_quotient(ring, l, f.leading_monomial()),
                      mono_quotient(ring, l, g.leading_monomial())};
}

}  // namespace

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    check_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) throw error("S-polynomial of zero");
    if (!f.ring()->is_commutative()) throw error("spoly needs a commutative ring");
    SpolyParts p = spoly_parts(f, g);
    return sub(term_mul(p.cf, p.uf, f), term_mul(p.cg, p.ug, g));
}

namespace {

// Shared completion core; `reps` tracks every basis element as an explicit
// combination of the monic inputs when certificate tracking is requested.
struct Completion {
    RingPtr ring;
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> reps;
    bool track;

    struct PairEntry {
        long lcm_degree;
        std::uint64_t seq;
        std::size_t i, j;
        bool operator>(const PairEntry& o) const {
            if (lcm_degree != o.lcm_degree) return lcm_degree > o.lcm_degree;
            return seq > o.seq;
        }
    };
    std::priority_queue<PairEntry, std::vector<PairEntry>, std::greater<>> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    std::uint64_t seq = 0;

    void push_pair(std::size_t i, std::size_t j) {
        Monomial l = mono_lcm(*ring, basis[i].leading_monomial(), basis[j].leading_monomial());
        queue.push(PairEntry{mono_degree(*ring, l), seq++, i, j});
        pending.insert({i, j});
    }

    void add_element(Polynomial p, std::vector<Polynomial> rep) {
        Scalar lc = p.leading_coeff();
        if (!lc.is_one()) {
            p = p.monic();
            if (track) {
                Scalar inv = lc.inverse();
                for (auto& r : rep) r = scalar_mul(inv, r);
            }
        }
        basis.push_back(std::move(p));
        if (track) reps.push_back(std::move(rep));
        std::size_t n = basis.size() - 1;
        for (std::size_t k = 0; k < n; ++k) push_pair(k, n);
    }

    bool coprime_criterion(std::size_t i, std::size_t j) const {
        const Monomial& a = basis[i].leading_monomial();
        const Monomial& b = basis[j].leading_monomial();
        for (std::size_t v = 0; v < a.data.size(); ++v)
            if (a.data[v] > 0 && b.data[v] > 0) return false;
        return true;
    }

    bool chain_criterion(std::size_t i, std::size_t j) const {
        Monomial l = mono_lcm(*ring, basis[i].leading_monomial(), basis[j].leading_monomial());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == i || k == j) continue;
            if (!mono_divides(*ring, basis[k].leading_monomial(), l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                return true;
        }
        return false;
    }

    void run() {
        while (!queue.empty()) {
            std::size_t i = queue.top().i, j = queue.top().j;
            queue.pop();
            pending.erase({i, j});
            if (coprime_criterion(i, j) || chain_criterion(i, j)) continue;

            SpolyParts p = spoly_parts(basis[i], basis[j]);
            Polynomial s = sub(term_mul(p.cf, p.uf, basis[i]), term_mul(p.cg, p.ug, basis[j]));
            std::vector<Polynomial> rep;
            if (track) {
                rep.reserve(reps[i].size());
                for (std::size_t m = 0; m < reps[i].size(); ++m)
                    rep.push_back(sub(term_mul(p.cf, p.uf, reps[i][m]),
                                      term_mul(p.cg, p.ug, reps[j][m])));
            }
            if (s.is_zero()) continue;
            DivisionResult d = divide(s, basis);
            if (track) {
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    if (d.quotients[k].is_zero()) continue;
                    for (std::size_t m = 0; m < rep.size(); ++m)
                        rep[m] = sub(rep[m], mul(d.quotients[k], reps[k][m]));
                }
            }
            if (d.remainder.is_zero()) continue;
            add_element(std::move(d.remainder), std::move(rep));
        }
    }
};

struct SortPermutation {
    std::vector<std::size_t> order;
};

SortPermutation sort_desc(std::vector<Polynomial>& elems) {
    SortPermutation p;
    p.order.resize(elems.size());
    std::iota(p.order.begin(), p.order.end(), std::size_t{0});
    std::sort(p.order.begin(), p.order.end(), [&](std::size_t a, std::size_t b) {
        return poly_total_compare(elems[a], elems[b]) > 0;
    });
    std::vector<Polynomial> sorted;
    sorted.reserve(elems.size());
    for (std::size_t k : p.order) sorted.push_back(std::move(elems[k]));
    elems = std::move(sorted);
    return p;
}

CertifiedBasis buchberger_impl(std::vector<Polynomial> S, bool track) {
    if (S.empty()) throw error("empty generating set");
    RingPtr ring = S.front().ring();
    if (!ring->is_commutative()) throw error("buchberger needs a commutative ring");
    for (auto& f : S) {
        if (f.is_zero()) throw error("set contains the zero polynomial");
        check_same_ring(S.front(), f);
        f = f.monic();
    }
    S = canonical_set(std::move(S));

    Completion c;
    c.ring = ring;
    c.track = track;
    for (std::size_t k = 0; k < S.size(); ++k) {
        std::vector<Polynomial> rep;
        if (track) {
            rep.assign(S.size(), Polynomial::zero(ring));
            rep[k] = Polynomial::constant(ring, Scalar::one(ring->field));
        }
        c.add_element(S[k], std::move(rep));
    }
    c.run();

    CertifiedBasis out;
    out.inputs = std::move(S);
    out.basis.ring = ring;
    out.basis.elements = std::move(c.basis);
    out.basis.complete = true;
    out.cofactors = std::move(c.reps);

    auto perm = sort_desc(out.basis.elements);
    if (track) {
        std::vector<std::vector<Polynomial>> sorted;
        sorted.reserve(perm.order.size());
        for (std::size_t k : perm.order) sorted.push_back(std::move(out.cofactors[k]));
        out.cofactors = std::move(sorted);
    }
    return out;
}

// Minimalization + full tail reduction; updates cofactors when present.
void reduce_impl(GroebnerBasis& gb, std::vector<std::vector<Polynomial>>* cofactors) {
    const RingPtr& ring = gb.ring;
    std::vector<std::size_t> asc(gb.elements.size());
    std::iota(asc.begin(), asc.end(), std::size_t{0});
    std::sort(asc.begin(), asc.end(), [&](std::size_t a, std::size_t b) {
        Cmp c = mono_compare(*ring, gb.elements[a].leading_monomial(),
                             gb.elements[b].leading_monomial());
        if (c != Cmp::EQ) return c == Cmp::LT;
        return poly_total_compare(gb.elements[a], gb.elements[b]) < 0;
    });

    // Minimal: keep an element only if no kept element's LM divides its LM.
    // Potential divisors precede it in ascending LM order.
    std::vector<Polynomial> kept;
    std::vector<std::vector<Polynomial>> kept_reps;
    for (std::size_t k : asc) {
        const Monomial& lm = gb.elements[k].leading_monomial();
        bool divisible = false;
        for (const auto& h : kept) {
            if (mono_divides(*ring, h.leading_monomial(), lm)) {
                divisible = true;
                break;
            }
        }
        if (divisible) continue;
        kept.push_back(gb.elements[k]);
        if (cofactors) kept_reps.push_back((*cofactors)[k]);
    }

    // Full reduction, ascending: tail divisors are already in final form.
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        std::vector<std::size_t> omap;
        for (std::size_t m = 0; m < kept.size(); ++m) {
            if (m == k) continue;
            others.push_back(kept[m]);
            omap.push_back(m);
        }
        DivisionResult d = divide(kept[k], others);
        if (cofactors) {
            for (std::size_t q = 0; q < others.size(); ++q) {
                if (d.quotients[q].is_zero()) continue;
                for (std::size_t m = 0; m < kept_reps[k].size(); ++m)
                    kept_reps[k][m] =
                        sub(kept_reps[k][m], mul(d.quotients[q], kept_reps[omap[q]][m]));
            }
        }
        Scalar lc = d.remainder.leading_coeff();
        kept[k] = d.remainder.monic();
        if (cofactors && !lc.is_one()) {
            Scalar inv = lc.inverse();
            for (auto& r : kept_reps[k]) r = scalar_mul(inv, r);
        }
    }

    gb.elements = std::move(kept);
    auto perm = sort_desc(gb.elements);
    if (cofactors) {
        std::vector<std::vector<Polynomial>> sorted;
        sorted.reserve(perm.order.size());
        for (std::size_t k : perm.order) sorted.push_back(std::move(kept_reps[k]));
        *cofactors = std::move(sorted);
    }
    gb.reduced = true;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> S, const BuchbergerOptions& opts) {
    CertifiedBasis c = buchberger_impl(std::move(S), /*track=*/false);
    if (opts.interreduce) reduce_impl(c.basis, nullptr);
    return std::move(c.basis);
}

CertifiedBasis buchberger_certified(std::vector<Polynomial> S, const BuchbergerOptions& opts) {
    CertifiedBasis c = buchberger_impl(std::move(S), /*track=*/true);
    if (opts.interreduce) reduce_impl(c.basis, &c.cofactors);
    return c;
}

GroebnerBasis reduce_basis(const GroebnerBasis& G) {
    if (!G.complete) throw error("reduce_basis needs a complete basis");
    GroebnerBasis out = G;
    if (out.elements.empty()) {
        out.reduced = true;
        return out;
    }
    reduce_impl(out, nullptr);
    return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

void check_input_set(std::span<const Polynomial> G) {
    for (const auto& g : G) {
        if (g.is_zero()) throw error("set contains the zero polynomial");
        check_same_ring(G.front(), g);
    }
}

}  // namespace

CheckReport is_groebner_serial(std::span<const Polynomial> G) {
    check_input_set(G);
    CheckReport rep;
    if (G.size() < 2) return rep;
    for (auto [i, j] : all_pairs(G.size())) {
        Polynomial r = divide(spoly(G[i], G[j]), G).remainder;
        if (!r.is_zero()) {
            rep.ok = false;
            rep.failures.push_back(CheckFailure{i, j, std::move(r)});
        }
    }
    return rep;
}

CheckReport is_groebner_parallel(std::span<const Polynomial> G, int threads) {
    check_input_set(G);
    CheckReport rep;
    if (G.size() < 2) return rep;
    auto pairs = all_pairs(G.size());
    std::vector<Polynomial> slots(pairs.size());
    std::vector<char> failed(pairs.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long k = 0; k < static_cast<long>(pairs.size()); ++k) {
        auto [i, j] = pairs[static_cast<std::size_t>(k)];
        Polynomial r = divide(spoly(G[i], G[j]), G).remainder;
        if (!r.is_zero()) {
            failed[static_cast<std::size_t>(k)] = 1;
            slots[static_cast<std::size_t>(k)] = std::move(r);
        }
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (failed[k]) {
            rep.ok = false;
            rep.failures.push_back(CheckFailure{pairs[k].first, pairs[k].second,
                                                std::move(slots[k])});
        }
    }
    return rep;
}

CheckReport is_groebner(std::span<const Polynomial> G, int threads) {
    if (threads <= 1) return is_groebner_serial(G);
    return is_groebner_parallel(G, threads);
}

}  // namespace homoggb
