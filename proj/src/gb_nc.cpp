#include "homoggb/gb_nc.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>

namespace homoggb {

namespace {

void check_free_ring(const Polynomial& f) {
    if (f.ring()->is_commutative()) throw error("operation needs a free ring");
}

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

NcDivisionResult nc_divide(const Polynomial& f, std::span<const Polynomial> G) {
    check_free_ring(f);
    for (const auto& g : G) {
        if (g.is_zero()) throw error("division by a set containing zero");
        check_same_ring(f, g);
    }
    const auto& ring = *f.ring();
    auto order = divisor_order(ring, G);

    NcDivisionResult out;
    std::vector<Term> rterms;
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        bool reduced = false;
        for (std::size_t idx : order) {
            const Monomial& lm = G[idx].leading_monomial();
            auto pos = find_subword(lt.mono, lm);
            if (!pos) continue;
            Monomial u = word_slice(lt.mono, 0, *pos);
            Monomial v = word_slice(lt.mono, *pos + lm.data.size(), lt.mono.data.size());
            Scalar c = lt.coeff / G[idx].leading_coeff();
            out.trace.push_back(NcReductionStep{c, u, idx, v});
            h = sub(h, sandwich_mul(c, u, G[idx], v));
            reduced = true;
            break;
        }
        if (!reduced) {
            rterms.push_back(lt);
            std::vector<Term> rest(h.terms().begin() + 1, h.terms().end());
            h = Polynomial::make(f.ring(), std::move(rest));
        }
    }
    out.remainder = Polynomial::make(f.ring(), std::move(rterms));
    return out;
}

Polynomial nc_normal_form(const Polynomial& f, std::span<const Polynomial> G) {
    return nc_divide(f, G).remainder;
}

std::vector<Obstruction> find_obstructions(const Polynomial& g1, const Polynomial& g2,
                                           std::size_t i, std::size_t j) {
    check_free_ring(g1);
    check_same_ring(g1, g2);
    if (g1.is_zero() || g2.is_zero()) throw error("obstructions of zero");
    const Monomial& w1 = g1.leading_monomial();
    const Monomial& w2 = g2.leading_monomial();
    const std::size_t n1 = w1.data.size(), n2 = w2.data.size();
    const bool self = (i == j);
    std::vector<Obstruction> out;

    auto push_overlap = [&](const Monomial& a, const Monomial& b, std::size_t k, bool a_first) {
        // suffix_k(a) == prefix_k(b); overlap word = a . b[k:]
        Obstruction o;
        o.kind = Obstruction::Kind::Overlap;
        o.i = i;
        o.j = j;
        Monomial tail = word_slice(b, k, b.data.size());
        Monomial head = word_slice(a, 0, a.data.size() - k);
        o.word = mono_mul(*g1.ring(), a, tail);
        if (a_first) {
            o.left_i = Monomial{};
            o.right_i = tail;
            o.left_j = head;
            o.right_j = Monomial{};
        } else {
            o.left_i = head;
            o.right_i = Monomial{};
            o.left_j = Monomial{};
            o.right_j = tail;
        }
        out.push_back(std::move(o));
    };

    auto overlaps = [&](const Monomial& a, const Monomial& b, bool a_first) {
        for (std::size_t k = 1; k < std::min(a.data.size(), b.data.size()); ++k) {
            bool match = std::equal(a.data.end() - static_cast<long>(k), a.data.end(),
                                    b.data.begin());
            if (match) push_overlap(a, b, k, a_first);
        }
    };

    overlaps(w1, w2, /*a_first=*/true);  // suffix of w1 meets prefix of w2
    if (!self) overlaps(w2, w1, /*a_first=*/false);

    // containments: the shorter word inside the longer; for identical words of
    // a non-self pair this degenerates to the equal-LM obstruction at p = 0
    auto containments = [&](const Monomial& inner, const Monomial& outer, bool inner_is_first) {
        std::size_t from = 0;
        while (auto pos = find_subword(outer, inner, from)) {
            std::size_t p = *pos;
            if (self && inner.data.size() == outer.data.size()) break;  // identical placement
            Obstruction o;
            o.kind = Obstruction::Kind::Containment;
            o.i = i;
            o.j = j;
            o.word = outer;
            Monomial u = word_slice(outer, 0, p);
            Monomial v = word_slice(outer, p + inner.data.size(), outer.data.size());
            if (inner_is_first) {
                o.left_i = u;
                o.right_i = v;
                o.left_j = Monomial{};
                o.right_j = Monomial{};
            } else {
                o.left_i = Monomial{};
                o.right_i = Monomial{};
                o.left_j = u;
                o.right_j = v;
            }
            out.push_back(std::move(o));
            from = p + 1;
        }
    };
    if (n1 < n2) {
        containments(w1, w2, /*inner_is_first=*/true);
    } else if (n2 < n1) {
        containments(w2, w1, /*inner_is_first=*/false);
    } else if (!self && w1 == w2) {
        containments(w1, w2, /*inner_is_first=*/true);
    }
    return out;
}

Polynomial obstruction_spoly(const Obstruction& o, std::span<const Polynomial> G) {
    const Polynomial& gi = G[o.i];
    const Polynomial& gj = G[o.j];
    return sub(sandwich_mul(gi.leading_coeff().inverse(), o.left_i, gi, o.right_i),
               sandwich_mul(gj.leading_coeff().inverse(), o.left_j, gj, o.right_j));
}

namespace {

struct NcCompletion {
    RingPtr ring;
    long max_degree;
    bool interreduce;

    std::vector<Polynomial> basis;  // slots; dead slots stay for index stability
    std::vector<char> alive;
    std::deque<Polynomial> to_insert;

    struct Entry {
        long degree;
        std::uint64_t seq;
        Obstruction o;
        bool operator>(const Entry& e) const {
            if (degree != e.degree) return degree > e.degree;
            return seq > e.seq;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::uint64_t seq = 0;
    std::size_t unresolved_above_bound = 0;

    std::vector<Polynomial> alive_elements() const {
        std::vector<Polynomial> out;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (alive[k]) out.push_back(basis[k]);
        return out;
    }

    void enqueue_obstructions(std::size_t slot) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!alive[k]) continue;
            if (k > slot) continue;
            auto obs = find_obstructions(basis[k], basis[slot], k, slot);
            for (auto& o : obs)
                queue.push(Entry{mono_degree(*ring, o.word), seq++, std::move(o)});
        }
    }

    void add_raw(Polynomial h) {
        basis.push_back(std::move(h));
        alive.push_back(1);
        enqueue_obstructions(basis.size() - 1);
    }

    void insert_reduced(Polynomial h) {
        auto elems = alive_elements();
        Polynomial r = nc_divide(h, elems).remainder;
        if (r.is_zero()) return;
        r = r.monic();
        if (interreduce) {
            // retire any element whose leading word contains the new one
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (!alive[k]) continue;
                if (find_subword(basis[k].leading_monomial(), r.leading_monomial())) {
                    alive[k] = 0;
                    to_insert.push_back(basis[k]);
                }
            }
        }
        add_raw(std::move(r));
    }

    void drain_inserts() {
        while (!to_insert.empty()) {
            Polynomial h = std::move(to_insert.front());
            to_insert.pop_front();
            insert_reduced(std::move(h));
        }
    }

    void run() {
        drain_inserts();
        while (!queue.empty()) {
            Entry e = queue.top();
            queue.pop();
            if (!alive[e.o.i] || !alive[e.o.j]) continue;
            Polynomial s = obstruction_spoly(e.o, basis);
            if (s.is_zero()) continue;  // resolved at any degree
            if (e.degree > max_degree) {
                ++unresolved_above_bound;
                continue;
            }
            Polynomial r = nc_divide(s, alive_elements()).remainder;
            if (r.is_zero()) continue;
            to_insert.push_back(std::move(r));
            drain_inserts();
        }
    }
};

}  // namespace

GroebnerBasis nc_complete(std::vector<Polynomial> S, long max_degree,
                          const NcCompleteOptions& opts) {
    if (S.empty()) throw error("empty generating set");
    RingPtr ring = S.front().ring();
    if (ring->is_commutative()) throw error("nc_complete needs a free ring");
    long max_input_degree = 0;
    for (auto& f : S) {
        if (f.is_zero()) throw error("set contains the zero polynomial");
        check_same_ring(S.front(), f);
        f = f.monic();
        max_input_degree = std::max(max_input_degree, f.degree());
    }
    if (max_degree < max_input_degree)
        throw error("max degree is smaller than the degree of a generator");
    S = canonical_set(std::move(S));

    NcCompletion c;
    c.ring = ring;
    c.max_degree = max_degree;
    c.interreduce = opts.interreduce;
    if (opts.interreduce) {
        for (auto& f : S) c.to_insert.push_back(std::move(f));
    } else {
        for (auto& f : S) c.add_raw(std::move(f));
    }
    c.run();

    GroebnerBasis out;
    out.ring = ring;
    out.elements = c.alive_elements();
    out.complete = (c.unresolved_above_bound == 0);
    out.truncation_degree = max_degree;

    if (opts.interreduce) {
        // alive leading words are subword-free; tail-reduce ascending so each
        // divisor is already in final form when used
        std::sort(out.elements.begin(), out.elements.end(),
                  [&](const Polynomial& a, const Polynomial& b) {
                      Cmp cm = mono_compare(*ring, a.leading_monomial(), b.leading_monomial());
                      if (cm != Cmp::EQ) return cm == Cmp::LT;
                      return poly_total_compare(a, b) < 0;
                  });
        for (std::size_t k = 0; k < out.elements.size(); ++k) {
            std::vector<Polynomial> others;
            for (std::size_t m = 0; m < out.elements.size(); ++m)
                if (m != k) others.push_back(out.elements[m]);
            out.elements[k] = nc_divide(out.elements[k], others).remainder.monic();
        }
        out.reduced = true;
    }
    out.elements = canonical_set(std::move(out.elements));
    return out;
}

namespace {

std::vector<Obstruction> all_obstructions(std::span<const Polynomial> G, long max_degree) {
    std::vector<Obstruction> out;
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i; j < G.size(); ++j) {
            for (auto& o : find_obstructions(G[i], G[j], i, j)) {
                if (mono_degree(*G.front().ring(), o.word) <= max_degree)
                    out.push_back(std::move(o));
            }
        }
    }
    return out;
}

void check_input_set(std::span<const Polynomial> G) {
    for (const auto& g : G) {
        if (g.is_zero()) throw error("set contains the zero polynomial");
        check_same_ring(G.front(), g);
    }
}

}  // namespace

CheckReport is_nc_groebner_serial(std::span<const Polynomial> G, long max_degree) {
    check_input_set(G);
    CheckReport rep;
    if (G.empty()) return rep;
    for (const auto& o : all_obstructions(G, max_degree)) {
        Polynomial r = nc_divide(obstruction_spoly(o, G), G).remainder;
        if (!r.is_zero()) {
            rep.ok = false;
            rep.failures.push_back(CheckFailure{o.i, o.j, std::move(r)});
        }
    }
    return rep;
}

CheckReport is_nc_groebner_parallel(std::span<const Polynomial> G, long max_degree,
                                    int threads) {
    check_input_set(G);
    CheckReport rep;
    if (G.empty()) return rep;
    auto obs = all_obstructions(G, max_degree);
    std::vector<Polynomial> slots(obs.size());
    std::vector<char> failed(obs.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long k = 0; k < static_cast<long>(obs.size()); ++k) {
        Polynomial r =
            nc_divide(obstruction_spoly(obs[static_cast<std::size_t>(k)], G), G).remainder;
        if (!r.is_zero()) {
            failed[static_cast<std::size_t>(k)] = 1;
            slots[static_cast<std::size_t>(k)] = std::move(r);
        }
    }
    for (std::size_t k = 0; k < obs.size(); ++k) {
        if (failed[k]) {
            rep.ok = false;
            rep.failures.push_back(CheckFailure{obs[k].i, obs[k].j, std::move(slots[k])});
        }
    }
    return rep;
}

CheckReport is_nc_groebner(std::span<const Polynomial> G, long max_degree, int threads) {
    if (threads <= 1) return is_nc_groebner_serial(G, max_degree);
    return is_nc_groebner_parallel(G, max_degree, threads);
}

}  // namespace homoggb
