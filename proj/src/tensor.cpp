#include "rankone/tensor.hpp"

#include "rankone/errors.hpp"

#include <algorithm>
#include <set>

namespace rankone {

namespace {

void require_supported(const GroupFamily& g) {
    if (g.is_so21()) throw Unsupported("tensor decompositions are not provided for SO(2,1)");
}

IWeight plus(const IWeight& a, const IWeight& b, std::int64_t s = 1) {
    IWeight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

Decomposition finish(const GroupFamily& g, const WeightMultiset& acc) {
    Decomposition d;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second == 0) continue;
        if (it->second < 0) throw CheckFailure("negative multiplicity in tensor decomposition");
        auto l = spherical_label_of(g, it->first);
        d.summands.push_back({it->first, l, it->second, l.has_value()});
    }
    return d;
}

}  // namespace

std::vector<IWeight> Decomposition::weights() const {
    std::vector<IWeight> w;
    for (auto& s : summands) w.push_back(s.weight);
    return w;
}

WeightMultiset weights_of_p(const GroupFamily& g) {
    require_supported(g);
    CompactSystem cs(g);
    int d = cs.dim(), n = g.n();
    WeightMultiset w;
    auto e = [&](int i, std::int64_t c) {
        IWeight v(d, 0);
        v[i] = c;
        return v;
    };
    switch (g.variant()) {
        case Variant::SO:
            for (int i = 0; i < d; ++i) {
                w[e(i, 2)] += 1;
                w[e(i, -2)] += 1;
            }
            if (n % 2) w[IWeight(d, 0)] += 1;
            break;
        case Variant::SU:
            for (int i = 0; i < n; ++i)
                for (int s : {1, -1}) {
                    IWeight v = e(i, 2 * s);
                    v[n] = -2 * s;
                    w[v] += 1;
                }
            break;
        case Variant::Sp:
            for (int i = 0; i < n; ++i)
                for (int s : {1, -1})
                    for (int t : {1, -1}) {
                        IWeight v = e(i, 2 * s);
                        v[n] = 2 * t;
                        w[v] += 1;
                    }
            break;
        case Variant::F4:
            for (int mask = 0; mask < 16; ++mask) {
                IWeight v(4);
                for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
                w[v] += 1;
            }
            break;
    }
    return w;
}

Decomposition racah_speiser(const GroupFamily& g, const KTypeLabel& label) {
    require_supported(g);
    CompactSystem cs(g);
    IWeight lr = plus(highest_iweight(label), cs.rho2());
    WeightMultiset acc;
    for (auto& [beta, mult] : weights_of_p(g)) {
        auto r = cs.reflect_to_dominant(plus(lr, beta));
        if (!r) continue;
        acc[plus(r->first, cs.rho2(), -1)] += r->second * mult;
    }
    return finish(g, acc);
}

WeightMultiset character(const GroupFamily& g, const IWeight& lambda) {
    CompactSystem cs(g);
    if (!cs.is_dominant(lambda)) throw DomainError("highest weight is not dominant");
    const auto& R = cs.rho2();
    auto norm_shift = [&](const IWeight& m) {
        IWeight x = plus(m, R);
        return dot(x, x);
    };
    std::int64_t top = norm_shift(lambda);
    std::int64_t top_height = dot(lambda, R);
    WeightMultiset mult{{lambda, 1}};
    std::vector<IWeight> level{lambda};
    while (!level.empty()) {
        std::set<IWeight> cand;
        for (auto& w : level)
            for (auto& a : cs.simple_roots()) cand.insert(plus(w, a, -1));
        std::vector<IWeight> next;
        for (auto& mu : cand) {
            std::int64_t num = 0;
            for (auto& a : cs.positive_roots()) {
                for (IWeight x = plus(mu, a); dot(x, R) <= top_height; x = plus(x, a)) {
                    auto it = mult.find(x);
                    if (it != mult.end()) num += 2 * dot(x, a) * it->second;
                }
            }
            std::int64_t den = top - norm_shift(mu);
            if (num == 0) continue;
            if (den <= 0 || num % den) throw CheckFailure("Freudenthal recursion produced a non-integer multiplicity");
            mult[mu] = num / den;
            next.push_back(mu);
        }
        level = std::move(next);
    }
    return mult;
}

Decomposition character_oracle(const GroupFamily& g, const KTypeLabel& label, int iteration_cap) {
    require_supported(g);
    CompactSystem cs(g);
    WeightMultiset prod;
    auto pw = weights_of_p(g);
    for (auto& [w, m] : character(g, highest_iweight(label)))
        for (auto& [b, k] : pw) prod[plus(w, b)] += m * k;
    WeightMultiset found;
    int iter = 0;
    for (;;) {
        const IWeight* best = nullptr;
        std::int64_t best_h = 0;
        for (auto& [w, m] : prod) {
            if (m < 0) throw CheckFailure("character peeling went negative");
            if (m == 0) continue;
            std::int64_t h = dot(w, cs.rho2());
            if (!best || h > best_h) {
                best = &w;
                best_h = h;
            }
        }
        if (!best) break;
        if (++iter > iteration_cap) throw CheckFailure("character peeling exceeded the iteration cap");
        IWeight hw = *best;
        if (!cs.is_dominant(hw)) throw CheckFailure("peeled weight is not dominant");
        std::int64_t c = prod[hw];
        found[hw] += c;
        for (auto& [w, m] : character(g, hw)) prod[w] -= c * m;
        for (auto it = prod.begin(); it != prod.end();)
            it = it->second == 0 ? prod.erase(it) : std::next(it);
    }
    return finish(g, found);
}

DimensionSum dimension_sum_check(const GroupFamily& g, const KTypeLabel& label) {
    auto d = racah_speiser(g, label);
    DimensionSum r;
    r.total = 0;
    for (auto& s : d.summands) r.total += weyl_dim(g, s.weight) * s.multiplicity;
    r.expected = weyl_dim(label) * structural_data(g).dim_p;
    r.ok = r.total == r.expected;
    return r;
}

std::vector<IWeight> stated_decomposition(const GroupFamily& g, const KTypeLabel& label) {
    require_supported(g);
    CompactSystem cs(g);
    IWeight lam = highest_iweight(label);
    std::set<IWeight> out;
    auto add_label = [&](std::vector<int> c) {
        if (auto l = KTypeLabel::make(g, std::move(c))) out.insert(highest_iweight(*l));
    };
    int n = g.n();
    switch (g.variant()) {
        case Variant::SO: {
            int k = label[0];
            add_label({k + 1});
            if (k >= 1) {
                add_label({k - 1});
                if (n == 3) {
                    add_label({k});
                } else {
                    IWeight v = lam;
                    v[1] = 2;
                    out.insert(v);
                    if (n == 4) {
                        v[1] = -2;
                        out.insert(v);
                    }
                }
            }
            break;
        }
        case Variant::SU: {
            auto e = [&](int i) {
                IWeight v(cs.dim(), 0);
                v[i] = 2;
                return v;
            };
            auto sub = [&](IWeight a, const IWeight& b) { return plus(a, b, -1); };
            std::vector<IWeight> S = {sub(e(0), e(n)), sub(e(n), e(0)), sub(e(1), e(n)),
                                      sub(e(n), e(n - 2)), sub(e(n - 1), e(n)), sub(e(n), e(n - 1))};
            for (auto& b : S) {
                IWeight v = plus(lam, b);
                if (cs.is_dominant(v)) out.insert(v);
            }
            break;
        }
        case Variant::Sp:
        case Variant::F4: {
            int a = label[0], b = label[1];
            if (g.variant() == Variant::Sp) {
                add_label({a + 1, b});
                add_label({a - 1, b});
                add_label({a, b + 1});
                add_label({a, b - 1});
            } else {
                add_label({a + 1, b + 1});
                add_label({a - 1, b - 1});
                add_label({a + 1, b - 1});
                add_label({a - 1, b + 1});
            }
            for (auto& [beta, m] : weights_of_p(g)) {
                IWeight v = plus(lam, beta);
                if (cs.is_dominant(v) && !spherical_label_of(g, v)) out.insert(v);
            }
            break;
        }
    }
    std::vector<IWeight> r(out.rbegin(), out.rend());
    return r;
}

std::vector<KTypeLabel> spherical_neighbours(const GroupFamily& g, const KTypeLabel& label) {
    std::vector<KTypeLabel> r;
    for (auto& s : racah_speiser(g, label).summands)
        if (s.label) r.push_back(*s.label);
    return r;
}

}  // namespace rankone
