#include "rankone/weyl.hpp"

#include "rankone/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rankone {

std::int64_t dot(const IWeight& a, const IWeight& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

IWeight unit(int dim, int i, std::int64_t c) {
    IWeight w(dim, 0);
    w[i] = c;
    return w;
}

IWeight add(IWeight a, const IWeight& b, std::int64_t s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

// Sort v[0..len) by decreasing value; returns the permutation sign.
int sort_desc(IWeight& v, int len) {
    int sign = 1;
    for (int i = 0; i < len; ++i)
        for (int j = 0; j + 1 < len - i; ++j)
            if (v[j] < v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    return sign;
}

}  // namespace

CompactSystem::CompactSystem(const GroupFamily& g) {
    int n = g.n();
    switch (g.variant()) {
        case Variant::SO:
            if (n == 2) {
                kind_ = Kind::SO2;
                dim_ = block_ = 1;
            } else if (n % 2) {
                kind_ = Kind::B;
                dim_ = block_ = (n - 1) / 2;
            } else {
                kind_ = Kind::D;
                dim_ = block_ = n / 2;
            }
            break;
        case Variant::SU:
            kind_ = Kind::A_central;
            block_ = n;
            dim_ = n + 1;
            break;
        case Variant::Sp:
            kind_ = Kind::C_C1;
            block_ = n;
            dim_ = n + 1;
            break;
        case Variant::F4:
            kind_ = Kind::B;
            dim_ = block_ = 4;
            break;
    }
    int m = block_;
    // Roots in doubled coordinates.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            pos_.push_back(add(unit(dim_, i, 2), unit(dim_, j, 2), -1));
            if (kind_ != Kind::A_central) pos_.push_back(add(unit(dim_, i, 2), unit(dim_, j, 2)));
        }
    if (kind_ == Kind::B)
        for (int i = 0; i < m; ++i) pos_.push_back(unit(dim_, i, 2));
    if (kind_ == Kind::C_C1)
        for (int i = 0; i <= m; ++i) pos_.push_back(unit(dim_, i, 4));

    if (kind_ != Kind::SO2) {
        for (int i = 0; i + 1 < m; ++i) simple_.push_back(add(unit(dim_, i, 2), unit(dim_, i + 1, 2), -1));
        if (kind_ == Kind::B) simple_.push_back(unit(dim_, m - 1, 2));
        if (kind_ == Kind::D && m >= 2) simple_.push_back(add(unit(dim_, m - 2, 2), unit(dim_, m - 1, 2)));
        if (kind_ == Kind::C_C1) {
            simple_.push_back(unit(dim_, m - 1, 4));
            simple_.push_back(unit(dim_, m, 4));
        }
    }
    // rho2 = 2*rho_c = sum of positive roots, in doubled coordinates.
    rho2_.assign(dim_, 0);
    for (auto& a : pos_) rho2_ = add(rho2_, a);
    for (auto& x : rho2_) x /= 2;
}

bool CompactSystem::is_dominant(const IWeight& w) const {
    for (auto& a : simple_)
        if (dot(w, a) < 0) return false;
    return true;
}

IWeight CompactSystem::dominant(const IWeight& w) const {
    IWeight v = w;
    int m = block_;
    switch (kind_) {
        case Kind::SO2: return v;
        case Kind::A_central: sort_desc(v, m); return v;
        case Kind::B:
        case Kind::C_C1:
            for (int i = 0; i < m; ++i) v[i] = std::abs(v[i]);
            sort_desc(v, m);
            if (kind_ == Kind::C_C1) v[m] = std::abs(v[m]);
            return v;
        case Kind::D: {
            int neg = 0;
            bool zero = false;
            for (int i = 0; i < m; ++i) {
                if (v[i] < 0) ++neg;
                if (v[i] == 0) zero = true;
                v[i] = std::abs(v[i]);
            }
            sort_desc(v, m);
            if (neg % 2 && !zero) v[m - 1] = -v[m - 1];
            return v;
        }
    }
    return v;
}

std::optional<std::pair<IWeight, int>> CompactSystem::reflect_to_dominant(const IWeight& xi) const {
    IWeight v = xi;
    int m = block_;
    int sign = 1;
    switch (kind_) {
        case Kind::SO2: return std::make_pair(v, 1);
        case Kind::A_central: {
            sign = sort_desc(v, m);
            for (int i = 0; i + 1 < m; ++i)
                if (v[i] == v[i + 1]) return std::nullopt;
            return std::make_pair(v, sign);
        }
        case Kind::B:
        case Kind::C_C1: {
            for (int i = 0; i < m; ++i) {
                if (v[i] == 0) return std::nullopt;
                if (v[i] < 0) {
                    v[i] = -v[i];
                    sign = -sign;
                }
            }
            sign *= sort_desc(v, m);
            for (int i = 0; i + 1 < m; ++i)
                if (v[i] == v[i + 1]) return std::nullopt;
            if (kind_ == Kind::C_C1) {
                if (v[m] == 0) return std::nullopt;
                if (v[m] < 0) {
                    v[m] = -v[m];
                    sign = -sign;
                }
            }
            return std::make_pair(v, sign);
        }
        case Kind::D: {
            int neg = 0;
            bool zero = false;
            for (int i = 0; i < m; ++i) {
                if (v[i] < 0) ++neg;
                if (v[i] == 0) zero = true;
                v[i] = std::abs(v[i]);
            }
            // An even number of sign changes is applied in total; each is a
            // determinant factor of -1, so they do not affect the sign.
            sign = sort_desc(v, m);
            for (int i = 0; i + 1 < m; ++i)
                if (v[i] == v[i + 1]) return std::nullopt;
            if (neg % 2 && !zero) v[m - 1] = -v[m - 1];
            return std::make_pair(v, sign);
        }
    }
    return std::nullopt;
}

std::vector<IWeight> CompactSystem::orbit(const IWeight& w) const {
    std::set<IWeight> seen{w};
    std::vector<IWeight> frontier{w};
    while (!frontier.empty()) {
        std::vector<IWeight> next;
        for (auto& x : frontier)
            for (auto& a : simple_) {
                std::int64_t c = 2 * dot(x, a) / dot(a, a);
                if (c == 0) continue;
                IWeight y = add(x, a, -c);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace rankone
