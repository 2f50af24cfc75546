#pragma once

#include "rankone/groups.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rankone {

/// Weight in doubled e_i coordinates (Spin(9) needs half-integers).
using IWeight = std::vector<std::int64_t>;

/// Root datum and Weyl group action of K for one family instance.
/// Blocks: SO(2m+1) -> B_m; SO(2m) -> D_m; SU(n) -> A_{n-1} plus a fixed
/// central coordinate; Sp(n) -> C_n x C_1; F4 -> B_4 (Spin(9)).
class CompactSystem {
public:
    enum class Kind { B, D, A_central, C_C1, SO2 };

    explicit CompactSystem(const GroupFamily& g);

    int dim() const { return dim_; }
    Kind kind() const { return kind_; }
    const std::vector<IWeight>& positive_roots() const { return pos_; }
    const std::vector<IWeight>& simple_roots() const { return simple_; }
    const IWeight& rho2() const { return rho2_; }

    bool is_dominant(const IWeight& w) const;
    /// Unique dominant element of the Weyl orbit.
    IWeight dominant(const IWeight& w) const;
    /// For a regular xi: the strictly dominant w.xi and det(w). nullopt on a wall.
    std::optional<std::pair<IWeight, int>> reflect_to_dominant(const IWeight& xi) const;
    /// Full Weyl orbit, sorted.
    std::vector<IWeight> orbit(const IWeight& w) const;

private:
    Kind kind_;
    int dim_;
    int block_;  // length of the signed/permuted block
    std::vector<IWeight> pos_, simple_;
    IWeight rho2_;
};

std::int64_t dot(const IWeight& a, const IWeight& b);

}  // namespace rankone
