#pragma once

#include "rankone/ktypes.hpp"

#include <map>
#include <optional>
#include <vector>

namespace rankone {

using WeightMultiset = std::map<IWeight, std::int64_t>;

struct Summand {
    IWeight weight;  // doubled coordinates
    std::optional<KTypeLabel> label;
    std::int64_t multiplicity;
    bool m_spherical;
};

/// Summands sorted by weight (descending lexicographic).
struct Decomposition {
    std::vector<Summand> summands;
    std::vector<IWeight> weights() const;
};

/// Weights of p (identified with p* via the Killing form).
WeightMultiset weights_of_p(const GroupFamily& g);

Decomposition racah_speiser(const GroupFamily& g, const KTypeLabel& label);

/// Full weight multiset of the irreducible K-module with highest weight
/// lambda (Freudenthal).
WeightMultiset character(const GroupFamily& g, const IWeight& lambda);

/// Peels the character of Y (x) p into irreducibles. Small instances only.
Decomposition character_oracle(const GroupFamily& g, const KTypeLabel& label, int iteration_cap = 10000);

struct DimensionSum {
    bool ok;
    Integer total;     // sum of summand dimensions
    Integer expected;  // dim p * dim Y
};
DimensionSum dimension_sum_check(const GroupFamily& g, const KTypeLabel& label);

/// The decomposition as stated for each family, as highest weights. For
/// K = SO(4) the conjugate summand k e1 - e2 is included (see README).
std::vector<IWeight> stated_decomposition(const GroupFamily& g, const KTypeLabel& label);

/// Y -> M-spherical summands of Y (x) p.
std::vector<KTypeLabel> spherical_neighbours(const GroupFamily& g, const KTypeLabel& label);

}  // namespace rankone
