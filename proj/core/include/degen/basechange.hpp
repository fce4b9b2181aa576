#pragma once

#include <map>
#include <vector>

#include "degen/degeneration.hpp"
#include "degen/hodge.hpp"

namespace degen {

// cyclotomic order -> number of irreducible rational summands of that order
using CyclotomicMultiset = std::map<long, long>;

LmhsSpec base_change_lmhs(const LmhsSpec& spec, long kappa);
Diagram invariant_gap(const LmhsSpec& spec, long kappa);

// order l of the cover splits into copies of order l/gcd(l,kappa) after pulling back
CyclotomicMultiset expand_after_base_change(const CyclotomicMultiset& cover_side, long kappa);
// every table n with expand_after_base_change(n, kappa) == m, sorted
std::vector<CyclotomicMultiset> cyclotomic_refinement(const CyclotomicMultiset& m, long kappa);

struct GIsotypicData {
    long order = 1;
    // degree -> trivial-character part of H^k of the cover's special fiber; absent means all of it
    std::map<int, Diagram> trivial_parts;
    // degree -> limit structure of the quotient family; absent means unchanged
    std::map<int, LmhsSpec> quotient_lmhs;
};

// fixture for the quotient family built from the cover and the group action
DegenerationFixture quotient_invariants(const DegenerationFixture& cover, const GIsotypicData& iso, long kappa);

}  // namespace degen
