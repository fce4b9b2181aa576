#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degen/hodge.hpp"
#include "degen/report.hpp"

namespace degen {

enum class SingularityClass { none, du_bois, slc, rational, log_terminal };
const char* singularity_class_name(SingularityClass c);
SingularityClass parse_singularity_class(const std::string& s);  // throws InputError

struct DegenerationFlags {
    bool total_space_smooth = true;
    bool special_fiber_reduced = true;
    int d_sing = 0;
    SingularityClass singularity = SingularityClass::none;
    // quotient of a cover with smooth total space; licenses the same sequences
    bool quotient_of_smooth_cover = false;
};

// absent optionals are unknown (special fiber, lmhs) or assumed zero (phantom, vanishing)
struct DegreeData {
    std::optional<Diagram> special_fiber;
    std::optional<LmhsSpec> lmhs;
    std::optional<Diagram> phantom;
    std::optional<Diagram> vanishing;
};

struct TailStratum {
    int k = 0;
    Diagram exceptional;  // H^{n-k}(E^[k])
    Diagram total;        // H^{n-k}(Y_0^[k])
};

struct TailStrata {
    int n = 0;
    std::vector<long> chi_open;
    std::vector<TailStratum> strata;  // optional Hodge data
    std::optional<Diagram> vanishing;
};

struct LocalSystemData {
    long chi_base = 0;
    long h1_base = 0;
    long generic_rank = 0;
    long fixed_rank = 0;
    std::vector<long> local_ranks;  // rank of V / V^{T_sigma} per singular point
};

struct DegenerationFixture {
    int n = 1;
    DegenerationFlags flags;
    std::map<int, DegreeData> degrees;

    const DegreeData* at(int k) const;
    bool in_range(int k) const { return k >= 0 && k <= 2 * n; }
};

void validate(const DegenerationFixture& fx);  // throws InputError

Diagram homology_term(const DegenerationFixture& fx, int k);
Diagram twisted_coinvariants(const DegenerationFixture& fx, int k);  // coker(lmhs[k-2]) twisted by 1
Diagram invariants(const DegenerationFixture& fx, int k);            // ker(T - I) on lmhs[k]

Report check_cs(const DegenerationFixture& fx, int k);
Diagram vanishing_cohomology(const DegenerationFixture& fx, int k);
Report check_support_range(const DegenerationFixture& fx);

enum class Position { coinvariants, homology, special_fiber, invariants, vanishing, phantom };
const char* position_name(Position p);
Position parse_position(const std::string& s);  // throws InputError

struct Solved {
    Diagram value;
    std::vector<std::string> notes;  // which constraints were used, assumed zeros
};
// Solves the named term of the degree-k sequences, ignoring whatever the fixture supplies there.
Solved solve_unknown(const DegenerationFixture& fx, int k, Position pos);

// slc-level Gr_F^0 predicate on one degree; reported whether or not the flags license it
CheckResult slc_grF0_predicate(const DegenerationFixture& fx, int k);
Report check_frontier(const DegenerationFixture& fx);
Report phantom_hard_lefschetz(const DegenerationFixture& fx);

long euler_poincare_rank(const LocalSystemData& data);

struct ShiodaInputs {
    Diagram h0_next;     // H^0(U, V^{k+1}) block, already twisted
    Diagram ih1;         // IH^1 block
    Diagram phantom;     // sum of phantom pieces
    Diagram h0_prev;     // H^0(U, V^{k-1}) block, already twisted
};
struct ShiodaTable {
    long h0_next = 0, ih1 = 0, phantom = 0, h0_prev = 0, total = 0;
    Diagram diagram;
};
ShiodaTable shioda_assemble(const ShiodaInputs& in);

long milnor_number(const TailStrata& t);
Report tail_bound_check(const TailStrata& t, const Diagram& van);
Diagram tail_bound(const TailStrata& t);

// every check the flags license, in a fixed order
Report check_all(const DegenerationFixture& fx);

}  // namespace degen
