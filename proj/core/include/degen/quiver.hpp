#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "degen/hodge.hpp"
#include "degen/ratlin.hpp"
#include "degen/report.hpp"

namespace degen {

// Perverse sheaf on a disk as (psi, phi, can, var) with monodromies on both ends.
// var is stored untwisted; the (-1) it carries lives on report labels only.
struct QuiverRep {
    Matrix T_psi;
    Matrix T_phi;
    Matrix can;  // psi -> phi
    Matrix var;  // phi -> psi

    std::size_t psi_dim() const { return T_psi.rows(); }
    std::size_t phi_dim() const { return T_phi.rows(); }

    static QuiverRep zero() { return {Matrix(), Matrix(), Matrix(), Matrix()}; }
};

std::vector<std::string> validate(const QuiverRep& rep);
void require_valid(const QuiverRep& rep);  // throws InputError listing violations

bool decomposes(const QuiverRep& rep);

struct Stalk {
    std::size_t h_minus1 = 0;
    std::size_t h0 = 0;
    bool operator==(const Stalk&) const = default;
};
struct Costalk {
    std::size_t h0 = 0;
    std::size_t h1 = 0;
    bool operator==(const Costalk&) const = default;
};
Stalk stalk(const QuiverRep& rep);
Costalk costalk(const QuiverRep& rep);

struct SequenceSlot {
    std::string term;
    int twist = 0;
    std::size_t dim = 0;
    bool exact = true;
};
struct CsSequence {
    std::vector<SequenceSlot> slots;
    bool exact() const;
};
CsSequence cs_sequence(const QuiverRep& rep);

bool local_invariant_cycle(const QuiverRep& rep);

QuiverRep dualize(const QuiverRep& rep);

enum class Family { A, B, C, D, E };
const char* family_name(Family f);

struct Summand {
    Family family = Family::C;
    int size = 1;
    int order = 1;
    auto operator<=>(const Summand&) const = default;
};
// counts are complex-line blocks; a rational E(i,d) block shows up phi(d) times
using SummandMultiset = std::map<Summand, long>;

std::string summand_string(const Summand& s);
std::string multiset_string(const SummandMultiset& m);
std::size_t summand_psi_dim(const Summand& s);  // complex dimension per copy
std::size_t summand_phi_dim(const Summand& s);

SummandMultiset decompose_indecomposables(const QuiverRep& rep);
bool self_dual(const SummandMultiset& m);
SummandMultiset dual_multiset(const SummandMultiset& m);

struct A4Verdicts {
    bool decomposes = true;
    bool cs_exact = true;
    bool lic = true;
    bool agree() const { return decomposes == cs_exact && cs_exact == lic; }
};
A4Verdicts a4_verdicts(const QuiverRep& rep);
Report theorem_a4_check(const QuiverRep& rep);  // throws InputError when not self-dual

// normal form of one rational indecomposable; for E this is a whole Galois orbit
QuiverRep normal_form(const Summand& s);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);
QuiverRep change_basis(const QuiverRep& rep, const Matrix& p_psi, const Matrix& p_phi);
QuiverRep build(const SummandMultiset& m);  // E counts must be multiples of phi(d)

QuiverRep realize(const LmhsSpec& spec, const Diagram& phantom);

}  // namespace degen
