#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "degen/hodge.hpp"
#include "degen/ratlin.hpp"
#include "degen/report.hpp"

namespace degen {

struct RootOfUnity {
    int exponent = 0;
    int order = 1;
    bool trivial() const { return exponent % order == 0; }
};

struct MultiBasisElement {
    PQ label{0, 0};
    std::vector<RootOfUnity> eigen;  // one per parameter; empty means all trivial
};

// limit structure over an r-parameter polydisk in a fixed eigenbasis
struct MultiLmhs {
    int r = 1;
    int degree = 0;
    std::vector<MultiBasisElement> basis;
    std::vector<Matrix> nilpotents;  // N_1..N_r, columns are images of basis vectors

    std::size_t dim() const { return basis.size(); }
};

void validate(const MultiLmhs& h);  // throws InputError
Diagram diagram(const MultiLmhs& h);

// parameter subsets use 1-based indices, sorted
using ParamSubset = std::vector<int>;

struct KoszulComplex {
    std::vector<std::vector<ParamSubset>> summands;      // per slot, subsets J in lexicographic order
    std::vector<std::vector<std::size_t>> summand_dims;  // dim N_J H
    std::vector<std::size_t> dims;
    std::vector<Matrix> differentials;  // slot s -> s+1
};

// on all of H; with invariants_only the complex is cut down to the G_I-invariant part
KoszulComplex koszul_complex(const MultiLmhs& h, const ParamSubset& fixed, bool invariants_only = false);
std::vector<std::size_t> koszul_cohomology_dims(const KoszulComplex& k);

// local intersection cohomology at the origin, labelled by Hodge type after the slot twist
Diagram ih_local(const MultiLmhs& h, const ParamSubset& fixed, int slot);

struct StratumData {
    std::optional<Diagram> invariants;  // the G_I-invariant part, enough for slot 0
    std::optional<MultiLmhs> lmhs;      // needed for higher slots
};

struct StrataInput {
    int r = 1;
    // subset I (empty for the open stratum) -> degree -> data
    std::map<ParamSubset, std::map<int, StratumData>> strata;
};

struct IhDecomposition {
    int m = 0;
    int r = 1;
    std::map<std::pair<int, int>, Diagram> cells;  // (codimension c, slot l)
    Diagram total;
    std::map<int, Diagram> coniveau;  // alpha -> N^alpha
    std::map<int, Diagram> leray;     // alpha -> L^alpha
    Report checks;
};

std::vector<ParamSubset> subsets_of_size(int r, int c);
IhDecomposition ih_decomposition(int m, const StrataInput& strata);  // throws InputError on missing data

// right end of the polydisk sequence; special_fiber is optional extra data to compare against
Report polydisk_cs(const IhDecomposition& dec, const Diagram& invariants, const std::optional<Diagram>& special_fiber);

}  // namespace degen
