#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qfusion/matrix.hpp"
#include "qfusion/poly.hpp"
#include "qfusion/qchar.hpp"
#include "qfusion/rat.hpp"

namespace qfusion {

// Matrices of e, f, h on C^a in the weight basis u_0..u_{a-1} (u_r lowered
// r times from the highest vector, divided powers): e u_r = (a-r) u_{r-1},
// f u_r = (r+1) u_{r+1}, h u_r = (a-1-2r) u_r.
Matrix sl2_e(int a);
Matrix sl2_f(int a);
Matrix sl2_h(int a);

// Coefficients of the invariant bilinear form on C^a: <u_r, u_{a-1-r}> =
// beta_r with beta_0 = 1, all other pairings zero.
std::vector<Rat> invariant_form(int a);

// Decomposition of C^{ai} (x) C^{aj} into irreducible summands over Q.
// Summand k has dimension ai+aj-1-2k; its rows are weight vectors, highest
// first, over the pair coordinates ri*aj + rj, scaled to primitive integers.
struct PairFiltration {
    int ai = 0, aj = 0;
    std::vector<Matrix> summands;
    std::vector<std::vector<long long>> row_weights;
};
PairFiltration pair_filtration(int ai, int aj);

// One degree layer of the condition-cut subspace. Per weight drop r the rows
// of blocks[r] span the solutions inside (monomials of degree d) x (tensor
// basis vectors of drop r); column order is tensor-major: bi * #mons + mi.
struct FcLayer {
    int d = 0;
    std::map<int, Matrix> blocks;
    std::map<int, long long> block_dims;
    long long dim = 0;
};

struct TruncatedFc {
    std::vector<int> A;
    int D = 0;
    bool opposite = false;
    std::vector<std::vector<Exps>> mons;             // monomials per degree
    std::map<int, std::vector<std::size_t>> wbasis;  // drop -> flat indices
    std::vector<FcLayer> layers;                     // degrees 0..D
};

// Degreewise bases of the tensor-valued polynomials whose order-k expansion
// coefficients along every pairwise diagonal lie in the k-th filtration
// subspace of that pair. opposite = true uses the reversed filtration
// (smallest summands first). Materializes every layer; keep D modest.
TruncatedFc fc_truncated(const std::vector<int>& A, int D, bool opposite = false);

struct MtReport {
    CharTable table;        // T = 0 only: entry (drop, degree)
    long long expected = 0; // prod a_i
    long long upper = 0;    // sum of quotient layer dims through D+1
    long long lower = 0;    // rank of the killing map (T != 0), else = upper
    bool stabilized = false;
    bool certified = false;
    long long total = -1;   // certified total, -1 when uncertified
    std::string detail;
};

// Graded dimensions of the quotient by the submodule generated by
// (z_i - t_i). Supports T = 0, pairwise distinct T, and T with exactly one
// coincident pair. D must meet the stabilization guard sum(a_i)*(n-1)+n.
MtReport mt_character(const std::vector<int>& A, const std::vector<Rat>& T, int D);

// A tensor-valued polynomial: one polynomial in n variables per flat tensor
// index (mixed-radix over A, last factor fastest).
struct TensorPoly {
    std::vector<int> A;
    std::vector<MultiPoly> comp;
};

TensorPoly fc_element(const TruncatedFc& fc, int d, int drop, std::size_t row);

// Contraction of f (x) h through the invariant forms of both factors,
// divided exactly by (z_1-z_2)^{min(a_1,a_2)-1}. n = 2 only. Throws if the
// division leaves a remainder.
MultiPoly pairing_quotient(const TensorPoly& f, const TensorPoly& h);

// Rank of the Gram matrix of pairing_quotient evaluated at T, between the
// layers of the standard-filtration space and the opposite-filtration space,
// both truncated at degree dcap. n = 2 only.
long long pairing_gram_rank(const std::vector<int>& A, const std::vector<Rat>& T,
                            int dcap);

}  // namespace qfusion
