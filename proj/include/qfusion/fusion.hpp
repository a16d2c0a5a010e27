#pragma once

#include <string>
#include <vector>

#include "qfusion/matrix.hpp"
#include "qfusion/qchar.hpp"
#include "qfusion/rat.hpp"

namespace qfusion {

// Matrices of the multiplication operators e_k, k = 0..|A|-1, acting on the
// tensor algebra attached to (A, Z) with e_k = sum_i z_i^k y_i. Column
// convention: column j holds the image of basis vector j.
std::vector<Matrix> evaluation_operators(const std::vector<int>& A,
                                         const std::vector<Rat>& Z);

// Bigraded table of the cyclic filtration: entry (k, s) is the rank growth of
// span{ e^M u : zdeg M = k, qdeg M <= s } at step s. Z must be distinct.
CharTable fusion_character(const std::vector<int>& A, const std::vector<Rat>& Z);

struct FiltrationReport {
    bool ok = false;
    bool char_match = false;
    bool annihilator_match = false;
    CharTable table;
    std::string detail;
};

// Checks the filtration character against the quotient by the mirror limit
// ideal, and the per-bidegree annihilator of the cyclic vector against the
// components of that ideal.
FiltrationReport verify_filtration(const std::vector<int>& A,
                                   const std::vector<Rat>& Z);

}  // namespace qfusion
