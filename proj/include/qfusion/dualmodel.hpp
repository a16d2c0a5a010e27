#pragma once

#include <vector>

#include "qfusion/poly.hpp"
#include "qfusion/qchar.hpp"

namespace qfusion {

// Partitions of s with at most k parts, each part at most b, written as
// weakly decreasing vectors padded with zeros to length k.
std::vector<std::vector<int>> box_partitions(int k, int b, long long s);

// Monomial symmetric polynomial m_lambda in k variables: the sum of all
// distinct permutations of the exponent vector lambda (padded to length k).
MultiPoly msym(const std::vector<int>& lambda, int k);

// Merge the first i variables of f into a single new variable z and keep the
// remaining k-i as spectators. Output width is 1+(k-i); variable 0 is z.
MultiPoly merge_expand(const MultiPoly& f, int i);

// Dimension of the degree-s slice of the space of symmetric polynomials in k
// variables, with each z-degree < |A|, whose i-variable merges vanish to the
// order forced by A for every i = 1..k.
long long dual_dimension_limit(const std::vector<int>& A, int k, long long s);

// Non-homogeneous variant at a tuple T of distinct points: merges of width
// a_j <= k must vanish at t_j. Counts the full (ungraded) solution space.
long long dual_dimension_at_T(const std::vector<int>& A, const std::vector<Rat>& T, int k);

// Table of dual_dimension_limit over 0 <= k <= kmax, 0 <= s <= k(|A|-1).
CharTable dual_char(const std::vector<int>& A, long long kmax);

}  // namespace qfusion
