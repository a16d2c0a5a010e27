#pragma once

#include <qfusion/rat.hpp>

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qfusion {

// Dense model of ⊗_i C[y_i]/(y_i^{a_i}): coordinates over the monomial
// basis y^c, 0 <= c_i < a_i, mixed-radix indexed. Small by contract
// (prod a_i stays in the thousands), so everything is a flat vector.
struct TensorAlg {
    std::vector<int> A;
    std::vector<std::size_t> stride;
    std::size_t dim = 1;

    explicit TensorAlg(std::vector<int> a) : A(std::move(a)) {
        stride.resize(A.size());
        for (std::size_t i = A.size(); i-- > 0;) {
            if (A[i] < 1) throw std::invalid_argument("TensorAlg: entries must be >= 1");
            stride[i] = dim;
            dim *= (std::size_t)A[i];
        }
    }

    std::size_t n() const { return A.size(); }

    std::size_t index(const std::vector<int>& c) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < A.size(); ++i) idx += stride[i] * (std::size_t)c[i];
        return idx;
    }

    std::vector<int> exps_of(std::size_t idx) const {
        std::vector<int> c(A.size());
        for (std::size_t i = 0; i < A.size(); ++i) {
            c[i] = (int)(idx / stride[i]);
            idx %= stride[i];
        }
        return c;
    }

    int ydeg(std::size_t idx) const {
        int d = 0;
        for (std::size_t i = 0; i < A.size(); ++i) {
            d += (int)(idx / stride[i]);
            idx %= stride[i];
        }
        return d;
    }

    std::vector<std::size_t> degree_indices(int k) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim; ++i)
            if (ydeg(i) == k) out.push_back(i);
        return out;
    }

    // v * (sum_a w[a] y_a); truncation drops anything hitting y_a^{A[a]}.
    std::vector<Rat> mul_linear(const std::vector<Rat>& v, const std::vector<Rat>& w) const {
        std::vector<Rat> out(dim);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            if (v[idx] == 0) continue;
            std::vector<int> c = exps_of(idx);
            for (std::size_t a = 0; a < A.size(); ++a) {
                if (w[a] == 0 || c[a] >= A[a] - 1) continue;
                out[idx + stride[a]] += v[idx] * w[a];
            }
        }
        return out;
    }
};

}  // namespace qfusion
