#include "qfusion/fusion.hpp"

#include <sstream>
#include <stdexcept>

#include "qfusion/ideals.hpp"
#include "qfusion/poly.hpp"
#include "qfusion/tensoralg.hpp"

namespace qfusion {

namespace {

void check_inputs(const std::vector<int>& A, const std::vector<Rat>& Z) {
    if (A.empty()) throw std::invalid_argument("empty part list");
    for (int a : A)
        if (a < 1) throw std::invalid_argument("parts must be positive");
    if (Z.size() != A.size()) throw std::invalid_argument("|Z| != |A|");
    for (std::size_t i = 0; i < Z.size(); ++i)
        for (std::size_t j = i + 1; j < Z.size(); ++j)
            if (Z[i] == Z[j]) throw std::invalid_argument("points must be distinct");
}

// w[i] = z_i^k, the linear form implementing e_k.
std::vector<std::vector<Rat>> operator_forms(const TensorAlg& B,
                                             const std::vector<Rat>& Z) {
    const int n = B.n();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) w[k][i] = rat_pow(Z[i], (unsigned long)k);
    return w;
}

// Image of the cyclic vector under the e-monomial with the given exponents.
std::vector<Rat> monomial_image(const TensorAlg& B,
                                const std::vector<std::vector<Rat>>& w,
                                const Exps& mon) {
    std::vector<Rat> v(B.dim, Rat(0));
    v[0] = Rat(1);
    for (std::size_t k = 0; k < mon.size(); ++k)
        for (int rep = 0; rep < mon[k]; ++rep) v = B.mul_linear(v, w[k]);
    return v;
}

std::vector<Rat> restrict_coords(const std::vector<Rat>& v,
                                 const std::vector<std::size_t>& idx) {
    std::vector<Rat> out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
    return out;
}

}  // namespace

std::vector<Matrix> evaluation_operators(const std::vector<int>& A,
                                         const std::vector<Rat>& Z) {
    check_inputs(A, Z);
    TensorAlg B(A);
    auto w = operator_forms(B, Z);
    std::vector<Matrix> ops;
    for (int k = 0; k < B.n(); ++k) {
        Matrix m(B.dim, B.dim);
        for (std::size_t j = 0; j < B.dim; ++j) {
            std::vector<Rat> unit(B.dim, Rat(0));
            unit[j] = Rat(1);
            auto img = B.mul_linear(unit, w[k]);
            for (std::size_t r = 0; r < B.dim; ++r) m(r, j) = img[r];
        }
        ops.push_back(std::move(m));
    }
    return ops;
}

CharTable fusion_character(const std::vector<int>& A, const std::vector<Rat>& Z) {
    check_inputs(A, Z);
    TensorAlg B(A);
    auto w = operator_forms(B, Z);
    const int n = B.n();
    long long kcap = 0;
    for (int a : A) kcap += a - 1;

    CharTable table;
    for (long long kz = 0; kz <= kcap; ++kz) {
        auto idx = B.degree_indices((int)kz);
        IncrementalEchelon ech(idx.size());
        long long prev = 0;
        for (long long s = 0; s <= kz * (n - 1); ++s) {
            for (const auto& mon : monomial_basis(n, Bidegree{kz, s}))
                ech.add(restrict_coords(monomial_image(B, w, mon), idx));
            table.add(kz, s, (long long)ech.rank() - prev);
            prev = (long long)ech.rank();
        }
    }
    return table;
}

FiltrationReport verify_filtration(const std::vector<int>& A,
                                   const std::vector<Rat>& Z) {
    FiltrationReport rep;
    rep.table = fusion_character(A, Z);

    long long kcap = 0;
    for (int a : A) kcap += a - 1;
    IdealSpec i0 = build_I0(A);
    ComponentCache cache(i0);
    CharTable qc = quotient_char(i0, kcap);
    rep.char_match = (rep.table == qc);
    if (!rep.char_match) rep.detail = "character tables differ";

    TensorAlg B(A);
    auto w = operator_forms(B, Z);
    const int n = B.n();
    rep.annihilator_match = true;
    for (long long kz = 0; kz <= kcap && rep.annihilator_match; ++kz) {
        auto idx = B.degree_indices((int)kz);
        IncrementalEchelon filt(idx.size());
        for (long long s = 0; s <= kz * (n - 1); ++s) {
            auto mons = monomial_basis(n, Bidegree{kz, s});
            std::vector<std::vector<Rat>> imgs;
            Matrix m(idx.size(), mons.size());
            for (std::size_t j = 0; j < mons.size(); ++j) {
                auto v = restrict_coords(monomial_image(B, w, mons[j]), idx);
                auto red = filt.reduce(v);
                for (std::size_t r = 0; r < idx.size(); ++r) m(r, j) = red[r];
                imgs.push_back(std::move(v));
            }
            Matrix ker = kernel_basis(m);
            const GradedBasis& cmp = cache.component(Bidegree{kz, s});
            if (!same_row_span(ker, cmp.reduced)) {
                rep.annihilator_match = false;
                std::ostringstream os;
                os << "annihilator mismatch at (" << kz << "," << s << ")";
                rep.detail = os.str();
                break;
            }
            for (auto& v : imgs) filt.add(std::move(v));
        }
    }
    rep.ok = rep.char_match && rep.annihilator_match;
    return rep;
}

}  // namespace qfusion
