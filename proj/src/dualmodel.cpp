#include "qfusion/dualmodel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "qfusion/matrix.hpp"

namespace qfusion {

namespace {

void box_rec(int maxpart, int slots, long long s, std::vector<int>& cur,
             std::vector<std::vector<int>>& out, int k) {
    if (s == 0) {
        std::vector<int> padded = cur;
        padded.resize(k, 0);
        out.push_back(std::move(padded));
        return;
    }
    if (slots == 0) return;
    for (int p = std::min<long long>(maxpart, s); p >= 1; --p) {
        cur.push_back(p);
        box_rec(p, slots - 1, s - p, cur, out, k);
        cur.pop_back();
    }
}

void check_parts_list(const std::vector<int>& A) {
    if (A.empty()) throw std::invalid_argument("empty part list");
    for (int a : A)
        if (a < 1) throw std::invalid_argument("parts must be positive");
}

}  // namespace

std::vector<std::vector<int>> box_partitions(int k, int b, long long s) {
    if (k < 0 || b < 0) throw std::invalid_argument("negative box");
    std::vector<std::vector<int>> out;
    if (s < 0 || s > (long long)k * b) return out;
    std::vector<int> cur;
    box_rec(b, k, s, cur, out, k);
    return out;
}

MultiPoly msym(const std::vector<int>& lambda, int k) {
    if ((int)lambda.size() > k) throw std::invalid_argument("too many parts");
    Exps e(lambda.begin(), lambda.end());
    e.resize(k, 0);
    std::sort(e.begin(), e.end());
    MultiPoly f(k);
    do {
        f.add_term(e, Rat(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return f;
}

MultiPoly merge_expand(const MultiPoly& f, int i) {
    const int k = (int)f.nvars();
    if (i < 1 || i > k) throw std::invalid_argument("merge width out of range");
    MultiPoly g(1 + k - i);
    for (const auto& [e, c] : f.terms()) {
        Exps m(1 + k - i, 0);
        for (int j = 0; j < i; ++j) m[0] += e[j];
        for (int j = i; j < k; ++j) m[1 + j - i] = e[j];
        g.add_term(m, c);
    }
    return g;
}

long long dual_dimension_limit(const std::vector<int>& A, int k, long long s) {
    check_parts_list(A);
    if (k < 0 || s < 0) throw std::invalid_argument("negative degree");
    const int n = (int)A.size();
    if (k == 0) return s == 0 ? 1 : 0;
    const auto basis = box_partitions(k, n - 1, s);
    if (basis.empty()) return 0;

    std::map<std::pair<long long, Exps>, std::vector<Rat>> rows;
    for (int i = 1; i <= k; ++i) {
        long long di = 0;
        for (int a : A) di += std::max<long long>(0, i + 1 - a);
        if (di == 0) continue;
        for (std::size_t col = 0; col < basis.size(); ++col) {
            MultiPoly g = merge_expand(msym(basis[col], k), i);
            for (const auto& [e, c] : g.terms()) {
                if (e[0] >= di) continue;
                auto& row = rows[{i, e}];
                row.resize(basis.size(), Rat(0));
                row[col] += c;
            }
        }
    }

    Matrix m(0, basis.size());
    for (auto& [key, row] : rows) {
        row.resize(basis.size(), Rat(0));
        m.append_row(row);
    }
    return (long long)basis.size() - (long long)rank_of(m);
}

long long dual_dimension_at_T(const std::vector<int>& A, const std::vector<Rat>& T, int k) {
    check_parts_list(A);
    if (T.size() != A.size()) throw std::invalid_argument("|T| != |A|");
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = i + 1; j < T.size(); ++j)
            if (T[i] == T[j]) throw std::invalid_argument("points must be distinct");
    if (k < 0) throw std::invalid_argument("negative level");
    const int n = (int)A.size();
    if (k == 0) return 1;

    std::vector<std::vector<int>> basis;
    for (long long s = 0; s <= (long long)k * (n - 1); ++s)
        for (auto& lam : box_partitions(k, n - 1, s)) basis.push_back(lam);

    std::map<std::pair<long long, Exps>, std::vector<Rat>> rows;
    for (int j = 0; j < n; ++j) {
        if (A[j] > k) continue;
        for (std::size_t col = 0; col < basis.size(); ++col) {
            MultiPoly g = merge_expand(msym(basis[col], k), A[j]);
            for (const auto& [e, c] : g.terms()) {
                Exps spect(e.begin() + 1, e.end());
                auto& row = rows[{j, spect}];
                row.resize(basis.size(), Rat(0));
                row[col] += c * rat_pow(T[j], (unsigned long)e[0]);
            }
        }
    }

    Matrix m(0, basis.size());
    for (auto& [key, row] : rows) {
        row.resize(basis.size(), Rat(0));
        m.append_row(row);
    }
    return (long long)basis.size() - (long long)rank_of(m);
}

CharTable dual_char(const std::vector<int>& A, long long kmax) {
    CharTable t;
    const int n = (int)A.size();
    for (long long k = 0; k <= kmax; ++k)
        for (long long s = 0; s <= k * (n - 1); ++s)
            t.add(k, s, dual_dimension_limit(A, (int)k, s));
    return t;
}

}  // namespace qfusion
