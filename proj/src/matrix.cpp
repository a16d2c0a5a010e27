#include <qfusion/matrix.hpp>

#include <stdexcept>
#include <utility>

namespace qfusion {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void Matrix::append_row(const std::vector<Rat>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rat> Matrix::row(std::size_t i) const {
    return std::vector<Rat>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

namespace {

// Clear denominators row by row; preserves the row space and keeps the
// Bareiss divisions exact over the integers.
void scale_rows_integral(Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = lcm(l, m(i, j).get_den());
        if (l == 1) continue;
        Rat f(l);
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= f;
    }
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

RrefResult rref(const Matrix& input) {
    RrefResult res;
    res.m = input;
    Matrix& m = res.m;
    scale_rows_integral(m);

    const std::size_t rows = m.rows(), cols = m.cols();
    Rat prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        swap_rows(m, p, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;

    // Back-substitution to reduced form: unit pivots, cleared columns above.
    for (std::size_t k = res.rank; k-- > 0;) {
        const std::size_t c = res.pivot_cols[k];
        Rat inv = m(k, c);
        for (std::size_t j = c; j < cols; ++j) m(k, j) /= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return res;
}

std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

Matrix row_basis(const Matrix& m) {
    RrefResult r = rref(m);
    Matrix out(r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r.m(i, j);
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    return kernel_from_rref(rref(m), m.cols());
}

Matrix kernel_from_rref(const RrefResult& r, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    Matrix out(0, cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_cols[i]] = -r.m(i, f);
        out.append_row(v);
    }
    return out;
}

Matrix row_stack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("row_stack: width mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

// Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry the
// intersection in their right half.
Matrix subspace_intersection(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("subspace_intersection: width mismatch");
    const std::size_t c = a.cols();
    Matrix block(a.rows() + b.rows(), 2 * c);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < c; ++j) {
            block(i, j) = a(i, j);
            block(i, c + j) = a(i, j);
        }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < c; ++j) block(a.rows() + i, j) = b(i, j);

    RrefResult r = rref(block);
    Matrix inter(0, c);
    for (std::size_t i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < c && left_zero; ++j)
            if (r.m(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<Rat> v(c);
        for (std::size_t j = 0; j < c; ++j) v[j] = r.m(i, c + j);
        inter.append_row(v);
    }
    return row_basis(inter);
}

bool same_row_span(const Matrix& a, const Matrix& b) {
    return row_basis(a) == row_basis(b);
}

bool row_span_contains(const RrefResult& basis, std::vector<Rat> v) {
    for (std::size_t i = 0; i < basis.rank; ++i) {
        const std::size_t c = basis.pivot_cols[i];
        if (v[c] == 0) continue;
        Rat f = v[c];
        for (std::size_t j = c; j < basis.m.cols(); ++j) v[j] -= f * basis.m(i, j);
    }
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

bool IncrementalEchelon::add(std::vector<Rat> v) {
    if (v.size() != cols_) throw std::invalid_argument("IncrementalEchelon::add: width mismatch");
    for (auto& [p, row] : rows_) {
        if (v[p] == 0) continue;
        Rat f = v[p];
        for (std::size_t j = p; j < cols_; ++j) v[j] -= f * row[j];
    }
    std::size_t lead = 0;
    while (lead < cols_ && v[lead] == 0) ++lead;
    if (lead == cols_) return false;
    Rat inv = v[lead];
    for (std::size_t j = lead; j < cols_; ++j) v[j] /= inv;
    rows_.emplace(lead, std::move(v));
    return true;
}

std::vector<Rat> IncrementalEchelon::reduce(std::vector<Rat> v) const {
    for (const auto& [p, row] : rows_) {
        if (v[p] == 0) continue;
        Rat f = v[p];
        for (std::size_t j = p; j < cols_; ++j) v[j] -= f * row[j];
    }
    return v;
}

bool IncrementalEchelon::contains(std::vector<Rat> v) const {
    v = reduce(std::move(v));
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace qfusion
