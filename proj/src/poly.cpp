#include <qfusion/poly.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qfusion {

SparsePoly SparsePoly::constant(int nvars, const Rat& c) {
    SparsePoly p(nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(int nvars, const Exps& e, const Rat& c) {
    if ((int)e.size() != nvars) throw std::invalid_argument("monomial: width mismatch");
    SparsePoly p(nvars);
    p.add_term(e, c);
    return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable: index out of range");
    Exps e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e);
}

void SparsePoly::add_term(const Exps& e, const Rat& c) {
    if ((int)e.size() != nvars_) throw std::invalid_argument("add_term: width mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly +: width mismatch");
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly -: width mismatch");
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly *: width mismatch");
    SparsePoly r(nvars_);
    Exps e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    SparsePoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

SparsePoly SparsePoly::pow(unsigned long k) const {
    SparsePoly acc = constant(nvars_, 1);
    SparsePoly b = *this;
    while (k) {
        if (k & 1) acc = acc * b;
        if (k >>= 1) b = b * b;
    }
    return acc;
}

Bidegree exps_bidegree(const Exps& e) {
    Bidegree d;
    for (std::size_t i = 0; i < e.size(); ++i) {
        d.z += e[i];
        d.q += (long long)i * e[i];
    }
    return d;
}

bool is_bihomogeneous(const EPoly& p) {
    if (p.is_zero()) return true;
    const Bidegree d = exps_bidegree(p.terms().begin()->first);
    for (const auto& [e, c] : p.terms())
        if (exps_bidegree(e) != d) return false;
    return true;
}

Bidegree bidegree(const EPoly& p) {
    if (p.is_zero() || !is_bihomogeneous(p))
        throw std::logic_error("bidegree: not a nonzero bihomogeneous polynomial");
    return exps_bidegree(p.terms().begin()->first);
}

bool is_zhomogeneous(const EPoly& p) {
    if (p.is_zero()) return true;
    const long long z = exps_bidegree(p.terms().begin()->first).z;
    for (const auto& [e, c] : p.terms())
        if (exps_bidegree(e).z != z) return false;
    return true;
}

long long zdegree(const EPoly& p) {
    if (p.is_zero() || !is_zhomogeneous(p))
        throw std::logic_error("zdegree: not a nonzero z-homogeneous polynomial");
    return exps_bidegree(p.terms().begin()->first).z;
}

EPoly bihomogeneous_component(const EPoly& p, const Bidegree& d) {
    EPoly r(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (exps_bidegree(e) == d) r.add_term(e, c);
    return r;
}

namespace {

void enumerate_exps(int m, int var, long long z_left, long long q_left, Exps& cur,
                    std::vector<Exps>& out) {
    if (var == m) {
        if (z_left == 0 && q_left == 0) out.push_back(cur);
        return;
    }
    // e_var soaks up to z_left copies; q budget caps it for var >= 1.
    long long max_e = z_left;
    if (var >= 1) max_e = std::min(max_e, q_left / var);
    for (long long k = 0; k <= max_e; ++k) {
        cur[var] = (int)k;
        enumerate_exps(m, var + 1, z_left - k, q_left - (long long)var * k, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Exps> monomial_basis(int m, const Bidegree& d) {
    std::vector<Exps> out;
    if (d.z < 0 || d.q < 0) return out;
    if (m == 0) {
        if (d.z == 0 && d.q == 0) out.push_back(Exps{});
        return out;
    }
    Exps cur(m, 0);
    enumerate_exps(m, 0, d.z, d.q, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<Exps> degree_monomials(int m, long long d) {
    std::vector<Exps> out;
    if (d < 0 || m <= 0) {
        if (m == 0 && d == 0) out.push_back(Exps{});
        return out;
    }
    Exps cur(m, 0);
    // Depth-first over positions, largest exponent first at each position,
    // yields lexicographic descending; reverse for ascending.
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
        if (pos == m - 1) {
            cur[pos] = (int)left;
            out.push_back(cur);
            return;
        }
        for (long long e = left; e >= 0; --e) {
            cur[pos] = (int)e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, d);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Rat> coefficient_vector(const EPoly& p, const std::vector<Exps>& basis) {
    std::map<Exps, std::size_t, GrlexLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<Rat> v(basis.size());
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw std::invalid_argument("coefficient_vector: term outside basis");
        v[it->second] = c;
    }
    return v;
}

EPoly widen(const EPoly& p, int new_nvars) {
    if (new_nvars < p.nvars()) throw std::invalid_argument("widen: narrower target");
    EPoly r(new_nvars);
    for (const auto& [e, c] : p.terms()) {
        Exps w = e;
        w.resize(new_nvars, 0);
        r.add_term(w, c);
    }
    return r;
}

SparsePoly substitute(const SparsePoly& p, const std::vector<SparsePoly>& images) {
    if ((int)images.size() != p.nvars())
        throw std::invalid_argument("substitute: need one image per variable");
    int width = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != width) throw std::invalid_argument("substitute: ragged images");

    // Power cache: shift ideals raise the same linear forms repeatedly.
    std::map<std::pair<int, int>, SparsePoly> powers;
    auto power = [&](int var, int k) -> const SparsePoly& {
        auto it = powers.find({var, k});
        if (it != powers.end()) return it->second;
        SparsePoly v = images[var].pow(k);
        return powers.emplace(std::make_pair(var, k), std::move(v)).first->second;
    };

    SparsePoly r(width);
    for (const auto& [e, c] : p.terms()) {
        SparsePoly t = SparsePoly::constant(width, c);
        for (int i = 0; i < p.nvars(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        r = r + t;
    }
    return r;
}

std::string poly_str(const SparsePoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += rat_str(it->second);
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            const int a = it->first[i];
            if (a == 0) continue;
            out += "*" + var + std::to_string(i);
            if (a > 1) out += "^" + std::to_string(a);
        }
    }
    return out;
}

}  // namespace qfusion
