#include <qfusion/ideals.hpp>

#include <qfusion/tensoralg.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qfusion {

namespace {

void check_parts(const std::vector<int>& A) {
    if (A.empty()) throw std::invalid_argument("empty part list");
    for (int a : A)
        if (a < 1) throw std::invalid_argument("parts must be >= 1");
}

void check_distinct(const std::vector<Rat>& Z) {
    for (std::size_t i = 0; i < Z.size(); ++i)
        for (std::size_t j = i + 1; j < Z.size(); ++j)
            if (Z[i] == Z[j])
                throw std::invalid_argument("points must be pairwise distinct");
}

std::string append_note(const std::string& base, const std::string& step) {
    return base.empty() ? step : base + "; " + step;
}

bool all_bihom(const std::vector<EPoly>& gens) {
    for (const EPoly& g : gens)
        if (!is_bihomogeneous(g)) return false;
    return true;
}

// All zdeg-k monomials, qdeg ascending, grlex within a bidegree. This is the
// ambient order every z-layer matrix uses.
std::vector<Exps> zlayer_monomials(int width, long long k) {
    std::vector<Exps> out;
    for (long long s = 0; s <= k * (width - 1); ++s) {
        auto part = monomial_basis(width, {k, s});
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Rat multinomial(long long total, const Exps& c) {
    Int acc(1);
    unsigned long rem = (unsigned long)total;
    for (int x : c) {
        acc *= binom(rem, (unsigned long)x);
        rem -= (unsigned long)x;
    }
    return Rat(acc);
}

// z^s coefficient of e(z)^k: sum of multinomial(k, c) e^c over bidegree (k, s).
EPoly current_power_component(int width, long long k, long long s) {
    EPoly p(width);
    for (const Exps& c : monomial_basis(width, {k, s}))
        p.add_term(c, multinomial(k, c));
    return p;
}

std::vector<EPoly> kernel_to_polys(const Matrix& ker,
                                   const std::vector<Exps>& basis, int width) {
    std::vector<EPoly> out;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        EPoly p(width);
        for (std::size_t j = 0; j < ker.cols(); ++j)
            if (ker(i, j) != 0) p.add_term(basis[j], ker(i, j));
        if (!p.is_zero()) out.push_back(p);
    }
    return out;
}

std::vector<EPoly> shift_images(int width, const Rat& c) {
    std::vector<EPoly> img;
    for (int i = 0; i < width; ++i) {
        EPoly p(width);
        for (int j = 0; j <= i; ++j) {
            Exps e((std::size_t)width, 0);
            e[i - j] = 1;
            p.add_term(e, Rat(binom((unsigned long)i, (unsigned long)j)) *
                              rat_pow(Rat(-c), (unsigned long)j));
        }
        img.push_back(p);
    }
    return img;
}

}  // namespace

IdealSpec gens_JA_T(const std::vector<int>& A, const std::vector<Rat>& T) {
    check_parts(A);
    if (T.size() != A.size()) throw std::invalid_argument("|T| != |A|");
    check_distinct(T);
    const int n = (int)A.size();
    IdealSpec s;
    s.family = IdealFamily::JA_T;
    s.width = n;
    s.A = A;
    s.pts = T;
    for (int p = 0; p < n; ++p) {
        EPoly cur(n);
        for (int i = 0; i < n; ++i) {
            Exps e((std::size_t)n, 0);
            e[i] = 1;
            cur.add_term(e, rat_pow(T[p], (unsigned long)i));
        }
        s.gens.push_back(cur.pow((unsigned long)A[p]));
    }
    s.bihomogeneous = all_bihom(s.gens);
    return s;
}

IdealSpec gens_JA_limit(const std::vector<int>& A) {
    check_parts(A);
    const int n = (int)A.size();
    long long suma = 0;
    for (int a : A) suma += a;
    IdealSpec s;
    s.family = IdealFamily::JA_LIMIT;
    s.width = n;
    s.A = A;
    s.bihomogeneous = true;
    for (long long i = 1; i <= suma; ++i) {
        long long di = 0;
        for (int a : A) di += std::max<long long>(0, i + 1 - a);
        const long long top = i * (n - 1);
        if (i >= suma - n + 1 && di <= top)
            throw std::logic_error("degree bound fails to saturate the layer");
        for (long long deg = 0; deg < di && deg <= top; ++deg) {
            EPoly c = current_power_component(n, i, deg);
            if (!c.is_zero()) s.gens.push_back(c);
        }
    }
    return s;
}

IdealSpec gens_JA_limit_window(const std::vector<int>& A, long long qcap) {
    check_parts(A);
    if (qcap < 0) throw std::invalid_argument("qcap must be nonnegative");
    const int n = (int)A.size();
    long long suma = 0;
    for (int a : A) suma += a;
    IdealSpec s;
    s.family = IdealFamily::JA_LIMIT;
    s.width = n;
    s.A = A;
    s.smax = qcap;
    s.bihomogeneous = true;
    s.note = "qdeg window";
    for (long long i = 1; i <= suma; ++i) {
        long long di = 0;
        for (int a : A) di += std::max<long long>(0, i + 1 - a);
        const long long top = i * (n - 1);
        if (i >= suma - n + 1 && di <= top)
            throw std::logic_error("degree bound fails to saturate the layer");
        const long long stop = std::min(di - 1, std::min(top, qcap));
        for (long long deg = 0; deg <= stop; ++deg) {
            EPoly c = current_power_component(n, i, deg);
            if (!c.is_zero()) s.gens.push_back(c);
        }
    }
    return s;
}

IdealSpec gens_IZ(const std::vector<int>& A, const std::vector<Rat>& Z) {
    check_parts(A);
    if (Z.size() != A.size()) throw std::invalid_argument("|Z| != |A|");
    check_distinct(Z);
    const int n = (int)A.size();
    TensorAlg B(A);
    long long kcap = 1;
    for (int a : A) kcap += a - 1;

    // e_i acts as the linear form sum_p z_p^i y_p.
    std::vector<std::vector<Rat>> w(n);
    for (int i = 0; i < n; ++i) {
        w[i].resize(n);
        for (int p = 0; p < n; ++p) w[i][p] = rat_pow(Z[p], (unsigned long)i);
    }

    IdealSpec s;
    s.family = IdealFamily::I_AT_Z;
    s.width = n;
    s.A = A;
    s.pts = Z;
    for (long long k = 1; k <= kcap; ++k) {
        const auto mons = zlayer_monomials(n, k);
        const auto rows = B.degree_indices((int)k);
        Matrix M(rows.size(), mons.size());
        for (std::size_t j = 0; j < mons.size(); ++j) {
            std::vector<Rat> v(B.dim, Rat(0));
            v[0] = 1;
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < mons[j][i]; ++r) v = B.mul_linear(v, w[i]);
            for (std::size_t t = 0; t < rows.size(); ++t) M(t, j) = v[rows[t]];
        }
        for (EPoly& g : kernel_to_polys(kernel_basis(M), mons, n))
            s.gens.push_back(std::move(g));
    }
    s.bihomogeneous = all_bihom(s.gens);
    return s;
}

IdealSpec gens_Jk_window(int k, int width, long long smax) {
    if (k < 1) throw std::invalid_argument("level must be >= 1");
    if (smax < 0) throw std::invalid_argument("negative window");
    if (width <= smax) throw std::invalid_argument("window needs width > smax");
    IdealSpec s;
    s.family = IdealFamily::JK_WINDOW;
    s.width = width;
    s.level = k;
    s.smax = smax;
    s.bihomogeneous = true;
    const long long cap = std::min<long long>(smax, (long long)k * (width - 1));
    for (long long deg = 0; deg <= cap; ++deg) {
        EPoly c = current_power_component(width, k, deg);
        if (!c.is_zero()) s.gens.push_back(c);
    }
    return s;
}

IdealSpec opp(const IdealSpec& spec) {
    IdealSpec out;
    out.family = IdealFamily::DERIVED;
    out.width = spec.width;
    out.A = spec.A;
    out.pts = spec.pts;
    out.level = spec.level;
    out.smax = spec.smax;
    out.note = append_note(spec.note, "opp");
    for (const EPoly& g : spec.gens) {
        EPoly h(spec.width);
        for (const auto& [e, c] : g.terms()) h.add_term(Exps(e.rbegin(), e.rend()), c);
        out.gens.push_back(h);
    }
    out.bihomogeneous = all_bihom(out.gens);
    return out;
}

IdealSpec build_I0(const std::vector<int>& A) {
    IdealSpec s = opp(gens_JA_limit(A));
    s.family = IdealFamily::I0;
    s.note = "mirror of the limit family";
    s.pts.assign(A.size(), Rat(0));
    return s;
}

IdealSpec shift_ideal(const IdealSpec& spec, const Rat& c) {
    IdealSpec out = spec;
    out.family = IdealFamily::DERIVED;
    out.note = append_note(spec.note, "shift " + rat_str(c));
    const auto img = shift_images(spec.width, c);
    out.gens.clear();
    for (const EPoly& g : spec.gens) out.gens.push_back(substitute(g, img));
    for (Rat& p : out.pts) p = p + c;
    out.bihomogeneous = all_bihom(out.gens);
    return out;
}

IdealSpec st_flow(const IdealSpec& spec, const Rat& t) {
    if (t == 0) throw std::invalid_argument("flow parameter must be nonzero");
    IdealSpec out = spec;
    out.family = IdealFamily::DERIVED;
    out.note = append_note(spec.note, "st " + rat_str(t));
    out.gens.clear();
    for (const EPoly& g : spec.gens) {
        EPoly h(spec.width);
        for (const auto& [e, c] : g.terms())
            h.add_term(e, c * rat_pow(t, (unsigned long)exps_bidegree(e).q));
        out.gens.push_back(h);
    }
    for (Rat& p : out.pts) p = p / t;
    out.bihomogeneous = spec.bihomogeneous;
    return out;
}

namespace {

// One group of coinciding coordinates: its parts, their common value, and a
// lazily built model of W = C[e_0..e_{m-1}] / (origin ideal shifted to t).
struct LocalFactor {
    int width = 0;
    Rat t;
    IdealSpec ideal;
    long long top = 0;  // sum (a_p - 1); the quotient vanishes above

    struct Layer {
        std::vector<Exps> amb;
        std::map<Exps, std::size_t> pos;
        std::vector<std::pair<std::size_t, std::vector<Rat>>> red;  // pivot, row
        std::vector<std::size_t> free_cols;
    };
    std::map<long long, Layer> layers;
    std::map<std::pair<long long, int>, Matrix> mul;  // (degree, global var)
};

const LocalFactor::Layer& factor_layer(LocalFactor& F, long long d) {
    auto it = F.layers.find(d);
    if (it != F.layers.end()) return it->second;
    LocalFactor::Layer L;
    ZLayer zl = ideal_zlayer(F.ideal, d);
    L.amb = zl.basis;
    for (std::size_t i = 0; i < L.amb.size(); ++i) L.pos.emplace(L.amb[i], i);
    for (std::size_t r = 0; r < zl.red.rank; ++r)
        L.red.emplace_back(zl.red.pivot_cols[r], zl.red.m.row(r));
    std::vector<bool> isp(L.amb.size(), false);
    for (std::size_t p : zl.red.pivot_cols) isp[p] = true;
    for (std::size_t c = 0; c < L.amb.size(); ++c)
        if (!isp[c]) L.free_cols.push_back(c);
    return F.layers.emplace(d, std::move(L)).first->second;
}

// Truncated expansion of z^i at t over the local jet coordinates: z^i maps to
// sum_l c_l e_l with c_l = sum_p C(i,p) t^{i-p} C(p,l) (-t)^{p-l}, p up to the
// jet order. At t = 0 this degenerates to e_i (or 0 past the order).
std::vector<Rat> local_coeffs(int width, const Rat& t, int i) {
    std::vector<Rat> c((std::size_t)width, Rat(0));
    for (int l = 0; l < width; ++l) {
        Rat acc(0);
        for (int p = l; p <= std::min(width - 1, i); ++p) {
            Rat term = Rat(binom((unsigned long)i, (unsigned long)p)) *
                       rat_pow(t, (unsigned long)(i - p));
            term *= Rat(binom((unsigned long)p, (unsigned long)l)) *
                    rat_pow(Rat(-t), (unsigned long)(p - l));
            acc += term;
        }
        c[l] = acc;
    }
    return c;
}

struct AtPointContext {
    std::vector<LocalFactor> F;
    std::vector<std::vector<std::vector<Rat>>> L;  // [factor][global var][local var]
};

// Multiplication by the factor-j image of global e_i, in quotient coordinates.
const Matrix& factor_mul(AtPointContext& ctx, std::size_t j, long long d, int gvar) {
    LocalFactor& F = ctx.F[j];
    auto key = std::make_pair(d, gvar);
    auto it = F.mul.find(key);
    if (it != F.mul.end()) return it->second;

    const auto& from = factor_layer(F, d);
    const auto& to = factor_layer(F, d + 1);
    const auto& lin = ctx.L[j][(std::size_t)gvar];
    Matrix M(to.free_cols.size(), from.free_cols.size());
    for (std::size_t col = 0; col < from.free_cols.size(); ++col) {
        const Exps& b = from.amb[from.free_cols[col]];
        std::vector<Rat> vec(to.amb.size(), Rat(0));
        for (int v = 0; v < F.width; ++v) {
            if (lin[(std::size_t)v] == 0) continue;
            Exps m2 = b;
            m2[v] += 1;
            vec[to.pos.at(m2)] += lin[(std::size_t)v];
        }
        for (const auto& [pc, row] : to.red) {
            if (vec[pc] == 0) continue;
            Rat f = vec[pc];
            for (std::size_t x = pc; x < vec.size(); ++x) vec[x] -= f * row[x];
        }
        for (std::size_t r = 0; r < to.free_cols.size(); ++r)
            M(r, col) = vec[to.free_cols[r]];
    }
    return F.mul.emplace(key, std::move(M)).first->second;
}

using Comp = std::vector<long long>;
using TargetParts = std::map<Comp, std::vector<Rat>>;

TargetParts mul_var(AtPointContext& ctx, const TargetParts& v, int gvar) {
    const std::size_t g = ctx.F.size();
    TargetParts out;
    for (const auto& [comp, coords] : v) {
        if (coords.empty()) continue;
        std::vector<std::size_t> dims(g);
        for (std::size_t l = 0; l < g; ++l)
            dims[l] = factor_layer(ctx.F[l], comp[l]).free_cols.size();
        for (std::size_t j = 0; j < g; ++j) {
            const Matrix& M = factor_mul(ctx, j, comp[j], gvar);
            if (M.rows() == 0) continue;
            std::size_t pre = 1, post = 1;
            for (std::size_t l = 0; l < j; ++l) pre *= dims[l];
            for (std::size_t l = j + 1; l < g; ++l) post *= dims[l];
            Comp c2 = comp;
            c2[j] += 1;
            auto& dest = out[c2];
            if (dest.empty()) dest.assign(pre * M.rows() * post, Rat(0));
            const std::size_t dj = dims[j];
            for (std::size_t p = 0; p < pre; ++p)
                for (std::size_t a = 0; a < dj; ++a)
                    for (std::size_t q = 0; q < post; ++q) {
                        const Rat& cv = coords[(p * dj + a) * post + q];
                        if (cv == 0) continue;
                        for (std::size_t r = 0; r < M.rows(); ++r) {
                            if (M(r, a) == 0) continue;
                            dest[(p * M.rows() + r) * post + q] += cv * M(r, a);
                        }
                    }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        bool nz = false;
        for (const Rat& x : it->second)
            if (x != 0) {
                nz = true;
                break;
            }
        it = nz ? std::next(it) : out.erase(it);
    }
    return out;
}

void enum_comps(long long k, std::size_t g, Comp& cur, std::vector<Comp>& out) {
    if (cur.size() + 1 == g) {
        cur.push_back(k);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long long v = 0; v <= k; ++v) {
        cur.push_back(v);
        enum_comps(k - v, g, cur, out);
        cur.pop_back();
    }
}

}  // namespace

IdealSpec ideal_at_point(const std::vector<int>& A, const std::vector<Rat>& Z) {
    check_parts(A);
    if (Z.size() != A.size()) throw std::invalid_argument("|Z| != |A|");
    const int n = (int)A.size();

    // Group coordinates by value, first occurrence first.
    std::vector<Rat> vals;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < Z.size(); ++i) {
        std::size_t j = 0;
        while (j < vals.size() && vals[j] != Z[i]) ++j;
        if (j == vals.size()) {
            vals.push_back(Z[i]);
            groups.emplace_back();
        }
        groups[j].push_back(i);
    }

    AtPointContext ctx;
    for (std::size_t j = 0; j < groups.size(); ++j) {
        LocalFactor F;
        F.width = (int)groups[j].size();
        F.t = vals[j];
        std::vector<int> Aj;
        for (std::size_t p : groups[j]) Aj.push_back(A[p]);
        F.ideal = shift_ideal(build_I0(Aj), vals[j]);
        for (int a : Aj) F.top += a - 1;
        ctx.F.push_back(std::move(F));
    }
    for (std::size_t j = 0; j < ctx.F.size(); ++j) {
        std::vector<std::vector<Rat>> Lj;
        for (int i = 0; i < n; ++i)
            Lj.push_back(local_coeffs(ctx.F[j].width, ctx.F[j].t, i));
        ctx.L.push_back(std::move(Lj));
    }

    long long kcap = 1;
    for (int a : A) kcap += a - 1;

    IdealSpec s;
    s.family = IdealFamily::I_AT_Z;
    s.width = n;
    s.A = A;
    s.pts = Z;
    s.note = "grouped evaluation";

    std::map<Exps, TargetParts> memo;
    {
        TargetParts unit;
        unit[Comp(ctx.F.size(), 0)] = {Rat(1)};
        memo.emplace(Exps((std::size_t)n, 0), std::move(unit));
    }
    for (long long k = 1; k <= kcap; ++k) {
        const auto mons = zlayer_monomials(n, k);
        for (const Exps& m : mons) {
            int i = 0;
            while (m[i] == 0) ++i;
            Exps parent = m;
            parent[i] -= 1;
            memo.emplace(m, mul_var(ctx, memo.at(parent), i));
        }

        // Column layout of the z-layer of the target algebra.
        std::vector<Comp> comps;
        {
            Comp cur;
            enum_comps(k, ctx.F.size(), cur, comps);
        }
        std::map<Comp, std::size_t> offset;
        std::size_t total = 0;
        for (const Comp& c : comps) {
            std::size_t d = 1;
            for (std::size_t l = 0; l < ctx.F.size(); ++l)
                d *= factor_layer(ctx.F[l], c[l]).free_cols.size();
            if (d == 0) continue;
            offset.emplace(c, total);
            total += d;
        }

        Matrix M(total, mons.size());
        for (std::size_t jm = 0; jm < mons.size(); ++jm)
            for (const auto& [comp, coords] : memo.at(mons[jm])) {
                auto it = offset.find(comp);
                if (it == offset.end()) continue;
                for (std::size_t t = 0; t < coords.size(); ++t)
                    M(it->second + t, jm) = coords[t];
            }
        for (EPoly& g : kernel_to_polys(kernel_basis(M), mons, n))
            s.gens.push_back(std::move(g));
    }
    s.bihomogeneous = all_bihom(s.gens);
    return s;
}

GradedBasis ideal_component(const IdealSpec& spec, const Bidegree& d) {
    if (!spec.bihomogeneous)
        throw std::invalid_argument("components need a bihomogeneous ideal");
    auto basis = monomial_basis(spec.width, d);
    Matrix rows(0, basis.size());
    for (const EPoly& g : spec.gens) {
        const Bidegree bg = bidegree(g);
        if (bg.z > d.z || bg.q > d.q) continue;
        for (const Exps& m : monomial_basis(spec.width, {d.z - bg.z, d.q - bg.q}))
            rows.append_row(coefficient_vector(g * EPoly::monomial(spec.width, m), basis));
    }
    return {d, std::move(basis), row_basis(rows)};
}

ZLayer ideal_zlayer(const IdealSpec& spec, long long k) {
    auto basis = zlayer_monomials(spec.width, k);
    Matrix rows(0, basis.size());
    for (const EPoly& g : spec.gens) {
        const long long zg = zdegree(g);
        if (zg > k) continue;
        for (const Exps& m : zlayer_monomials(spec.width, k - zg))
            rows.append_row(coefficient_vector(g * EPoly::monomial(spec.width, m), basis));
    }
    RrefResult red = rref(rows);
    return {k, std::move(basis), std::move(red)};
}

std::vector<GradedBasis> up_ideal_layer(const IdealSpec& spec, long long k) {
    const int w = spec.width;
    const long long stop = k * (w - 1);

    // Ambient order: qdeg descending so that a pivot block is the top part.
    std::vector<Exps> amb;
    std::vector<long long> block_of_col;
    std::map<Exps, std::size_t> pos;
    for (long long s = stop; s >= 0; --s)
        for (const Exps& e : monomial_basis(w, {k, s})) {
            pos.emplace(e, amb.size());
            amb.push_back(e);
            block_of_col.push_back(s);
        }

    Matrix rows(0, amb.size());
    for (const EPoly& g : spec.gens) {
        const long long zg = zdegree(g);
        if (zg > k) continue;
        for (const Exps& m : zlayer_monomials(w, k - zg)) {
            EPoly prod = g * EPoly::monomial(w, m);
            std::vector<Rat> v(amb.size(), Rat(0));
            for (const auto& [e, c] : prod.terms()) v[pos.at(e)] = c;
            rows.append_row(v);
        }
    }
    RrefResult red = rref(rows);

    std::map<long long, Matrix> by_block;
    for (std::size_t i = 0; i < red.rank; ++i) {
        const long long s = block_of_col[red.pivot_cols[i]];
        const auto blk = monomial_basis(w, {k, s});
        std::vector<Rat> v(blk.size());
        const std::size_t start = pos.at(blk.front());
        for (std::size_t j = 0; j < blk.size(); ++j) v[j] = red.m(i, start + j);
        auto it = by_block.find(s);
        if (it == by_block.end()) it = by_block.emplace(s, Matrix(0, blk.size())).first;
        it->second.append_row(v);
    }

    std::vector<GradedBasis> out;
    for (auto& [s, m] : by_block)
        out.push_back({{k, s}, monomial_basis(w, {k, s}), row_basis(m)});
    return out;
}

CharTable quotient_char(const IdealSpec& spec, long long kmax, long long smax) {
    if (!spec.bihomogeneous)
        throw std::invalid_argument("character needs a bihomogeneous ideal");
    CharTable t;
    for (long long k = 0; k <= kmax; ++k) {
        long long cap = k * (spec.width - 1);
        if (smax >= 0) cap = std::min(cap, smax);
        for (long long s = 0; s <= cap; ++s) {
            const GradedBasis comp = ideal_component(spec, {k, s});
            const long long dim =
                (long long)comp.basis.size() - (long long)comp.reduced.rows();
            if (dim > 0) t.add(k, s, dim);
        }
    }
    return t;
}

std::vector<long long> quotient_zdims(const IdealSpec& spec, long long kmax) {
    std::vector<long long> out;
    for (long long k = 0; k <= kmax; ++k) {
        ZLayer zl = ideal_zlayer(spec, k);
        out.push_back((long long)zl.basis.size() - (long long)zl.red.rank);
    }
    return out;
}

Rat rho_check(const std::vector<Rat>& Z, int l) {
    if (Z.empty()) throw std::invalid_argument("need at least one point");
    if (l < 0) throw std::invalid_argument("negative power");
    check_distinct(Z);
    Rat acc(0);
    for (std::size_t a = 0; a < Z.size(); ++a) {
        Rat den(1);
        for (std::size_t b = 0; b < Z.size(); ++b)
            if (b != a) den *= Z[a] - Z[b];
        acc += rat_pow(Z[a], (unsigned long)l) / den;
    }
    return acc;
}

std::vector<std::string> ideal_dump(const IdealSpec& spec) {
    std::vector<std::string> out;
    for (const EPoly& g : spec.gens) out.push_back(poly_str(g));
    return out;
}

const GradedBasis& ComponentCache::component(const Bidegree& d) {
    std::lock_guard<std::mutex> lk(mutex_);
    const auto key = std::make_pair(d.z, d.q);
    auto it = comp_.find(key);
    if (it == comp_.end()) it = comp_.emplace(key, ideal_component(spec_, d)).first;
    return it->second;
}

const ZLayer& ComponentCache::zlayer(long long k) {
    std::lock_guard<std::mutex> lk(mutex_);
    auto it = zlay_.find(k);
    if (it == zlay_.end()) it = zlay_.emplace(k, ideal_zlayer(spec_, k)).first;
    return it->second;
}

}  // namespace qfusion
