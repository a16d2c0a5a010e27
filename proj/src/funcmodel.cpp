#include "qfusion/funcmodel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qfusion/tensoralg.hpp"

namespace qfusion {

namespace {

void check_A(const std::vector<int>& A) {
    if (A.empty()) throw std::invalid_argument("empty part list");
    for (int a : A)
        if (a < 1) throw std::invalid_argument("parts must be positive");
}

// Scale a rational row to primitive integers with positive leading entry.
void normalize_primitive(std::vector<Rat>& row) {
    Int l(1);
    for (const Rat& x : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Int g(0);
    std::vector<Int> nums(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        Rat scaled = row[i] * Rat(l);
        nums[i] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
    }
    if (g == 0) return;
    int sign = 0;
    for (const Int& x : nums) {
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    }
    if (sign < 0) g = -g;
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = Rat(nums[i] / g);
}

struct PairData {
    int i = 0, j = 0, ai = 0, aj = 0, minaa = 0;
    PairFiltration filt;
    std::map<long long, std::vector<int>> classes;             // weight -> pair indices
    std::map<long long, std::map<int, std::size_t>> classpos;  // weight -> index -> slot
    std::vector<std::map<long long, Matrix>> funcs;            // kappa -> weight -> rows
};

struct FcContext {
    std::vector<int> A;
    int n = 0;
    bool opposite = false;
    TensorAlg alg;
    std::map<int, std::vector<std::size_t>> wbasis;  // drop -> flat indices
    std::vector<PairData> pairs;

    FcContext(const std::vector<int>& A_, bool opp)
        : A(A_), n((int)A_.size()), opposite(opp), alg(A_) {
        for (std::size_t b = 0; b < alg.dim; ++b) wbasis[alg.ydeg(b)].push_back(b);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back(make_pair_data(i, j));
    }

    PairData make_pair_data(int i, int j) const {
        PairData pd;
        pd.i = i;
        pd.j = j;
        pd.ai = A[i];
        pd.aj = A[j];
        pd.minaa = std::min(pd.ai, pd.aj);
        pd.filt = pair_filtration(pd.ai, pd.aj);
        for (int ri = 0; ri < pd.ai; ++ri)
            for (int rj = 0; rj < pd.aj; ++rj) {
                const long long w = (long long)(pd.ai - 1 - 2 * ri) + (pd.aj - 1 - 2 * rj);
                const int pl = ri * pd.aj + rj;
                pd.classpos[w][pl] = pd.classes[w].size();
                pd.classes[w].push_back(pl);
            }
        pd.funcs.resize(pd.minaa);
        for (int kap = 0; kap < pd.minaa; ++kap) {
            std::vector<int> inc;
            for (int l = 0; l <= kap; ++l)
                inc.push_back(opposite ? pd.minaa - 1 - l : l);
            for (const auto& [w, cls] : pd.classes) {
                Matrix vw(0, cls.size());
                for (int si : inc) {
                    const Matrix& rows = pd.filt.summands[si];
                    for (std::size_t rr = 0; rr < rows.rows(); ++rr) {
                        if (pd.filt.row_weights[si][rr] != w) continue;
                        std::vector<Rat> slice(cls.size());
                        for (std::size_t c = 0; c < cls.size(); ++c)
                            slice[c] = rows(rr, (std::size_t)cls[c]);
                        vw.append_row(slice);
                    }
                }
                RrefResult red = rref(vw);
                if (red.rank == cls.size()) continue;
                // Membership functionals: one per free column f, reading
                // w[f] - sum_i R(i,f) w[pivot_i].
                std::vector<bool> isp(cls.size(), false);
                for (std::size_t c : red.pivot_cols) isp[c] = true;
                Matrix ph(0, cls.size());
                for (std::size_t f = 0; f < cls.size(); ++f) {
                    if (isp[f]) continue;
                    std::vector<Rat> phi(cls.size(), Rat(0));
                    phi[f] = 1;
                    for (std::size_t rr = 0; rr < red.rank; ++rr)
                        phi[red.pivot_cols[rr]] = -red.m(rr, f);
                    ph.append_row(phi);
                }
                pd.funcs[kap][w] = std::move(ph);
            }
        }
        return pd;
    }
};

// Condition rows of one (degree, drop) block. Columns are tensor-major:
// col = bi * #mons + mi, so kernel rows acquire distinct trailing supports.
Matrix block_conditions(const FcContext& ctx, const std::vector<Exps>& mons, int drop) {
    const auto& wb = ctx.wbasis.at(drop);
    const std::size_t nm = mons.size();
    const std::size_t amb = wb.size() * nm;
    std::map<std::vector<long long>, std::map<std::size_t, Rat>> rows;
    for (std::size_t pi = 0; pi < ctx.pairs.size(); ++pi) {
        const PairData& pd = ctx.pairs[pi];
        const int spec = ctx.n == 3 ? 3 - pd.i - pd.j : -1;
        for (std::size_t mi = 0; mi < nm; ++mi) {
            const Exps& g = mons[mi];
            const int p = g[pd.i], q = g[pd.j];
            const long long rest = spec >= 0 ? g[spec] : 0;
            const Rat scale = Rat(1) / rat_pow(Rat(2), (unsigned long)(p + q));
            for (int al = 0; al <= p; ++al)
                for (int be = 0; be <= q; ++be) {
                    const long long kap = al + be;
                    if (kap >= pd.minaa) continue;
                    const long long te = p + q - kap;
                    Rat coef = scale * Rat(binom((unsigned long)p, (unsigned long)al)) *
                               Rat(binom((unsigned long)q, (unsigned long)be));
                    if (be % 2) coef = -coef;
                    for (std::size_t bi = 0; bi < wb.size(); ++bi) {
                        const auto c = ctx.alg.exps_of(wb[bi]);
                        const int pl = c[pd.i] * pd.aj + c[pd.j];
                        const long long bs = spec >= 0 ? c[spec] : 0;
                        const long long w =
                            (long long)(pd.ai - 1 - 2 * c[pd.i]) + (pd.aj - 1 - 2 * c[pd.j]);
                        auto fit = pd.funcs[kap].find(w);
                        if (fit == pd.funcs[kap].end()) continue;
                        const Matrix& ph = fit->second;
                        const std::size_t pos = pd.classpos.at(w).at(pl);
                        const std::size_t col = bi * nm + mi;
                        for (std::size_t fr = 0; fr < ph.rows(); ++fr) {
                            const Rat& val = ph(fr, pos);
                            if (val == 0) continue;
                            rows[{(long long)pi, kap, te, rest, bs, w, (long long)fr}][col] +=
                                coef * val;
                        }
                    }
                }
        }
    }
    Matrix m(0, amb);
    for (auto& [key, sp] : rows) {
        std::vector<Rat> row(amb, Rat(0));
        bool nz = false;
        for (auto& [c, v] : sp)
            if (v != 0) {
                row[c] = v;
                nz = true;
            }
        if (nz) m.append_row(row);
    }
    return m;
}

}  // namespace

Matrix sl2_e(int a) {
    Matrix m((std::size_t)a, (std::size_t)a);
    for (int r = 1; r < a; ++r) m((std::size_t)(r - 1), (std::size_t)r) = Rat(a - r);
    return m;
}

Matrix sl2_f(int a) {
    Matrix m((std::size_t)a, (std::size_t)a);
    for (int r = 0; r + 1 < a; ++r) m((std::size_t)(r + 1), (std::size_t)r) = Rat(r + 1);
    return m;
}

Matrix sl2_h(int a) {
    Matrix m((std::size_t)a, (std::size_t)a);
    for (int r = 0; r < a; ++r) m((std::size_t)r, (std::size_t)r) = Rat(a - 1 - 2 * r);
    return m;
}

std::vector<Rat> invariant_form(int a) {
    if (a < 1) throw std::invalid_argument("invariant_form: a must be positive");
    std::vector<Rat> beta((std::size_t)a);
    beta[0] = 1;
    for (int i = 1; i < a; ++i) beta[i] = -beta[i - 1] * Rat(a - i) / Rat(i);
    return beta;
}

PairFiltration pair_filtration(int ai, int aj) {
    if (ai < 1 || aj < 1) throw std::invalid_argument("pair_filtration: parts must be positive");
    PairFiltration pf;
    pf.ai = ai;
    pf.aj = aj;
    const int M = std::min(ai, aj);
    const std::size_t dim = (std::size_t)ai * aj;
    auto pidx = [aj](int ri, int rj) { return (std::size_t)ri * aj + rj; };
    for (int k = 0; k < M; ++k) {
        // Raising operator from the ri+rj = k weight space down to k-1.
        Matrix up((std::size_t)k, (std::size_t)k + 1);
        for (int ri = 0; ri <= k; ++ri) {
            const int rj = k - ri;
            if (ri >= 1) up((std::size_t)(ri - 1), (std::size_t)ri) += Rat(ai - ri);
            if (rj >= 1) up((std::size_t)ri, (std::size_t)ri) += Rat(aj - rj);
        }
        Matrix ker = kernel_basis(up);
        if (ker.rows() != 1) throw std::logic_error("raising kernel is not a line");
        std::vector<Rat> cur(dim, Rat(0));
        for (int ri = 0; ri <= k; ++ri) cur[pidx(ri, k - ri)] = ker(0, (std::size_t)ri);

        const int dk = ai + aj - 1 - 2 * k;
        Matrix rows(0, dim);
        std::vector<long long> ws;
        for (int l = 0; l < dk; ++l) {
            std::vector<Rat> norm = cur;
            normalize_primitive(norm);
            rows.append_row(norm);
            ws.push_back((long long)(ai - 1 + aj - 1 - 2 * k - 2 * l));
            if (l + 1 < dk) {
                std::vector<Rat> nxt(dim, Rat(0));
                for (int ri = 0; ri < ai; ++ri)
                    for (int rj = 0; rj < aj; ++rj) {
                        const Rat& c = cur[pidx(ri, rj)];
                        if (c == 0) continue;
                        if (ri + 1 < ai) nxt[pidx(ri + 1, rj)] += Rat(ri + 1) * c;
                        if (rj + 1 < aj) nxt[pidx(ri, rj + 1)] += Rat(rj + 1) * c;
                    }
                cur = std::move(nxt);
            }
        }
        pf.summands.push_back(std::move(rows));
        pf.row_weights.push_back(std::move(ws));
    }
    return pf;
}

TruncatedFc fc_truncated(const std::vector<int>& A, int D, bool opposite) {
    check_A(A);
    if ((int)A.size() > 3) throw std::invalid_argument("width capped at 3");
    if (D < 0) throw std::invalid_argument("negative degree cap");
    FcContext ctx(A, opposite);
    TruncatedFc fc;
    fc.A = A;
    fc.D = D;
    fc.opposite = opposite;
    fc.wbasis = ctx.wbasis;
    for (int d = 0; d <= D; ++d) {
        fc.mons.push_back(degree_monomials(ctx.n, d));
        FcLayer L;
        L.d = d;
        for (const auto& [r, wb] : ctx.wbasis) {
            Matrix ker = kernel_basis(block_conditions(ctx, fc.mons.back(), r));
            L.block_dims[r] = (long long)ker.rows();
            L.dim += (long long)ker.rows();
            L.blocks[r] = std::move(ker);
        }
        fc.layers.push_back(std::move(L));
    }
    return fc;
}

MtReport mt_character(const std::vector<int>& A, const std::vector<Rat>& T, int D) {
    check_A(A);
    const int n = (int)A.size();
    if (n > 3) throw std::invalid_argument("width capped at 3");
    if ((int)T.size() != n) throw std::invalid_argument("|T| != |A|");
    long long suma = 0;
    for (int a : A) suma += a;
    if (D < suma * (n - 1) + n)
        throw std::invalid_argument("degree cap below the stabilization guard");

    bool allzero = true;
    for (const Rat& t : T)
        if (t != 0) allzero = false;
    int ci = -1, cj = -1, ncoin = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (T[i] == T[j]) {
                ++ncoin;
                ci = i;
                cj = j;
            }
    enum class Mode { Zero, Distinct, OnePair } mode;
    if (allzero)
        mode = Mode::Zero;
    else if (ncoin == 0)
        mode = Mode::Distinct;
    else if (ncoin == 1)
        mode = Mode::OnePair;
    else
        throw std::invalid_argument("coincidence pattern not supported");

    FcContext ctx(A, false);
    MtReport rep;
    rep.expected = 1;
    for (int a : A) rep.expected *= a;

    // Collapse-map data for one coincident pair: coordinates of a pair vector
    // in the summand basis are INV * vector.
    const PairData* cpd = nullptr;
    Matrix inv(0, 0);
    std::vector<std::size_t> sum_base;  // row offset of summand k inside INV
    int spec_dim = 1, spec_var = -1;
    Rat tau;
    if (mode == Mode::OnePair) {
        for (const auto& pd : ctx.pairs)
            if (pd.i == ci && pd.j == cj) cpd = &pd;
        tau = T[ci];
        if (n == 3) {
            spec_var = 3 - ci - cj;
            spec_dim = A[spec_var];
        }
        const std::size_t dp = (std::size_t)cpd->ai * cpd->aj;
        Matrix aug(dp, 2 * dp);
        std::size_t rowat = 0;
        for (std::size_t k = 0; k < cpd->filt.summands.size(); ++k) {
            sum_base.push_back(rowat);
            const Matrix& S = cpd->filt.summands[k];
            for (std::size_t r = 0; r < S.rows(); ++r, ++rowat)
                for (std::size_t c = 0; c < dp; ++c) aug(c, rowat) = S(r, c);
        }
        for (std::size_t r = 0; r < dp; ++r) aug(r, dp + r) = 1;
        RrefResult red = rref(aug);
        if (red.rank != dp) throw std::logic_error("summand basis is singular");
        inv = Matrix(dp, dp);
        for (std::size_t r = 0; r < dp; ++r)
            for (std::size_t c = 0; c < dp; ++c) inv(r, c) = red.m(r, dp + c);
    }

    IncrementalEchelon kill((std::size_t)rep.expected);

    struct Block {
        RrefResult red;
        long long dim = 0;
        std::vector<std::size_t> free;
    };
    std::map<int, Block> prev;
    std::vector<Exps> prev_mons;
    long long m0_at_D = -1, m0_at_D1 = -1;

    for (int d = 0; d <= D + 1; ++d) {
        std::vector<Exps> mons = degree_monomials(n, d);
        std::map<Exps, std::size_t> mpos;
        for (std::size_t i = 0; i < mons.size(); ++i) mpos.emplace(mons[i], i);
        // Point values of the monomials, for the killing maps.
        std::vector<Rat> tpow;
        if (mode == Mode::Distinct) {
            tpow.resize(mons.size());
            for (std::size_t i = 0; i < mons.size(); ++i) {
                Rat v(1);
                for (int vi = 0; vi < n; ++vi) v *= rat_pow(T[vi], (unsigned long)mons[i][vi]);
                tpow[i] = v;
            }
        }
        // Per monomial and s-order kappa: value of the (kappa, t)-expansion
        // of the (z_i, z_j) part at t = 2*tau, spectator at its point.
        std::vector<std::vector<Rat>> cpow;
        if (mode == Mode::OnePair) {
            cpow.assign(mons.size(), std::vector<Rat>((std::size_t)cpd->minaa, Rat(0)));
            for (std::size_t i = 0; i < mons.size(); ++i) {
                const int p = mons[i][ci], q = mons[i][cj];
                Rat outer = Rat(1) / rat_pow(Rat(2), (unsigned long)(p + q));
                if (spec_var >= 0)
                    outer *= rat_pow(T[spec_var], (unsigned long)mons[i][spec_var]);
                for (int al = 0; al <= p; ++al)
                    for (int be = 0; be <= q; ++be) {
                        const int kap = al + be;
                        if (kap >= cpd->minaa) continue;
                        Rat c = outer * Rat(binom((unsigned long)p, (unsigned long)al)) *
                                Rat(binom((unsigned long)q, (unsigned long)be)) *
                                rat_pow(Rat(2) * tau, (unsigned long)(p + q - kap));
                        if (be % 2) c = -c;
                        cpow[i][(std::size_t)kap] += c;
                    }
            }
        }

        long long m0_total = 0;
        std::map<int, Block> curstate;
        for (const auto& [r, wb] : ctx.wbasis) {
            const std::size_t nm = mons.size();
            const std::size_t amb = wb.size() * nm;
            Block B;
            B.red = rref(block_conditions(ctx, mons, r));
            B.dim = (long long)amb - (long long)B.red.rank;
            {
                std::vector<bool> isp(amb, false);
                for (std::size_t c : B.red.pivot_cols) isp[c] = true;
                for (std::size_t c = 0; c < amb; ++c)
                    if (!isp[c]) B.free.push_back(c);
            }

            long long m0;
            if (d == 0) {
                m0 = B.dim;
            } else {
                const Block& P = prev.at(r);
                const std::size_t pnm = prev_mons.size();
                // Staircase certificate: under the tensor-major column order
                // each solution-basis row has its maximal support at its free
                // column, and multiplying by z_v shifts maxima injectively,
                // so distinct shifted free columns bound dim(sum z_v F_{d-1})
                // from below inside F_d. Hitting dim F_d proves the layer is
                // spanned by the previous one.
                std::set<std::size_t> shifted;
                for (std::size_t f : P.free) {
                    const std::size_t bi = f / pnm, mi = f % pnm;
                    for (int v = 0; v < n; ++v) {
                        Exps e2 = prev_mons[mi];
                        e2[v] += 1;
                        shifted.insert(bi * nm + mpos.at(e2));
                    }
                }
                if ((long long)shifted.size() == B.dim) {
                    m0 = 0;
                } else {
                    Matrix pker = kernel_from_rref(P.red, wb.size() * pnm);
                    IncrementalEchelon ech(amb);
                    for (std::size_t rr = 0; rr < pker.rows(); ++rr)
                        for (int v = 0; v < n; ++v) {
                            std::vector<Rat> out(amb, Rat(0));
                            for (std::size_t c = 0; c < pker.cols(); ++c) {
                                const Rat& x = pker(rr, c);
                                if (x == 0) continue;
                                Exps e2 = prev_mons[c % pnm];
                                e2[v] += 1;
                                out[(c / pnm) * nm + mpos.at(e2)] += x;
                            }
                            ech.add(std::move(out));
                        }
                    m0 = B.dim - (long long)ech.rank();
                }
            }
            m0_total += m0;
            rep.upper += m0;
            if (mode == Mode::Zero) {
                rep.table.add(r, d, m0);
            } else if ((long long)kill.rank() < rep.expected) {
                Matrix ker = kernel_from_rref(B.red, amb);
                for (std::size_t kr = 0; kr < ker.rows(); ++kr) {
                    std::vector<Rat> out((std::size_t)rep.expected, Rat(0));
                    if (mode == Mode::Distinct) {
                        for (std::size_t c = 0; c < amb; ++c) {
                            const Rat& x = ker(kr, c);
                            if (x == 0) continue;
                            out[wb[c / nm]] += x * tpow[c % nm];
                        }
                    } else {
                        // raw[kappa][pair coord][spectator coord]
                        const std::size_t dp = (std::size_t)cpd->ai * cpd->aj;
                        std::vector<std::vector<Rat>> raw(
                            (std::size_t)cpd->minaa,
                            std::vector<Rat>(dp * (std::size_t)spec_dim, Rat(0)));
                        for (std::size_t c = 0; c < amb; ++c) {
                            const Rat& x = ker(kr, c);
                            if (x == 0) continue;
                            const auto ce = ctx.alg.exps_of(wb[c / nm]);
                            const std::size_t pl = (std::size_t)ce[ci] * cpd->aj + ce[cj];
                            const std::size_t bs = spec_var >= 0 ? (std::size_t)ce[spec_var] : 0;
                            const auto& cp = cpow[c % nm];
                            for (std::size_t kap = 0; kap < cp.size(); ++kap) {
                                if (cp[kap] == 0) continue;
                                raw[kap][pl * spec_dim + bs] += x * cp[kap];
                            }
                        }
                        std::size_t at = 0;
                        for (std::size_t kap = 0; kap < (std::size_t)cpd->minaa; ++kap) {
                            const std::size_t dk = cpd->filt.summands[kap].rows();
                            for (std::size_t g = 0; g < dk; ++g)
                                for (std::size_t bs = 0; bs < (std::size_t)spec_dim; ++bs, ++at) {
                                    Rat acc(0);
                                    for (std::size_t pl = 0; pl < dp; ++pl) {
                                        const Rat& rv = raw[kap][pl * spec_dim + bs];
                                        if (rv != 0) acc += inv(sum_base[kap] + g, pl) * rv;
                                    }
                                    out[at] = acc;
                                }
                        }
                    }
                    kill.add(std::move(out));
                }
            }
            curstate[r] = std::move(B);
        }
        if (d == D) m0_at_D = m0_total;
        if (d == D + 1) m0_at_D1 = m0_total;
        prev = std::move(curstate);
        prev_mons = std::move(mons);
    }

    rep.stabilized = (m0_at_D == 0 && m0_at_D1 == 0);
    if (mode == Mode::Zero) {
        rep.lower = rep.upper;
        rep.certified = rep.stabilized;
        if (!rep.certified) rep.detail = "layer dims still moving at the cap";
    } else {
        rep.lower = (long long)kill.rank();
        rep.certified = rep.stabilized && rep.lower == rep.upper;
        if (!rep.stabilized)
            rep.detail = "layer dims still moving at the cap";
        else if (rep.lower != rep.upper) {
            std::ostringstream os;
            os << "bounds disagree: lower " << rep.lower << ", upper " << rep.upper;
            rep.detail = os.str();
        }
    }
    rep.total = rep.certified ? rep.lower : -1;
    return rep;
}

TensorPoly fc_element(const TruncatedFc& fc, int d, int drop, std::size_t row) {
    if (d < 0 || d > fc.D) throw std::invalid_argument("degree out of range");
    const auto& L = fc.layers[(std::size_t)d];
    const auto bit = L.blocks.find(drop);
    if (bit == L.blocks.end() || row >= bit->second.rows())
        throw std::invalid_argument("no such basis row");
    const auto& wb = fc.wbasis.at(drop);
    const auto& mons = fc.mons[(std::size_t)d];
    TensorAlg alg(fc.A);
    TensorPoly tp;
    tp.A = fc.A;
    tp.comp.assign(alg.dim, MultiPoly((int)fc.A.size()));
    for (std::size_t c = 0; c < bit->second.cols(); ++c) {
        const Rat& x = bit->second(row, c);
        if (x == 0) continue;
        tp.comp[wb[c / mons.size()]].add_term(mons[c % mons.size()], x);
    }
    return tp;
}

MultiPoly pairing_quotient(const TensorPoly& f, const TensorPoly& h) {
    if (f.A != h.A) throw std::invalid_argument("mismatched shapes");
    if (f.A.size() != 2) throw std::invalid_argument("pairing is defined for two factors");
    const int a1 = f.A[0], a2 = f.A[1];
    TensorAlg alg(f.A);
    const auto b1 = invariant_form(a1);
    const auto b2 = invariant_form(a2);

    MultiPoly chi(2);
    for (int r1 = 0; r1 < a1; ++r1)
        for (int r2 = 0; r2 < a2; ++r2) {
            const MultiPoly& fc = f.comp[alg.index({r1, r2})];
            const MultiPoly& hc = h.comp[alg.index({a1 - 1 - r1, a2 - 1 - r2})];
            if (fc.is_zero() || hc.is_zero()) continue;
            chi = chi + fc * hc * MultiPoly::constant(2, b1[(std::size_t)r1] * b2[(std::size_t)r2]);
        }

    // Rewrite in s = z1 - z2, t = z1 + z2; divisibility shows as a floor on
    // the s-exponent.
    std::map<std::pair<long long, long long>, Rat> st;
    for (const auto& [e, c] : chi.terms()) {
        const int p = e[0], q = e[1];
        const Rat scale = c / rat_pow(Rat(2), (unsigned long)(p + q));
        for (int al = 0; al <= p; ++al)
            for (int be = 0; be <= q; ++be) {
                Rat v = scale * Rat(binom((unsigned long)p, (unsigned long)al)) *
                        Rat(binom((unsigned long)q, (unsigned long)be));
                if (be % 2) v = -v;
                st[{al + be, p + q - al - be}] += v;
            }
    }
    const long long mm = std::min(a1, a2) - 1;
    MultiPoly stpoly(2);
    for (const auto& [k, v] : st) {
        if (v == 0) continue;
        if (k.first < mm) throw std::logic_error("pairing quotient has a remainder");
        stpoly.add_term({(int)(k.first - mm), (int)k.second}, v);
    }
    MultiPoly simg(2), timg(2);
    simg.add_term({1, 0}, Rat(1));
    simg.add_term({0, 1}, Rat(-1));
    timg.add_term({1, 0}, Rat(1));
    timg.add_term({0, 1}, Rat(1));
    return substitute(stpoly, {simg, timg});
}

long long pairing_gram_rank(const std::vector<int>& A, const std::vector<Rat>& T,
                            int dcap) {
    check_A(A);
    if (A.size() != 2) throw std::invalid_argument("pairing is defined for two factors");
    if (T.size() != 2) throw std::invalid_argument("|T| != 2");
    TruncatedFc fc = fc_truncated(A, dcap, false);
    TruncatedFc fh = fc_truncated(A, dcap, true);

    auto collect = [](const TruncatedFc& t) {
        std::vector<TensorPoly> out;
        for (int d = 0; d <= t.D; ++d)
            for (const auto& [r, blk] : t.layers[(std::size_t)d].blocks)
                for (std::size_t row = 0; row < blk.rows(); ++row)
                    out.push_back(fc_element(t, d, r, row));
        return out;
    };
    const auto fv = collect(fc);
    const auto hv = collect(fh);

    Matrix G(fv.size(), hv.size());
    for (std::size_t i = 0; i < fv.size(); ++i)
        for (std::size_t j = 0; j < hv.size(); ++j) {
            MultiPoly qp = pairing_quotient(fv[i], hv[j]);
            Rat val(0);
            for (const auto& [e, c] : qp.terms())
                val += c * rat_pow(T[0], (unsigned long)e[0]) *
                       rat_pow(T[1], (unsigned long)e[1]);
            G(i, j) = val;
        }
    return (long long)rank_of(G);
}

}  // namespace qfusion
