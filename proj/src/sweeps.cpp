#include <qfusion/sweeps.hpp>

#include <qfusion/dualmodel.hpp>
#include <qfusion/funcmodel.hpp>
#include <qfusion/fusion.hpp>
#include <qfusion/ideals.hpp>
#include <qfusion/matrix.hpp>
#include <qfusion/poly.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfusion {

namespace {

std::string ints_str(const std::vector<int>& A) {
    std::ostringstream os;
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (i) os << ',';
        os << A[i];
    }
    return os.str();
}

std::string rats_str(const std::vector<Rat>& Z) {
    std::ostringstream os;
    for (std::size_t i = 0; i < Z.size(); ++i) {
        if (i) os << ',';
        os << rat_str(Z[i]);
    }
    return os.str();
}

long long prod_of(const std::vector<int>& A) {
    long long p = 1;
    for (int a : A) p *= a;
    return p;
}

long long sum_of(const std::vector<int>& A) {
    long long s = 0;
    for (int a : A) s += a;
    return s;
}

void note_dim(SweepResult& r, std::size_t d) {
    if ((long long)d > r.max_component) r.max_component = (long long)d;
}

long long layer_monomials(int width, long long k) {
    return binom((unsigned long)(k + width - 1), (unsigned long)(width - 1)).get_si();
}

Matrix trimmed(const RrefResult& r) {
    Matrix m(r.rank, r.m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.m.cols(); ++j) m(i, j) = r.m(i, j);
    return m;
}

// Canonical layerwise comparison of two generator sets.
bool same_zlayer(const IdealSpec& a, const IdealSpec& b, long long k, SweepResult& res) {
    ZLayer la = ideal_zlayer(a, k);
    ZLayer lb = ideal_zlayer(b, k);
    note_dim(res, la.basis.size());
    return trimmed(la.red) == trimmed(lb.red);
}

template <typename Body>
SweepResult guarded(Body&& body) {
    SweepResult res;
    try {
        body(res);
    } catch (const std::exception& e) {
        res.ok = false;
        res.detail = std::string("error: ") + e.what();
    }
    return res;
}

}  // namespace

std::vector<std::vector<int>> multisets_up_to(int max_sum, int min_parts, int max_parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int mn, int rem) {
        for (int v = mn; v <= rem; ++v) {
            cur.push_back(v);
            if ((int)cur.size() >= min_parts && (int)cur.size() <= max_parts) out.push_back(cur);
            if ((int)cur.size() < max_parts) rec(v, rem - v);
            cur.pop_back();
        }
    };
    if (max_sum >= 1) rec(1, max_sum);
    return out;
}

std::vector<Rat> point_preset(const std::string& name, int n) {
    if (n < 0) throw std::invalid_argument("point_preset: negative length");
    std::vector<Rat> Z((std::size_t)n);
    for (int i = 1; i <= n; ++i) {
        Rat v;
        if (name == "integers")
            v = Rat(i);
        else if (name == "symmetric")
            v = (i % 2) ? Rat((i + 1) / 2) : Rat(-(i / 2));
        else if (name == "halves")
            v = make_rat((i % 2) ? 2 * i - 1 : -(2 * i - 1), 2);
        else
            throw std::invalid_argument("point_preset: unknown preset '" + name + "'");
        Z[(std::size_t)(i - 1)] = v;
    }
    return Z;
}

SweepResult sweep_mass(int max_sum) {
    return guarded([&](SweepResult& res) {
        for (const auto& A : multisets_up_to(max_sum)) {
            const int n = (int)A.size();
            const long long kcap = sum_of(A) - n;
            const auto zd = quotient_zdims(gens_JA_limit(A), kcap + 1);
            note_dim(res, (std::size_t)layer_monomials(n, kcap + 1));
            long long total = 0;
            for (long long d : zd) total += d;
            if (total != prod_of(A) || zd.back() != 0) {
                res.ok = false;
                res.detail = "limit quotient mass is " + std::to_string(total) + " for A=" +
                             ints_str(A) + ", expected " + std::to_string(prod_of(A));
                return;
            }
            ++res.instances;
        }
    });
}

SweepResult sweep_three_routes(int max_sum) {
    return guarded([&](SweepResult& res) {
        for (const auto& A : multisets_up_to(max_sum)) {
            const int n = (int)A.size();
            const CharTable rec = char_recurrence(A);
            const long long kcap = rec.max_z() + 1;
            note_dim(res, (std::size_t)layer_monomials(n, kcap));
            if (rec != char_closed_form(profile(A))) {
                res.ok = false;
                res.detail = "closed form disagrees with the recurrence for A=" + ints_str(A);
                return;
            }
            if (rec != quotient_char(gens_JA_limit(A), kcap)) {
                res.ok = false;
                res.detail = "limit quotient disagrees with the recurrence for A=" + ints_str(A);
                return;
            }
            if (rec != dual_char(A, kcap)) {
                res.ok = false;
                res.detail = "dual table disagrees with the recurrence for A=" + ints_str(A);
                return;
            }
            ++res.instances;
        }
    });
}

SweepResult sweep_filtration(int max_sum) {
    static const char* presets[] = {"integers", "symmetric", "halves"};
    return guarded([&](SweepResult& res) {
        for (const auto& A : multisets_up_to(max_sum)) {
            const int n = (int)A.size();
            CharTable first;
            bool have = false;
            for (const char* p : presets) {
                FiltrationReport rep = verify_filtration(A, point_preset(p, n));
                note_dim(res, (std::size_t)prod_of(A));
                note_dim(res, (std::size_t)layer_monomials(n, sum_of(A) - n));
                if (!rep.ok) {
                    res.ok = false;
                    res.detail = "filtration check failed for A=" + ints_str(A) + ", Z=preset:" +
                                 p + ": " + rep.detail;
                    return;
                }
                if (have && rep.table != first) {
                    res.ok = false;
                    res.detail =
                        "filtration character depends on the points for A=" + ints_str(A);
                    return;
                }
                first = rep.table;
                have = true;
                ++res.instances;
            }
        }
    });
}

SweepResult sweep_mirror(int max_sum) {
    return guarded([&](SweepResult& res) {
        for (const auto& A : multisets_up_to(max_sum)) {
            const int n = (int)A.size();
            const long long kcap = sum_of(A) - n + 1;
            note_dim(res, (std::size_t)layer_monomials(n, kcap));
            const CharTable cl = quotient_char(gens_JA_limit(A), kcap);
            const CharTable cr = quotient_char(build_I0(A), kcap);
            CharTable mir;
            for (const auto& [ks, v] : cl.e) mir.add(ks.first, ks.first * (n - 1) - ks.second, v);
            if (mir != cr) {
                res.ok = false;
                res.detail = "mirror characters disagree for A=" + ints_str(A);
                return;
            }
            ++res.instances;
        }
    });
}

SweepResult sweep_window(int level_max, int width_max, long long qcap) {
    return guarded([&](SweepResult& res) {
        const int wide = (int)qcap + 1;
        for (int k = 1; k <= level_max; ++k) {
            const IdealSpec W = gens_Jk_window(k, wide, qcap);
            for (int n = 1; n <= width_max; ++n) {
                const std::vector<int> A((std::size_t)n, k);
                const IdealSpec JA = gens_JA_limit_window(A, qcap);
                for (long long K = 1; K <= (long long)k * n + 1; ++K) {
                    for (long long s = 0; s <= qcap; ++s) {
                        const GradedBasis compW = ideal_component(W, Bidegree{K, s});
                        if (compW.basis.empty()) continue;
                        note_dim(res, compW.basis.size());
                        std::map<Exps, std::size_t> pos;
                        Matrix sub(0, compW.basis.size());
                        for (std::size_t c = 0; c < compW.basis.size(); ++c) {
                            pos.emplace(compW.basis[c], c);
                            bool inside = true;
                            for (int j = n; j < wide; ++j)
                                if (compW.basis[c][(std::size_t)j] != 0) inside = false;
                            if (inside) {
                                std::vector<Rat> unit(compW.basis.size(), Rat(0));
                                unit[c] = 1;
                                sub.append_row(unit);
                            }
                        }
                        const Matrix inter = subspace_intersection(compW.reduced, sub);
                        const GradedBasis compA = ideal_component(JA, Bidegree{K, s});
                        Matrix wideA(compA.reduced.rows(), compW.basis.size());
                        for (std::size_t r = 0; r < compA.reduced.rows(); ++r)
                            for (std::size_t c = 0; c < compA.basis.size(); ++c) {
                                const Rat& v = compA.reduced(r, c);
                                if (v == 0) continue;
                                Exps e = compA.basis[c];
                                e.resize((std::size_t)wide, 0);
                                wideA(r, pos.at(e)) = v;
                            }
                        if (!same_row_span(inter, wideA)) {
                            res.ok = false;
                            std::ostringstream os;
                            os << "window component disagrees with the limit family at level "
                               << k << ", width " << n << ", (" << K << "," << s << ")";
                            res.detail = os.str();
                            return;
                        }
                        ++res.instances;
                    }
                }
            }
        }
    });
}

SweepResult sweep_flow(int max_sum) {
    static const char* presets[] = {"integers", "symmetric"};
    return guarded([&](SweepResult& res) {
        const Rat ts[] = {Rat(2), make_rat(1, 3)};
        for (const auto& A : multisets_up_to(max_sum)) {
            const int n = (int)A.size();
            const long long kcap = sum_of(A) - n + 1;
            for (const char* p : presets) {
                const std::vector<Rat> Z = point_preset(p, n);
                const IdealSpec iz = gens_IZ(A, Z);
                const IdealSpec i0 = build_I0(A);
                for (long long k = 0; k <= kcap; ++k) {
                    std::map<long long, const GradedBasis*> bys;
                    const auto layers = up_ideal_layer(iz, k);
                    for (const auto& gb : layers) bys[gb.d.q] = &gb;
                    for (long long s = 0; s <= k * (n - 1); ++s) {
                        const GradedBasis comp = ideal_component(i0, Bidegree{k, s});
                        note_dim(res, comp.basis.size());
                        const auto it = bys.find(s);
                        const Matrix none(0, comp.basis.size());
                        const Matrix& up = it == bys.end() ? none : it->second->reduced;
                        if (!same_row_span(up, comp.reduced)) {
                            res.ok = false;
                            std::ostringstream os;
                            os << "associated graded of the point ideal misses the origin "
                                  "ideal for A="
                               << ints_str(A) << ", Z=preset:" << p << ", (" << k << "," << s
                               << ")";
                            res.detail = os.str();
                            return;
                        }
                        ++res.instances;
                    }
                }
                for (const Rat& t : ts) {
                    std::vector<Rat> Zs = Z;
                    for (Rat& z : Zs) z /= t;
                    const IdealSpec flowed = st_flow(iz, t);
                    const IdealSpec target = gens_IZ(A, Zs);
                    for (long long k = 1; k <= kcap; ++k) {
                        if (!same_zlayer(flowed, target, k, res)) {
                            res.ok = false;
                            std::ostringstream os;
                            os << "flow by " << rat_str(t)
                               << " does not carry the point ideal for A=" << ints_str(A)
                               << ", Z=preset:" << p << " at layer " << k;
                            res.detail = os.str();
                            return;
                        }
                        ++res.instances;
                    }
                }
            }
        }
    });
}

SweepResult sweep_gordon(int k, long long smax, long long zmax) {
    return guarded([&](SweepResult& res) {
        const int n = 10;
        const std::vector<int> A((std::size_t)n, k);
        const CharTable quot =
            quotient_char(gens_JA_limit_window(A, smax), zmax, smax).window(zmax, smax);
        const CharTable rec = char_recurrence(A).window(zmax, smax);
        const CharTable ser = gordon_truncated(k, zmax, smax).window(zmax, smax);
        note_dim(res, monomial_basis(n, Bidegree{zmax, smax}).size());
        if (quot != rec) {
            res.ok = false;
            res.detail = "limit quotient of ten equal parts disagrees with the recurrence "
                         "at level " +
                         std::to_string(k);
            return;
        }
        if (rec != ser) {
            res.ok = false;
            res.detail =
                "closed q-series disagrees with the recurrence at level " + std::to_string(k);
            return;
        }
        res.instances = (zmax + 1) * (smax + 1);
    });
}

SweepResult sweep_points(int max_sum) {
    static const char* presets[] = {"integers", "symmetric", "halves"};
    return guarded([&](SweepResult& res) {
        for (const auto& A : multisets_up_to(max_sum)) {
            const int n = (int)A.size();
            const long long prod = prod_of(A);
            const long long kcap = sum_of(A) - n + 1;
            note_dim(res, (std::size_t)layer_monomials(n, kcap));
            for (const char* p : presets) {
                const auto zd = quotient_zdims(gens_JA_T(A, point_preset(p, n)), kcap);
                long long total = 0;
                for (long long d : zd) total += d;
                if (total != prod || zd.back() != 0) {
                    res.ok = false;
                    res.detail = "current ideal mass is " + std::to_string(total) + " for A=" +
                                 ints_str(A) + ", T=preset:" + p + ", expected " +
                                 std::to_string(prod);
                    return;
                }
                ++res.instances;
            }

            // Widening: every limit generator stays in the one-part-larger
            // limit ideal, componentwise.
            std::vector<int> B = A;
            B.push_back(A.back());
            const IdealSpec ja = gens_JA_limit(A);
            ComponentCache big(gens_JA_limit(B));
            std::map<std::pair<long long, long long>, RrefResult> reduced;
            for (const EPoly& g : ja.gens) {
                const Bidegree d = bidegree(g);
                const GradedBasis& comp = big.component(d);
                note_dim(res, comp.basis.size());
                auto it = reduced.find({d.z, d.q});
                if (it == reduced.end())
                    it = reduced.emplace(std::make_pair(d.z, d.q), rref(comp.reduced)).first;
                if (!row_span_contains(it->second,
                                       coefficient_vector(widen(g, n + 1), comp.basis))) {
                    res.ok = false;
                    std::ostringstream os;
                    os << "limit generator of A=" << ints_str(A) << " at (" << d.z << ","
                       << d.q << ") falls outside the widened family";
                    res.detail = os.str();
                    return;
                }
                ++res.instances;
            }

            // Point-pattern constructor against its two degreewise models.
            if (sum_of(A) <= 6) {
                const std::vector<Rat> Z = point_preset("integers", n);
                const IdealSpec at = ideal_at_point(A, Z);
                const IdealSpec iz = gens_IZ(A, Z);
                const Rat c = make_rat(1, 2);
                const IdealSpec atc = ideal_at_point(A, std::vector<Rat>((std::size_t)n, c));
                const IdealSpec sh = shift_ideal(build_I0(A), c);
                for (long long k = 1; k <= kcap; ++k) {
                    if (!same_zlayer(at, iz, k, res)) {
                        res.ok = false;
                        res.detail = "point constructor disagrees with the distinct-point "
                                     "kernel for A=" +
                                     ints_str(A) + " at layer " + std::to_string(k);
                        return;
                    }
                    if (!same_zlayer(atc, sh, k, res)) {
                        res.ok = false;
                        res.detail = "point constructor disagrees with the shifted origin "
                                     "ideal for A=" +
                                     ints_str(A) + " at layer " + std::to_string(k);
                        return;
                    }
                    res.instances += 2;
                }
            }
        }
    });
}

namespace {

// Shared body: totals at generic, one-coincidence and zero points; at zero
// the graded table must equal the evaluation-ideal character.
bool funcmodel_totals_for(const std::vector<int>& A, SweepResult& res) {
    const int n = (int)A.size();
    const long long prod = prod_of(A);
    const int D = (int)(sum_of(A) * (n - 1)) + n;
    note_dim(res, (std::size_t)(prod * layer_monomials(n, D)));

    std::vector<std::pair<std::string, std::vector<Rat>>> pts;
    pts.emplace_back("generic", point_preset("integers", n));
    if (n == 1)
        pts.emplace_back("single", std::vector<Rat>{Rat(2)});
    else {
        std::vector<Rat> co = point_preset("integers", n);
        co[1] = co[0];
        if (n == 3) co[2] = Rat(2);
        pts.emplace_back("coincident", co);
    }
    pts.emplace_back("zero", std::vector<Rat>((std::size_t)n, Rat(0)));

    for (const auto& [tag, T] : pts) {
        const MtReport rep = mt_character(A, T, D);
        if (!rep.certified || rep.total != prod) {
            res.ok = false;
            res.detail = "graded quotient total uncertified for A=" + ints_str(A) + ", T=" +
                         rats_str(T) + " (" + tag + "): " + rep.detail;
            return false;
        }
        if (tag == "zero") {
            const long long kcap = sum_of(A) - n;
            if (rep.table != quotient_char(build_I0(A), kcap)) {
                res.ok = false;
                res.detail = "zero-point table disagrees with the evaluation-ideal "
                             "character for A=" +
                             ints_str(A);
                return false;
            }
        }
        ++res.instances;
    }
    return true;
}

}  // namespace

SweepResult sweep_funcmodel_core() {
    return guarded([&](SweepResult& res) {
        const std::vector<std::vector<int>> list = {{1, 1}, {1, 2}, {1, 3},   {2, 2},
                                                    {2, 3}, {3, 3}, {2, 2, 2}};
        for (const auto& A : list) {
            if (!funcmodel_totals_for(A, res)) return;
            if (A.size() != 2) continue;

            // Layer growth of the two-factor condition space is that of a
            // free module on the pair summands.
            const int D = (int)sum_of(A) + 2;
            const TruncatedFc fc = fc_truncated(A, D);
            for (int d = 0; d <= D; ++d) {
                long long expect = 0;
                for (int k = 0; k < std::min(A[0], A[1]); ++k)
                    expect +=
                        (long long)(A[0] + A[1] - 1 - 2 * k) * std::max(0, d - k + 1);
                if (fc.layers[(std::size_t)d].dim != expect) {
                    res.ok = false;
                    res.detail = "condition-space layer " + std::to_string(d) + " of A=" +
                                 ints_str(A) + " has dim " +
                                 std::to_string(fc.layers[(std::size_t)d].dim) +
                                 ", free growth gives " + std::to_string(expect);
                    return;
                }
            }
            ++res.instances;

            const long long g =
                pairing_gram_rank(A, {Rat(1), Rat(-1)}, (int)sum_of(A));
            if (g != prod_of(A)) {
                res.ok = false;
                res.detail = "pairing Gram rank is " + std::to_string(g) + " for A=" +
                             ints_str(A) + ", expected " + std::to_string(prod_of(A));
                return;
            }
            ++res.instances;
        }
    });
}

SweepResult sweep_funcmodel_totals(int max_sum) {
    return guarded([&](SweepResult& res) {
        for (const auto& A : multisets_up_to(max_sum, 2, 3))
            if (!funcmodel_totals_for(A, res)) return;
    });
}

SweepResult sweep_rho(int n_max) {
    static const char* presets[] = {"integers", "symmetric", "halves"};
    return guarded([&](SweepResult& res) {
        for (int n = 1; n <= n_max; ++n) {
            note_dim(res, (std::size_t)n);
            for (const char* p : presets) {
                const std::vector<Rat> Z = point_preset(p, n);
                for (int l = 0; l < n; ++l) {
                    const Rat got = rho_check(Z, l);
                    const Rat want = l == n - 1 ? Rat(1) : Rat(0);
                    if (got != want) {
                        res.ok = false;
                        std::ostringstream os;
                        os << "row sum at exponent " << l << " of preset:" << p << " (n=" << n
                           << ") is " << rat_str(got) << ", expected " << rat_str(want);
                        res.detail = os.str();
                        return;
                    }
                    ++res.instances;
                }
            }
        }
    });
}

SweepResult sweep_qlaws(int m_max) {
    return guarded([&](SweepResult& res) {
        for (int m = 0; m <= m_max; ++m)
            for (int k = 0; k <= m; ++k) {
                note_dim(res, (std::size_t)(m + 1));
                const QPoly b = qbinomial(m, k);
                if (b != qbinomial(m, m - k)) {
                    res.ok = false;
                    res.detail = "q-binomial symmetry fails at (" + std::to_string(m) + "," +
                                 std::to_string(k) + ")";
                    return;
                }
                if (m > 0) {
                    QPoly qk, qmk;
                    qk.add(k, 1);
                    qmk.add(m - k, 1);
                    if (b != qk * qbinomial(m - 1, k) + qbinomial(m - 1, k - 1) ||
                        b != qbinomial(m - 1, k) + qmk * qbinomial(m - 1, k - 1)) {
                        res.ok = false;
                        res.detail = "q-Pascal identity fails at (" + std::to_string(m) + "," +
                                     std::to_string(k) + ")";
                        return;
                    }
                }
                if (b * qfactorial(k) * qfactorial(m - k) != qfactorial(m)) {
                    res.ok = false;
                    res.detail = "q-factorial product law fails at (" + std::to_string(m) +
                                 "," + std::to_string(k) + ")";
                    return;
                }
                ++res.instances;
            }
    });
}

}  // namespace qfusion
