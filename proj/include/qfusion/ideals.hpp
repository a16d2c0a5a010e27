#pragma once

#include <qfusion/matrix.hpp>
#include <qfusion/poly.hpp>
#include <qfusion/qchar.hpp>

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace qfusion {

enum class IdealFamily { JA_T, JA_LIMIT, I_AT_Z, I0, JK_WINDOW, DERIVED };

// A finitely generated z-homogeneous ideal of C[e_0..e_{width-1}], carried
// by explicit generators plus provenance. Immutable after construction.
struct IdealSpec {
    IdealFamily family = IdealFamily::DERIVED;
    int width = 0;
    std::vector<int> A;
    std::vector<Rat> pts;      // T or Z where applicable
    int level = 0;             // k for the window family
    long long smax = -1;       // window cap
    std::string note;          // transform trail ("opp", "shift -1", "st 2")
    std::vector<EPoly> gens;   // nonzero; z-homogeneous
    bool bihomogeneous = false;
};

// Current-power ideal at pairwise distinct points: one generator
// (sum_i t_k^i e_i)^{a_k} per part.
IdealSpec gens_JA_T(const std::vector<int>& A, const std::vector<Rat>& T);

// Limit family: for zdeg i the coefficients of z^s in e(z)^i for all
// s < sum_p max(0, i+1-a_p), i = 1..sum(A). Bihomogeneous.
IdealSpec gens_JA_limit(const std::vector<int>& A);

// Same family with generators of qdeg > qcap dropped. Multiplying can only
// raise qdeg, so every component with s <= qcap is unchanged; components
// above qcap are not meaningful for the windowed spec.
IdealSpec gens_JA_limit_window(const std::vector<int>& A, long long qcap);

// Kernel of evaluation onto ⊗ C[y]/(y^{a_i}) with e_k -> sum z_i^k y_i,
// computed z-layer by z-layer. Z pairwise distinct.
IdealSpec gens_IZ(const std::vector<int>& A, const std::vector<Rat>& Z);

// Coefficients of z^s in e(z)^k for s <= smax, over width > smax variables.
IdealSpec gens_Jk_window(int k, int width, long long smax);

// e_i -> e_{width-1-i} on every generator; involutive.
IdealSpec opp(const IdealSpec& spec);

// The mirror realization of the evaluation ideal at the origin.
IdealSpec build_I0(const std::vector<int>& A);

// Generator transport along the shift group: e_i -> sum_j C(i,j)(-c)^j e_{i-j}
// (the inverse shift), so build_I0 transported by c presents the all-points-c
// ideal.
IdealSpec shift_ideal(const IdealSpec& spec, const Rat& c);

// Loop-scaling flow e_i -> t^i e_i, t != 0.
IdealSpec st_flow(const IdealSpec& spec, const Rat& t);

// Annihilator at an arbitrary point multiset: coordinates grouped by value
// (positionally), each group realized as its shifted origin ideal, the global
// currents mapped through order-alpha Taylor truncations at the group points.
IdealSpec ideal_at_point(const std::vector<int>& A, const std::vector<Rat>& Z);

// One bigraded component in canonical coordinates.
struct GradedBasis {
    Bidegree d;
    std::vector<Exps> basis;  // monomial_basis(width, d)
    Matrix reduced;           // trimmed RREF; rows() is the component dim
};

// Whole z-layer; ambient monomials ordered by qdeg then grlex.
struct ZLayer {
    long long k = 0;
    std::vector<Exps> basis;
    RrefResult red;  // reduction of the span of generator multiples
};

GradedBasis ideal_component(const IdealSpec& spec, const Bidegree& d);
ZLayer ideal_zlayer(const IdealSpec& spec, long long k);

// Associated graded of the qdeg filtration on one z-layer: for each s the
// space of top-degree parts, in (k,s) component coordinates. Ascending s;
// empty components omitted.
std::vector<GradedBasis> up_ideal_layer(const IdealSpec& spec, long long k);

// Bigraded quotient character; requires a bihomogeneous spec. smax < 0 means
// the natural cap k*(width-1) per layer.
CharTable quotient_char(const IdealSpec& spec, long long kmax, long long smax = -1);

// z-graded quotient dimensions, layers 0..kmax.
std::vector<long long> quotient_zdims(const IdealSpec& spec, long long kmax);

// Lagrange row sums: rho(l) = sum_a z_a^l / prod_{b != a}(z_a - z_b);
// exactly 0 for l <= n-2 and 1 for l = n-1.
Rat rho_check(const std::vector<Rat>& Z, int l);

// One canonical line per generator.
std::vector<std::string> ideal_dump(const IdealSpec& spec);

// Memoizing wrapper for repeated component queries against one spec.
class ComponentCache {
  public:
    explicit ComponentCache(IdealSpec spec) : spec_(std::move(spec)) {}
    const IdealSpec& spec() const { return spec_; }
    const GradedBasis& component(const Bidegree& d);
    const ZLayer& zlayer(long long k);

  private:
    IdealSpec spec_;
    std::map<std::pair<long long, long long>, GradedBasis> comp_;
    std::map<long long, ZLayer> zlay_;
    std::mutex mutex_;
};

}  // namespace qfusion
