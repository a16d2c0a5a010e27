#pragma once

#include <qfusion/rat.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qfusion {

using Exps = std::vector<int>;

// Global monomial order: total degree, then lexicographic on exponents.
// Every serialized basis and matrix column ordering derives from this.
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        long long da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

struct Bidegree {
    long long z = 0;  // number of generators in a monomial
    long long q = 0;  // index-weighted degree: e_i contributes i
    auto operator<=>(const Bidegree&) const = default;
};

// Sparse polynomial over Rat in a fixed number of variables. Doubles as the
// e_0..e_{m-1} ring (EPoly) and as plain multivariate polynomials; the
// bigrading helpers below are only meaningful for the e-interpretation.
class SparsePoly {
  public:
    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    static SparsePoly constant(int nvars, const Rat& c);
    static SparsePoly monomial(int nvars, const Exps& e, const Rat& c = Rat(1));
    static SparsePoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rat, GrlexLess>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rat& c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& c) const;
    SparsePoly pow(unsigned long k) const;

    bool operator==(const SparsePoly& o) const = default;

  private:
    int nvars_ = 0;
    std::map<Exps, Rat, GrlexLess> terms_;
};

using EPoly = SparsePoly;
using MultiPoly = SparsePoly;

Bidegree exps_bidegree(const Exps& e);

// True iff every term shares one bidegree (zero counts as bihomogeneous).
bool is_bihomogeneous(const EPoly& p);
Bidegree bidegree(const EPoly& p);  // throws unless bihomogeneous and nonzero

// True iff every term has the same total degree.
bool is_zhomogeneous(const EPoly& p);
long long zdegree(const EPoly& p);  // throws unless z-homogeneous and nonzero

EPoly bihomogeneous_component(const EPoly& p, const Bidegree& d);

// All exponent vectors of bidegree d over m variables, in GrlexLess order.
std::vector<Exps> monomial_basis(int m, const Bidegree& d);

// All exponent vectors over m variables with plain total degree d, in
// lexicographic order (GrlexLess restricted to one degree).
std::vector<Exps> degree_monomials(int m, long long d);

// Coordinates of p over an explicit monomial list; throws if p has support
// outside it.
std::vector<Rat> coefficient_vector(const EPoly& p,
                                    const std::vector<Exps>& basis);

// Reinterpret in a wider ring (pads exponents with zeros). Explicit on
// purpose: widths never convert silently.
EPoly widen(const EPoly& p, int new_nvars);

// Ring homomorphism determined by variable images (all of equal width).
SparsePoly substitute(const SparsePoly& p, const std::vector<SparsePoly>& images);

// Canonical text form: terms in descending GrlexLess order, each as
// "coef*x0^2*x1"; constants bare; zero is "0"; joined by " + ".
std::string poly_str(const SparsePoly& p, const std::string& var = "e");

}  // namespace qfusion
