#pragma once
// Mod-2 Steenrod operations in the Milnor basis on polynomial rings with
// degree-1 generators, and the Dickson invariants of K4.

#include <string>
#include <vector>

#include "k4/poly.hpp"

namespace k4 {

struct MilnorOp {
    std::vector<int> r;  // trailing zeros trimmed

    MilnorOp() = default;
    explicit MilnorOp(std::vector<int> profile);
    static MilnorOp sq(int i) { return MilnorOp({i}); }

    int degree() const;   // sum r_i (2^i - 1)
    int excess() const;   // sum r_i
    bool is_identity() const { return r.empty(); }
    std::string to_string() const;
    // "Sq(2,1)", "Sq(0)", "Sq()", "Sq^3", "Sq3"
    static MilnorOp parse(const std::string& s);
    bool operator==(const MilnorOp&) const = default;
};

// All profiles of the given internal degree.
std::vector<MilnorOp> milnor_basis(int degree);

// Exponents must be non-negative; throws std::invalid_argument otherwise.
F2Poly milnor_act(const MilnorOp& op, const F2Poly& p);
F2Poly classical_sq(int i, const F2Poly& p);

// heights[i] = h means x_i^h = 0; h <= 0 leaves x_i untruncated.
F2Poly truncate(const F2Poly& p, const std::vector<int>& heights);
F2Poly milnor_act_truncated(const MilnorOp& op, const F2Poly& p, const std::vector<int>& heights);

// F2[t,t'] as H*(BK4)
using BivariatePoly = F2Poly;
const std::vector<std::string>& bivariate_names();
BivariatePoly dickson_p0();
BivariatePoly dickson_p1();

// The six invertible substitutions t -> a t + b t', t' -> c t + d t'.
struct GL2Elem { int a, b, c, d; };
std::vector<GL2Elem> gl2_f2();
BivariatePoly substitute(const BivariatePoly& p, const GL2Elem& g);

// All monomials of F2[x_0..x_{n-1}] of total degree d.
std::vector<Exps> monomials_of_degree(std::size_t nvars, int d);

// True when op kills every monomial of F2[t,t'] of degree below n.
bool excess_vanishing_check(const MilnorOp& op, int n);

// Closed forms used as independent oracles.
bool binomial_odd(long long n, long long k);
bool multinomial_odd(const std::vector<long long>& parts);

}  // namespace k4
