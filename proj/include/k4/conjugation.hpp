#pragma once
// Right-hand side of the quaternionic conjugation equation
//   r(sigma(x)) = kappa(x) p0^n + sum_{0<i+j<=n} Sq(j,i)(kappa(x)) p1^j p0^{n-j-i}
// on spaces whose cohomology is a truncated polynomial ring, its C2
// analogue, and the Betti-level purity pattern.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "k4/poly.hpp"
#include "k4/rodegree.hpp"
#include "k4/steenrod.hpp"

namespace k4 {

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F2[x_1..x_k]/(x_i^{h_i}); a height <= 0 means no truncation on x_i.
struct TruncatedRing {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<int> heights;

    std::size_t size() const { return names.size(); }
    bool finite() const;
    int top_degree() const;  // only meaningful when finite()
    int degree_of(const Exps& e) const;
    // monomials of degree d, in descending lexicographic order
    std::vector<Exps> basis(int d) const;
    F2Poly reduce(const F2Poly& p) const;
    F2Poly parse(const std::string& s) const;
    // dims of H^0..H^max
    std::vector<int> betti(int max_degree) const;
};

class SpaceModel {
public:
    std::string name;
    int scale = 4;  // 4: K4 (degree quartering), 2: C2 (degree halving)
    TruncatedRing ambient;
    TruncatedRing fixed;
    // kappa on ambient monomials; when multiplicative, generator images
    // extend to every monomial not listed explicitly
    std::map<Exps, F2Poly> kappa_basis;
    std::vector<F2Poly> kappa_gens;
    bool multiplicative = false;

    // HP^n with fixed points RP^n; n < 0 gives the untruncated HP^infinity
    static SpaceModel quaternionic_projective(int n);
    // CP^n with complex conjugation, fixed points RP^n
    static SpaceModel complex_projective(int n);

    static SpaceModel from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    F2Poly kappa(const F2Poly& x) const;
    // ambient degree of a nonzero homogeneous class; DegreeError otherwise
    int degree_of(const F2Poly& x) const;
    // checks the concentration, degree-1 fixed generators and bijectivity of
    // kappa in each degree up to the top (finite) or max_degree (infinite)
    void validate(int max_degree = 16) const;
    // all ambient monomials with degree <= max (ambient degrees)
    std::vector<Exps> monomials_up_to(int max_degree) const;
};

// element of H*(X^K4) (x) F2[t,t'] (or F2[t] for C2): polynomial in the
// fixed generators followed by t (and t')
struct ConjugationClass {
    F2Poly value;
    std::vector<std::string> names;
    std::size_t nfixed = 0;

    std::string to_string() const { return value.to_string(names); }
    bool operator==(const ConjugationClass& o) const { return value == o.value; }
};

struct ConjugationTerm {
    int i = 0, j = 0;
    F2Poly coefficient;  // Sq(j,i)(kappa x) in the fixed ring
    F2Poly dickson;      // p1^j p0^{n-j-i} in F2[t,t']
};

// the individual (i,j) summands, i+j <= n, before summation
std::vector<ConjugationTerm> conjugation_terms(const SpaceModel& m, const F2Poly& x);
ConjugationClass conjugation_rhs(const SpaceModel& m, const F2Poly& x);
ConjugationClass conjugation_rhs_c2(const SpaceModel& m, const F2Poly& x);
// product in the truncated tensor ring
ConjugationClass multiply(const SpaceModel& m, const ConjugationClass& a, const ConjugationClass& b);

bool check_multiplicativity(const SpaceModel& m, const F2Poly& x, const F2Poly& y);
bool check_homogeneity(const SpaceModel& m, const F2Poly& x);
// the part of fixed degree n equals kappa(x) p0^n
bool check_leading_term(const SpaceModel& m, const F2Poly& x);
// t' -> 0 leaves only even powers t^{2k}, k <= n, with coefficient of fixed
// degree 4n-2k, and the top coefficient is kappa(x)^2
bool check_c2_shape(const SpaceModel& m, const F2Poly& x);

struct PurityResult {
    bool ok = false;
    std::vector<int> cells;  // n_i with multiplicity
    int failed_index = -1;   // index into betti_X
    std::string reason;
};

PurityResult purity_certificate(const std::vector<int>& betti_x, const std::vector<int>& betti_fixed);

}  // namespace k4
