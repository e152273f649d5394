// One PASS/FAIL line per acceptance criterion.
//   acceptance          run all twelve
//   acceptance 3 5      run the listed ones
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "k4/audit.hpp"
#include "k4/catalog.hpp"
#include "k4/conjugation.hpp"
#include "k4/maximality.hpp"
#include "k4/steenrod.hpp"

using namespace k4;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << "s";
    return o.str();
}

const Catalog& cat() { return Catalog::builtin(); }

// 1. dim R_d by quotient and by the monomial basis, d <= 12
Outcome c1_fixed_point_ring() {
    auto t0 = Clock::now();
    const auto& r = cat().object("R.phi");
    std::ostringstream why;
    bool ok = true;
    for (int d = 0; d <= 12; ++d) {
        std::size_t want = d == 0 ? 1 : 2 * d + 1;
        std::size_t q = r.dim({d, 0, 0, 0});
        RemarkBasis rb = remark_basis(r, d);
        if (q != want || rb.count != want || !rb.independent) {
            ok = false;
            why << " d=" << d << ": quotient " << q << ", basis " << rb.count << (rb.independent ? "" : " (dependent)");
        }
    }
    double s = seconds_since(t0);
    if (s >= 1.0) ok = false, why << " runtime " << fmt_seconds(s);
    return {ok, "d=0..12 " + fmt_seconds(s) + why.str()};
}

// 2. the four F2-points
Outcome c2_points() {
    auto pts = f2_points(cat().object("R.phi"));
    std::vector<std::vector<int>> want{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::ostringstream o;
    o << pts.size() << " points";
    return {pts == want, o.str()};
}

Outcome from_report(const AuditReport& rep, double limit, Clock::time_point t0) {
    double s = seconds_since(t0);
    std::ostringstream o;
    o << rep.rows.size() << " degrees, " << rep.failures() << " failures, " << fmt_seconds(s);
    bool ok = rep.rows.size() >= 2401 && rep.pass();
    if (limit > 0 && s >= limit) ok = false, o << " (over " << limit << "s)";
    if (!rep.pass())
        for (const auto& row : rep.rows)
            if (!row.pass) {
                o << "; first failure at " << row.gamma.to_string();
                break;
            }
    return {ok, o.str()};
}

// 3. comh1 vs prop2, Euler vs t-form on the radius-3 box
Outcome c3_presentations() {
    auto t0 = Clock::now();
    return from_report(audit_presentations(cat(), degree_box(3)), 30, t0);
}

// 4. LES of the (eqcof2) triple on the radius-3 box
Outcome c4_les() {
    auto t0 = Clock::now();
    return from_report(audit_les(cat(), "eqcof2", degree_box(3)), 60, t0);
}

// 5. delta^u bookkeeping on the radius-3 box
Outcome c5_delta_u() {
    auto t0 = Clock::now();
    return from_report(audit_delta_u(cat(), degree_box(3)), 0, t0);
}

// 6. Euler relation under a_V = t_V u_V, and the pi^* generators are homogeneous
Outcome c6_euler() {
    const RingMap& m = cat().map("euler-to-t");
    const auto& src = cat().object("EK4.euler").presented(0);
    bool ok = src.relations().size() == 1 && m.apply(0, src.relations()[0]).is_zero();
    std::ostringstream o;
    o << "relation " << (ok ? "-> 0" : "does not vanish");
    const auto& pis = cat().object("PiStar.image");
    const Family& fam = pis.family(0);
    std::size_t good = 0;
    for (std::size_t i = 0; i < fam.images.size(); ++i) {
        bool hom = !fam.images[i].is_zero();
        for (const auto& e : fam.images[i].terms()) hom = hom && src.degree_of(e) == fam.fam->gens()[i].degree;
        good += hom;
    }
    o << ", " << good << "/" << fam.images.size() << " pi^* generators homogeneous";
    ok = ok && fam.images.size() == 9 && good == 9;
    return {ok, o.str()};
}

// 7. Sq^i t^a against Lucas, and Sq(0,1) t = Sq^3 t + Sq^2 Sq^1 t = t^4
Outcome c7_steenrod() {
    std::size_t bad = 0;
    for (int a = 0; a <= 16; ++a)
        for (int i = 0; i <= 16; ++i) {
            F2Poly want = binomial_odd(a, i) ? F2Poly::var(1, 0, a + i) : F2Poly::zero(1);
            bad += classical_sq(i, F2Poly::var(1, 0, a)) != want;
        }
    F2Poly t = F2Poly::var(1, 0);
    F2Poly milnor = milnor_act(MilnorOp({0, 1}), t);
    F2Poly adm = classical_sq(3, t) + classical_sq(2, classical_sq(1, t));
    bool ok = bad == 0 && milnor == F2Poly::var(1, 0, 4) && milnor == adm;
    std::ostringstream o;
    o << "289 pairs, " << bad << " mismatches; Sq(0,1)t = " << milnor.to_string({"t"}) << ", Sq3+Sq2Sq1 = "
      << adm.to_string({"t"});
    return {ok, o.str()};
}

// 8. p0, p1 fixed by GL2(F2)
Outcome c8_dickson() {
    auto g = gl2_f2();
    std::size_t fixed = 0;
    for (const auto& e : g) fixed += substitute(dickson_p0(), e) == dickson_p0() && substitute(dickson_p1(), e) == dickson_p1();
    std::ostringstream o;
    o << fixed << "/" << g.size() << " elements fix p0 and p1";
    return {g.size() == 6 && fixed == 6, o.str()};
}

// 9. structure of the conjugation right-hand side on HP^n, n <= 8, and HP^inf
Outcome c9_conjugation() {
    auto t0 = Clock::now();
    std::size_t checks = 0, bad = 0;
    std::ostringstream why;
    for (int n = 0; n <= 8; ++n) {
        auto m = SpaceModel::quaternionic_projective(n);
        m.validate();
        for (int k = 0; k <= n; ++k) {
            F2Poly x = F2Poly::var(1, 0, k);
            bool ok = check_homogeneity(m, x) && check_leading_term(m, x) && check_c2_shape(m, x);
            ++checks;
            if (!ok && bad++ == 0) why << "; first failure HP^" << n << " y^" << k;
        }
    }
    // multiplicativity on monomial pairs of the untruncated model
    auto inf = SpaceModel::quaternionic_projective(-1);
    for (int k = 0; k <= 8; ++k)
        for (int l = 0; k + l <= 8; ++l) {
            ++checks;
            if (!check_multiplicativity(inf, F2Poly::var(1, 0, k), F2Poly::var(1, 0, l)) && bad++ == 0)
                why << "; first failure Phi(y^" << k << " y^" << l << ")";
        }
    // the C2 form on CP^inf: Phi(y^k) = sum_i Sq^i(c^k) t^{k-i}
    auto cp = SpaceModel::complex_projective(-1);
    for (int k = 0; k <= 8; ++k) {
        ++checks;
        auto c = conjugation_rhs_c2(cp, F2Poly::var(1, 0, k));
        F2Poly want = F2Poly::zero(2);
        for (int i = 0; i <= k; ++i)
            if (binomial_odd(k, i)) want += F2Poly::monomial({k + i, k - i});
        if (c.value != want && bad++ == 0) why << "; first failure CP y^" << k;
    }
    double s = seconds_since(t0);
    std::ostringstream o;
    o << checks << " checks, " << bad << " failures, " << fmt_seconds(s) << why.str();
    return {bad == 0 && s < 5.0, o.str()};
}

// 10. group cohomology of K4
Outcome c10_group_cohomology() {
    std::size_t bad = 0;
    for (int n = 0; n <= 5; ++n) bad += group_hn(K4Module::trivial(1), n) != static_cast<std::size_t>(n + 1);
    for (std::size_t m = 1; m <= 20; ++m) bad += group_h1(K4Module::trivial(m)) != 2 * m;
    bad += group_h1(K4Module::regular()) != 0;
    std::ostringstream o;
    o << "27 values, " << bad << " mismatches";
    return {bad == 0, o.str()};
}

// 11. purity, Smith-Thom and Galois maximality on HP^n
Outcome c11_maximality() {
    std::size_t bad = 0;
    std::ostringstream why;
    for (int n = 0; n <= 8; ++n) {
        auto m = SpaceModel::quaternionic_projective(n);
        BettiTable bx = m.ambient.betti(4 * n), bf = m.fixed.betti(n);
        auto pur = purity_certificate(bx, bf);
        std::vector<int> cells;
        for (int i = 0; i <= n; ++i) cells.push_back(i);
        bool ok = pur.ok && pur.cells == cells && smith_thom(bx, bf).status == MaxStatus::Maximal &&
                  galois_maximal(bx, trivial_modules(bx), bf).status == MaxStatus::Maximal;
        if (!ok && bad++ == 0) why << "; first failure HP^" << n;
    }
    std::ostringstream o;
    o << "HP^0..HP^8, " << bad << " failures" << why.str();
    return {bad == 0, o.str()};
}

// 12. every single-token corruption is caught by an audit of criteria 3-5
Outcome c12_mutations() {
    auto t0 = Clock::now();
    auto muts = catalog_mutations(Catalog::builtin_json());
    std::vector<MutationOutcome> res(muts.size());
    for (std::size_t i = 0; i < muts.size(); ++i) res[i] = run_mutation(muts[i], {1, 2, 3});
    std::size_t missed = 0;
    std::ostringstream why;
    for (const auto& r : res)
        if (!r.detected) {
            if (missed++ < 3) why << "; undetected: " << r.description;
        }
    std::ostringstream o;
    o << muts.size() << " mutations, " << missed << " undetected, " << fmt_seconds(seconds_since(t0)) << why.str();
    return {!muts.empty() && missed == 0, o.str()};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "geometric fixed point ring", c1_fixed_point_ring},
        {2, "F2-points", c2_points},
        {3, "presentation equivalence", c3_presentations},
        {4, "LES audit (eqcof2)", c4_les},
        {5, "delta^u bookkeeping", c5_delta_u},
        {6, "Euler relation coherence", c6_euler},
        {7, "Steenrod oracle", c7_steenrod},
        {8, "Dickson invariance", c8_dickson},
        {9, "conjugation equation", c9_conjugation},
        {10, "group cohomology", c10_group_cohomology},
        {11, "maximality chain", c11_maximality},
        {12, "negative controls", c12_mutations},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> pick;
    for (int i = 1; i < argc; ++i) {
        try {
            pick.push_back(std::stoi(argv[i]));
        } catch (const std::exception&) {
            std::cerr << "usage: acceptance [criterion...]\n";
            return 2;
        }
    }
    bool all_pass = true;
    for (const auto& c : criteria()) {
        if (!pick.empty() && std::find(pick.begin(), pick.end(), c.id) == pick.end()) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << out.detail << std::endl;
    }
    return all_pass ? 0 : 1;
}
