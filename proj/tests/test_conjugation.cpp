#include <doctest.h>

#include "k4/conjugation.hpp"
#include "support.hpp"

using namespace k4;
using nlohmann::json;

namespace {

F2Poly y_pow(const SpaceModel& m, int k) { return F2Poly::var(m.ambient.size(), 0, k); }

// [c,t,t'] triples from the oracle, in the c,t,t' coordinates of a class
F2Poly oracle_poly(const json& terms, std::size_t n) { return test::from_exps(terms, n); }

}  // namespace

TEST_CASE("HP^1: Phi(y) = c t^2 t' + c t t'^2") {
    auto m = SpaceModel::quaternionic_projective(1);
    m.validate();
    auto c = conjugation_rhs(m, m.ambient.parse("y"));
    CHECK(c.value == F2Poly::parse("c*t^2*t' + c*t*t'^2", c.names));
    CHECK(c.names == std::vector<std::string>{"c", "t", "t'"});
    CHECK(c.nfixed == 1);
}

TEST_CASE("HP^inf: Phi(y) = c^4 + c^2 p1 + c p0") {
    auto m = SpaceModel::quaternionic_projective(-1);
    auto c = conjugation_rhs(m, m.ambient.parse("y"));
    CHECK(c.value == F2Poly::parse("c^4 + c^2*(t^2+t*t'+t'^2) + c*(t^2*t'+t*t'^2)", c.names));
    auto c2 = conjugation_rhs(m, m.ambient.parse("y^2"));
    CHECK(c2.value == F2Poly::parse("c^8 + c^4*(t^2+t*t'+t'^2)^2 + c^2*(t^2*t'+t*t'^2)^2", c2.names));
}

TEST_CASE("degree zero: Phi(1) = 1") {
    for (int n : {0, 1, 3, -1}) {
        auto m = SpaceModel::quaternionic_projective(n);
        auto c = conjugation_rhs(m, F2Poly::one(1));
        CHECK(c.value == F2Poly::one(3));
    }
}

TEST_CASE("conjugation terms: one per (i,j) with i+j <= n") {
    auto m = SpaceModel::quaternionic_projective(-1);
    auto terms = conjugation_terms(m, m.ambient.parse("y^2"));
    CHECK(terms.size() == 6);
    for (const auto& t : terms) CHECK(t.i + t.j <= 2);
}

TEST_CASE("oracle: Phi(y^k) on HP^inf") {
    auto m = SpaceModel::quaternionic_projective(-1);
    for (const auto& [k, terms] : test::oracles()["phi_hp_inf"].items()) {
        auto c = conjugation_rhs(m, y_pow(m, std::stoi(k)));
        CHECK_MESSAGE(c.value == oracle_poly(terms, 3), "k = " << k);
    }
}

TEST_CASE("oracle: Phi(y^k) on HP^n") {
    for (const auto& [n, table] : test::oracles()["phi_hp_trunc"].items()) {
        auto m = SpaceModel::quaternionic_projective(std::stoi(n));
        m.validate();
        for (const auto& [k, terms] : table.items()) {
            auto c = conjugation_rhs(m, y_pow(m, std::stoi(k)));
            CHECK_MESSAGE(c.value == oracle_poly(terms, 3), "n = " << n << ", k = " << k);
        }
    }
}

TEST_CASE("oracle: the C2 analogue on CP^inf and CP^1") {
    auto m = SpaceModel::complex_projective(-1);
    for (const auto& [k, terms] : test::oracles()["phi_cp_inf"].items()) {
        auto c = conjugation_rhs_c2(m, y_pow(m, std::stoi(k)));
        CHECK_MESSAGE(c.value == oracle_poly(terms, 2), "k = " << k);
    }
    auto m1 = SpaceModel::complex_projective(1);
    auto c = conjugation_rhs_c2(m1, m1.ambient.parse("y"));
    CHECK(c.value == F2Poly::parse("c*t", c.names));
    CHECK_THROWS_AS(conjugation_rhs_c2(SpaceModel::quaternionic_projective(2), F2Poly::var(1, 0)), ModelError);
}

TEST_CASE("structural checks on HP^n and HP^inf") {
    for (int n : {0, 1, 2, 3, 5, 8, -1}) {
        auto m = SpaceModel::quaternionic_projective(n);
        int top = n < 0 ? 6 : n;
        for (int k = 0; k <= top; ++k) {
            F2Poly x = y_pow(m, k);
            CHECK(check_homogeneity(m, x));
            CHECK(check_leading_term(m, x));
            CHECK(check_c2_shape(m, x));
            for (int l = 0; l <= top - k; ++l) CHECK_MESSAGE(check_multiplicativity(m, x, y_pow(m, l)), n << " " << k << " " << l);
        }
    }
}

TEST_CASE("Phi is additive") {
    auto m = SpaceModel::quaternionic_projective(4);
    F2Poly a = y_pow(m, 2), b = y_pow(m, 2);
    CHECK(conjugation_rhs(m, a + b).value.is_zero());
    CHECK_THROWS_AS(conjugation_rhs(m, y_pow(m, 1) + y_pow(m, 2)), DegreeError);
}

TEST_CASE("purity certificates") {
    auto ok = purity_certificate({1, 0, 0, 0, 1, 0, 0, 0, 1}, {1, 1, 1});
    CHECK(ok.ok);
    CHECK(ok.cells == std::vector<int>{0, 1, 2});
    auto bad = purity_certificate({1, 1}, {1});
    CHECK_FALSE(bad.ok);
    CHECK(bad.failed_index == 1);
    auto mismatch = purity_certificate({1, 0, 0, 0, 2}, {1, 1});
    CHECK_FALSE(mismatch.ok);
    CHECK(mismatch.failed_index == 4);
    auto two = purity_certificate({1, 0, 0, 0, 2}, {1, 2});
    CHECK(two.ok);
    CHECK(two.cells == std::vector<int>{0, 1, 1});
    // HP^n against RP^n
    for (int n = 0; n <= 6; ++n) {
        auto m = SpaceModel::quaternionic_projective(n);
        auto r = purity_certificate(m.ambient.betti(4 * n), m.fixed.betti(n));
        CHECK(r.ok);
        CHECK(r.cells.size() == static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("models: JSON round trip and validation errors") {
    auto m = SpaceModel::quaternionic_projective(3);
    json j = m.to_json();
    auto back = SpaceModel::from_json(json::parse(j.dump()));
    CHECK(back.to_json() == j);
    for (int k = 0; k <= 3; ++k) CHECK(conjugation_rhs(back, y_pow(back, k)) == conjugation_rhs(m, y_pow(m, k)));

    json wrong = j;
    wrong["scale"] = 3;
    CHECK_THROWS_AS(SpaceModel::from_json(wrong), ModelError);

    // RP^2 is too small to carry kappa for HP^3
    json small = j;
    small["fixed"]["generators"][0]["height"] = 3;
    CHECK_THROWS_AS(SpaceModel::from_json(small).validate(), ModelError);

    json nomono = j;
    nomono["kappa"] = {{"y + y^2", "c"}};
    CHECK_THROWS_AS(SpaceModel::from_json(nomono), ModelError);

    json odd = j;
    odd["ambient"]["generators"][0]["degree"] = 2;
    CHECK_THROWS_AS(SpaceModel::from_json(odd).validate(), ModelError);
}

TEST_CASE("truncated rings") {
    TruncatedRing r{{"x", "y"}, {1, 2}, {3, 0}};
    CHECK_FALSE(r.finite());
    CHECK(r.basis(4).size() == 2);  // x^2 y, y^2; x^4 is truncated
    CHECK(r.reduce(r.parse("x^3 + y")) == r.parse("y"));
    TruncatedRing f{{"c"}, {1}, {4}};
    CHECK(f.finite());
    CHECK(f.top_degree() == 3);
    CHECK(f.betti(5) == std::vector<int>{1, 1, 1, 1, 0, 0});
}
