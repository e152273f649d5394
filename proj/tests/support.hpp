#pragma once
// Frozen oracle tables (tests/oracles/oracles.json) and small helpers.

#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "k4/poly.hpp"

#ifndef K4_ORACLE_FILE
#error "K4_ORACLE_FILE must point at tests/oracles/oracles.json"
#endif

namespace k4::test {

inline const nlohmann::json& oracles() {
    static const nlohmann::json j = [] {
        std::ifstream in(K4_ORACLE_FILE);
        if (!in) throw std::runtime_error("missing oracle file " K4_ORACLE_FILE);
        return nlohmann::json::parse(in);
    }();
    return j;
}

// polynomial from a list of exponent vectors
inline F2Poly from_exps(const nlohmann::json& terms, std::size_t n) {
    F2Poly p(n);
    for (const auto& t : terms) p.toggle(t.get<Exps>());
    return p;
}

inline F2Poly random_poly(std::mt19937& rng, std::size_t nvars, int max_exp, int nterms) {
    std::uniform_int_distribution<int> ex(0, max_exp);
    F2Poly p(nvars);
    for (int k = 0; k < nterms; ++k) {
        Exps e(nvars);
        for (auto& x : e) x = ex(rng);
        p.toggle(e);
    }
    return p;
}

}  // namespace k4::test
