#pragma once
// Group cohomology of F2[K4]-modules and the Smith-Thom / Galois
// maximality tests.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "k4/f2linalg.hpp"

namespace k4 {

struct InvalidModule : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct K4Module {
    std::size_t dim = 0;
    F2Matrix T1, T2;  // actions of the two generating involutions

    static K4Module trivial(std::size_t d);
    static K4Module regular();  // F2[K4] on the basis e, t1, t2, t1t2
    static K4Module direct_sum(const K4Module& a, const K4Module& b);
    // {"T1": [[0,1],[1,0]], "T2": [[1,0],[0,1]]}
    static K4Module from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    // T1^2 = T2^2 = I, T1 T2 = T2 T1; throws InvalidModule
    void validate() const;
};

// Koszul cochain complex C^k = M^{k+1}, (d m)_i = X m_i + Y m_{i-1},
// X = T1 + I, Y = T2 + I.
F2Matrix koszul_differential(const K4Module& m, int k);
std::size_t group_hn(const K4Module& m, int n);
std::size_t group_h1(const K4Module& m);

enum class MaxStatus { Maximal, Strict, Violated };
std::string to_string(MaxStatus s);

struct MaxResult {
    MaxStatus status = MaxStatus::Maximal;
    long long lhs = 0;
    double rhs = 0;
    std::string warning;  // set when the halved total is fractional
    nlohmann::json to_json() const;
};

using BettiTable = std::vector<int>;

MaxResult smith_thom(const BettiTable& betti_x, const BettiTable& betti_fixed);
// modules[i] is H^i(X) as a K4-module; modules[i].dim must equal betti_x[i]
MaxResult galois_maximal(const BettiTable& betti_x, const std::vector<K4Module>& modules, const BettiTable& betti_fixed);
// trivial actions for every degree
std::vector<K4Module> trivial_modules(const BettiTable& betti_x);

}  // namespace k4
