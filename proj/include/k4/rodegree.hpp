#pragma once
// Degrees in RO(K4) = Z{1, A0, A1, B}, where A0, A1, B are the three
// nontrivial sign representations.

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace k4 {

struct DegreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RODegree {
    int c1 = 0, a0 = 0, a1 = 0, b = 0;

    constexpr RODegree() = default;
    constexpr RODegree(int c1_, int a0_, int a1_, int b_) : c1(c1_), a0(a0_), a1(a1_), b(b_) {}

    constexpr RODegree operator+(const RODegree& o) const { return {c1 + o.c1, a0 + o.a0, a1 + o.a1, b + o.b}; }
    constexpr RODegree operator-(const RODegree& o) const { return {c1 - o.c1, a0 - o.a0, a1 - o.a1, b - o.b}; }
    constexpr RODegree operator-() const { return {-c1, -a0, -a1, -b}; }
    constexpr RODegree operator*(int k) const { return {k * c1, k * a0, k * a1, k * b}; }
    RODegree& operator+=(const RODegree& o) { return *this = *this + o; }
    RODegree& operator-=(const RODegree& o) { return *this = *this - o; }
    constexpr auto operator<=>(const RODegree&) const = default;

    // underlying real dimension
    constexpr int total_dim() const { return c1 + a0 + a1 + b; }
    // dimension of the K4-fixed subspace (trivial summand only)
    constexpr int fixed_dim() const { return c1; }
    constexpr int operator[](int i) const { return i == 0 ? c1 : i == 1 ? a0 : i == 2 ? a1 : b; }
    std::array<int, 4> coords() const { return {c1, a0, a1, b}; }

    // "c1+a0*A0+a1*A1+b*B" with zero terms suppressed
    std::string to_string() const;
    // "c1,a0,a1,b"
    std::string to_csv() const;

    // Accepts "a,b,c,d" or a linear expression such as "-1+A0+2*A1-B".
    static RODegree parse(const std::string& s);
};

inline constexpr RODegree kA0{0, 1, 0, 0};
inline constexpr RODegree kA1{0, 0, 1, 0};
inline constexpr RODegree kB{0, 0, 0, 1};
inline constexpr RODegree kOne{1, 0, 0, 0};

constexpr RODegree regular_rep() { return {1, 1, 1, 1}; }
constexpr RODegree reduced_regular_rep() { return {0, 1, 1, 1}; }

// all degrees with every coordinate in [-k, k], lexicographic
std::vector<RODegree> degree_box(int k);

void to_json(nlohmann::json& j, const RODegree& d);
void from_json(const nlohmann::json& j, RODegree& d);

}  // namespace k4
