#pragma once
// Laurent polynomials over F2 in a fixed list of named variables.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace k4 {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Exps = std::vector<int>;

class F2Poly {
public:
    F2Poly() = default;
    explicit F2Poly(std::size_t nvars) : n_(nvars) {}

    static F2Poly zero(std::size_t n) { return F2Poly(n); }
    static F2Poly one(std::size_t n);
    static F2Poly monomial(Exps e);
    static F2Poly var(std::size_t n, std::size_t i, int power = 1);

    std::size_t nvars() const { return n_; }
    const std::set<Exps>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool contains(const Exps& e) const { return terms_.count(e) != 0; }

    // add one copy of the monomial (cancels in characteristic 2)
    void toggle(const Exps& e);
    F2Poly& operator+=(const F2Poly& o);
    F2Poly operator+(const F2Poly& o) const;
    F2Poly operator*(const F2Poly& o) const;
    F2Poly& operator*=(const F2Poly& o) { return *this = *this * o; }
    // negative powers only for monomials
    F2Poly pow(int k) const;
    bool operator==(const F2Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // every term has the same total exponent weight under w
    bool homogeneous(const std::vector<int>& w) const;

    // "x0^2*x1 + x2"; zero prints as "0", the unit monomial as "1"
    std::string to_string(const std::vector<std::string>& names) const;

    // Grammar: sums and products of names, integer powers (possibly
    // negative), parentheses and the constants 0 and 1. '-' means '+'.
    static F2Poly parse(const std::string& s, const std::vector<std::string>& names);

private:
    std::size_t n_ = 0;
    std::set<Exps> terms_;
};

std::string monomial_string(const Exps& e, const std::vector<std::string>& names);

}  // namespace k4
