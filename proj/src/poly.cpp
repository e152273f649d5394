#include "k4/poly.hpp"

#include <algorithm>
#include <cctype>

namespace k4 {

F2Poly F2Poly::one(std::size_t n) {
    F2Poly p(n);
    p.terms_.insert(Exps(n, 0));
    return p;
}

F2Poly F2Poly::monomial(Exps e) {
    F2Poly p(e.size());
    p.terms_.insert(std::move(e));
    return p;
}

F2Poly F2Poly::var(std::size_t n, std::size_t i, int power) {
    Exps e(n, 0);
    e.at(i) = power;
    return monomial(std::move(e));
}

void F2Poly::toggle(const Exps& e) {
    auto it = terms_.find(e);
    if (it != terms_.end()) terms_.erase(it);
    else terms_.insert(e);
}

F2Poly& F2Poly::operator+=(const F2Poly& o) {
    if (o.n_ != n_) throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& t : o.terms_) toggle(t);
    return *this;
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
    F2Poly r = *this;
    r += o;
    return r;
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("polynomial ring mismatch");
    F2Poly r(n_);
    Exps e(n_);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            for (std::size_t i = 0; i < n_; ++i) e[i] = a[i] + b[i];
            r.toggle(e);
        }
    return r;
}

F2Poly F2Poly::pow(int k) const {
    if (k < 0) {
        if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
        Exps e = *terms_.begin();
        for (auto& x : e) x *= k;
        return monomial(std::move(e));
    }
    F2Poly result = one(n_), base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool F2Poly::homogeneous(const std::vector<int>& w) const {
    bool first = true;
    long long d0 = 0;
    for (const auto& t : terms_) {
        long long d = 0;
        for (std::size_t i = 0; i < n_; ++i) d += static_cast<long long>(w[i]) * t[i];
        if (first) d0 = d, first = false;
        else if (d != d0) return false;
    }
    return true;
}

std::string monomial_string(const Exps& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string F2Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += monomial_string(*it, names);
    }
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& names;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(i) + " in '" + s + "'");
    }
    int integer() {
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        skip();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected integer");
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return neg ? -v : v;
    }
    F2Poly expr() {
        F2Poly r = term();
        for (;;) {
            skip();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                ++i;
                r += term();
            } else {
                return r;
            }
        }
    }
    F2Poly term() {
        F2Poly r = factor();
        for (;;) {
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                r *= factor();
            } else {
                return r;
            }
        }
    }
    F2Poly factor() {
        F2Poly a = atom();
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip();
            int k;
            if (i < s.size() && s[i] == '(') {
                ++i;
                k = integer();
                skip();
                if (i >= s.size() || s[i] != ')') fail("expected )");
                ++i;
            } else {
                k = integer();
            }
            try {
                a = a.pow(k);
            } catch (const std::domain_error& e) {
                fail(e.what());
            }
        }
        return a;
    }
    F2Poly atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            F2Poly r = expr();
            skip();
            if (i >= s.size() || s[i] != ')') fail("expected )");
            ++i;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int v = integer();
            return (v & 1) ? F2Poly::one(names.size()) : F2Poly::zero(names.size());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
            std::string id = s.substr(i, j - i);
            auto it = std::find(names.begin(), names.end(), id);
            if (it == names.end()) fail("unknown generator '" + id + "'");
            i = j;
            return F2Poly::var(names.size(), static_cast<std::size_t>(it - names.begin()));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

F2Poly F2Poly::parse(const std::string& s, const std::vector<std::string>& names) {
    Parser p{s, names};
    F2Poly r = p.expr();
    p.skip();
    if (p.i != s.size()) p.fail("trailing input");
    return r;
}

}  // namespace k4
