#include "k4/steenrod.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace k4 {

MilnorOp::MilnorOp(std::vector<int> profile) : r(std::move(profile)) {
    for (int x : r)
        if (x < 0) throw std::invalid_argument("negative Milnor profile entry");
    while (!r.empty() && r.back() == 0) r.pop_back();
}

int MilnorOp::degree() const {
    int d = 0;
    for (std::size_t i = 0; i < r.size(); ++i) d += r[i] * ((1 << (i + 1)) - 1);
    return d;
}

int MilnorOp::excess() const {
    int s = 0;
    for (int x : r) s += x;
    return s;
}

std::string MilnorOp::to_string() const {
    if (r.empty()) return "Sq(0)";
    std::string s = "Sq(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(r[i]);
    }
    return s + ")";
}

MilnorOp MilnorOp::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto bad = [&]() { return ParseError("cannot parse Milnor operation '" + text + "'"); };
    if (s.size() < 3 || s.compare(0, 2, "Sq") != 0) throw bad();
    std::string rest = s.substr(2);
    std::vector<int> prof;
    auto number = [&](const std::string& t) {
        if (t.empty() || t.size() > 6) throw bad();
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        return std::stoi(t);
    };
    if (rest.front() == '(') {
        if (rest.back() != ')') throw bad();
        std::string body = rest.substr(1, rest.size() - 2);
        if (!body.empty()) {
            std::size_t pos = 0;
            while (true) {
                std::size_t comma = body.find(',', pos);
                prof.push_back(number(body.substr(pos, comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
    } else {
        if (rest.front() == '^') rest = rest.substr(1);
        prof.push_back(number(rest));
    }
    return MilnorOp(prof);
}

namespace {

void profiles_rec(int left, std::size_t slot, std::vector<int>& cur, std::vector<MilnorOp>& out) {
    int w = (1 << (slot + 1)) - 1;
    if (left == 0) {
        out.emplace_back(cur);
        return;
    }
    if (w > left) return;
    for (int k = left / w; k >= 0; --k) {
        cur.push_back(k);
        profiles_rec(left - k * w, slot + 1, cur, out);
        cur.pop_back();
    }
}

// Sq(R)(x^a) = f(R,a) x^{a+|R|} for one degree-1 generator x, by peeling
// one factor of x at a time with the Cartan rule.
class PowerCoeff {
public:
    bool operator()(const std::vector<int>& R, int a) {
        int ex = 0;
        for (int x : R) ex += x;
        if (ex == 0) return true;
        if (ex > a) return false;
        auto key = std::make_pair(R, a);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool v = (*this)(R, a - 1);
        std::vector<int> S = R;
        for (std::size_t k = 0; k < R.size(); ++k) {
            if (!R[k]) continue;
            --S[k];
            v ^= (*this)(S, a - 1);
            ++S[k];
        }
        memo_.emplace(std::move(key), v);
        return v;
    }

private:
    std::map<std::pair<std::vector<int>, int>, bool> memo_;
};

int profile_degree(const std::vector<int>& R) {
    int d = 0;
    for (std::size_t i = 0; i < R.size(); ++i) d += R[i] * ((1 << (i + 1)) - 1);
    return d;
}

struct Actor {
    const Exps& e;
    PowerCoeff& coeff;
    F2Poly& acc;
    Exps out;

    void vars(std::size_t i, std::vector<int>& rem) {
        if (i == e.size()) {
            for (int x : rem)
                if (x) return;
            acc.toggle(out);
            return;
        }
        if (e[i] == 0) {
            out[i] = 0;
            vars(i + 1, rem);
            return;
        }
        std::vector<int> part(rem.size(), 0);
        split(i, 0, rem, part);
    }

    // choose the share of the profile that lands on x_i
    void split(std::size_t i, std::size_t slot, std::vector<int>& rem, std::vector<int>& part) {
        if (slot == rem.size()) {
            if (!coeff(part, e[i])) return;
            out[i] = e[i] + profile_degree(part);
            vars(i + 1, rem);
            return;
        }
        int avail = rem[slot];
        for (int k = 0; k <= avail; ++k) {
            part[slot] = k;
            rem[slot] = avail - k;
            split(i, slot + 1, rem, part);
        }
        rem[slot] = avail;
        part[slot] = 0;
    }
};

}  // namespace

std::vector<MilnorOp> milnor_basis(int degree) {
    std::vector<MilnorOp> out;
    if (degree < 0) return out;
    std::vector<int> cur;
    profiles_rec(degree, 0, cur, out);
    return out;
}

F2Poly milnor_act(const MilnorOp& op, const F2Poly& p) {
    F2Poly acc(p.nvars());
    PowerCoeff coeff;
    for (const auto& e : p.terms()) {
        for (int x : e)
            if (x < 0) throw std::invalid_argument("Steenrod action needs non-negative exponents");
        Actor a{e, coeff, acc, Exps(e.size(), 0)};
        std::vector<int> rem = op.r;
        a.vars(0, rem);
    }
    return acc;
}

F2Poly classical_sq(int i, const F2Poly& p) { return milnor_act(MilnorOp::sq(i), p); }

F2Poly truncate(const F2Poly& p, const std::vector<int>& heights) {
    F2Poly out(p.nvars());
    for (const auto& e : p.terms()) {
        bool keep = true;
        for (std::size_t i = 0; i < e.size() && i < heights.size(); ++i)
            if (heights[i] > 0 && e[i] >= heights[i]) keep = false;
        if (keep) out.toggle(e);
    }
    return out;
}

F2Poly milnor_act_truncated(const MilnorOp& op, const F2Poly& p, const std::vector<int>& heights) {
    return truncate(milnor_act(op, truncate(p, heights)), heights);
}

const std::vector<std::string>& bivariate_names() {
    static const std::vector<std::string> names{"t", "t'"};
    return names;
}

BivariatePoly dickson_p0() { return F2Poly::parse("t^2*t' + t*t'^2", bivariate_names()); }
BivariatePoly dickson_p1() { return F2Poly::parse("t^2 + t*t' + t'^2", bivariate_names()); }

std::vector<GL2Elem> gl2_f2() {
    std::vector<GL2Elem> g;
    for (int m = 0; m < 16; ++m) {
        GL2Elem x{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1};
        if ((x.a * x.d + x.b * x.c) % 2) g.push_back(x);
    }
    return g;
}

BivariatePoly substitute(const BivariatePoly& p, const GL2Elem& g) {
    if (p.nvars() != 2) throw std::invalid_argument("substitute expects F2[t,t']");
    F2Poly t = F2Poly::zero(2), tp = F2Poly::zero(2);
    if (g.a) t += F2Poly::var(2, 0);
    if (g.b) t += F2Poly::var(2, 1);
    if (g.c) tp += F2Poly::var(2, 0);
    if (g.d) tp += F2Poly::var(2, 1);
    F2Poly out(2);
    for (const auto& e : p.terms()) out += t.pow(e[0]) * tp.pow(e[1]);
    return out;
}

std::vector<Exps> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<Exps> out;
    if (d < 0) return out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exps e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == nvars) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

bool excess_vanishing_check(const MilnorOp& op, int n) {
    for (int d = 0; d < n; ++d)
        for (auto& e : monomials_of_degree(2, d))
            if (!milnor_act(op, F2Poly::monomial(e)).is_zero()) return false;
    return true;
}

bool binomial_odd(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return false;
    return (k & ~n) == 0;
}

bool multinomial_odd(const std::vector<long long>& parts) {
    long long seen = 0;
    for (long long p : parts) {
        if (p < 0) return false;
        if (seen & p) return false;
        seen |= p;
    }
    return true;
}

}  // namespace k4
