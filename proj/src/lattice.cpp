#include "k4/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace k4 {

namespace {

using Con = LatticeSolver::Con;
constexpr long long kCoefLimit = 1LL << 40;

void normalize(Con& x) {
    long long g = 0;
    for (auto v : x.c) g = std::gcd(g, v < 0 ? -v : v);
    if (g == 0) return;
    // inequalities stay valid after dividing by g and flooring the constant
    for (auto& v : x.c) {
        v /= g;
        if (v > kCoefLimit || v < -kCoefLimit) throw std::overflow_error("Fourier-Motzkin coefficient overflow");
    }
    long long k = x.k;
    x.k = k >= 0 ? k / g : -((-k + g - 1) / g);
}

// equalities keep exact divisibility information; only divide by the common gcd
void normalize_eq(Con& x) {
    long long g = std::abs(x.k);
    for (auto v : x.c) g = std::gcd(g, v < 0 ? -v : v);
    if (g <= 1) return;
    for (auto& v : x.c) v /= g;
    x.k /= g;
}

bool trivial_zero(const Con& x) {
    return std::all_of(x.c.begin(), x.c.end(), [](long long v) { return v == 0; });
}

std::vector<Con> dedupe(std::vector<Con> in) {
    std::map<std::vector<long long>, long long> best;
    for (auto& x : in) {
        auto it = best.find(x.c);
        if (it == best.end()) best.emplace(x.c, x.k);
        else it->second = std::min(it->second, x.k);
    }
    std::vector<Con> out;
    out.reserve(best.size());
    for (auto& [c, k] : best) {
        Con x{c, k};
        if (trivial_zero(x) && k >= 0) continue;
        out.push_back(std::move(x));
    }
    return out;
}

// eliminate variable v from (eqs, ineqs); eqs are == 0, ineqs are >= 0
void eliminate(std::vector<Con>& eqs, std::vector<Con>& ineqs, std::size_t v) {
    auto piv = std::find_if(eqs.begin(), eqs.end(), [v](const Con& x) { return x.c[v] != 0; });
    if (piv != eqs.end()) {
        Con p = *piv;
        eqs.erase(piv);
        long long a = p.c[v];
        long long s = a > 0 ? 1 : -1;
        auto sub = [&](Con& x, bool eq) {
            long long bco = x.c[v];
            if (bco == 0) return;
            long long m1 = a * s, m2 = bco * s;
            for (std::size_t j = 0; j < x.c.size(); ++j) x.c[j] = m1 * x.c[j] - m2 * p.c[j];
            x.k = m1 * x.k - m2 * p.k;
            if (eq) normalize_eq(x);
            else normalize(x);
        };
        for (auto& x : eqs) sub(x, true);
        for (auto& x : ineqs) sub(x, false);
        std::vector<Con> keep;
        for (auto& x : eqs) {
            if (trivial_zero(x) && x.k == 0) continue;
            keep.push_back(x);
        }
        eqs = std::move(keep);
        ineqs = dedupe(std::move(ineqs));
        return;
    }
    std::vector<Con> pos, neg, out;
    for (auto& x : ineqs) {
        if (x.c[v] > 0) pos.push_back(x);
        else if (x.c[v] < 0) neg.push_back(x);
        else out.push_back(x);
    }
    for (const auto& p : pos)
        for (const auto& q : neg) {
            long long a = p.c[v], b = -q.c[v];
            Con x;
            x.c.resize(p.c.size());
            for (std::size_t j = 0; j < p.c.size(); ++j) x.c[j] = b * p.c[j] + a * q.c[j];
            x.k = b * p.k + a * q.k;
            normalize(x);
            out.push_back(std::move(x));
        }
    ineqs = dedupe(std::move(out));
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

LatticeSolver::LatticeSolver(std::vector<std::vector<long long>> eq_rows, std::vector<std::vector<long long>> ineq_rows,
                             std::vector<VarBound> bounds)
    : n_(bounds.size()), m_(eq_rows.size()), q_(ineq_rows.size()), bounds_(std::move(bounds)) {
    const std::size_t P = m_ + q_, N = P + n_;
    std::vector<Con> eqs, ineqs;
    for (std::size_t r = 0; r < m_; ++r) {
        if (eq_rows[r].size() != n_) throw std::invalid_argument("equality row width");
        Con x{std::vector<long long>(N, 0), 0};
        x.c[r] = -1;
        for (std::size_t i = 0; i < n_; ++i) x.c[P + i] = eq_rows[r][i];
        eqs.push_back(std::move(x));
    }
    for (std::size_t r = 0; r < q_; ++r) {
        if (ineq_rows[r].size() != n_) throw std::invalid_argument("inequality row width");
        // c_r - row.e >= 0
        Con x{std::vector<long long>(N, 0), 0};
        x.c[m_ + r] = 1;
        for (std::size_t i = 0; i < n_; ++i) x.c[P + i] = -ineq_rows[r][i];
        ineqs.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (bounds_[i].lo) {
            Con x{std::vector<long long>(N, 0), -*bounds_[i].lo};
            x.c[P + i] = 1;
            ineqs.push_back(std::move(x));
        }
        if (bounds_[i].hi) {
            Con x{std::vector<long long>(N, 0), *bounds_[i].hi};
            x.c[P + i] = -1;
            ineqs.push_back(std::move(x));
        }
    }
    ineqs = dedupe(std::move(ineqs));
    proj_.resize(n_ + 1);
    proj_[n_] = {eqs, ineqs};
    for (std::size_t v = n_; v-- > 0;) {
        eliminate(eqs, ineqs, P + v);
        proj_[v] = {eqs, ineqs};
    }

    // recession cone: A e = 0, C e <= 0, homogeneous bounds, and +-e_i >= 1
    for (std::size_t i = 0; i < n_ && !unbounded_; ++i) {
        for (int sg : {1, -1}) {
            std::vector<Con> E, I;
            for (const auto& x : proj_[n_].first) E.push_back(x);
            for (std::size_t r = 0; r < P; ++r) {
                Con z{std::vector<long long>(N, 0), 0};
                z.c[r] = 1;
                E.push_back(std::move(z));
            }
            for (const auto& x : proj_[n_].second) {
                Con h = x;
                h.k = 0;
                I.push_back(std::move(h));
            }
            Con dir{std::vector<long long>(N, 0), -1};
            dir.c[P + i] = sg;
            I.push_back(std::move(dir));
            I = dedupe(std::move(I));
            for (std::size_t v = 0; v < N; ++v) eliminate(E, I, v);
            bool ok = std::all_of(I.begin(), I.end(), [](const Con& x) { return x.k >= 0; }) &&
                      std::all_of(E.begin(), E.end(), [](const Con& x) { return x.k == 0; });
            if (ok) {
                unbounded_ = true;
                break;
            }
        }
    }
}

bool LatticeSolver::feasible(const std::vector<long long>& rhs) const {
    if (rhs.size() != m_ + q_) throw std::invalid_argument("right-hand side length");
    auto val = [&](const Con& x) {
        long long s = x.k;
        for (std::size_t j = 0; j < rhs.size(); ++j) s += x.c[j] * rhs[j];
        return s;
    };
    for (const auto& x : proj_[0].first)
        if (val(x) != 0) return false;
    for (const auto& x : proj_[0].second)
        if (val(x) < 0) return false;
    return true;
}

void LatticeSolver::recurse(std::size_t i, std::vector<long long>& vals, std::vector<int>& point,
                            const std::function<void(const std::vector<int>&)>& out) const {
    const std::size_t P = m_ + q_;
    const std::size_t p = P + i;
    auto rest_of = [&](const Con& x) {
        long long s = x.k;
        for (std::size_t j = 0; j < p; ++j) s += x.c[j] * vals[j];
        return s;
    };
    if (i == n_) {
        for (const auto& x : proj_[n_].first)
            if (rest_of(x) != 0) return;
        out(point);
        return;
    }
    const auto& [E, I] = proj_[i + 1];
    std::optional<long long> lo, hi;
    for (const auto& x : E) {
        long long rest = rest_of(x), a = x.c[p];
        if (a == 0) {
            if (rest != 0) return;
        } else {
            if ((-rest) % a != 0) return;
            long long f = -rest / a;
            lo = lo ? std::max(*lo, f) : f;
            hi = hi ? std::min(*hi, f) : f;
        }
    }
    for (const auto& x : I) {
        long long rest = rest_of(x), a = x.c[p];
        if (a == 0) {
            if (rest < 0) return;
        } else if (a > 0) {
            long long l = -floor_div(rest, a);
            lo = lo ? std::max(*lo, l) : l;
        } else {
            long long h = floor_div(rest, -a);
            hi = hi ? std::min(*hi, h) : h;
        }
    }
    if (!lo || !hi) throw InfiniteFiber("unbounded coordinate during enumeration");
    for (long long x = *lo; x <= *hi; ++x) {
        vals.push_back(x);
        point.push_back(static_cast<int>(x));
        recurse(i + 1, vals, point, out);
        vals.pop_back();
        point.pop_back();
    }
}

void LatticeSolver::enumerate(const std::vector<long long>& rhs,
                              const std::function<void(const std::vector<int>&)>& out) const {
    if (!feasible(rhs)) return;
    if (unbounded_) throw InfiniteFiber("fiber is infinite");
    std::vector<long long> vals = rhs;
    std::vector<int> point;
    point.reserve(n_);
    recurse(0, vals, point, out);
}

std::vector<std::vector<int>> LatticeSolver::enumerate(const std::vector<long long>& rhs) const {
    std::vector<std::vector<int>> pts;
    enumerate(rhs, [&](const std::vector<int>& e) { pts.push_back(e); });
    return pts;
}

}  // namespace k4
