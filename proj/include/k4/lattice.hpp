#pragma once
// Integer points of { e : A e = b, C e <= c, lo <= e <= hi } for a fixed
// constraint matrix and varying right-hand sides. Bounds for each
// coordinate come from Fourier-Motzkin projections computed once.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace k4 {

struct VarBound {
    std::optional<long long> lo, hi;
};

class LatticeSolver {
public:
    // eq_rows: m rows over n variables; ineq_rows: q rows (C e <= c).
    LatticeSolver(std::vector<std::vector<long long>> eq_rows, std::vector<std::vector<long long>> ineq_rows,
                  std::vector<VarBound> bounds);

    std::size_t num_vars() const { return n_; }
    std::size_t num_params() const { return m_ + q_; }
    // true when some nonzero rational direction stays inside every fiber
    bool unbounded() const { return unbounded_; }
    // rational feasibility for the right-hand side (b, c)
    bool feasible(const std::vector<long long>& rhs) const;
    // every integer point, in lexicographic order; throws if unbounded and feasible
    void enumerate(const std::vector<long long>& rhs, const std::function<void(const std::vector<int>&)>& out) const;
    std::vector<std::vector<int>> enumerate(const std::vector<long long>& rhs) const;

    struct Con {
        std::vector<long long> c;  // over params then vars
        long long k = 0;
        bool operator==(const Con&) const = default;
    };

private:
    std::size_t n_, m_, q_;
    std::vector<VarBound> bounds_;
    // proj_[i]: constraints on (params, e_0..e_{i-1}); equalities then inequalities
    std::vector<std::pair<std::vector<Con>, std::vector<Con>>> proj_;
    bool unbounded_ = false;

    void recurse(std::size_t i, std::vector<long long>& vals, std::vector<int>& point,
                 const std::function<void(const std::vector<int>&)>& out) const;
};

struct InfiniteFiber : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace k4
