#include "k4/maximality.hpp"

#include <numeric>

namespace k4 {

using nlohmann::json;

K4Module K4Module::trivial(std::size_t d) { return K4Module{d, F2Matrix::identity(d), F2Matrix::identity(d)}; }

K4Module K4Module::regular() {
    // basis order e, t1, t2, t1t2
    return K4Module{4,
                    F2Matrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
                    F2Matrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}})};
}

K4Module K4Module::direct_sum(const K4Module& a, const K4Module& b) {
    std::size_t n = a.dim + b.dim;
    K4Module s{n, F2Matrix(n, n), F2Matrix(n, n)};
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) {
            s.T1.set(r, c, a.T1.get(r, c));
            s.T2.set(r, c, a.T2.get(r, c));
        }
    for (std::size_t r = 0; r < b.dim; ++r)
        for (std::size_t c = 0; c < b.dim; ++c) {
            s.T1.set(a.dim + r, a.dim + c, b.T1.get(r, c));
            s.T2.set(a.dim + r, a.dim + c, b.T2.get(r, c));
        }
    return s;
}

namespace {

F2Matrix matrix_from_json(const json& j, const char* which) {
    if (!j.is_array()) throw InvalidModule(std::string(which) + " must be a list of 0/1 rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw InvalidModule(std::string(which) + " must be a list of 0/1 rows");
        std::vector<int> row;
        for (const auto& x : r) {
            if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
                throw InvalidModule(std::string(which) + " entries must be 0 or 1");
            row.push_back(x.get<int>());
        }
        if (row.size() != j.size()) throw InvalidModule(std::string(which) + " must be square");
        rows.push_back(row);
    }
    if (rows.empty()) return F2Matrix(0, 0);
    return F2Matrix::from_rows(rows);
}

json matrix_to_json(const F2Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

K4Module K4Module::from_json(const json& j) {
    if (!j.is_object() || !j.contains("T1") || !j.contains("T2")) throw InvalidModule("module needs T1 and T2");
    K4Module m;
    m.T1 = matrix_from_json(j["T1"], "T1");
    m.T2 = matrix_from_json(j["T2"], "T2");
    m.dim = m.T1.rows();
    if (m.T2.rows() != m.dim) throw InvalidModule("T1 and T2 have different sizes");
    m.validate();
    return m;
}

json K4Module::to_json() const { return json{{"T1", matrix_to_json(T1)}, {"T2", matrix_to_json(T2)}}; }

void K4Module::validate() const {
    if (T1.rows() != dim || T1.cols() != dim || T2.rows() != dim || T2.cols() != dim)
        throw InvalidModule("action matrices must be " + std::to_string(dim) + "x" + std::to_string(dim));
    F2Matrix id = F2Matrix::identity(dim);
    if (!(T1 * T1 == id)) throw InvalidModule("T1 is not an involution");
    if (!(T2 * T2 == id)) throw InvalidModule("T2 is not an involution");
    if (!(T1 * T2 == T2 * T1)) throw InvalidModule("T1 and T2 do not commute");
}

F2Matrix koszul_differential(const K4Module& m, int k) {
    std::size_t d = m.dim;
    std::size_t in = static_cast<std::size_t>(k + 1), out = in + 1;
    F2Matrix D(out * d, in * d);
    F2Matrix X = m.T1 + F2Matrix::identity(d);
    F2Matrix Y = m.T2 + F2Matrix::identity(d);
    for (std::size_t i = 0; i < in; ++i)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                if (X.get(r, c)) D.set(i * d + r, i * d + c);
                if (Y.get(r, c)) D.set((i + 1) * d + r, i * d + c);
            }
    return D;
}

std::size_t group_hn(const K4Module& m, int n) {
    m.validate();
    if (n < 0) return 0;
    std::size_t cochains = static_cast<std::size_t>(n + 1) * m.dim;
    if (cochains == 0) return 0;
    std::size_t r_out = rank(koszul_differential(m, n));
    std::size_t r_in = n > 0 ? rank(koszul_differential(m, n - 1)) : 0;
    return cochains - r_out - r_in;
}

std::size_t group_h1(const K4Module& m) { return group_hn(m, 1); }

std::string to_string(MaxStatus s) {
    switch (s) {
        case MaxStatus::Maximal: return "maximal";
        case MaxStatus::Strict: return "strict";
        case MaxStatus::Violated: return "violated";
    }
    return "?";
}

json MaxResult::to_json() const {
    json j{{"status", to_string(status)}, {"lhs", lhs}, {"rhs", rhs}};
    if (!warning.empty()) j["warning"] = warning;
    return j;
}

namespace {

MaxStatus compare(long long lhs2, long long rhs2) {
    if (lhs2 == rhs2) return MaxStatus::Maximal;
    return lhs2 < rhs2 ? MaxStatus::Strict : MaxStatus::Violated;
}

long long total(const BettiTable& b) {
    long long s = 0;
    for (int x : b) {
        if (x < 0) throw InvalidModule("negative Betti number");
        s += x;
    }
    return s;
}

}  // namespace

MaxResult smith_thom(const BettiTable& betti_x, const BettiTable& betti_fixed) {
    MaxResult r;
    r.lhs = total(betti_fixed);
    long long rhs = total(betti_x);
    r.rhs = static_cast<double>(rhs);
    r.status = compare(r.lhs, rhs);
    return r;
}

MaxResult galois_maximal(const BettiTable& betti_x, const std::vector<K4Module>& modules, const BettiTable& betti_fixed) {
    if (modules.size() != betti_x.size())
        throw InvalidModule("expected one module per degree (" + std::to_string(betti_x.size()) + "), got " +
                            std::to_string(modules.size()));
    for (std::size_t i = 0; i < modules.size(); ++i)
        if (betti_x[i] < 0 || modules[i].dim != static_cast<std::size_t>(betti_x[i]))
            throw InvalidModule("module in degree " + std::to_string(i) + " has dim " + std::to_string(modules[i].dim) +
                                " but the Betti number is " + std::to_string(betti_x[i]));
    std::vector<long long> h1(modules.size(), 0);
    std::string err;
    long long count = static_cast<long long>(modules.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        try {
            h1[i] = static_cast<long long>(group_h1(modules[i]));
        } catch (const InvalidModule& e) {
#pragma omp critical(k4_galois_err)
            if (err.empty()) err = "degree " + std::to_string(i) + ": " + e.what();
        }
    }
    if (!err.empty()) throw InvalidModule(err);
    long long twice = std::accumulate(h1.begin(), h1.end(), 0LL);
    MaxResult r;
    r.lhs = total(betti_fixed);
    r.rhs = static_cast<double>(twice) / 2.0;
    if (twice % 2) r.warning = "sum of dim H^1 is odd (" + std::to_string(twice) + "); the halved bound is fractional";
    r.status = compare(2 * r.lhs, twice);
    return r;
}

std::vector<K4Module> trivial_modules(const BettiTable& betti_x) {
    std::vector<K4Module> out;
    for (int b : betti_x) {
        if (b < 0) throw InvalidModule("negative Betti number");
        out.push_back(K4Module::trivial(static_cast<std::size_t>(b)));
    }
    return out;
}

}  // namespace k4
