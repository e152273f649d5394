#include "k4/conjugation.hpp"

#include <algorithm>
#include <set>

#include "k4/f2linalg.hpp"

namespace k4 {

using nlohmann::json;

bool TruncatedRing::finite() const {
    return std::all_of(heights.begin(), heights.end(), [](int h) { return h > 0; });
}

int TruncatedRing::top_degree() const {
    int d = 0;
    for (std::size_t i = 0; i < size(); ++i) d += degrees[i] * (heights[i] - 1);
    return d;
}

int TruncatedRing::degree_of(const Exps& e) const {
    int d = 0;
    for (std::size_t i = 0; i < size(); ++i) d += degrees[i] * e[i];
    return d;
}

std::vector<Exps> TruncatedRing::basis(int d) const {
    std::vector<Exps> out;
    if (d < 0) return out;
    Exps e(size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == size()) {
            if (left == 0) out.push_back(e);
            return;
        }
        int hi = left / degrees[i];
        if (heights[i] > 0) hi = std::min(hi, heights[i] - 1);
        for (int k = hi; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k * degrees[i]);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

F2Poly TruncatedRing::reduce(const F2Poly& p) const { return truncate(p, heights); }

F2Poly TruncatedRing::parse(const std::string& s) const { return reduce(F2Poly::parse(s, names)); }

std::vector<int> TruncatedRing::betti(int max_degree) const {
    std::vector<int> b;
    for (int d = 0; d <= max_degree; ++d) b.push_back(static_cast<int>(basis(d).size()));
    return b;
}

namespace {

TruncatedRing ring_from_json(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw ModelError(std::string(what) + ": expected {\"generators\": [...]}");
    TruncatedRing r;
    std::set<std::string> seen;
    for (const auto& g : j["generators"]) {
        std::string nm = g.at("name").get<std::string>();
        if (nm.empty() || !seen.insert(nm).second) throw ModelError(std::string(what) + ": bad or repeated generator name '" + nm + "'");
        r.names.push_back(nm);
        r.degrees.push_back(g.at("degree").get<int>());
        r.heights.push_back(g.value("height", 0));
    }
    return r;
}

json ring_to_json(const TruncatedRing& r) {
    json gens = json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
        json g{{"name", r.names[i]}, {"degree", r.degrees[i]}};
        if (r.heights[i] > 0) g["height"] = r.heights[i];
        gens.push_back(g);
    }
    return json{{"generators", gens}};
}

SpaceModel projective(int n, int scale, const std::string& name) {
    SpaceModel m;
    m.name = name;
    m.scale = scale;
    int h = n < 0 ? 0 : n + 1;
    m.ambient = TruncatedRing{{"y"}, {scale}, {h}};
    m.fixed = TruncatedRing{{"c"}, {1}, {h}};
    m.kappa_gens = {F2Poly::var(1, 0)};
    m.multiplicative = true;
    return m;
}

F2Poly extend(const F2Poly& p, std::size_t before, std::size_t after) {
    F2Poly out(before + p.nvars() + after);
    for (const auto& e : p.terms()) {
        Exps f(before, 0);
        f.insert(f.end(), e.begin(), e.end());
        f.resize(before + p.nvars() + after, 0);
        out.toggle(f);
    }
    return out;
}

std::vector<std::string> tensor_names(const SpaceModel& m, std::size_t nt) {
    std::vector<std::string> names = m.fixed.names;
    names.push_back("t");
    if (nt == 2) names.push_back("t'");
    return names;
}

std::vector<int> tensor_heights(const SpaceModel& m, std::size_t nt) {
    std::vector<int> h = m.fixed.heights;
    h.resize(h.size() + nt, 0);
    return h;
}

int fixed_degree(const Exps& e, std::size_t nf) {
    int d = 0;
    for (std::size_t i = 0; i < nf; ++i) d += e[i];
    return d;
}

}  // namespace

SpaceModel SpaceModel::quaternionic_projective(int n) {
    return projective(n, 4, n < 0 ? "HP^inf" : "HP^" + std::to_string(n));
}

SpaceModel SpaceModel::complex_projective(int n) {
    return projective(n, 2, n < 0 ? "CP^inf" : "CP^" + std::to_string(n));
}

SpaceModel SpaceModel::from_json(const json& j) {
    SpaceModel m;
    try {
        m.name = j.value("name", std::string("model"));
        m.scale = j.value("scale", 4);
        if (m.scale != 2 && m.scale != 4) throw ModelError("scale must be 2 or 4");
        m.ambient = ring_from_json(j.at("ambient"), "ambient");
        m.fixed = ring_from_json(j.at("fixed"), "fixed");
        m.multiplicative = j.value("multiplicative", false);
        const json& kap = j.at("kappa");
        if (!kap.is_object()) throw ModelError("kappa must map ambient monomials to fixed classes");
        std::vector<bool> have(m.ambient.size(), false);
        m.kappa_gens.assign(m.ambient.size(), F2Poly::zero(m.fixed.size()));
        for (auto it = kap.begin(); it != kap.end(); ++it) {
            F2Poly src = F2Poly::parse(it.key(), m.ambient.names);
            if (!src.is_monomial()) throw ModelError("kappa key '" + it.key() + "' is not a monomial");
            F2Poly img = F2Poly::parse(it.value().get<std::string>(), m.fixed.names);
            const Exps& e = *src.terms().begin();
            int nz = 0, which = -1;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) ++nz, which = static_cast<int>(i);
            if (m.multiplicative && nz == 1 && e[which] == 1) {
                m.kappa_gens[which] = img;
                have[which] = true;
            } else {
                m.kappa_basis[e] = img;
            }
        }
        if (m.multiplicative)
            for (std::size_t i = 0; i < have.size(); ++i)
                if (!have[i]) throw ModelError("multiplicative kappa has no image for generator " + m.ambient.names[i]);
    } catch (const json::exception& e) {
        throw ModelError(std::string("malformed model: ") + e.what());
    } catch (const ParseError& e) {
        throw ModelError(std::string("malformed model: ") + e.what());
    }
    return m;
}

json SpaceModel::to_json() const {
    json kap = json::object();
    if (multiplicative)
        for (std::size_t i = 0; i < ambient.size(); ++i) kap[ambient.names[i]] = kappa_gens[i].to_string(fixed.names);
    for (const auto& [e, img] : kappa_basis) kap[monomial_string(e, ambient.names)] = img.to_string(fixed.names);
    return json{{"name", name},
                {"scale", scale},
                {"ambient", ring_to_json(ambient)},
                {"fixed", ring_to_json(fixed)},
                {"multiplicative", multiplicative},
                {"kappa", kap}};
}

F2Poly SpaceModel::kappa(const F2Poly& x) const {
    if (x.nvars() != ambient.size()) throw ModelError("class does not live in the ambient ring");
    F2Poly out(fixed.size());
    const F2Poly r = ambient.reduce(x);
    for (const auto& e : r.terms()) {
        auto it = kappa_basis.find(e);
        if (it != kappa_basis.end()) {
            out += it->second;
            continue;
        }
        if (!multiplicative) throw ModelError("kappa undefined on " + monomial_string(e, ambient.names));
        F2Poly v = F2Poly::one(fixed.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) v = fixed.reduce(v * kappa_gens[i].pow(e[i]));
        out += v;
    }
    return fixed.reduce(out);
}

int SpaceModel::degree_of(const F2Poly& x) const {
    F2Poly r = ambient.reduce(x);
    if (r.is_zero()) throw DegreeError("zero class has no degree");
    if (!r.homogeneous(ambient.degrees)) throw DegreeError("class " + r.to_string(ambient.names) + " is not homogeneous");
    return ambient.degree_of(*r.terms().begin());
}

void SpaceModel::validate(int max_degree) const {
    if (ambient.degrees.size() != ambient.size() || ambient.heights.size() != ambient.size() ||
        fixed.degrees.size() != fixed.size() || fixed.heights.size() != fixed.size())
        throw ModelError("ring description has mismatched lengths");
    for (std::size_t i = 0; i < ambient.size(); ++i)
        if (ambient.degrees[i] <= 0 || ambient.degrees[i] % scale)
            throw ModelError("generator " + ambient.names[i] + " has degree " + std::to_string(ambient.degrees[i]) +
                             ", cohomology must be concentrated in degrees divisible by " + std::to_string(scale));
    for (std::size_t i = 0; i < fixed.size(); ++i)
        if (fixed.degrees[i] != 1) throw ModelError("fixed-point generator " + fixed.names[i] + " must have degree 1");
    int top = max_degree;
    if (ambient.finite() && fixed.finite()) top = std::max(ambient.top_degree() / scale, fixed.top_degree());
    for (int d = 0; d <= top; ++d) {
        auto src = ambient.basis(scale * d);
        auto dst = fixed.basis(d);
        if (src.size() != dst.size())
            throw ModelError("degree " + std::to_string(scale * d) + ": dim H(X) = " + std::to_string(src.size()) +
                             " but dim H(X^K) in degree " + std::to_string(d) + " is " + std::to_string(dst.size()));
        std::map<Exps, std::size_t> col;
        for (std::size_t c = 0; c < dst.size(); ++c) col[dst[c]] = c;
        Echelon ech(dst.size());
        for (const auto& e : src) {
            F2Poly img = kappa(F2Poly::monomial(e));
            BitVec v(dst.size());
            for (const auto& t : img.terms()) {
                auto it = col.find(t);
                if (it == col.end())
                    throw ModelError("kappa(" + monomial_string(e, ambient.names) + ") is not of degree " + std::to_string(d));
                v.flip(it->second);
            }
            if (!ech.insert(v)) throw ModelError("kappa is not injective in degree " + std::to_string(scale * d));
        }
    }
}

std::vector<Exps> SpaceModel::monomials_up_to(int max_degree) const {
    std::vector<Exps> out;
    for (int d = 0; d <= max_degree; ++d)
        for (auto& e : ambient.basis(d)) out.push_back(e);
    return out;
}

std::vector<ConjugationTerm> conjugation_terms(const SpaceModel& m, const F2Poly& x) {
    if (m.scale != 4) throw ModelError("the quaternionic equation needs a degree-quartering model");
    std::vector<ConjugationTerm> out;
    F2Poly r = m.ambient.reduce(x);
    if (r.is_zero()) return out;
    int d = m.degree_of(r);
    if (d % 4) throw DegreeError("class of degree " + std::to_string(d) + " is not in a degree divisible by 4");
    int n = d / 4;
    F2Poly z = m.kappa(r);
    F2Poly p0 = dickson_p0(), p1 = dickson_p1();
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            ConjugationTerm t;
            t.i = i;
            t.j = j;
            t.coefficient = milnor_act_truncated(MilnorOp({j, i}), z, m.fixed.heights);
            t.dickson = p1.pow(j) * p0.pow(n - i - j);
            out.push_back(std::move(t));
        }
    return out;
}

ConjugationClass conjugation_rhs(const SpaceModel& m, const F2Poly& x) {
    std::size_t nf = m.fixed.size();
    ConjugationClass c{F2Poly(nf + 2), tensor_names(m, 2), nf};
    for (const auto& t : conjugation_terms(m, x)) {
        if (t.coefficient.is_zero()) continue;
        c.value += extend(t.coefficient, 0, 2) * extend(t.dickson, nf, 0);
    }
    return c;
}

ConjugationClass conjugation_rhs_c2(const SpaceModel& m, const F2Poly& x) {
    if (m.scale != 2) throw ModelError("the C2 equation needs a degree-halving model");
    std::size_t nf = m.fixed.size();
    ConjugationClass c{F2Poly(nf + 1), tensor_names(m, 1), nf};
    F2Poly r = m.ambient.reduce(x);
    if (r.is_zero()) return c;
    int d = m.degree_of(r);
    if (d % 2) throw DegreeError("class of odd degree " + std::to_string(d));
    int n = d / 2;
    F2Poly z = m.kappa(r);
    for (int i = 0; i <= n; ++i) {
        F2Poly s = milnor_act_truncated(MilnorOp::sq(i), z, m.fixed.heights);
        c.value += extend(s, 0, 1) * F2Poly::var(nf + 1, nf, n - i);
    }
    return c;
}

ConjugationClass multiply(const SpaceModel& m, const ConjugationClass& a, const ConjugationClass& b) {
    std::size_t nt = a.value.nvars() - a.nfixed;
    ConjugationClass c = a;
    c.value = truncate(a.value * b.value, tensor_heights(m, nt));
    return c;
}

bool check_multiplicativity(const SpaceModel& m, const F2Poly& x, const F2Poly& y) {
    F2Poly xy = m.ambient.reduce(x * y);
    return conjugation_rhs(m, xy) == multiply(m, conjugation_rhs(m, x), conjugation_rhs(m, y));
}

bool check_homogeneity(const SpaceModel& m, const F2Poly& x) {
    F2Poly r = m.ambient.reduce(x);
    if (r.is_zero()) return true;
    int n = m.degree_of(r) / 4;
    std::vector<int> ones(m.fixed.size(), 1), tt(2, 1);
    for (const auto& t : conjugation_terms(m, r)) {
        int want = 4 * n - (n + 3 * t.i + t.j);
        if (t.dickson.is_zero() || !t.dickson.homogeneous(tt)) return false;
        if (t.dickson.terms().begin()->at(0) + t.dickson.terms().begin()->at(1) != want) return false;
        if (t.coefficient.is_zero()) continue;
        if (!t.coefficient.homogeneous(ones)) return false;
        if (fixed_degree(*t.coefficient.terms().begin(), m.fixed.size()) != n + t.j + 3 * t.i) return false;
    }
    auto c = conjugation_rhs(m, r);
    for (const auto& e : c.value.terms()) {
        int d = 0;
        for (int v : e) d += v;
        if (d != 4 * n) return false;
    }
    return true;
}

bool check_leading_term(const SpaceModel& m, const F2Poly& x) {
    F2Poly r = m.ambient.reduce(x);
    if (r.is_zero()) return true;
    int n = m.degree_of(r) / 4;
    std::size_t nf = m.fixed.size();
    auto c = conjugation_rhs(m, r);
    F2Poly block(nf + 2);
    for (const auto& e : c.value.terms())
        if (fixed_degree(e, nf) == n) block.toggle(e);
    F2Poly want = extend(m.kappa(r), 0, 2) * extend(dickson_p0().pow(n), nf, 0);
    return block == want;
}

bool check_c2_shape(const SpaceModel& m, const F2Poly& x) {
    F2Poly r = m.ambient.reduce(x);
    if (r.is_zero()) return true;
    int n = m.degree_of(r) / 4;
    std::size_t nf = m.fixed.size();
    auto c = conjugation_rhs(m, r);
    F2Poly top(nf);
    for (const auto& e : c.value.terms()) {
        if (e[nf + 1] != 0) continue;  // t' -> 0
        int k = e[nf];
        if (k % 2 || k > 2 * n) return false;
        if (fixed_degree(e, nf) != 4 * n - k) return false;
        if (k == 2 * n) top.toggle(Exps(e.begin(), e.begin() + static_cast<long>(nf)));
    }
    F2Poly z = m.kappa(r);
    return top == m.fixed.reduce(z * z);
}

PurityResult purity_certificate(const std::vector<int>& betti_x, const std::vector<int>& betti_fixed) {
    PurityResult res;
    auto fail = [&](int idx, std::string why) {
        res.ok = false;
        res.cells.clear();
        res.failed_index = idx;
        res.reason = std::move(why);
        return res;
    };
    for (std::size_t i = 0; i < betti_x.size(); ++i) {
        if (betti_x[i] < 0) return fail(static_cast<int>(i), "negative Betti number");
        if (i % 4 && betti_x[i] != 0)
            return fail(static_cast<int>(i), "H^" + std::to_string(i) + "(X) is nonzero in a degree not divisible by 4");
    }
    for (int f : betti_fixed)
        if (f < 0) return fail(-1, "negative fixed-point Betti number");
    std::size_t span = std::max(betti_x.size(), 4 * betti_fixed.size());
    for (std::size_t i = 0; i < span; i += 4) {
        int bx = i < betti_x.size() ? betti_x[i] : 0;
        int bf = i / 4 < betti_fixed.size() ? betti_fixed[i / 4] : 0;
        if (bx != bf)
            return fail(static_cast<int>(i), "dim H^" + std::to_string(i) + "(X) = " + std::to_string(bx) +
                                                 " but dim H^" + std::to_string(i / 4) + "(X^K4) = " + std::to_string(bf));
    }
    res.ok = true;
    for (std::size_t n = 0; n < betti_fixed.size(); ++n)
        for (int k = 0; k < betti_fixed[n]; ++k) res.cells.push_back(static_cast<int>(n));
    return res;
}

}  // namespace k4
