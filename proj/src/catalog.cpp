#include "k4/catalog.hpp"

#include <algorithm>
#include <set>

namespace k4 {

using nlohmann::json;

extern const char* const kBuiltinCatalog;

Catalog Catalog::from_json(const json& j) {
    Catalog c;
    c.merge(j);
    return c;
}

const json& Catalog::builtin_json() {
    static const json j = json::parse(kBuiltinCatalog);
    return j;
}

const Catalog& Catalog::builtin() {
    static const Catalog c = from_json(builtin_json());
    return c;
}

void Catalog::merge(const json& j) {
    ObjectLookup lookup = [this](const std::string& k) { return object_ptr(k); };
    if (j.contains("objects"))
        for (const auto& oj : j.at("objects")) {
            auto o = parse_object(oj, lookup);
            if (objects_.count(o->key())) throw ParseError("duplicate object key " + o->key());
            object_order_.push_back(o->key());
            objects_.emplace(o->key(), std::move(o));
        }
    if (j.contains("maps"))
        for (const auto& mj : j.at("maps")) {
            auto m = parse_map(mj, lookup);
            if (maps_.count(m->key())) throw ParseError("duplicate map key " + m->key());
            map_order_.push_back(m->key());
            maps_.emplace(m->key(), std::move(m));
        }
    if (j.contains("triples"))
        for (const auto& tj : j.at("triples")) {
            ExactTriple t;
            t.key = tj.at("key").get<std::string>();
            t.provenance = tj.value("provenance", std::string());
            t.right = object_ptr(tj.at("right").get<std::string>());
            t.map = map_ptr(tj.at("map").get<std::string>());
            t.shift = tj.contains("shift") ? parse_degree(tj.at("shift")) : RODegree{};
            if (tj.contains("connecting")) {
                t.connecting = map_ptr(tj.at("connecting").get<std::string>());
                if (t.connecting->source_ptr() != t.right || t.connecting->target_ptr() != t.map->target_ptr())
                    throw ParseError(t.key + ": connecting map must run from the right object to the map target");
                if (t.connecting->shift() != t.shift)
                    throw DegreeMismatch(t.key + ": connecting map shift differs from the triple shift");
            }
            if (triples_.count(t.key)) throw ParseError("duplicate triple key " + t.key);
            triple_order_.push_back(t.key);
            triples_.emplace(t.key, std::move(t));
        }
}

std::shared_ptr<const GradedObject> Catalog::object_ptr(const std::string& key) const {
    auto it = objects_.find(key);
    if (it == objects_.end()) throw UnknownKey("unknown object '" + key + "'");
    return it->second;
}

std::shared_ptr<const RingMap> Catalog::map_ptr(const std::string& key) const {
    auto it = maps_.find(key);
    if (it == maps_.end()) throw UnknownKey("unknown map '" + key + "'");
    return it->second;
}

const ExactTriple& Catalog::triple(const std::string& key) const {
    auto it = triples_.find(key);
    if (it == triples_.end()) throw UnknownKey("unknown triple '" + key + "'");
    return it->second;
}

std::vector<std::vector<int>> f2_points(const GradedObject& obj) {
    if (obj.families().size() != 1) throw std::invalid_argument(obj.key() + ": points need a single presented family");
    const auto& f = obj.presented(0);
    const std::size_t n = f.gens().size();
    if (n > 20) throw std::invalid_argument("too many variables for point enumeration");
    std::vector<std::vector<int>> pts;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<int> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
        bool ok = true;
        for (const auto& r : f.relations()) {
            int val = 0;
            for (const auto& t : r.terms()) {
                int m = 1;
                for (std::size_t i = 0; i < n; ++i) {
                    if (t[i] < 0 && x[i] == 0) throw std::invalid_argument("negative exponent at a zero coordinate");
                    if (t[i] != 0) m &= x[i];
                }
                val ^= m;
            }
            if (val) ok = false;
        }
        if (ok) pts.push_back(std::move(x));
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (int v : a) sa += v;
        for (int v : b) sb += v;
        if (sa != sb) return sa < sb;
        return a > b;
    });
    return pts;
}

RemarkBasis remark_basis(const GradedObject& r_phi, int d) {
    const auto& f = r_phi.presented(0);
    auto idx = [&](const std::string& n) {
        for (std::size_t i = 0; i < f.names().size(); ++i)
            if (f.names()[i] == n) return i;
        throw UnknownKey(r_phi.key() + " has no generator " + n);
    };
    const std::size_t i0 = idx("x_a0"), i1 = idx("x_a1"), ib = idx("x_b");
    std::vector<Exps> mons;
    for (int i = 0; i <= d; ++i) {
        Exps e(f.gens().size(), 0);
        e[i0] = i;
        e[ib] = d - i;
        mons.push_back(e);
    }
    for (int m = 1; m <= d; ++m) {
        Exps e(f.gens().size(), 0);
        e[i1] = m;
        e[ib] = d - m;
        mons.push_back(e);
    }
    RemarkBasis rb;
    rb.count = mons.size();
    DegreeSpace sp(f, f.degree_of(mons.front()));
    Echelon e = sp.relation_span();
    rb.independent = true;
    for (const auto& m : mons) rb.independent = e.insert(sp.vec(F2Poly::monomial(m))) && rb.independent;
    return rb;
}

}  // namespace k4
