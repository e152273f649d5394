#include "k4/audit.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k4 {

using nlohmann::json;

std::size_t AuditReport::failures() const {
    std::size_t f = 0;
    for (const auto& r : rows)
        if (!r.pass) ++f;
    return f;
}

bool operator==(const AuditRow& a, const AuditRow& b) {
    return a.gamma == b.gamma && a.values == b.values && a.pass == b.pass && a.error == b.error;
}

json AuditReport::to_json() const {
    json j;
    j["audit"] = name;
    j["provenance"] = provenance;
    j["columns"] = columns;
    j["degrees"] = rows.size();
    j["failures"] = failures();
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json row;
        row["degree"] = r.gamma;
        json vals = json::object();
        for (std::size_t i = 0; i < columns.size() && i < r.values.size(); ++i) vals[columns[i]] = r.values[i];
        row["values"] = vals;
        row["pass"] = r.pass;
        if (!r.error.empty()) row["error"] = r.error;
        j["rows"].push_back(row);
    }
    return j;
}

std::string AuditReport::to_csv() const {
    std::ostringstream os;
    os << "c1,a0,a1,b";
    for (const auto& c : columns) os << "," << c;
    os << ",pass\n";
    for (const auto& r : rows) {
        os << r.gamma.to_csv();
        for (std::size_t i = 0; i < columns.size(); ++i) os << "," << (i < r.values.size() ? r.values[i] : -1);
        os << "," << (r.pass ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string AuditReport::to_table(std::size_t max_rows) const {
    std::ostringstream os;
    os << name << ": " << rows.size() << " degrees, " << failures() << " failing\n";
    for (const auto& p : provenance) os << "  source: " << p << "\n";
    std::size_t shown = 0;
    auto line = [&](const AuditRow& r) {
        os << "  " << (r.pass ? "ok   " : "FAIL ") << "[" << r.gamma.to_csv() << "]";
        for (std::size_t i = 0; i < columns.size() && i < r.values.size(); ++i)
            os << " " << columns[i] << "=" << r.values[i];
        if (!r.error.empty()) os << " error: " << r.error;
        os << "\n";
    };
    // failures first, then passing degrees
    for (const auto& r : rows)
        if (!r.pass && shown < max_rows) line(r), ++shown;
    for (const auto& r : rows)
        if (r.pass && shown < max_rows) line(r), ++shown;
    if (shown < rows.size()) os << "  ... " << rows.size() - shown << " more\n";
    return os.str();
}

int configured_threads() {
    if (const char* s = std::getenv("K4COH_THREADS")) {
        int n = std::atoi(s);
        if (n > 0) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

template <class F>
std::vector<AuditRow> sweep(const std::vector<RODegree>& degrees, Exec exec, const F& row_of) {
    std::vector<AuditRow> rows(degrees.size());
    auto one = [&](std::size_t i) {
        try {
            rows[i] = row_of(degrees[i]);
        } catch (const std::exception& e) {
            rows[i].pass = false;
            rows[i].error = e.what();
        }
        rows[i].gamma = degrees[i];
    };
    const long n = static_cast<long>(degrees.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(configured_threads())
        for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
    } else {
        for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
    }
    return rows;
}

long long ll(std::size_t v) { return static_cast<long long>(v); }

// image of q in target degree tdeg (source degree tdeg + shift), per target family
std::map<std::size_t, RingMap::ImageSpan> image_by_family(const RingMap& q, RODegree tdeg) {
    std::map<std::size_t, RingMap::ImageSpan> out;
    for (auto& s : q.image_spans(tdeg + q.shift())) out.emplace(s.target_family, std::move(s));
    return out;
}

RingMap::ImageSpan& span_for(std::map<std::size_t, RingMap::ImageSpan>& spans, const GradedObject& target,
                             std::size_t tf, RODegree tdeg) {
    auto it = spans.find(tf);
    if (it == spans.end()) {
        auto sp = std::make_shared<const DegreeSpace>(target.presented(tf), tdeg);
        Echelon e = sp->relation_span();
        std::size_t r0 = e.rank();
        it = spans.emplace(tf, RingMap::ImageSpan{tf, sp, std::move(e), r0}).first;
    }
    return it->second;
}

}  // namespace

std::vector<std::size_t> dimension_table(const GradedObject& obj, const std::vector<RODegree>& degrees, Exec exec) {
    std::vector<std::size_t> out(degrees.size());
    const long n = static_cast<long>(degrees.size());
    if (exec == Exec::Parallel) {
        std::vector<std::string> err(degrees.size());
#pragma omp parallel for schedule(dynamic) num_threads(configured_threads())
        for (long i = 0; i < n; ++i) {
            try {
                out[i] = obj.dim(degrees[i]);
            } catch (const std::exception& e) {
                err[i] = e.what();
            }
        }
        for (long i = 0; i < n; ++i)
            if (!err[i].empty()) throw std::runtime_error(degrees[i].to_string() + ": " + err[i]);
    } else {
        for (long i = 0; i < n; ++i) out[i] = obj.dim(degrees[i]);
    }
    return out;
}

AuditReport audit_presentations(const Catalog& cat, const std::vector<RODegree>& degrees, Exec exec) {
    AuditReport rep;
    rep.name = "presentations";
    rep.columns = {"comh1", "prop2", "euler", "tform", "euler_to_t_image", "euler_to_t_violations",
                   "comh1_to_prop2_image", "comh1_to_prop2_violations"};
    const auto& comh1 = cat.object("EFK.comh1");
    const auto& prop2 = cat.object("EFK.prop2");
    const auto& euler = cat.object("EK4.euler");
    const auto& tform = cat.object("EK4.t-form");
    const auto& e2t = cat.map("euler-to-t");
    const auto& c2p = cat.map("comh1-to-prop2");
    rep.provenance = {comh1.provenance(), prop2.provenance(), euler.provenance(), tform.provenance(),
                      e2t.provenance_or_key(), c2p.provenance_or_key()};
    rep.rows = sweep(degrees, exec, [&](RODegree g) {
        AuditRow r;
        std::size_t a = comh1.dim(g), b = prop2.dim(g), c = euler.dim(g), d = tform.dim(g);
        MapRank m1 = e2t.rank_in_degree(g);
        std::size_t v1 = e2t.relation_violations(g);
        MapRank m2 = c2p.rank_in_degree(g);
        std::size_t v2 = c2p.relation_violations(g);
        r.values = {ll(a), ll(b), ll(c), ll(d), ll(m1.image_dim), ll(v1), ll(m2.image_dim), ll(v2)};
        r.pass = a == b && c == d && m1.image_dim == c && m1.image_dim == d && v1 == 0 && m2.image_dim == a &&
                 m2.image_dim == b && v2 == 0;
        return r;
    });
    return rep;
}

AuditReport audit_les(const Catalog& cat, const std::string& key, const std::vector<RODegree>& degrees, Exec exec) {
    const ExactTriple& t = cat.triple(key);
    AuditReport rep;
    rep.name = "les:" + key;
    rep.columns = {"right", "ker", "coker", "connecting_violations", "connecting_rank", "connecting_dim"};
    rep.provenance = {t.provenance, t.right->provenance(), t.map->provenance_or_key()};
    if (t.connecting) rep.provenance.push_back(t.connecting->provenance_or_key());
    const RingMap& q = *t.map;
    rep.rows = sweep(degrees, exec, [&](RODegree g) {
        AuditRow r;
        const RODegree tdeg = g - t.shift;
        std::size_t right = t.right->dim(g);
        std::size_t ker = q.rank_in_degree(g).kernel_dim;
        std::size_t coker = q.target().dim(tdeg) - q.rank_in_degree(tdeg + q.shift()).image_dim;
        std::size_t viol = 0, crank = 0, cdim = 0;
        if (t.connecting) {
            const RingMap& c = *t.connecting;
            auto spans = image_by_family(q, tdeg);
            std::map<std::size_t, std::pair<Echelon, std::size_t>> ext;
            for (std::size_t sf = 0; sf < c.families().size(); ++sf) {
                const auto& fi = c.families()[sf];
                if (fi.zero) continue;
                auto& base = span_for(spans, q.target(), fi.target_family, tdeg);
                const auto& src = t.right->presented(sf);
                for (const auto& m : src.relation_multiples(g))
                    if (!base.span.contains(base.space->vec(c.apply(sf, m)))) ++viol;
                auto it = ext.find(fi.target_family);
                if (it == ext.end()) it = ext.emplace(fi.target_family, std::make_pair(base.span, base.span.rank())).first;
                for (const auto& m : src.monomials(g)) it->second.first.insert(base.space->vec(c.image_of(sf, m)));
                cdim += src.dim(g);
            }
            for (auto& [tf, e] : ext) crank += e.first.rank() - e.second;
        }
        r.values = {ll(right), ll(ker), ll(coker), ll(viol), ll(crank), ll(cdim)};
        r.pass = right == ker + coker && viol == 0 && crank == cdim;
        return r;
    });
    return rep;
}

AuditReport audit_delta_u(const Catalog& cat, const std::vector<RODegree>& degrees, Exec exec) {
    AuditReport rep;
    rep.name = "delta-u";
    rep.columns = {"ec2", "ker", "efkk_next", "coker_next", "qtot_violations", "ker_escapes"};
    const auto& ec2 = cat.object("EC2");
    const auto& kerdu = cat.object("KerDu");
    const auto& efkk = cat.object("EFKK");
    const auto& coker = cat.object("CokerDu");
    const auto& qtot = cat.map("qtot");
    const auto& qstar = cat.map("qstar");
    rep.provenance = {ec2.provenance(), kerdu.provenance(), efkk.provenance(), coker.provenance(),
                      qtot.provenance_or_key(), qstar.provenance_or_key()};
    if (qtot.target_ptr() != qstar.target_ptr()) throw std::invalid_argument("qtot and qstar must share a target");
    rep.rows = sweep(degrees, exec, [&](RODegree g) {
        AuditRow r;
        const RODegree next = g + kOne;
        std::size_t a = ec2.dim(g), k = kerdu.dim(g), e = efkk.dim(next), c = coker.dim(next);
        std::size_t viol = qtot.relation_violations(g);
        std::size_t escapes = 0;
        auto spans = image_by_family(qstar, g);
        for (std::size_t kf = 0; kf < kerdu.families().size(); ++kf) {
            const Family& f = kerdu.family(kf);
            if (f.kind != Family::Kind::Span || f.ambient.get() != &ec2) continue;
            const auto& fi = qtot.families().at(f.ambient_family);
            if (fi.zero) continue;
            auto& base = span_for(spans, qstar.target(), fi.target_family, g);
            for (const auto& m : f.fam->monomials(g))
                if (!base.span.contains(base.space->vec(qtot.apply(f.ambient_family, f.span_image(m))))) ++escapes;
        }
        r.values = {ll(a), ll(k), ll(e), ll(c), ll(viol), ll(escapes)};
        r.pass = a + c == k + e && viol == 0 && escapes == 0;
        return r;
    });
    return rep;
}

std::vector<Mutation> catalog_mutations(const json& base) {
    std::vector<Mutation> out;
    auto find_object = [&](const std::string& key) -> const json& {
        for (const auto& o : base.at("objects"))
            if (o.at("key") == key) return o;
        throw UnknownKey("unknown object '" + key + "'");
    };

    // q^* table
    const json* qs = nullptr;
    std::size_t qi = 0;
    for (std::size_t i = 0; i < base.at("maps").size(); ++i)
        if (base["maps"][i].at("key") == "qstar") qs = &base["maps"][i], qi = i;
    if (!qs) throw UnknownKey("unknown map 'qstar'");
    const json& tgt = find_object(qs->at("target").get<std::string>());
    const std::regex ident("[A-Za-z_][A-Za-z0-9_']*");
    for (std::size_t fi = 0; fi < qs->at("families").size(); ++fi) {
        const auto& fam = qs->at("families")[fi];
        if (!fam.contains("images")) continue;
        std::vector<std::string> tnames;
        for (const auto& g : tgt.at("families")[fam.value("target_family", 0)].at("gens"))
            tnames.push_back(g.at("name").get<std::string>());
        for (auto it = fam.at("images").begin(); it != fam.at("images").end(); ++it) {
            const std::string gen = it.key(), img = it.value().get<std::string>();
            auto emit = [&](const std::string& replacement) {
                Mutation m;
                m.description = "qstar[" + std::to_string(fi) + "]: " + gen + " -> " + replacement + " (was " + img + ")";
                m.catalog = base;
                m.catalog["maps"][qi]["families"][fi]["images"][gen] = replacement;
                out.push_back(std::move(m));
            };
            emit("0");
            for (std::sregex_iterator t(img.begin(), img.end(), ident), end; t != end; ++t) {
                for (const auto& n : tnames) {
                    if (n == t->str()) continue;
                    std::string rep = img;
                    rep.replace(static_cast<std::size_t>(t->position()), t->length(), n);
                    emit(rep);
                }
            }
        }
    }

    // relation terms of the objects the audits read
    for (const std::string key : {"EK4.euler", "EFKK", "EC2", "KerDu"}) {
        std::size_t oi = 0;
        for (std::size_t i = 0; i < base.at("objects").size(); ++i)
            if (base["objects"][i].at("key") == key) oi = i;
        const json& obj = find_object(key);
        for (std::size_t fi = 0; fi < obj.at("families").size(); ++fi) {
            const auto& fam = obj.at("families")[fi];
            if (!fam.contains("relations")) continue;
            std::vector<std::string> names;
            for (const auto& g : fam.at("gens")) names.push_back(g.at("name").get<std::string>());
            for (std::size_t ri = 0; ri < fam.at("relations").size(); ++ri) {
                F2Poly rel = F2Poly::parse(fam["relations"][ri].get<std::string>(), names);
                for (const auto& term : rel.terms()) {
                    F2Poly cut = rel;
                    cut.toggle(term);
                    Mutation m;
                    m.description = key + "[" + std::to_string(fi) + "] relation " + std::to_string(ri) +
                                    ": drop " + monomial_string(term, names);
                    m.catalog = base;
                    m.catalog["objects"][oi]["families"][fi]["relations"][ri] = cut.to_string(names);
                    out.push_back(std::move(m));
                }
            }
        }
    }
    return out;
}

namespace {

std::vector<AuditReport> run_audits(const Catalog& cat, int radius) {
    auto degrees = degree_box(radius);
    std::vector<AuditReport> reps;
    reps.push_back(audit_presentations(cat, degrees));
    for (const auto& t : cat.triple_keys()) reps.push_back(audit_les(cat, t, degrees));
    reps.push_back(audit_delta_u(cat, degrees));
    return reps;
}

const std::vector<AuditReport>& baseline(int radius) {
    static std::mutex mu;
    static std::map<int, std::vector<AuditReport>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(radius);
    if (it == cache.end()) it = cache.emplace(radius, run_audits(Catalog::builtin(), radius)).first;
    return it->second;
}

}  // namespace

MutationOutcome run_mutation(const Mutation& m, const std::vector<int>& radii) {
    MutationOutcome out;
    out.description = m.description;
    std::optional<Catalog> cat;
    try {
        cat = Catalog::from_json(m.catalog);
    } catch (const std::exception& e) {
        out.detected = true;
        out.detected_by = std::string("load (") + e.what() + ")";
        return out;
    }
    for (int radius : radii) {
        const auto& base = baseline(radius);
        std::vector<AuditReport> mut;
        try {
            mut = run_audits(*cat, radius);
        } catch (const std::exception& e) {
            out.detected = true;
            out.detected_by = std::string("audit setup (") + e.what() + ")";
            out.radius = radius;
            return out;
        }
        for (std::size_t a = 0; a < base.size() && a < mut.size(); ++a) {
            for (std::size_t i = 0; i < base[a].rows.size(); ++i) {
                if (base[a].rows[i].pass && !mut[a].rows[i].pass) {
                    out.detected = true;
                    out.detected_by = base[a].name + " at [" + base[a].rows[i].gamma.to_csv() + "]";
                    out.radius = radius;
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace k4
