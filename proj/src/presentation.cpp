#include "k4/presentation.hpp"

namespace k4 {

using nlohmann::json;

RODegree parse_degree(const json& j) {
    RODegree d;
    from_json(j, d);
    return d;
}

namespace {

const json& need(const json& j, const char* field, const std::string& where) {
    if (!j.is_object() || !j.contains(field)) throw ParseError(where + ": missing field '" + field + "'");
    return j.at(field);
}

std::string str(const json& j, const char* field, const std::string& where) {
    const auto& v = need(j, field, where);
    if (!v.is_string()) throw ParseError(where + ": field '" + field + "' must be a string");
    return v.get<std::string>();
}

Family parse_span(const json& s, const ObjectLookup& lookup, const std::string& where) {
    Family f;
    f.kind = Family::Kind::Span;
    f.ambient = lookup(str(s, "ambient", where));
    f.ambient_family = s.value("family", 0);
    const auto& amb = f.ambient->presented(f.ambient_family);
    std::vector<Generator> gens;
    for (const auto& g : need(s, "generators", where)) {
        Generator gen;
        gen.name = str(g, "name", where);
        gen.domain = parse_domain(g.value("domain", std::string("natural")));
        F2Poly img = amb.parse(str(g, "image", where));
        if (img.is_zero()) throw ParseError(where + ": span generator " + gen.name + " has zero image");
        RODegree w = amb.weight(*img.terms().begin());
        for (const auto& t : img.terms())
            if (amb.weight(t) != w) throw DegreeMismatch(where + ": span generator " + gen.name + " is not homogeneous");
        if (g.contains("degree")) {
            RODegree stated = parse_degree(g.at("degree"));
            if (stated != w)
                throw DegreeMismatch(where + ": span generator " + gen.name + " has degree " + w.to_string() +
                                     ", stated " + stated.to_string());
        }
        if (gen.domain != Domain::Natural && gen.domain != Domain::Positive && !img.is_monomial())
            throw ParseError(where + ": span generator " + gen.name + " needs a monomial image to be inverted");
        gen.degree = w;
        gens.push_back(gen);
        f.images.push_back(std::move(img));
    }
    f.fam = std::make_shared<PresentedFamily>(std::move(gens), amb.offset(), std::vector<F2Poly>{}, amb.offset_label());
    return f;
}

}  // namespace

PresentedFamily parse_family(const json& j) {
    std::vector<Generator> gens;
    for (const auto& g : need(j, "gens", "family")) {
        Generator gen;
        gen.name = str(g, "name", "generator");
        gen.degree = parse_degree(need(g, "degree", gen.name));
        gen.domain = parse_domain(g.value("domain", std::string("natural")));
        gens.push_back(gen);
    }
    RODegree offset = j.contains("offset") ? parse_degree(j.at("offset")) : RODegree{};
    std::vector<std::string> names;
    for (const auto& g : gens) names.push_back(g.name);
    std::vector<F2Poly> rels;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) rels.push_back(F2Poly::parse(r.get<std::string>(), names));
    return PresentedFamily(std::move(gens), offset, std::move(rels), j.value("offset_label", std::string()));
}

std::shared_ptr<GradedObject> parse_object(const json& j, const ObjectLookup& lookup) {
    std::string key = str(j, "key", "object");
    auto obj = std::make_shared<GradedObject>(key, j.value("provenance", std::string()));
    if (j.contains("sum_of")) {
        for (const auto& k : j.at("sum_of")) obj->add_summand(lookup(k.get<std::string>()));
        return obj;
    }
    std::size_t idx = 0;
    for (const auto& fj : need(j, "families", key)) {
        std::string where = key + " family " + std::to_string(idx++);
        try {
            if (fj.contains("span")) {
                obj->add_family(parse_span(fj.at("span"), lookup, where));
            } else {
                Family f;
                f.fam = std::make_shared<PresentedFamily>(parse_family(fj));
                obj->add_family(std::move(f));
            }
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const DegreeMismatch& e) {
            throw DegreeMismatch(where + ": " + e.what());
        }
    }
    return obj;
}

std::shared_ptr<RingMap> parse_map(const json& j, const ObjectLookup& lookup) {
    std::string key = str(j, "key", "map");
    auto src = lookup(str(j, "source", key));
    auto tgt = lookup(str(j, "target", key));
    RODegree shift = j.contains("shift") ? parse_degree(j.at("shift")) : RODegree{};
    std::vector<FamilyImage> fams;
    const auto& fl = need(j, "families", key);
    if (fl.size() != src->families().size())
        throw ParseError(key + ": expected " + std::to_string(src->families().size()) + " family entries");
    for (std::size_t sf = 0; sf < fl.size(); ++sf) {
        const auto& fj = fl[sf];
        FamilyImage fi;
        if (fj.value("zero", false)) {
            fams.push_back(std::move(fi));
            continue;
        }
        fi.zero = false;
        fi.target_family = fj.value("target_family", 0);
        const auto& s = src->presented(sf);
        const auto& t = tgt->presented(fi.target_family);
        const auto& im = need(fj, "images", key);
        for (const auto& g : s.gens()) {
            if (!im.contains(g.name)) throw ParseError(key + ": no image for generator " + g.name);
            fi.images.push_back(t.parse(im.at(g.name).get<std::string>()));
        }
        for (auto it = im.begin(); it != im.end(); ++it) {
            bool known = false;
            for (const auto& g : s.gens()) known = known || g.name == it.key();
            if (!known) throw ParseError(key + ": image given for unknown generator " + it.key());
        }
        if (fj.contains("unit")) fi.unit = t.parse(fj.at("unit").get<std::string>());
        fams.push_back(std::move(fi));
    }
    auto m = std::make_shared<RingMap>(key, src, tgt, shift, std::move(fams));
    m->set_provenance(j.value("provenance", std::string()));
    return m;
}

}  // namespace k4
