#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "k4/audit.hpp"
#include "k4/catalog.hpp"
#include "k4/conjugation.hpp"
#include "k4/lattice.hpp"
#include "k4/maximality.hpp"
#include "k4/steenrod.hpp"

namespace k4::cli {

using nlohmann::json;

namespace {

enum class Format { Table, Json, Csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Ctx {
    std::ostream& out;
    std::ostream& err;
    Format fmt = Format::Table;
    std::vector<std::string> presentations;

    Catalog catalog() const {
        Catalog cat = Catalog::builtin();
        for (const auto& path : presentations) cat.merge(read_json(path));
        return cat;
    }

    static json read_json(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        try {
            return json::parse(in);
        } catch (const json::parse_error& e) {
            throw UsageError(path + ": " + e.what());
        }
    }

    void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

json degree_json(const RODegree& g) { return json::array({g.c1, g.a0, g.a1, g.b}); }

std::vector<int> parse_csv_ints(const std::string& s, const char* what) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) throw UsageError(std::string(what) + ": empty entry in '" + s + "'");
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": '" + tok + "' is not an integer");
        }
        if (used != tok.size() || x < 0) throw UsageError(std::string(what) + ": '" + tok + "' is not a count");
        v.push_back(x);
    }
    return v;
}

std::vector<RODegree> sorted_box(int k) {
    if (k < 0) throw UsageError("--box must be non-negative");
    auto box = degree_box(k);
    std::sort(box.begin(), box.end());
    return box;
}

int report_exit(const Ctx& c, const AuditReport& r) {
    switch (c.fmt) {
        case Format::Json: c.emit(r.to_json()); break;
        case Format::Csv: c.out << r.to_csv(); break;
        case Format::Table: c.out << r.to_table(); break;
    }
    return r.pass() ? 0 : 1;
}

// ---- subcommands ----

int cmd_dim(Ctx& c, const std::string& key, const std::string& degree, int box, bool serial) {
    Catalog cat = c.catalog();
    const GradedObject& obj = cat.object(key);
    if (degree.empty() == (box < 0)) throw UsageError("dim needs exactly one of --degree or --box");
    if (!degree.empty()) {
        RODegree g = RODegree::parse(degree);
        std::size_t d = 0;
        try {
            d = obj.dim(g);
        } catch (const InfiniteFiber& e) {
            throw InfiniteFiber(std::string(e.what()) + " at degree " + g.to_string());
        }
        if (c.fmt == Format::Json)
            c.emit(json{{"object", key}, {"degree", degree_json(g)}, {"dim", d}, {"provenance", {obj.provenance()}}});
        else if (c.fmt == Format::Csv)
            c.out << "c1,a0,a1,b,dim\n" << g.to_csv() << "," << d << "\n";
        else
            c.out << d << "\n";
        return 0;
    }
    auto degrees = sorted_box(box);
    std::vector<std::size_t> dims;
    try {
        dims = dimension_table(obj, degrees, serial ? Exec::Serial : Exec::Parallel);
    } catch (const InfiniteFiber&) {
        for (const auto& g : degrees) {
            try {
                obj.dim(g);
            } catch (const InfiniteFiber& e) {
                throw InfiniteFiber(std::string(e.what()) + " at degree " + g.to_string());
            }
        }
        throw;
    }
    if (c.fmt == Format::Json) {
        json rows = json::array();
        for (std::size_t i = 0; i < degrees.size(); ++i) rows.push_back({{"degree", degree_json(degrees[i])}, {"dim", dims[i]}});
        c.emit(json{{"object", key}, {"box", box}, {"provenance", {obj.provenance()}}, {"rows", rows}});
    } else if (c.fmt == Format::Csv) {
        c.out << "c1,a0,a1,b,dim\n";
        for (std::size_t i = 0; i < degrees.size(); ++i) c.out << degrees[i].to_csv() << "," << dims[i] << "\n";
    } else {
        c.out << key << "  (" << obj.provenance() << ")\n";
        for (std::size_t i = 0; i < degrees.size(); ++i)
            if (dims[i]) c.out << "  " << degrees[i].to_string() << "  " << dims[i] << "\n";
        c.out << "nonzero degrees: "
              << std::count_if(dims.begin(), dims.end(), [](std::size_t d) { return d != 0; }) << " of " << degrees.size()
              << "\n";
    }
    return 0;
}

int cmd_basis(Ctx& c, const std::string& key, const std::string& degree) {
    Catalog cat = c.catalog();
    const GradedObject& obj = cat.object(key);
    RODegree g = RODegree::parse(degree);
    std::vector<std::string> basis;
    try {
        basis = obj.basis(g);
    } catch (const InfiniteFiber& e) {
        throw InfiniteFiber(std::string(e.what()) + " at degree " + g.to_string());
    }
    if (c.fmt == Format::Json) {
        c.emit(json{{"object", key},
                    {"degree", degree_json(g)},
                    {"dim", basis.size()},
                    {"basis", basis},
                    {"provenance", {obj.provenance()}}});
    } else if (c.fmt == Format::Csv) {
        c.out << "index,monomial\n";
        for (std::size_t i = 0; i < basis.size(); ++i) c.out << i << "," << basis[i] << "\n";
    } else {
        for (const auto& b : basis) c.out << b << "\n";
    }
    return 0;
}

int cmd_map(Ctx& c, const std::string& key, const std::string& degree, const std::string& poly, int family) {
    Catalog cat = c.catalog();
    const RingMap& m = cat.map(key);
    RODegree g = RODegree::parse(degree);
    MapRank r = m.rank_in_degree(g);
    json j{{"map", key},
           {"source", m.source().key()},
           {"target", m.target().key()},
           {"degree", degree_json(g)},
           {"target_degree", degree_json(g - m.shift())},
           {"source_dim", r.source_dim},
           {"image_dim", r.image_dim},
           {"kernel_dim", r.kernel_dim},
           {"provenance", {m.provenance_or_key(), m.source().provenance(), m.target().provenance()}}};
    std::string image;
    if (!poly.empty()) {
        if (family < 0 || static_cast<std::size_t>(family) >= m.families().size())
            throw UsageError("--family out of range for map " + key);
        const auto& fi = m.families()[family];
        F2Poly p = m.source().presented(family).parse(poly);
        F2Poly q = m.apply(family, p);
        image = fi.zero ? "0" : q.to_string(m.target().presented(fi.target_family).names());
        j["input"] = poly;
        j["image"] = image;
    }
    if (c.fmt == Format::Json) {
        c.emit(j);
    } else if (c.fmt == Format::Csv) {
        c.out << "c1,a0,a1,b,source_dim,image_dim,kernel_dim\n"
              << g.to_csv() << "," << r.source_dim << "," << r.image_dim << "," << r.kernel_dim << "\n";
    } else {
        c.out << key << ": " << m.source().key() << " -> " << m.target().key() << " at " << g.to_string() << "\n"
              << "  source " << r.source_dim << "  image " << r.image_dim << "  kernel " << r.kernel_dim << "\n";
        if (!poly.empty()) c.out << "  " << poly << " -> " << image << "\n";
    }
    return 0;
}

int cmd_points(Ctx& c, const std::string& key) {
    Catalog cat = c.catalog();
    const GradedObject& obj = cat.object(key);
    auto pts = f2_points(obj);
    const auto& names = obj.presented(0).names();
    if (c.fmt == Format::Json) {
        c.emit(json{{"object", key}, {"variables", names}, {"points", pts}, {"provenance", {obj.provenance()}}});
    } else if (c.fmt == Format::Csv) {
        for (std::size_t i = 0; i < names.size(); ++i) c.out << (i ? "," : "") << names[i];
        c.out << "\n";
        for (const auto& p : pts) {
            for (std::size_t i = 0; i < p.size(); ++i) c.out << (i ? "," : "") << p[i];
            c.out << "\n";
        }
    } else {
        for (const auto& p : pts) {
            c.out << "(";
            for (std::size_t i = 0; i < p.size(); ++i) c.out << (i ? "," : "") << p[i];
            c.out << ")\n";
        }
    }
    return 0;
}

std::vector<std::string> poly_names(int n) {
    if (n == 1) return {"t"};
    if (n == 2) return bivariate_names();
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

int cmd_steenrod(Ctx& c, const std::string& op_text, const std::string& poly, int vars, int trunc,
                 const std::vector<std::string>& given) {
    if (vars < 1 || vars > 16) throw UsageError("--vars must be between 1 and 16");
    auto names = poly_names(vars);
    if (!given.empty()) {
        if (given.size() != static_cast<std::size_t>(vars)) throw UsageError("--names must list exactly --vars names");
        names = given;
    }
    MilnorOp op = MilnorOp::parse(op_text);
    F2Poly p = F2Poly::parse(poly, names);
    std::vector<int> heights(static_cast<std::size_t>(vars), std::max(trunc, 0));
    F2Poly r = milnor_act_truncated(op, p, heights);
    std::string rs = r.to_string(names);
    if (c.fmt == Format::Json)
        c.emit(json{{"op", op.to_string()}, {"op_degree", op.degree()}, {"variables", names}, {"input", poly},
                    {"truncate", trunc}, {"output", rs}});
    else if (c.fmt == Format::Csv)
        c.out << "op,input,output\n\"" << op.to_string() << "\",\"" << poly << "\",\"" << rs << "\"\n";
    else
        c.out << rs << "\n";
    return 0;
}

struct ConjOptions {
    std::string model = "hp";
    int n = 2;
    bool untruncated = false;
    std::string model_file;
    std::string cls;
    bool multiplicativity = false;
    bool purity = false;
};

int cmd_conjcheck(Ctx& c, const ConjOptions& o) {
    SpaceModel m;
    if (!o.model_file.empty()) {
        m = SpaceModel::from_json(Ctx::read_json(o.model_file));
    } else {
        if (o.n < 0) throw UsageError("--n must be non-negative");
        if (o.model == "hp") m = SpaceModel::quaternionic_projective(o.untruncated ? -1 : o.n);
        else if (o.model == "cp") m = SpaceModel::complex_projective(o.untruncated ? -1 : o.n);
        else throw UsageError("--model must be hp or cp");
    }
    bool finite = m.ambient.finite() && m.fixed.finite();
    int top = finite ? m.ambient.top_degree() : m.scale * o.n;
    m.validate(top / m.scale);

    std::vector<F2Poly> classes;
    if (!o.cls.empty()) {
        classes.push_back(m.ambient.parse(o.cls));
    } else {
        for (const auto& e : m.monomials_up_to(top)) classes.push_back(F2Poly::monomial(e));
    }

    bool ok = true;
    json rows = json::array();
    for (const auto& x : classes) {
        json row{{"class", x.to_string(m.ambient.names)}};
        if (x.is_zero()) {
            row["rhs"] = "0";
            rows.push_back(row);
            continue;
        }
        row["degree"] = m.degree_of(x);
        if (m.scale == 4) {
            row["rhs"] = conjugation_rhs(m, x).to_string();
            bool h = check_homogeneity(m, x), l = check_leading_term(m, x), s = check_c2_shape(m, x);
            row["homogeneous"] = h;
            row["leading_term"] = l;
            row["c2_shape"] = s;
            ok = ok && h && l && s;
        } else {
            row["rhs"] = conjugation_rhs_c2(m, x).to_string();
        }
        rows.push_back(row);
    }
    json rep{{"model", m.name}, {"scale", m.scale}, {"classes", rows}};

    if (o.multiplicativity) {
        if (m.scale != 4) throw UsageError("--multiplicativity applies to degree-quartering models");
        std::vector<F2Poly> mons;
        for (const auto& e : m.monomials_up_to(top)) mons.push_back(F2Poly::monomial(e));
        long long pairs = 0;
        json failures = json::array();
        for (std::size_t a = 0; a < mons.size(); ++a)
            for (std::size_t b = a; b < mons.size(); ++b) {
                if (m.degree_of(mons[a]) + m.degree_of(mons[b]) > top) continue;
                ++pairs;
                if (!check_multiplicativity(m, mons[a], mons[b]))
                    failures.push_back({mons[a].to_string(m.ambient.names), mons[b].to_string(m.ambient.names)});
            }
        rep["multiplicativity"] = {{"pairs", pairs}, {"failures", failures}};
        ok = ok && failures.empty();
    }
    if (o.purity) {
        auto bx = m.ambient.betti(top);
        auto bf = m.fixed.betti(top / m.scale);
        PurityResult p = purity_certificate(bx, bf);
        json pj{{"betti_x", bx}, {"betti_fixed", bf}, {"ok", p.ok}};
        if (p.ok) pj["cells"] = p.cells;
        else pj["failure"] = {{"index", p.failed_index}, {"reason", p.reason}};
        rep["purity"] = pj;
        ok = ok && p.ok;
    }
    rep["pass"] = ok;

    if (c.fmt == Format::Json) {
        c.emit(rep);
    } else if (c.fmt == Format::Csv) {
        c.out << "class,degree,rhs\n";
        for (const auto& r : rows) c.out << r["class"].get<std::string>() << "," << r.value("degree", 0) << ",\"" << r["rhs"].get<std::string>() << "\"\n";
    } else {
        c.out << m.name << "\n";
        for (const auto& r : rows) {
            c.out << "  " << r["class"].get<std::string>() << "  ->  " << r["rhs"].get<std::string>();
            if (r.contains("homogeneous"))
                c.out << "   [homogeneous " << (r["homogeneous"].get<bool>() ? "ok" : "FAIL") << ", leading "
                      << (r["leading_term"].get<bool>() ? "ok" : "FAIL") << ", c2-shape "
                      << (r["c2_shape"].get<bool>() ? "ok" : "FAIL") << "]";
            c.out << "\n";
        }
        if (rep.contains("multiplicativity"))
            c.out << "multiplicativity: " << rep["multiplicativity"]["pairs"] << " pairs, "
                  << rep["multiplicativity"]["failures"].size() << " failures\n";
        if (rep.contains("purity")) {
            const auto& p = rep["purity"];
            if (p["ok"].get<bool>()) c.out << "purity: cells " << p["cells"].dump() << "\n";
            else c.out << "purity: fails at index " << p["failure"]["index"] << ": " << p["failure"]["reason"].get<std::string>() << "\n";
        }
        c.out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

// {"modules": {"4": {"T1": ..., "T2": ...}}} or [{"degree": 4, "T1": ..., "T2": ...}]
std::vector<K4Module> load_modules(const std::string& path, const BettiTable& bx) {
    auto mods = trivial_modules(bx);
    if (path.empty()) return mods;
    json j = Ctx::read_json(path);
    auto put = [&](long long deg, const json& mj) {
        if (deg < 0 || deg >= static_cast<long long>(bx.size()))
            throw UsageError("module degree " + std::to_string(deg) + " is outside the Betti table");
        mods[static_cast<std::size_t>(deg)] = K4Module::from_json(mj);
    };
    const json& body = j.is_object() && j.contains("modules") ? j["modules"] : j;
    if (body.is_object()) {
        for (auto it = body.begin(); it != body.end(); ++it) {
            long long deg = 0;
            try {
                deg = std::stoll(it.key());
            } catch (const std::exception&) {
                throw UsageError("module key '" + it.key() + "' is not a degree");
            }
            put(deg, it.value());
        }
    } else if (body.is_array()) {
        for (const auto& mj : body) put(mj.at("degree").get<long long>(), mj);
    } else {
        throw UsageError("module file must hold an object or a list");
    }
    return mods;
}

int cmd_maximality(Ctx& c, const std::string& betti_x, const std::string& betti_fixed, const std::string& modules) {
    BettiTable bx = parse_csv_ints(betti_x, "--betti-x");
    BettiTable bf = parse_csv_ints(betti_fixed, "--betti-fixed");
    auto mods = load_modules(modules, bx);
    MaxResult st = smith_thom(bx, bf);
    MaxResult gm = galois_maximal(bx, mods, bf);
    std::vector<std::size_t> h1;
    for (const auto& m : mods) h1.push_back(group_h1(m));
    if (c.fmt == Format::Json) {
        c.emit(json{{"betti_x", bx}, {"betti_fixed", bf}, {"h1", h1}, {"smith_thom", st.to_json()}, {"galois", gm.to_json()}});
    } else if (c.fmt == Format::Csv) {
        c.out << "test,status,lhs,rhs\n"
              << "smith_thom," << to_string(st.status) << "," << st.lhs << "," << st.rhs << "\n"
              << "galois," << to_string(gm.status) << "," << gm.lhs << "," << gm.rhs << "\n";
    } else {
        c.out << "Smith-Thom: " << to_string(st.status) << "  (" << st.lhs << " vs " << st.rhs << ")\n"
              << "Galois:     " << to_string(gm.status) << "  (" << gm.lhs << " vs " << gm.rhs << ")\n";
        if (!gm.warning.empty()) c.out << "warning: " << gm.warning << "\n";
    }
    // a violated inequality means the input cannot come from a K4-space
    return st.status == MaxStatus::Violated || gm.status == MaxStatus::Violated ? 1 : 0;
}

int cmd_catalog_list(Ctx& c) {
    Catalog cat = c.catalog();
    json objs = json::array(), maps = json::array(), triples = json::array();
    for (const auto& k : cat.object_keys()) {
        const auto& o = cat.object(k);
        objs.push_back({{"key", k}, {"families", o.families().size()}, {"derived", o.derived()}, {"provenance", o.provenance()}});
    }
    for (const auto& k : cat.map_keys()) {
        const auto& m = cat.map(k);
        maps.push_back({{"key", k}, {"source", m.source().key()}, {"target", m.target().key()},
                        {"shift", degree_json(m.shift())}, {"provenance", m.provenance()}});
    }
    for (const auto& k : cat.triple_keys()) {
        const auto& t = cat.triple(k);
        json tj{{"key", k}, {"right", t.right->key()}, {"map", t.map->key()}, {"shift", degree_json(t.shift)},
                {"provenance", t.provenance}};
        if (t.connecting) tj["connecting"] = t.connecting->key();
        triples.push_back(tj);
    }
    if (c.fmt == Format::Json) {
        c.emit(json{{"objects", objs}, {"maps", maps}, {"triples", triples}});
    } else if (c.fmt == Format::Csv) {
        c.out << "kind,key\n";
        for (const auto& o : objs) c.out << "object," << o["key"].get<std::string>() << "\n";
        for (const auto& m : maps) c.out << "map," << m["key"].get<std::string>() << "\n";
        for (const auto& t : triples) c.out << "triple," << t["key"].get<std::string>() << "\n";
    } else {
        c.out << "objects:\n";
        for (const auto& o : objs) c.out << "  " << o["key"].get<std::string>() << "  -- " << o["provenance"].get<std::string>() << "\n";
        c.out << "maps:\n";
        for (const auto& m : maps)
            c.out << "  " << m["key"].get<std::string>() << ": " << m["source"].get<std::string>() << " -> "
                  << m["target"].get<std::string>() << "\n";
        c.out << "triples:\n";
        for (const auto& t : triples) c.out << "  " << t["key"].get<std::string>() << "\n";
    }
    return 0;
}

int fail(const Ctx& c, const std::string& kind, const std::string& msg, int code) {
    if (c.fmt == Format::Json) c.emit(json{{"error", kind}, {"message", msg}});
    else c.err << "error (" << kind << "): " << msg << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k4coh: RO(K4)-graded Bredon cohomology catalog, audits and conjugation checks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false, as_csv = false;
    Ctx ctx{out, err, Format::Table, {}};
    auto* fj = app.add_flag("--json", as_json, "emit JSON");
    app.add_flag("--csv", as_csv, "emit CSV")->excludes(fj);
    app.add_option("--presentation", ctx.presentations, "extra presentation file merged into the catalog");

    std::string object, degree, map_key, poly, triple = "eqcof2", op;
    int box = -1, family = 0, vars = 2, trunc = 0;
    bool serial = false;

    auto* dim = app.add_subcommand("dim", "dimension of an object in one degree or over a box");
    dim->add_option("--object", object)->required();
    dim->add_option("--degree", degree, "a,b,c,d or 1+A0-B");
    dim->add_option("--box", box, "all degrees with |coords| <= k");
    dim->add_flag("--serial", serial);

    auto* basis = app.add_subcommand("basis", "monomial basis of an object in one degree");
    basis->add_option("--object", object)->required();
    basis->add_option("--degree", degree)->required();

    auto* mapc = app.add_subcommand("map", "rank of a catalog map in one degree, optionally applied to a class");
    mapc->add_option("--map", map_key)->required();
    mapc->add_option("--degree", degree)->required();
    mapc->add_option("--poly", poly, "source class to push forward");
    mapc->add_option("--family", family, "source family of --poly");

    int les_box = 3, delta_box = 3;
    auto* les = app.add_subcommand("audit-les", "long exact sequence audit over a degree box");
    les->add_option("--triple", triple);
    les->add_option("--box", les_box);
    les->add_flag("--serial", serial);

    auto* delta = app.add_subcommand("audit-delta", "delta^u bookkeeping audit over a degree box");
    delta->add_option("--box", delta_box);
    delta->add_flag("--serial", serial);

    std::string points_obj = "R.phi";
    auto* points = app.add_subcommand("points", "F2-points of a single-family object");
    points->add_option("--object", points_obj);

    auto* st = app.add_subcommand("steenrod", "Milnor-basis operation on a polynomial");
    st->add_option("--op", op, "Sq(j,i) or Sq^k")->required();
    st->add_option("--poly", poly)->required();
    auto* vars_opt = st->add_option("--vars", vars, "number of degree-1 variables (1: t, 2: t,t', else x1..xn)");
    st->add_option("--truncate", trunc, "x^k = 0 for every variable");
    std::vector<std::string> var_names;
    st->add_option("--names", var_names, "variable names, comma separated")->delimiter(',');

    ConjOptions co;
    auto* cj = app.add_subcommand("conjcheck", "conjugation equation checks on a space model");
    cj->add_option("--model", co.model, "hp or cp");
    cj->add_option("--n", co.n);
    cj->add_flag("--untruncated", co.untruncated, "use the infinite projective space, classes up to --n");
    cj->add_option("--model-file", co.model_file);
    cj->add_option("--class", co.cls, "single class to check");
    cj->add_flag("--multiplicativity", co.multiplicativity);
    cj->add_flag("--purity", co.purity);

    std::string bx, bf, mods;
    auto* mx = app.add_subcommand("maximality", "Smith-Thom and Galois maximality from Betti tables");
    mx->add_option("--betti-x", bx)->required();
    mx->add_option("--betti-fixed", bf)->required();
    mx->add_option("--modules", mods, "JSON file of T1/T2 matrices per degree");

    auto* cl = app.add_subcommand("catalog-list", "list catalog objects, maps and triples");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        ctx.fmt = as_json ? Format::Json : Format::Table;
        return fail(ctx, "usage", e.what(), 2);
    }
    ctx.fmt = as_json ? Format::Json : as_csv ? Format::Csv : Format::Table;

    try {
        if (dim->parsed()) return cmd_dim(ctx, object, degree, box, serial);
        if (basis->parsed()) return cmd_basis(ctx, object, degree);
        if (mapc->parsed()) return cmd_map(ctx, map_key, degree, poly, family);
        if (les->parsed()) {
            if (les_box < 0) throw UsageError("--box must be non-negative");
            Catalog cat = ctx.catalog();
            return report_exit(ctx, audit_les(cat, triple, sorted_box(les_box), serial ? Exec::Serial : Exec::Parallel));
        }
        if (delta->parsed()) {
            Catalog cat = ctx.catalog();
            return report_exit(ctx, audit_delta_u(cat, sorted_box(delta_box), serial ? Exec::Serial : Exec::Parallel));
        }
        if (points->parsed()) return cmd_points(ctx, points_obj);
        if (st->parsed()) {
            // --names alone fixes the variable count
            if (!var_names.empty() && vars_opt->count() == 0) vars = static_cast<int>(var_names.size());
            return cmd_steenrod(ctx, op, poly, vars, trunc, var_names);
        }
        if (cj->parsed()) return cmd_conjcheck(ctx, co);
        if (mx->parsed()) return cmd_maximality(ctx, bx, bf, mods);
        if (cl->parsed()) return cmd_catalog_list(ctx);
    } catch (const UsageError& e) {
        return fail(ctx, "usage", e.what(), 2);
    } catch (const UnknownKey& e) {
        return fail(ctx, "unknown-key", e.what(), 2);
    } catch (const InfiniteFiber& e) {
        return fail(ctx, "infinite-fiber", e.what(), 2);
    } catch (const DegreeError& e) {
        return fail(ctx, "degree", e.what(), 2);
    } catch (const ParseError& e) {
        return fail(ctx, "parse", e.what(), 2);
    } catch (const ModelError& e) {
        return fail(ctx, "model", e.what(), 2);
    } catch (const InvalidModule& e) {
        return fail(ctx, "module", e.what(), 2);
    } catch (const std::exception& e) {
        return fail(ctx, "input", e.what(), 2);
    }
    return fail(ctx, "usage", "no subcommand", 2);
}

}  // namespace k4::cli
