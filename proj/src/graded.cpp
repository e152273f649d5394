#include "k4/graded.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace k4 {

Domain parse_domain(const std::string& s) {
    if (s == "natural") return Domain::Natural;
    if (s == "positive") return Domain::Positive;
    if (s == "integer") return Domain::Integer;
    if (s == "negative") return Domain::Negative;
    if (s == "nonpositive") return Domain::Nonpositive;
    throw ParseError("unknown exponent domain '" + s + "'");
}

std::string to_string(Domain d) {
    switch (d) {
        case Domain::Natural: return "natural";
        case Domain::Positive: return "positive";
        case Domain::Integer: return "integer";
        case Domain::Negative: return "negative";
        case Domain::Nonpositive: return "nonpositive";
    }
    return "?";
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Yes: return "yes";
        case Membership::No: return "no";
        case Membership::Unknown: return "unknown";
    }
    return "?";
}

namespace {

VarBound bound_of(Domain d) {
    switch (d) {
        case Domain::Natural: return {0, std::nullopt};
        case Domain::Positive: return {1, std::nullopt};
        case Domain::Integer: return {};
        case Domain::Negative: return {std::nullopt, -1};
        case Domain::Nonpositive: return {std::nullopt, 0};
    }
    return {};
}

bool in_domain(Domain d, int e) {
    switch (d) {
        case Domain::Natural: return e >= 0;
        case Domain::Positive: return e >= 1;
        case Domain::Integer: return true;
        case Domain::Negative: return e <= -1;
        case Domain::Nonpositive: return e <= 0;
    }
    return false;
}

std::vector<long long> rhs_of(RODegree d) { return {d.c1, d.a0, d.a1, d.b}; }

}  // namespace

PresentedFamily::PresentedFamily(std::vector<Generator> gens, RODegree offset, std::vector<F2Poly> relations,
                                 std::string offset_label)
    : gens_(std::move(gens)), offset_(offset), relations_(std::move(relations)), offset_label_(std::move(offset_label)) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.name.empty()) throw ParseError("generator with empty name");
        if (!seen.insert(g.name).second) throw ParseError("duplicate generator '" + g.name + "'");
        names_.push_back(g.name);
    }
    by_name_.resize(gens_.size());
    std::iota(by_name_.begin(), by_name_.end(), 0);
    std::sort(by_name_.begin(), by_name_.end(), [&](std::size_t a, std::size_t b) { return names_[a] < names_[b]; });

    for (const auto& r : relations_) {
        if (r.nvars() != gens_.size()) throw ParseError("relation over the wrong generator list");
        if (r.is_zero()) throw ParseError("zero relation");
        RODegree w = weight(*r.terms().begin());
        for (const auto& t : r.terms())
            if (weight(t) != w)
                throw DegreeMismatch("inhomogeneous relation " + r.to_string(names_) + ": " + monomial_string(t) +
                                     " has weight " + weight(t).to_string() + ", expected " + w.to_string());
        relation_weights_.push_back(w);
    }

    std::vector<std::vector<long long>> eq(4, std::vector<long long>(gens_.size()));
    std::vector<VarBound> bounds;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        for (int r = 0; r < 4; ++r) eq[r][i] = gens_[i].degree[r];
        bounds.push_back(bound_of(gens_[i].domain));
    }
    solver_ = std::make_shared<LatticeSolver>(std::move(eq), std::vector<std::vector<long long>>{}, std::move(bounds));
}

bool PresentedFamily::inside(const Exps& e) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (!in_domain(gens_[i].domain, e[i])) return false;
    return true;
}

RODegree PresentedFamily::weight(const Exps& e) const {
    RODegree d;
    for (std::size_t i = 0; i < gens_.size(); ++i) d += gens_[i].degree * e[i];
    return d;
}

bool PresentedFamily::display_before(const Exps& a, const Exps& b) const {
    for (auto i : by_name_)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::vector<Exps> PresentedFamily::monomials(RODegree g) const {
    std::vector<Exps> out;
    try {
        solver_->enumerate(rhs_of(g - offset_), [&](const std::vector<int>& e) { out.push_back(e); });
    } catch (const InfiniteFiber&) {
        throw InfiniteFiber("infinitely many monomials of degree " + g.to_string() + " in family " +
                            (offset_label_.empty() ? offset_.to_string() : offset_label_));
    }
    std::sort(out.begin(), out.end(), [this](const Exps& a, const Exps& b) { return display_before(a, b); });
    return out;
}

std::vector<F2Poly> PresentedFamily::relation_multiples(RODegree g) const {
    std::vector<F2Poly> out;
    Exps m(gens_.size());
    for (std::size_t k = 0; k < relations_.size(); ++k) {
        for (const auto& e : monomials(g - relation_weights_[k])) {
            F2Poly p(gens_.size());
            for (const auto& t : relations_[k].terms()) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = e[i] + t[i];
                if (inside(m)) p.toggle(m);
            }
            if (!p.is_zero()) out.push_back(std::move(p));
        }
    }
    return out;
}

std::size_t PresentedFamily::dim(RODegree g) const {
    DegreeSpace sp(*this, g);
    if (sp.size() == 0) return 0;
    return sp.size() - sp.relation_span().rank();
}

std::vector<Exps> PresentedFamily::basis(RODegree g) const {
    DegreeSpace sp(*this, g);
    Echelon rel = sp.relation_span();
    std::vector<Exps> out;
    for (std::size_t c = 0; c < sp.size(); ++c)
        if (!rel.is_pivot(c)) out.push_back(sp.monomials()[c]);
    return out;
}

std::string PresentedFamily::monomial_string(const Exps& e) const {
    std::string body = k4::monomial_string(e, names_);
    if (offset_label_.empty()) return body;
    return body == "1" ? offset_label_ : offset_label_ + "*" + body;
}

DegreeSpace::DegreeSpace(const PresentedFamily& f, RODegree g) : fam_(&f), deg_(g), mons_(f.monomials(g)) {
    for (std::size_t i = 0; i < mons_.size(); ++i) index_.emplace(mons_[i], i);
}

BitVec DegreeSpace::vec(const F2Poly& p) const {
    BitVec v(mons_.size());
    for (const auto& t : p.terms()) {
        if (!fam_->inside(t)) continue;
        auto it = index_.find(t);
        if (it == index_.end())
            throw DegreeMismatch("term " + fam_->monomial_string(t) + " is not in degree " + deg_.to_string());
        v.flip(it->second);
    }
    return v;
}

Echelon DegreeSpace::relation_span() const {
    Echelon e(mons_.size());
    if (mons_.empty()) return e;
    for (const auto& r : fam_->relation_multiples(deg_)) e.insert(vec(r));
    return e;
}

F2Poly Family::span_image(const Exps& e) const {
    const auto& amb = ambient->presented(ambient_family);
    F2Poly p = F2Poly::one(amb.gens().size());
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) p *= images[i].pow(e[i]);
    return p;
}

std::size_t Family::dim(RODegree g) const {
    if (kind == Kind::Presented) return fam->dim(g);
    const auto& amb = ambient->presented(ambient_family);
    auto mons = fam->monomials(g);
    if (mons.empty()) return 0;
    DegreeSpace sp(amb, g);
    Echelon e = sp.relation_span();
    std::size_t r0 = e.rank();
    for (const auto& m : mons) e.insert(sp.vec(span_image(m)));
    return e.rank() - r0;
}

std::vector<std::string> Family::basis(RODegree g) const {
    std::vector<std::string> out;
    if (kind == Kind::Presented) {
        for (const auto& m : fam->basis(g)) out.push_back(fam->monomial_string(m));
        return out;
    }
    const auto& amb = ambient->presented(ambient_family);
    auto mons = fam->monomials(g);
    if (mons.empty()) return out;
    DegreeSpace sp(amb, g);
    Echelon e = sp.relation_span();
    for (const auto& m : mons)
        if (e.insert(sp.vec(span_image(m)))) out.push_back(fam->monomial_string(m));
    return out;
}

const PresentedFamily& GradedObject::presented(std::size_t i) const {
    const auto& f = families_.at(i);
    if (f.kind != Family::Kind::Presented)
        throw std::invalid_argument(key_ + " family " + std::to_string(i) + " is a span, not a presentation");
    return *f.fam;
}

std::size_t GradedObject::dim(RODegree g) const {
    std::size_t d = 0;
    for (const auto& s : summands_) d += s->dim(g);
    for (const auto& f : families_) d += f.dim(g);
    return d;
}

std::vector<std::string> GradedObject::basis(RODegree g) const {
    if (derived()) throw std::invalid_argument(key_ + " is a derived entry without a monomial basis");
    std::vector<std::string> out;
    for (const auto& f : families_) {
        auto b = f.basis(g);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

RingMap::RingMap(std::string key, std::shared_ptr<const GradedObject> source, std::shared_ptr<const GradedObject> target,
                 RODegree shift, std::vector<FamilyImage> families)
    : key_(std::move(key)), source_(std::move(source)), target_(std::move(target)), shift_(shift),
      families_(std::move(families)) {
    if (families_.size() != source_->families().size())
        throw std::invalid_argument(key_ + ": one image entry per source family is required");
    for (std::size_t sf = 0; sf < families_.size(); ++sf) {
        auto& fi = families_[sf];
        if (fi.zero) continue;
        const auto& src = source_->presented(sf);
        const auto& tgt = target_->presented(fi.target_family);
        if (fi.images.size() != src.gens().size())
            throw std::invalid_argument(key_ + ": wrong number of generator images");
        if (!fi.unit) fi.unit = F2Poly::one(tgt.gens().size());
        for (std::size_t i = 0; i < fi.images.size(); ++i) {
            const auto& g = src.gens()[i];
            const auto& img = fi.images[i];
            if (img.nvars() != tgt.gens().size()) throw std::invalid_argument(key_ + ": image over the wrong ring");
            bool needs_inverse = g.domain == Domain::Integer || g.domain == Domain::Negative ||
                                 g.domain == Domain::Nonpositive;
            if (needs_inverse && !img.is_monomial())
                throw std::invalid_argument(key_ + ": generator " + g.name +
                                            " takes negative exponents, so its image must be a monomial");
            for (const auto& t : img.terms())
                if (tgt.weight(t) != g.degree)
                    throw DegreeMismatch(key_ + ": image of " + g.name + " has a term of degree " +
                                         tgt.weight(t).to_string() + ", expected " + g.degree.to_string());
        }
        for (const auto& t : fi.unit->terms())
            if (tgt.offset() + tgt.weight(t) != src.offset() - shift_)
                throw DegreeMismatch(key_ + ": offset of source family " + std::to_string(sf) +
                                     " does not match the target after the shift");
    }
}

F2Poly RingMap::image_of(std::size_t sf, const Exps& e) const {
    const auto& fi = families_.at(sf);
    const auto& tgt = target_->presented(fi.target_family);
    if (fi.zero) return F2Poly::zero(tgt.gens().size());
    F2Poly p = *fi.unit;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) p *= fi.images[i].pow(e[i]);
    return p;
}

F2Poly RingMap::apply(std::size_t sf, const F2Poly& p) const {
    const auto& fi = families_.at(sf);
    std::size_t n = fi.zero ? 0 : target_->presented(fi.target_family).gens().size();
    F2Poly out(n);
    if (fi.zero) return out;
    for (const auto& t : p.terms()) out += image_of(sf, t);
    return out;
}

std::vector<RingMap::ImageSpan> RingMap::image_spans(RODegree g) const {
    std::vector<ImageSpan> out;
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t sf = 0; sf < families_.size(); ++sf) {
        const auto& fi = families_[sf];
        if (fi.zero) continue;
        auto it = slot.find(fi.target_family);
        if (it == slot.end()) {
            auto sp = std::make_shared<const DegreeSpace>(target_->presented(fi.target_family), g - shift_);
            Echelon e = sp->relation_span();
            std::size_t r0 = e.rank();
            out.push_back(ImageSpan{fi.target_family, sp, std::move(e), r0});
            it = slot.emplace(fi.target_family, out.size() - 1).first;
        }
        auto& is = out[it->second];
        for (const auto& m : source_->presented(sf).monomials(g)) is.span.insert(is.space->vec(image_of(sf, m)));
    }
    return out;
}

MapRank RingMap::rank_in_degree(RODegree g) const {
    MapRank r;
    r.source_dim = source_->dim(g);
    for (const auto& is : image_spans(g)) r.image_dim += is.span.rank() - is.relation_rank;
    r.kernel_dim = r.source_dim - r.image_dim;
    return r;
}

std::size_t RingMap::relation_violations(RODegree g) const {
    std::size_t bad = 0;
    for (std::size_t sf = 0; sf < families_.size(); ++sf) {
        const auto& fi = families_[sf];
        if (fi.zero) continue;
        const auto& src = source_->presented(sf);
        if (src.relations().empty()) continue;
        auto mult = src.relation_multiples(g);
        if (mult.empty()) continue;
        DegreeSpace sp(target_->presented(fi.target_family), g - shift_);
        Echelon rel = sp.relation_span();
        for (const auto& m : mult)
            if (!rel.contains(sp.vec(apply(sf, m)))) ++bad;
    }
    return bad;
}

MembershipResult subring_membership(const PresentedFamily& ambient, const std::vector<F2Poly>& gens, const F2Poly& p,
                                    int budget) {
    MembershipResult res;
    if (p.is_zero()) {
        res.answer = Membership::Yes;
        res.saturated = true;
        return res;
    }
    auto weight_of = [&](const F2Poly& q, const char* what) {
        if (q.nvars() != ambient.gens().size()) throw std::invalid_argument(std::string(what) + " over the wrong ring");
        if (q.is_zero()) throw std::invalid_argument(std::string(what) + " is zero");
        RODegree w = ambient.weight(*q.terms().begin());
        for (const auto& t : q.terms())
            if (ambient.weight(t) != w) throw DegreeMismatch(std::string(what) + " is not homogeneous");
        return w;
    };
    RODegree target = weight_of(p, "query");
    std::vector<RODegree> w;
    for (const auto& g : gens) w.push_back(weight_of(g, "generator"));

    std::vector<std::vector<long long>> eq(4, std::vector<long long>(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int r = 0; r < 4; ++r) eq[r][i] = w[i][r];
    std::vector<VarBound> nat(gens.size(), VarBound{0, std::nullopt});
    std::vector<long long> rhs = {target.c1, target.a0, target.a1, target.b};

    std::vector<std::vector<int>> products;
    LatticeSolver full(eq, {}, nat);
    if (!full.unbounded()) {
        products = full.enumerate(rhs);
        res.saturated = true;
        std::vector<std::vector<int>> kept;
        for (auto& e : products) {
            long long len = std::accumulate(e.begin(), e.end(), 0LL);
            if (len <= budget) kept.push_back(std::move(e));
            else res.saturated = false;
        }
        products = std::move(kept);
    } else {
        LatticeSolver bounded(eq, {std::vector<long long>(gens.size(), 1)}, nat);
        rhs.push_back(budget);
        products = bounded.enumerate(rhs);
    }
    res.products = products.size();

    DegreeSpace sp(ambient, ambient.offset() + target);
    Echelon e = sp.relation_span();
    for (const auto& x : products) {
        F2Poly q = F2Poly::one(ambient.gens().size());
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i]) q *= gens[i].pow(x[i]);
        e.insert(sp.vec(q));
    }
    if (e.contains(sp.vec(p))) res.answer = Membership::Yes;
    else res.answer = res.saturated ? Membership::No : Membership::Unknown;
    return res;
}

}  // namespace k4
