#pragma once
// RO(K4)-graded F2-modules presented as finite sums of monomial families,
// optionally modulo homogeneous relations, and maps between them.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k4/f2linalg.hpp"
#include "k4/lattice.hpp"
#include "k4/poly.hpp"
#include "k4/rodegree.hpp"

namespace k4 {

enum class Domain { Natural, Positive, Integer, Negative, Nonpositive };

Domain parse_domain(const std::string& s);
std::string to_string(Domain d);

struct Generator {
    std::string name;
    RODegree degree;
    Domain domain = Domain::Natural;
};

struct DegreeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Span of the monomials  offset * prod g_i^{e_i}  with e_i in the domain of g_i.
// Relations r act by  e -> sum_t [e + t in domain] (e + t); a product that
// leaves the domain is zero (truncation, which models negative cones).
class PresentedFamily {
public:
    PresentedFamily(std::vector<Generator> gens, RODegree offset, std::vector<F2Poly> relations = {},
                    std::string offset_label = {});

    const std::vector<Generator>& gens() const { return gens_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<F2Poly>& relations() const { return relations_; }
    RODegree offset() const { return offset_; }
    const std::string& offset_label() const { return offset_label_; }
    bool has_infinite_fibers() const { return solver_->unbounded(); }

    bool inside(const Exps& e) const;
    RODegree weight(const Exps& e) const;  // degree without the offset
    RODegree degree_of(const Exps& e) const { return offset_ + weight(e); }
    // monomials of degree g in display order (descending lex, generators sorted by name)
    std::vector<Exps> monomials(RODegree g) const;
    // relation multiples landing in degree g, as polynomials in this family
    std::vector<F2Poly> relation_multiples(RODegree g) const;
    std::size_t dim(RODegree g) const;
    // monomials that survive leftmost-pivot reduction by the relations
    std::vector<Exps> basis(RODegree g) const;
    std::string monomial_string(const Exps& e) const;
    F2Poly parse(const std::string& s) const { return F2Poly::parse(s, names_); }
    bool display_before(const Exps& a, const Exps& b) const;

private:
    std::vector<Generator> gens_;
    std::vector<std::string> names_;
    RODegree offset_;
    std::vector<F2Poly> relations_;
    std::vector<RODegree> relation_weights_;
    std::string offset_label_;
    std::vector<std::size_t> by_name_;
    std::shared_ptr<const LatticeSolver> solver_;
};

// Column coordinates for one degree of a presented family.
class DegreeSpace {
public:
    DegreeSpace(const PresentedFamily& f, RODegree g);
    std::size_t size() const { return mons_.size(); }
    const std::vector<Exps>& monomials() const { return mons_; }
    // terms outside the domain are dropped; terms of the wrong degree throw
    BitVec vec(const F2Poly& p) const;
    // echelon basis of the relation multiples in this degree
    Echelon relation_span() const;

private:
    const PresentedFamily* fam_;
    RODegree deg_;
    std::vector<Exps> mons_;
    std::map<Exps, std::size_t> index_;
};

class GradedObject;

// One summand of a graded object.
struct Family {
    enum class Kind { Presented, Span };
    Kind kind = Kind::Presented;
    // Presented: the family itself. Span: the free monomials in the span generators.
    std::shared_ptr<const PresentedFamily> fam;
    // Span only: products of the generators inside a presented family of another object.
    std::shared_ptr<const GradedObject> ambient;
    std::size_t ambient_family = 0;
    std::vector<F2Poly> images;

    std::size_t dim(RODegree g) const;
    std::vector<std::string> basis(RODegree g) const;
    // image in the ambient family of a span monomial
    F2Poly span_image(const Exps& e) const;
};

class GradedObject {
public:
    GradedObject(std::string key, std::string provenance) : key_(std::move(key)), provenance_(std::move(provenance)) {}

    const std::string& key() const { return key_; }
    const std::string& provenance() const { return provenance_; }
    const std::vector<Family>& families() const { return families_; }
    const Family& family(std::size_t i) const { return families_.at(i); }
    const PresentedFamily& presented(std::size_t i) const;
    bool derived() const { return !summands_.empty(); }

    void add_family(Family f) { families_.push_back(std::move(f)); }
    // dimension is the sum of the dimensions of other objects
    void add_summand(std::shared_ptr<const GradedObject> o) { summands_.push_back(std::move(o)); }

    std::size_t dim(RODegree g) const;
    std::vector<std::string> basis(RODegree g) const;

private:
    std::string key_, provenance_;
    std::vector<Family> families_;
    std::vector<std::shared_ptr<const GradedObject>> summands_;
};

struct FamilyImage {
    bool zero = true;
    std::size_t target_family = 0;
    std::vector<F2Poly> images;  // one per source generator, in target coordinates
    std::optional<F2Poly> unit;  // image of the bare offset class; 1 when absent
};

struct MapRank {
    std::size_t source_dim = 0, image_dim = 0, kernel_dim = 0;
};

// A degree-shifted map of graded modules, multiplicative on each presented
// source family: offset * prod g^e  ->  unit * prod image(g)^e.
// Target degree = source degree - shift.
class RingMap {
public:
    RingMap(std::string key, std::shared_ptr<const GradedObject> source, std::shared_ptr<const GradedObject> target,
            RODegree shift, std::vector<FamilyImage> families);

    const std::string& key() const { return key_; }
    const GradedObject& source() const { return *source_; }
    const GradedObject& target() const { return *target_; }
    std::shared_ptr<const GradedObject> source_ptr() const { return source_; }
    std::shared_ptr<const GradedObject> target_ptr() const { return target_; }
    RODegree shift() const { return shift_; }
    const std::vector<FamilyImage>& families() const { return families_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }
    const std::string& provenance() const { return provenance_; }
    std::string provenance_or_key() const { return provenance_.empty() ? key_ : key_ + ": " + provenance_; }

    F2Poly apply(std::size_t source_family, const F2Poly& p) const;
    F2Poly image_of(std::size_t source_family, const Exps& e) const;
    MapRank rank_in_degree(RODegree g) const;
    // relation multiples in source degree g whose image is not in the target relation span
    std::size_t relation_violations(RODegree g) const;
    struct ImageSpan {
        std::size_t target_family;
        std::shared_ptr<const DegreeSpace> space;  // target degree g - shift
        Echelon span;                              // target relations plus images
        std::size_t relation_rank;
    };
    // one entry per target family hit by a nonzero source family
    std::vector<ImageSpan> image_spans(RODegree g) const;

private:
    std::string key_, provenance_;
    std::shared_ptr<const GradedObject> source_, target_;
    RODegree shift_;
    std::vector<FamilyImage> families_;
};

enum class Membership { Yes, No, Unknown };
std::string to_string(Membership m);

struct MembershipResult {
    Membership answer = Membership::Unknown;
    bool saturated = false;
    std::size_t products = 0;  // products of the generators considered
};

// Is p in the span of products (length <= budget) of gens inside family fam of ambient?
MembershipResult subring_membership(const PresentedFamily& ambient, const std::vector<F2Poly>& gens, const F2Poly& p,
                                    int budget);

}  // namespace k4
