#pragma once
// Named graded objects, maps and exact triples, loaded from presentation files.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "k4/graded.hpp"
#include "k4/presentation.hpp"

namespace k4 {

struct UnknownKey : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// right(g) = ker map(g) + coker map(g - shift) along the long exact sequence;
// the optional connecting map carries right(g) back to the target in degree g - shift.
struct ExactTriple {
    std::string key, provenance;
    std::shared_ptr<const GradedObject> right;
    std::shared_ptr<const RingMap> map;
    RODegree shift;
    std::shared_ptr<const RingMap> connecting;
};

class Catalog {
public:
    Catalog() = default;
    static Catalog from_json(const nlohmann::json& j);
    // the catalog shipped with the library
    static const Catalog& builtin();
    static const nlohmann::json& builtin_json();

    // add the objects, maps and triples of another presentation file; keys must be new
    void merge(const nlohmann::json& j);

    bool has_object(const std::string& key) const { return objects_.count(key) != 0; }
    std::shared_ptr<const GradedObject> object_ptr(const std::string& key) const;
    const GradedObject& object(const std::string& key) const { return *object_ptr(key); }
    std::shared_ptr<const RingMap> map_ptr(const std::string& key) const;
    const RingMap& map(const std::string& key) const { return *map_ptr(key); }
    const ExactTriple& triple(const std::string& key) const;

    const std::vector<std::string>& object_keys() const { return object_order_; }
    const std::vector<std::string>& map_keys() const { return map_order_; }
    const std::vector<std::string>& triple_keys() const { return triple_order_; }

private:
    std::map<std::string, std::shared_ptr<const GradedObject>> objects_;
    std::map<std::string, std::shared_ptr<const RingMap>> maps_;
    std::map<std::string, ExactTriple> triples_;
    std::vector<std::string> object_order_, map_order_, triple_order_;
};

// Points of F2^n where every relation of a single-family object vanishes.
std::vector<std::vector<int>> f2_points(const GradedObject& obj);

// Monomial basis {x_a0^i x_b^j} u {x_a1^m x_b^n : m >= 1} of R in degree d:
// returns the number of such monomials, and whether they are independent modulo the relation.
struct RemarkBasis {
    std::size_t count = 0;
    bool independent = false;
};
RemarkBasis remark_basis(const GradedObject& r_phi, int d);

}  // namespace k4
