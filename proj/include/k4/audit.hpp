#pragma once
// Degree-box audits over the catalog. Each degree is independent, so the
// parallel path fans the degrees out over OpenMP threads; the serial path is
// the reference the parallel one is tested against.

#include <string>
#include <vector>

#include <json.hpp>

#include "k4/catalog.hpp"

namespace k4 {

enum class Exec { Serial, Parallel };

struct AuditRow {
    RODegree gamma;
    std::vector<long long> values;  // one per AuditReport::columns entry
    bool pass = false;
    std::string error;  // set when the degree could not be evaluated
};

struct AuditReport {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::string> provenance;
    std::vector<AuditRow> rows;

    std::size_t failures() const;
    bool pass() const { return failures() == 0; }
    nlohmann::json to_json() const;
    std::string to_csv() const;
    std::string to_table(std::size_t max_rows = 50) const;
};

bool operator==(const AuditRow& a, const AuditRow& b);

// Number of worker threads, from K4COH_THREADS when set.
int configured_threads();

// dim(obj, g) for every g
std::vector<std::size_t> dimension_table(const GradedObject& obj, const std::vector<RODegree>& degrees,
                                         Exec exec = Exec::Parallel);

// comh1 vs prop2 forms and Euler vs t-forms: equal dimensions, and the
// identifying maps are well defined and bijective.
AuditReport audit_presentations(const Catalog& cat, const std::vector<RODegree>& degrees,
                                Exec exec = Exec::Parallel);

// right(g) = ker q(g) + coker q(g - shift), plus coherence of the connecting map.
AuditReport audit_les(const Catalog& cat, const std::string& triple, const std::vector<RODegree>& degrees,
                      Exec exec = Exec::Parallel);

// EC2(g) = ker du(g) + EFKK(g+1) - coker du(g+1), with q_tot well defined and
// the kernel generators landing in the image of q^*.
AuditReport audit_delta_u(const Catalog& cat, const std::vector<RODegree>& degrees, Exec exec = Exec::Parallel);

struct Mutation {
    std::string description;
    nlohmann::json catalog;
};

// Every single-token corruption of the q^* table and every dropped relation
// term of the objects the presentation, LES and delta^u audits read.
std::vector<Mutation> catalog_mutations(const nlohmann::json& base);

struct MutationOutcome {
    std::string description;
    bool detected = false;
    std::string detected_by;  // audit name, or "load" when the catalog is rejected
    int radius = 0;
};

// Detected means: the mutated catalog is rejected, or some degree that passes
// an audit on the unmutated catalog fails it after mutation. Radii are tried in order.
MutationOutcome run_mutation(const Mutation& m, const std::vector<int>& radii);

}  // namespace k4
