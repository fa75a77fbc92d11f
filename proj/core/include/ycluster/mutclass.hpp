#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ycluster/quiver.hpp"
#include "ycluster/ysystem_verify.hpp"

namespace ycluster {

struct ClassSearchResult {
    std::optional<DynkinType> type;
    std::vector<VertexId> path;  // single mutations, replayable from the source
    std::size_t explored = 0;    // distinct canonical forms seen
    bool bound_hit = false;

    bool found() const { return type.has_value(); }
    nlohmann::json to_json() const;
};

// Breadth-first search over single mutations with canonical-form
// deduplication; stops at the first Dynkin quiver or after node_bound forms.
ClassSearchResult find_dynkin(const LabeledQuiver& q, std::size_t node_bound);

// Best-first variant ordered by the number of edges of the underlying graph.
// Used to produce reduction scripts for ranks beyond breadth-first reach.
ClassSearchResult guided_reduction(const LabeledQuiver& q, std::size_t node_bound);

LabeledQuiver replay(const LabeledQuiver& q, const std::vector<VertexId>& path);

struct ReductionScript {
    FamilyDescriptor source;
    std::vector<std::vector<VertexId>> steps;  // each set mutated simultaneously
    DynkinType expected;
    std::string note;
};

// Throws AdjacencyViolation if a step mutates adjacent vertices.
LabeledQuiver apply_script(const ReductionScript& s);
VerificationReport verify_script(const ReductionScript& s);

nlohmann::json to_json(const ReductionScript& s);
ReductionScript script_from_json(const nlohmann::json& j);
// Groups a single-mutation path into the script format.
ReductionScript make_script(const FamilyDescriptor& d, const std::vector<VertexId>& path, DynkinType expected);

// Expected Dynkin type of the family: D_N (SG) or A_{N-3} (RSG).
DynkinType expected_dynkin(const FamilyDescriptor& d);
int coxeter_number(const DynkinType& t);

// Period bookkeeping against Coxeter numbers.
VerificationReport coxeter_crosscheck(const FamilyDescriptor& d);

}  // namespace ycluster
