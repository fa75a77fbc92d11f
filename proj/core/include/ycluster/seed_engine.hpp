#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "ycluster/laurent.hpp"
#include "ycluster/quiver.hpp"
#include "ycluster/semifield.hpp"
#include "ycluster/vertex.hpp"

namespace ycluster {

struct Seed {
    LabeledQuiver quiver;
    std::vector<Coefficient> y;
    // Cluster variables; present only for symbolic runs.  With principal
    // coefficients the polynomials live in 2N variables, x first, then y.
    std::optional<std::vector<LaurentPoly>> x;
};

// y_v = the generator y_v in the tropical semifield; no cluster variables.
Seed tropical_seed(const LabeledQuiver& q);
// y drawn uniformly from [0.5, 2.0].
Seed numeric_seed(const LabeledQuiver& q, std::uint64_t rng_seed);
Seed numeric_seed(const LabeledQuiver& q, const std::vector<double>& values);
// Cluster variables x_1..x_N; trivial coefficients, or principal ones when
// `principal` is set (tropical y generators and y variables in the ring).
Seed symbolic_seed(const LabeledQuiver& q, bool principal);

bool seed_is_principal(const Seed& s);

// Exchange relations at vertex index k.  Throws InvalidVertex or NonExactDivision.
Seed mutate_seed(const Seed& s, std::size_t k);
Seed mutate_seed(const Seed& s, VertexId k);

struct CompositeStep {
    int t = 0;
    std::vector<VertexId> vertices;
};

struct MutationSchedule {
    FamilyDescriptor family;
    std::vector<CompositeStep> steps;  // one per residue t = 0..period_u-1
    int period_u = 0;

    const CompositeStep& at(int u) const;
};

// Residues t mod 2n-2 at which the vertex is mutated.
std::vector<int> mutation_residues(const FamilyDescriptor& d, const VertexInfo& v);
bool is_mutation_point(const FamilyDescriptor& d, const VertexInfo& v, int u);

// Throws DomainError for m < 1 or n < 4.
MutationSchedule make_schedule(const FamilyDescriptor& d);
MutationSchedule make_schedule(Family f, int m, int n);

struct RunDiagnostics {
    std::size_t mutations = 0;
    std::size_t adjacency_checks = 0;
    std::size_t involution_checks = 0;
    std::size_t exact_divisions = 0;
};

struct Snapshot {
    std::vector<Coefficient> y;
    std::optional<std::vector<LaurentPoly>> x;
};

// Vertex-time pair; (vertex, u) is a forward mutation point when the vertex
// is mutated at u.
struct MutationPoint {
    VertexId vertex;
    int u = 0;

    friend bool operator==(const MutationPoint&, const MutationPoint&) = default;
};

// Layer durations: n-1 for open layers, 1 for filled ones.
int duration(const FamilyDescriptor& d, int i);
// (i, u) carries coefficient data iff u has this parity (0 or 1).
int layer_parity(const FamilyDescriptor& d, int i);
bool is_y_point(const FamilyDescriptor& d, int i, int u);  // (i,u) in P'_+
bool is_x_point(const FamilyDescriptor& d, int i, int u);  // (i,u) in P_+

// g': (i, u) -> (vertex, u); g: (i, u) -> (vertex, u + d_i).  Throw ParityError.
MutationPoint label_g_prime(const FamilyDescriptor& d, int i, int u);
MutationPoint label_g(const FamilyDescriptor& d, int i, int u);
std::pair<int, int> label_g_prime_inverse(const FamilyDescriptor& d, const MutationPoint& p);
std::pair<int, int> label_g_inverse(const FamilyDescriptor& d, const MutationPoint& p);

struct PermutationMaps {
    FamilyDescriptor family;

    // Column shift (c, i') -> (c+p mod n-1, i'); filled vertices fixed.
    VertexId sigma(VertexId v, int p = 1) const;
    // Tropical period bijection: sigma on open vertices, fork swap in SG
    // when mn - m + n is odd.
    VertexId tau(VertexId v) const;
    VertexId tau_inverse(VertexId v) const;
    // Fork swap on layer indices (SG), identity for RSG.
    int omega(int i) const;
    VertexId omega(VertexId v) const;

    nlohmann::json to_json() const;
};

PermutationMaps permutation_maps(const FamilyDescriptor& d);

// Relabels the quiver by sigma^p: result(sigma(v), sigma(w)) = q(v, w).
LabeledQuiver apply_sigma(const LabeledQuiver& q, int p);

class Trajectory {
public:
    FamilyDescriptor family;
    LabeledQuiver initial;
    MutationSchedule schedule;
    std::vector<Snapshot> snapshots;  // u = 0..u_max
    RunDiagnostics diagnostics;
    SemifieldKind kind = SemifieldKind::Trivial;
    bool symbolic = false;
    bool principal = false;

    int u_max() const { return static_cast<int>(snapshots.size()) - 1; }

    bool has_y(int i, int u) const;
    // Relabeled coefficient y~_i(u).  Throws ParityError or InsufficientLength.
    const Coefficient& y_tilde(int i, int u) const;
    bool has_x(int i, int u) const;
    // Relabeled cluster variable x~_i(u).  Throws ParityError,
    // InsufficientLength or MissingSymbolicRun.
    const LaurentPoly& x_tilde(int i, int u) const;
};

struct RunOptions {
    // Mutate back after every single mutation and compare B (and tropical or
    // numeric y) with the previous state.
    bool check_involution = true;
    double involution_tol = 1e-9;
};

// Applies the schedule for u = 0..u_max-1 and records u_max+1 snapshots.
// Throws AdjacencyViolation, InvolutionViolation, NonExactDivision.
Trajectory run(const Seed& s0, const MutationSchedule& sched, int u_max, const RunOptions& opts = {});

// F~_i(u): x~_i(u) with every cluster variable set to 1.
LaurentPoly f_polynomial(const Trajectory& traj, int i, int u);

// Per-u relabeled values, schedule and permutations.
nlohmann::json to_json(const Trajectory& traj, bool include_clusters = true);

}  // namespace ycluster
