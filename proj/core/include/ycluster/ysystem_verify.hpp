#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ycluster/seed_engine.hpp"
#include "ycluster/vertex.hpp"

namespace ycluster {

// (1 + Y_j(u+offset))^power, or (1 + Y_j(u+offset)^-1)^-power when inverted.
struct YFactor {
    int j = 0;
    int offset = 0;
    int power = 1;
    bool inverted = false;

    friend auto operator<=>(const YFactor&, const YFactor&) = default;
};

// Y_i(u-d) Y_i(u+d) = prod of factors.
struct YRelation {
    int i = 0;
    int d = 0;
    std::vector<YFactor> factors;

    friend bool operator==(const YRelation&, const YRelation&) = default;
};

// T_j(u+offset)^power
struct TFactor {
    int j = 0;
    int offset = 0;
    int power = 1;

    friend auto operator<=>(const TFactor&, const TFactor&) = default;
};

// T_i(u-d) T_i(u+d) = prod(first) + prod(second); an empty product is 1.
struct TRelation {
    int i = 0;
    int d = 0;
    std::vector<TFactor> first;
    std::vector<TFactor> second;

    friend bool operator==(const TRelation&, const TRelation&) = default;
};

// Sorts and merges factors; orders the two T terms.
YRelation normalized(YRelation r);
TRelation normalized(TRelation r);

std::string to_string(const YRelation& r);
std::string to_string(const TRelation& r);

struct YSystemFamily {
    FamilyDescriptor family;
    std::vector<int> d;  // d[i-1]
    std::vector<YRelation> y;
    std::vector<TRelation> t;
};

// Relations written out from the diagram X_{m,n}, one per layer.
YSystemFamily ysystem_family(const FamilyDescriptor& d);

// Relation instances read off the quiver trajectory: one per mutation
// event in a period, keyed by the centre u.
struct YInstance {
    int u = 0;
    YRelation rel;
};
struct TInstance {
    int u = 0;
    TRelation rel;
};
std::vector<YInstance> derive_y_relations(const FamilyDescriptor& d);
std::vector<TInstance> derive_t_relations(const FamilyDescriptor& d);

struct VerificationReport {
    std::string check;
    FamilyDescriptor family;
    bool pass = false;
    double residual = 0.0;
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json details = nlohmann::json::object();
    double elapsed_ms = 0.0;

    nlohmann::json to_json(bool with_timing = true) const;
};

// Scheduled matrix mutations: non-adjacency, Q(2p) = sigma^p(Q(0)) and
// Q(2n-2) = Q(0).
VerificationReport check_quiver_period(const FamilyDescriptor& d);

// Hand-written templates against the ones read off the quiver.
VerificationReport check_relation_templates(const FamilyDescriptor& d);

// Numeric trajectory; max |lhs/rhs - 1| over all instantiable relations.
// Throws InsufficientLength when shorter than one period plus n-1.
VerificationReport check_y_relations(const Trajectory& traj, double tol = 1e-9);

// Symbolic trivial-coefficient trajectory; exact polynomial identities.
VerificationReport check_t_relations(const Trajectory& traj);

// Half period 2N with the omega twist (SG, N odd) or plain period 2N.
// Needs u_max >= y_period + 2N.
VerificationReport check_periodicity(const Trajectory& traj, double tol = 1e-9);

// Windows in which a tropical coefficient is expected to be negative.
bool predicted_negative(const FamilyDescriptor& d, VertexId v, int u);
long expected_negative_count(const FamilyDescriptor& d);

VerificationReport tropical_report(const FamilyDescriptor& d);

// Rogers dilogarithm on [0, 1].  Throws DomainError outside.
double rogers_L(double x);

struct DilogSums {
    double s1 = 0.0;
    double s2 = 0.0;
    int window = 0;
    long terms = 0;
    double s1_half = 0.0;  // over the first half of the window
    double s2_half = 0.0;
};

long expected_s1(const FamilyDescriptor& d);
long expected_s2(const FamilyDescriptor& d);
// 4N for SG, 2N for RSG.
int dilog_window(const FamilyDescriptor& d);

struct DilogResult {
    DilogSums sums;
    VerificationReport report;
};

// Full positive solution assembled from two numeric runs: `plus` supplies
// the points of P'_+, `minus` the complementary points through the shift
// Y_i(u) = y~_i(u+1).  Throws InsufficientLength or NonPositiveValue.
DilogResult dilog_sums(const Trajectory& plus, const Trajectory& minus, double tol = 1e-8);

}  // namespace ycluster
