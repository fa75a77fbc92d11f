#pragma once

#include <compare>
#include <string>

namespace ycluster {

// (i, i') label.  Open vertices are (c, i') with c = 1..n-1 and i' = 1..m;
// filled vertices are (n, i') with i' > m.
struct VertexId {
    int i = 0;
    int ip = 0;

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& v);  // "(i,i')"
VertexId parse_vertex_id(const std::string& s);

enum class Family { SG, RSG };

std::string to_string(Family f);  // "sg" / "rsg"
Family parse_family(const std::string& s);

// (family, m, n) with the derived sizes used everywhere.
struct FamilyDescriptor {
    Family family = Family::SG;
    int m = 1;
    int n = 4;

    // Throws DomainError unless m >= 1 and n >= 4.
    void validate() const;

    // mn - m + n, the rank of the SG family.
    int big_n() const { return m * n - m + n; }
    int rank() const { return family == Family::SG ? big_n() : big_n() - 3; }
    int filled_count() const { return family == Family::SG ? n : n - 3; }
    // Number of Y/T layers: m + n (SG) or m + n - 3 (RSG).
    int layers() const { return m + filled_count(); }
    // Composite steps in one quiver period.
    int step_period() const { return 2 * n - 2; }
    // Period of the Y-system in u: 4N for SG with N odd, otherwise 2N.
    int y_period() const;
    // Window of the tropical sign census and the half period: 2N.
    int half_window() const { return 2 * big_n(); }

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

std::string to_string(const FamilyDescriptor& d);  // e.g. "sg(1,4)"

}  // namespace ycluster
