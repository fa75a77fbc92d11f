#include "ycluster/vertex.hpp"

#include <cstdio>

#include "ycluster/errors.hpp"

namespace ycluster {

std::string to_string(const VertexId& v) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.ip) + ")";
}

VertexId parse_vertex_id(const std::string& s) {
    VertexId v;
    char tail = 0;
    if (std::sscanf(s.c_str(), " (%d ,%d )%c", &v.i, &v.ip, &tail) != 2)
        throw ParseError("malformed vertex id: " + s);
    return v;
}

std::string to_string(Family f) { return f == Family::SG ? "sg" : "rsg"; }

Family parse_family(const std::string& s) {
    if (s == "sg" || s == "SG") return Family::SG;
    if (s == "rsg" || s == "RSG") return Family::RSG;
    throw DomainError("unknown family: " + s);
}

void FamilyDescriptor::validate() const {
    if (m < 1) throw DomainError("m must be >= 1, got " + std::to_string(m));
    if (n < 4) throw DomainError("n must be >= 4, got " + std::to_string(n));
}

int FamilyDescriptor::y_period() const {
    if (family == Family::SG && big_n() % 2 == 1) return 4 * big_n();
    return 2 * big_n();
}

std::string to_string(const FamilyDescriptor& d) {
    return to_string(d.family) + "(" + std::to_string(d.m) + "," + std::to_string(d.n) + ")";
}

}  // namespace ycluster
