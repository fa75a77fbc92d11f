#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ycluster/vertex.hpp"

namespace ycluster {

// Dense skew-symmetric integer matrix.  B(i, j) > 0 means B(i, j) arrows i -> j.
class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

    std::size_t size() const { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    // Sets B(i,j) = v and B(j,i) = -v.
    void set_arrow(std::size_t i, std::size_t j, int v);
    void add_arrow(std::size_t from, std::size_t to, int mult = 1);

    bool is_skew_symmetric() const;
    bool adjacent(std::size_t i, std::size_t j) const { return (*this)(i, j) != 0; }

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<int> a_;
};

// Throws InvalidVertex when k is out of range.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

enum class Shape { Open, Filled };
enum class Parity { Plus, Minus };

struct VertexInfo {
    VertexId id;
    Shape shape = Shape::Open;
    Parity parity = Parity::Plus;

    friend bool operator==(const VertexInfo&, const VertexInfo&) = default;
};

class LabeledQuiver {
public:
    LabeledQuiver() = default;
    LabeledQuiver(std::vector<VertexInfo> vertices, ExchangeMatrix b);

    const std::vector<VertexInfo>& vertices() const { return vertices_; }
    const ExchangeMatrix& matrix() const { return b_; }
    std::size_t size() const { return vertices_.size(); }

    // Throws InvalidVertex.
    std::size_t index_of(VertexId v) const;
    bool contains(VertexId v) const;
    int arrows(VertexId from, VertexId to) const { return b_(index_of(from), index_of(to)); }

    LabeledQuiver with_matrix(ExchangeMatrix b) const;

    friend bool operator==(const LabeledQuiver&, const LabeledQuiver&) = default;

private:
    std::vector<VertexInfo> vertices_;
    ExchangeMatrix b_;
};

LabeledQuiver mutate_matrix(const LabeledQuiver& q, VertexId k);

// Open vertices come first, column-major: (1,1..m), (2,1..m), ..., then the
// filled vertices in increasing i'.  Throws DomainError for m < 1 or n < 4.
LabeledQuiver build_sg_quiver(int m, int n);
LabeledQuiver build_rsg_quiver(int m, int n);
LabeledQuiver build_quiver(const FamilyDescriptor& d);

// Byte string that is equal for two matrices iff they are isomorphic as
// directed multigraphs.
std::string canonical_form(const ExchangeMatrix& b);
inline std::string canonical_form(const LabeledQuiver& q) { return canonical_form(q.matrix()); }

struct DynkinType {
    char family = 'A';  // 'A' or 'D'
    int rank = 0;

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

std::string to_string(const DynkinType& t);  // "A4", "D7"
std::optional<DynkinType> dynkin_type(const ExchangeMatrix& b);
inline std::optional<DynkinType> dynkin_type(const LabeledQuiver& q) { return dynkin_type(q.matrix()); }

nlohmann::json to_json(const LabeledQuiver& q);
LabeledQuiver quiver_from_json(const nlohmann::json& j);

}  // namespace ycluster
