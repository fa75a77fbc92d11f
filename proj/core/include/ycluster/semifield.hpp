#pragma once

#include <gmpxx.h>

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "ycluster/vertex.hpp"

namespace ycluster {

using BigInt = mpz_class;

// Laurent monomial in the initial coefficients.  Zero exponents are never
// stored, so the empty map is the identity and equality is map equality.
class TropicalMonomial {
public:
    using Exponents = std::map<VertexId, BigInt>;

    TropicalMonomial() = default;
    explicit TropicalMonomial(Exponents exps);

    static TropicalMonomial generator(VertexId v, long power = 1);

    const Exponents& exponents() const { return exps_; }
    BigInt exponent(VertexId v) const;
    bool is_unit() const { return exps_.empty(); }

    friend bool operator==(const TropicalMonomial&, const TropicalMonomial&) = default;

private:
    Exponents exps_;
};

TropicalMonomial trop_mul(const TropicalMonomial& a, const TropicalMonomial& b);
TropicalMonomial trop_inv(const TropicalMonomial& a);
TropicalMonomial trop_pow(const TropicalMonomial& a, long e);
// Componentwise minimum, absent entries count as 0.
TropicalMonomial trop_add(const TropicalMonomial& a, const TropicalMonomial& b);

enum class Sign { Unit, Positive, Negative, Mixed };

Sign classify_sign(const TropicalMonomial& m);
std::string to_string(Sign s);

std::string to_string(const TropicalMonomial& m);
nlohmann::json to_json(const TropicalMonomial& m);
TropicalMonomial tropical_from_json(const nlohmann::json& j);

class PositiveReal {
public:
    // Throws DomainError unless v is finite and > 0.
    explicit PositiveReal(double v);
    double value() const { return v_; }

    friend bool operator==(const PositiveReal&, const PositiveReal&) = default;

private:
    double v_;
};

struct TrivialElement {
    friend bool operator==(const TrivialElement&, const TrivialElement&) = default;
};

enum class SemifieldKind { Trivial, Tropical, PositiveReal };

std::string to_string(SemifieldKind k);

// One coefficient; the alternative in use selects the semifield.
using Coefficient = std::variant<TrivialElement, TropicalMonomial, PositiveReal>;

SemifieldKind kind_of(const Coefficient& c);
Coefficient sf_one(SemifieldKind k);
// Binary operations require both operands from the same semifield.
Coefficient sf_mul(const Coefficient& a, const Coefficient& b);
Coefficient sf_add(const Coefficient& a, const Coefficient& b);
Coefficient sf_inv(const Coefficient& a);
Coefficient sf_pow(const Coefficient& a, long e);

nlohmann::json to_json(const Coefficient& c);

}  // namespace ycluster
