#include "ycluster/semifield.hpp"

#include <cmath>

#include "ycluster/errors.hpp"

namespace ycluster {

namespace {

void drop_zeros(TropicalMonomial::Exponents& e) {
    for (auto it = e.begin(); it != e.end();) {
        if (it->second == 0)
            it = e.erase(it);
        else
            ++it;
    }
}

nlohmann::json bigint_json(const BigInt& b) {
    if (b.fits_slong_p()) return b.get_si();
    return b.get_str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw ParseError("expected integer exponent");
}

}  // namespace

TropicalMonomial::TropicalMonomial(Exponents exps) : exps_(std::move(exps)) { drop_zeros(exps_); }

TropicalMonomial TropicalMonomial::generator(VertexId v, long power) {
    Exponents e;
    e[v] = power;
    return TropicalMonomial(std::move(e));
}

BigInt TropicalMonomial::exponent(VertexId v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? BigInt(0) : it->second;
}

TropicalMonomial trop_mul(const TropicalMonomial& a, const TropicalMonomial& b) {
    auto e = a.exponents();
    for (const auto& [v, x] : b.exponents()) e[v] += x;
    return TropicalMonomial(std::move(e));
}

TropicalMonomial trop_inv(const TropicalMonomial& a) {
    auto e = a.exponents();
    for (auto& kv : e) kv.second = -kv.second;
    return TropicalMonomial(std::move(e));
}

TropicalMonomial trop_pow(const TropicalMonomial& a, long k) {
    auto e = a.exponents();
    for (auto& kv : e) kv.second *= k;
    return TropicalMonomial(std::move(e));
}

TropicalMonomial trop_add(const TropicalMonomial& a, const TropicalMonomial& b) {
    TropicalMonomial::Exponents e;
    for (const auto& [v, x] : a.exponents()) {
        BigInt y = b.exponent(v);
        e[v] = x < y ? x : y;
    }
    for (const auto& [v, y] : b.exponents()) {
        if (a.exponents().count(v)) continue;
        if (y < 0) e[v] = y;
    }
    return TropicalMonomial(std::move(e));
}

Sign classify_sign(const TropicalMonomial& m) {
    if (m.is_unit()) return Sign::Unit;
    bool pos = false, neg = false;
    for (const auto& kv : m.exponents()) {
        if (kv.second > 0) pos = true;
        if (kv.second < 0) neg = true;
    }
    if (pos && neg) return Sign::Mixed;
    return pos ? Sign::Positive : Sign::Negative;
}

std::string to_string(Sign s) {
    switch (s) {
        case Sign::Unit: return "unit";
        case Sign::Positive: return "positive";
        case Sign::Negative: return "negative";
        case Sign::Mixed: return "mixed";
    }
    return "?";
}

std::string to_string(const TropicalMonomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (const auto& [v, x] : m.exponents()) {
        if (!out.empty()) out += " ";
        out += "y" + to_string(v);
        if (x != 1) out += "^" + x.get_str();
    }
    return out;
}

nlohmann::json to_json(const TropicalMonomial& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [v, x] : m.exponents()) j[to_string(v)] = bigint_json(x);
    return j;
}

TropicalMonomial tropical_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("tropical monomial must be a JSON object");
    TropicalMonomial::Exponents e;
    for (const auto& [k, x] : j.items()) e[parse_vertex_id(k)] = bigint_from_json(x);
    return TropicalMonomial(std::move(e));
}

PositiveReal::PositiveReal(double v) : v_(v) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError("positive real semifield element must be finite and > 0");
}

std::string to_string(SemifieldKind k) {
    switch (k) {
        case SemifieldKind::Trivial: return "trivial";
        case SemifieldKind::Tropical: return "tropical";
        case SemifieldKind::PositiveReal: return "numeric";
    }
    return "?";
}

SemifieldKind kind_of(const Coefficient& c) {
    return static_cast<SemifieldKind>(c.index());
}

Coefficient sf_one(SemifieldKind k) {
    switch (k) {
        case SemifieldKind::Trivial: return TrivialElement{};
        case SemifieldKind::Tropical: return TropicalMonomial{};
        case SemifieldKind::PositiveReal: return PositiveReal(1.0);
    }
    return TrivialElement{};
}

namespace {

void require_same(const Coefficient& a, const Coefficient& b) {
    if (a.index() != b.index()) throw DomainError("semifield mismatch between coefficients");
}

}  // namespace

Coefficient sf_mul(const Coefficient& a, const Coefficient& b) {
    require_same(a, b);
    if (auto* t = std::get_if<TropicalMonomial>(&a)) return trop_mul(*t, std::get<TropicalMonomial>(b));
    if (auto* r = std::get_if<PositiveReal>(&a))
        return PositiveReal(r->value() * std::get<PositiveReal>(b).value());
    return TrivialElement{};
}

Coefficient sf_add(const Coefficient& a, const Coefficient& b) {
    require_same(a, b);
    if (auto* t = std::get_if<TropicalMonomial>(&a)) return trop_add(*t, std::get<TropicalMonomial>(b));
    if (auto* r = std::get_if<PositiveReal>(&a))
        return PositiveReal(r->value() + std::get<PositiveReal>(b).value());
    return TrivialElement{};
}

Coefficient sf_inv(const Coefficient& a) {
    if (auto* t = std::get_if<TropicalMonomial>(&a)) return trop_inv(*t);
    if (auto* r = std::get_if<PositiveReal>(&a)) return PositiveReal(1.0 / r->value());
    return TrivialElement{};
}

Coefficient sf_pow(const Coefficient& a, long e) {
    if (auto* t = std::get_if<TropicalMonomial>(&a)) return trop_pow(*t, e);
    if (auto* r = std::get_if<PositiveReal>(&a))
        return PositiveReal(std::pow(r->value(), static_cast<double>(e)));
    return TrivialElement{};
}

nlohmann::json to_json(const Coefficient& c) {
    if (auto* t = std::get_if<TropicalMonomial>(&c)) return to_json(*t);
    if (auto* r = std::get_if<PositiveReal>(&c)) return r->value();
    return 1;
}

}  // namespace ycluster
