#include "ycluster/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "ycluster/errors.hpp"

namespace ycluster {

namespace {

std::atomic<std::size_t> g_divisions{0};

long degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

void check_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) throw DomainError("Laurent polynomials over different variable sets");
}

Exponent shifted(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    long da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const BigInt& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index, int power) {
    if (index >= nvars) throw DomainError("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = power;
    return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponent e, const BigInt& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exponent& e, const BigInt& c) {
    if (e.size() != nvars_) throw DomainError("exponent length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a);
    r += b;
    return r;
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a);
    r -= b;
    return r;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    check_vars(a, b);
    LaurentPoly r(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(shifted(ea, eb), ca * cb);
    return r;
}

LaurentPoly lp_pow(const LaurentPoly& a, unsigned e) {
    LaurentPoly r = LaurentPoly::constant(a.nvars(), 1);
    LaurentPoly base = a;
    while (e) {
        if (e & 1U) r = lp_mul(r, base);
        e >>= 1U;
        if (e) base = lp_mul(base, base);
    }
    return r;
}

LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    check_vars(num, den);
    if (den.is_zero()) throw DivisionByZero("Laurent division by the zero polynomial");
    const std::size_t nv = num.nvars();
    LaurentPoly q(nv);
    if (num.is_zero()) return q;

    // Every quotient exponent lies in the box [min(num) - max(den), max(num) - min(den)];
    // a candidate leading term outside it proves the division inexact and
    // also guarantees termination.
    Exponent lo(nv, 0), hi(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        int nmin = num.terms().begin()->first[v], nmax = nmin;
        for (const auto& kv : num.terms()) {
            nmin = std::min(nmin, kv.first[v]);
            nmax = std::max(nmax, kv.first[v]);
        }
        int dmin = den.terms().begin()->first[v], dmax = dmin;
        for (const auto& kv : den.terms()) {
            dmin = std::min(dmin, kv.first[v]);
            dmax = std::max(dmax, kv.first[v]);
        }
        lo[v] = nmin - dmax;
        hi[v] = nmax - dmin;
    }

    const auto& [dlead_e, dlead_c] = *den.terms().rbegin();
    LaurentPoly rem = num;
    while (!rem.is_zero()) {
        const Exponent rlead_e = rem.terms().rbegin()->first;
        const BigInt rlead_c = rem.terms().rbegin()->second;
        Exponent t(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            t[v] = rlead_e[v] - dlead_e[v];
            if (t[v] < lo[v] || t[v] > hi[v]) throw NonExactDivision("quotient term leaves the Newton box");
        }
        if (!mpz_divisible_p(rlead_c.get_mpz_t(), dlead_c.get_mpz_t()))
            throw NonExactDivision("leading coefficient not divisible");
        BigInt c = rlead_c / dlead_c;
        for (const auto& [e, dc] : den.terms()) rem.add_term(shifted(t, e), -c * dc);
        q.add_term(t, c);
    }

    if (!(lp_mul(q, den) == num)) throw NonExactDivision("quotient failed re-verification");
    ++g_divisions;
    return q;
}

LaurentPoly lp_specialize_ones(const LaurentPoly& p, const std::vector<std::size_t>& subset) {
    LaurentPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        for (std::size_t v : subset) {
            if (v >= f.size()) throw DomainError("specialization index out of range");
            f[v] = 0;
        }
        r.add_term(f, c);
    }
    return r;
}

std::size_t lp_division_count() { return g_divisions.load(); }

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v < names.size() ? names[v] : "x" + std::to_string(v + 1);
            if (e[v] != 1) mono += "^" + std::to_string(e[v]);
        }
        BigInt ac = abs(c);
        std::string term = mono.empty() ? ac.get_str() : (ac == 1 ? mono : ac.get_str() + "*" + mono);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json coef;
        if (c.fits_slong_p())
            coef = c.get_si();
        else
            coef = c.get_str();
        arr.push_back({{"exponents", e}, {"coefficient", coef}});
    }
    return arr;
}

LaurentPoly laurent_from_json(const nlohmann::json& j, std::size_t nvars) {
    if (!j.is_array()) throw ParseError("Laurent polynomial must be a JSON array");
    LaurentPoly p(nvars);
    for (const auto& rec : j) {
        auto e = rec.at("exponents").get<Exponent>();
        const auto& c = rec.at("coefficient");
        BigInt coef = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long>());
        if (e.size() != nvars) throw ParseError("exponent vector has wrong length");
        p.add_term(e, coef);
    }
    return p;
}

}  // namespace ycluster
