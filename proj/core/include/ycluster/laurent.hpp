#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace ycluster {

using BigInt = mpz_class;
using Exponent = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse Laurent polynomial with integer coefficients in a fixed number of
// variables.  Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, BigInt, GrlexLess>;

    explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const BigInt& c);
    static LaurentPoly variable(std::size_t nvars, std::size_t index, int power = 1);
    static LaurentPoly monomial(Exponent e, const BigInt& c = 1);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    // Adds c * x^e in place.
    void add_term(const Exponent& e, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t nvars_;
    Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_pow(const LaurentPoly& a, unsigned e);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return lp_add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return lp_sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return lp_mul(a, b); }

// Exact quotient num / den by multivariate long division.  The product
// q * den == num is re-checked before returning.
// Throws DivisionByZero or NonExactDivision.
LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Sets every variable whose index is in `subset` to 1.
LaurentPoly lp_specialize_ones(const LaurentPoly& p, const std::vector<std::size_t>& subset);

// Number of exact divisions performed and verified so far (process-wide).
std::size_t lp_division_count();

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names = {});
// [{"exponents": [...], "coefficient": c}, ...] in ascending grlex order.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j, std::size_t nvars);

}  // namespace ycluster
