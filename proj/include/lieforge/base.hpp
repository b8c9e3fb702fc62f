#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lieforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Hard limits shared by the whole kernel.
struct limits {
    static constexpr int jet_order_cap = 6;   // highest derivative order representable
    static constexpr int int_pow_min = -6;    // lowest explicit integer exponent accepted on input
};

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct DegenerateDivision : Error {
    explicit DegenerateDivision(const std::string& m = "division by an identically-zero expression")
        : Error(m) {}
};
struct JetOrderExceeded : Error {
    explicit JetOrderExceeded(const std::string& m = "jet order cap exceeded") : Error(m) {}
};
struct CyclicSubstitution : Error {
    explicit CyclicSubstitution(const std::string& m = "cyclic substitution bindings") : Error(m) {}
};
struct UnboundSymbol : Error {
    explicit UnboundSymbol(const std::string& m) : Error("unbound symbol: " + m) {}
};
struct EvaluationPole : Error {
    explicit EvaluationPole(const std::string& m = "evaluation hit a pole") : Error(m) {}
};
struct NotAffineInLeading : Error {
    explicit NotAffineInLeading(const std::string& m = "equation is not affine in the leading derivative")
        : Error(m) {}
};
struct InsufficientProlongation : Error {
    explicit InsufficientProlongation(const std::string& m = "prolongation order below equation order")
        : Error(m) {}
};
struct CollectionFailure : Error {
    explicit CollectionFailure(const std::string& m = "jet dependence left inside a coefficient")
        : Error(m) {}
};
struct ResidualOldVariable : Error {
    explicit ResidualOldVariable(const std::string& m) : Error(m) {}
};
struct UnsupportedSpecialization : Error {
    explicit UnsupportedSpecialization(const std::string& m) : Error(m) {}
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// floor of a rational as an integer
inline BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

}  // namespace lieforge
