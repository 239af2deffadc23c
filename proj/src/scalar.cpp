#include "dfinv/scalar.hpp"
#include "dfinv/error.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <numeric>
#include <sstream>

namespace dfinv {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotClosedUnderReflection: return "NotClosedUnderReflection";
        case ErrorCode::GramNotPositiveDefinite: return "GramNotPositiveDefinite";
        case ErrorCode::RootOnWall: return "RootOnWall";
        case ErrorCode::InvalidPositiveSystem: return "InvalidPositiveSystem";
        case ErrorCode::NotARoot: return "NotARoot";
        case ErrorCode::GroupCapExceeded: return "GroupCapExceeded";
        case ErrorCode::UnknownPreset: return "UnknownPreset";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::NotFullDimensional: return "NotFullDimensional";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::EmptyPositivePart: return "EmptyPositivePart";
        case ErrorCode::LowerDimensionalPositivePart: return "LowerDimensionalPositivePart";
        case ErrorCode::DegenerateFacet: return "DegenerateFacet";
        case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
        case ErrorCode::ZeroNormal: return "ZeroNormal";
        case ErrorCode::EmptyFunction: return "EmptyFunction";
        case ErrorCode::NegativeScale: return "NegativeScale";
        case ErrorCode::NotWeylInvariantPolytope: return "NotWeylInvariantPolytope";
        case ErrorCode::NotWeylInvariantFunction: return "NotWeylInvariantFunction";
        case ErrorCode::NotFano: return "NotFano";
        case ErrorCode::NotAffineOnPositivePart: return "NotAffineOnPositivePart";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_decimal(const Rational& q, int significant_digits) {
    using Float = boost::multiprecision::mpf_float_100;
    if (q == 0) return "0";
    return Float(q).str(significant_digits, std::ios_base::fmtflags(0));
}

Rational parse_rational(const std::string& text) {
    const auto bad = [&] { return Error(ErrorCode::ParseError, "not a rational: '" + text + "'"); };
    const auto slash = text.find('/');
    const auto is_int = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const std::string num = text.substr(0, slash);
    if (!is_int(num, true)) throw bad();
    Integer p(num[0] == '+' ? num.substr(1) : num);
    if (slash == std::string::npos) return Rational(p);
    const std::string den = text.substr(slash + 1);
    if (!is_int(den, false)) throw bad();
    Integer q(den);
    if (q == 0) throw bad();
    return Rational(p, q);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Rational primitive_scale(const VectorQ& v) {
    Integer den_lcm = 1;
    for (const auto& x : v) den_lcm = boost::multiprecision::lcm(den_lcm, Integer(denominator(x)));
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, Integer(numerator(x) * (den_lcm / denominator(x))));
    if (g == 0) throw Error(ErrorCode::ZeroNormal, "cannot normalize the zero vector");
    return Rational(den_lcm, g);
}

VectorQ primitive(const VectorQ& v) {
    const Rational s = primitive_scale(v);
    return v * s;
}

VectorQ from_ints(std::initializer_list<long> values) {
    VectorQ v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (long x : values) v(i++) = Rational(x);
    return v;
}

std::string to_string(const VectorQ& v) {
    std::ostringstream out;
    out << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v(i).str();
    out << ')';
    return out.str();
}

std::vector<double> to_doubles(const VectorQ& v) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(v.size()));
    for (const auto& x : v) out.push_back(x.convert_to<double>());
    return out;
}

}  // namespace dfinv
