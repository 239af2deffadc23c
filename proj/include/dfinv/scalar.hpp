#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <compare>
#include <string>
#include <vector>

namespace dfinv {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;
using VectorZ = Vector<Integer>;

/// Lexicographic three-way comparison of two equally sized dense objects.
template <typename DerivedA, typename DerivedB>
std::strong_ordering lex_compare(const Eigen::DenseBase<DerivedA>& a,
                                 const Eigen::DenseBase<DerivedB>& b) {
    if (a.rows() != b.rows()) return a.rows() <=> b.rows();
    if (a.cols() != b.cols()) return a.cols() <=> b.cols();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) < b(i, j)) return std::strong_ordering::less;
            if (b(i, j) < a(i, j)) return std::strong_ordering::greater;
        }
    return std::strong_ordering::equal;
}

struct LexLess {
    template <typename DerivedA, typename DerivedB>
    bool operator()(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b) const {
        return lex_compare(a, b) < 0;
    }
};

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b) {
    return lex_compare(a, b) == 0;
}

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Decimal rendering with the given number of significant digits (display only).
std::string to_decimal(const Rational& q, int significant_digits = 12);

/// Accepts "p", "-p", "p/q" with q > 0.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);

/// Scales a rational covector to the primitive integer vector on the same ray.
/// Returns the positive factor `s` with result = s * v.
Rational primitive_scale(const VectorQ& v);

VectorQ primitive(const VectorQ& v);

VectorQ from_ints(std::initializer_list<long> values);

std::string to_string(const VectorQ& v);

std::vector<double> to_doubles(const VectorQ& v);

}  // namespace dfinv
