#pragma once

#include "dfinv/error.hpp"
#include "dfinv/scalar.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace dfinv {

/**
 * Sparse multivariate polynomial over an exact field.
 *
 * Terms are kept in a map from exponent vectors to nonzero coefficients, so
 * equality of polynomials is coefficient-wise equality of the maps.
 */
template <typename Scalar>
class Polynomial {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, Scalar>;

    explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}

    static Polynomial constant(int num_vars, const Scalar& c) {
        Polynomial p(num_vars);
        p.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), c);
        return p;
    }

    static Polynomial variable(int num_vars, int j) {
        Exponent e(static_cast<std::size_t>(num_vars), 0);
        e.at(static_cast<std::size_t>(j)) = 1;
        Polynomial p(num_vars);
        p.add_term(std::move(e), Scalar(1));
        return p;
    }

    /// coeffs . x + constant_term
    static Polynomial linear(const Vector<Scalar>& coeffs, const Scalar& constant_term = Scalar(0)) {
        const int n = static_cast<int>(coeffs.size());
        Polynomial p = constant(n, constant_term);
        for (int j = 0; j < n; ++j) {
            Exponent e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(j)] = 1;
            p.add_term(std::move(e), coeffs(j));
        }
        return p;
    }

    int num_vars() const { return num_vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponent e, const Scalar& c) {
        if (static_cast<int>(e.size()) != num_vars_)
            throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Scalar coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    static int total_degree(const Exponent& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    /// -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    int min_degree() const {
        if (terms_.empty()) return -1;
        int d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
        return d;
    }

    bool is_homogeneous() const { return degree() == min_degree(); }

    Polynomial homogeneous_part(int d) const {
        Polynomial out(num_vars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) out.terms_.emplace(e, c);
        return out;
    }

    Scalar evaluate(const Vector<Scalar>& x) const {
        check_point(x.size());
        Scalar sum(0);
        for (const auto& [e, c] : terms_) {
            Scalar term = c;
            for (int j = 0; j < num_vars_; ++j)
                for (int k = 0; k < e[static_cast<std::size_t>(j)]; ++k) term *= x(j);
            sum += term;
        }
        return sum;
    }

    /// Evaluation in another arithmetic (e.g. double for Monte-Carlo sampling).
    template <typename T>
    T evaluate_as(const std::vector<T>& x) const {
        check_point(static_cast<Eigen::Index>(x.size()));
        T sum(0);
        for (const auto& [e, c] : terms_) {
            T term = static_cast<T>(c);
            for (int j = 0; j < num_vars_; ++j)
                for (int k = 0; k < e[static_cast<std::size_t>(j)]; ++k) term *= x[static_cast<std::size_t>(j)];
            sum += term;
        }
        return sum;
    }

    Polynomial derivative(int j) const {
        Polynomial out(num_vars_);
        for (const auto& [e, c] : terms_) {
            const int power = e.at(static_cast<std::size_t>(j));
            if (power == 0) continue;
            Exponent lowered = e;
            --lowered[static_cast<std::size_t>(j)];
            out.add_term(std::move(lowered), c * Scalar(power));
        }
        return out;
    }

    /// sum_j v_j dp/dx_j
    Polynomial directional_derivative(const Vector<Scalar>& v) const {
        check_point(v.size());
        Polynomial out(num_vars_);
        for (int j = 0; j < num_vars_; ++j)
            if (v(j) != 0) out += derivative(j) * v(j);
        return out;
    }

    Polynomial pow(int k) const {
        Polynomial out = constant(num_vars_, Scalar(1));
        for (int i = 0; i < k; ++i) out *= *this;
        return out;
    }

    /// Substitutes x_j := images[j]; all images share one variable count.
    Polynomial compose(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != num_vars_)
            throw Error(ErrorCode::DimensionMismatch, "compose needs one image per variable");
        const int m = images.empty() ? 0 : images.front().num_vars();
        std::vector<std::vector<Polynomial>> powers(images.size());
        for (std::size_t j = 0; j < images.size(); ++j) powers[j].push_back(constant(m, Scalar(1)));
        Polynomial out(m);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(m, c);
            for (std::size_t j = 0; j < images.size(); ++j) {
                while (static_cast<int>(powers[j].size()) <= e[j]) powers[j].push_back(powers[j].back() * images[j]);
                if (e[j] > 0) term *= powers[j][static_cast<std::size_t>(e[j])];
            }
            out += term;
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Scalar& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial out(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea.size());
                for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!out.empty()) out += " + ";
            out += "(" + to_string(c) + ")";
            for (int j = 0; j < num_vars_; ++j) {
                const int k = e[static_cast<std::size_t>(j)];
                if (k == 0) continue;
                out += "*x" + std::to_string(j + 1);
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void check_same(const Polynomial& o) const {
        if (o.num_vars_ != num_vars_) throw Error(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
    }
    void check_point(Eigen::Index size) const {
        if (size != num_vars_) throw Error(ErrorCode::DimensionMismatch, "point length differs from variable count");
    }

    int num_vars_;
    Terms terms_;
};

/// n polynomial components.
template <typename Scalar>
struct PolyVectorField {
    std::vector<Polynomial<Scalar>> components;

    int size() const { return static_cast<int>(components.size()); }

    /// sum_j v_j * components[j]
    Polynomial<Scalar> contract(const Vector<Scalar>& v) const {
        if (v.size() != size()) throw Error(ErrorCode::DimensionMismatch, "covector length differs from field size");
        Polynomial<Scalar> out(components.empty() ? 0 : components.front().num_vars());
        for (int j = 0; j < size(); ++j) out += components[static_cast<std::size_t>(j)] * v(j);
        return out;
    }

    /// Pointwise contraction with the position vector field x.
    Polynomial<Scalar> contract_with_position() const {
        const int n = size();
        Polynomial<Scalar> out(n);
        for (int j = 0; j < n; ++j)
            out += components[static_cast<std::size_t>(j)] * Polynomial<Scalar>::variable(n, j);
        return out;
    }
};

template <typename Scalar>
Polynomial<Scalar> directional_derivative(const Polynomial<Scalar>& p, const Vector<Scalar>& v) {
    return p.directional_derivative(v);
}

template <typename Scalar>
Polynomial<Scalar> divergence(const PolyVectorField<Scalar>& field) {
    Polynomial<Scalar> out(field.size());
    for (int j = 0; j < field.size(); ++j) out += field.components[static_cast<std::size_t>(j)].derivative(j);
    return out;
}

template <typename Scalar>
PolyVectorField<Scalar> gradient(const Polynomial<Scalar>& p) {
    PolyVectorField<Scalar> out;
    for (int j = 0; j < p.num_vars(); ++j) out.components.push_back(p.derivative(j));
    return out;
}

using PolynomialQ = Polynomial<Rational>;
using PolyVectorFieldQ = PolyVectorField<Rational>;

}  // namespace dfinv
