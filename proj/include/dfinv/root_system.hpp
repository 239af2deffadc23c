#pragma once

#include "dfinv/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dfinv {

/**
 * A reduced root system together with a W-invariant rational pairing.
 *
 * Vectors live in fixed coordinates on M_R (the simple-root basis for the
 * presets). The pairing is u^T * gram * v. Positive roots are integral.
 * Simple roots are recomputed from the positive roots, never taken as input.
 *
 * Instances are immutable once constructed.
 */
class RootSystem {
public:
    /// Preset names: torus-1, torus-2, torus-3, A1, A2, B2, G2.
    static RootSystem preset(std::string_view name);

    /// Validates and derives rho, c and the simple roots.
    static RootSystem from_data(MatrixQ gram, std::vector<VectorQ> positive_roots,
                                std::string name = "custom");

    const std::string& name() const { return name_; }
    Eigen::Index dimension() const { return gram_.rows(); }           // n
    std::size_t num_positive_roots() const { return positive_.size(); }  // r
    std::size_t degree() const { return 2 * positive_.size(); }          // d = 2r

    const MatrixQ& gram() const { return gram_; }
    const std::vector<VectorQ>& positive_roots() const { return positive_; }
    const std::vector<VectorQ>& simple_roots() const { return simple_; }
    const VectorQ& rho() const { return rho_; }
    const VectorQ& two_rho() const { return two_rho_; }
    const Rational& c() const { return c_; }

    Rational pairing(const VectorQ& u, const VectorQ& v) const;

    bool is_root(const VectorQ& v) const;

    /// x - 2 (<alpha,x>/<alpha,alpha>) alpha. Throws NotARoot unless alpha is in Phi.
    VectorQ reflect(const VectorQ& alpha, const VectorQ& x) const;

    MatrixQ reflection_matrix(const VectorQ& alpha) const;

    /// Primitive integer covector w with w.x = (positive multiple of) <alpha_s, x>.
    VectorQ wall_covector(std::size_t simple_index) const;

private:
    RootSystem() = default;

    std::string name_;
    MatrixQ gram_;
    std::vector<VectorQ> positive_;
    std::vector<VectorQ> simple_;
    VectorQ rho_;
    VectorQ two_rho_;
    Rational c_;
};

std::vector<std::string> preset_names();

inline RootSystem build_root_system(std::string_view preset) { return RootSystem::preset(preset); }

inline Rational pairing(const RootSystem& rs, const VectorQ& u, const VectorQ& v) {
    return rs.pairing(u, v);
}

inline VectorQ reflect(const RootSystem& rs, const VectorQ& alpha, const VectorQ& x) {
    return rs.reflect(alpha, x);
}

/// Finite group generated by the simple reflections, acting on M_R.
class WeylGroup {
public:
    explicit WeylGroup(std::vector<MatrixQ> elements) : elements_(std::move(elements)) {}

    std::size_t order() const { return elements_.size(); }
    const std::vector<MatrixQ>& elements() const { return elements_; }
    const MatrixQ& operator[](std::size_t i) const { return elements_[i]; }

    /// Action on dual vectors (facet normals, PL slopes): a -> w^T a.
    MatrixQ dual(std::size_t i) const { return elements_[i].transpose(); }

private:
    std::vector<MatrixQ> elements_;
};

inline constexpr std::size_t kDefaultWeylCap = 100000;

/// Breadth-first closure under the simple reflections; elements sorted lexicographically.
WeylGroup weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

}  // namespace dfinv
