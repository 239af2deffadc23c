#include "dfinv/dh_polynomials.hpp"

#include <random>

namespace dfinv {

namespace {

int vars(const RootSystem& rs) { return static_cast<int>(rs.dimension()); }

PolynomialQ product_of_squares_except(const std::vector<PolynomialQ>& forms, std::size_t skip, int n) {
    PolynomialQ out = PolynomialQ::constant(n, 1);
    for (std::size_t k = 0; k < forms.size(); ++k)
        if (k != skip) out *= forms[k] * forms[k];
    return out;
}

std::vector<PolynomialQ> all_root_forms(const RootSystem& rs) {
    std::vector<PolynomialQ> forms;
    for (const auto& a : rs.positive_roots()) forms.push_back(root_form(rs, a));
    return forms;
}

}  // namespace

PolynomialQ root_form(const RootSystem& rs, const VectorQ& alpha) {
    return PolynomialQ::linear(VectorQ(rs.gram() * alpha));
}

PolynomialQ h_top(const RootSystem& rs) {
    const auto forms = all_root_forms(rs);
    return product_of_squares_except(forms, forms.size(), vars(rs)) * (Rational(1) / rs.c());
}

PolynomialQ h_sub(const RootSystem& rs) {
    const int n = vars(rs);
    const auto forms = all_root_forms(rs);
    PolynomialQ out(n);
    for (std::size_t j = 0; j < forms.size(); ++j) {
        const Rational weight = 2 * rs.pairing(rs.positive_roots()[j], rs.rho());
        out += forms[j] * product_of_squares_except(forms, j, n) * weight;
    }
    return out * (Rational(1) / rs.c());
}

PolyVectorFieldQ grad_h_top(const RootSystem& rs) {
    const int n = vars(rs);
    const auto forms = all_root_forms(rs);
    PolyVectorFieldQ field;
    field.components.assign(static_cast<std::size_t>(n), PolynomialQ(n));
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const PolynomialQ coeff = forms[i] * product_of_squares_except(forms, i, n) * (Rational(2) / rs.c());
        const VectorQ& alpha = rs.positive_roots()[i];
        for (int j = 0; j < n; ++j)
            if (alpha(j) != 0) field.components[static_cast<std::size_t>(j)] += coeff * alpha(j);
    }
    return field;
}

PolynomialQ gram_pairing(const RootSystem& rs, const PolyVectorFieldQ& field, const VectorQ& v) {
    return field.contract(VectorQ(rs.gram() * v));
}

PolynomialQ gram_pairing_with_position(const RootSystem& rs, const PolyVectorFieldQ& field) {
    const int n = vars(rs);
    PolynomialQ out(n);
    for (int j = 0; j < n; ++j)
        out += field.components[static_cast<std::size_t>(j)] * PolynomialQ::linear(VectorQ(rs.gram().row(j).transpose()));
    return out;
}

PolynomialQ weyl_dimension_squared(const RootSystem& rs) {
    const int n = vars(rs);
    PolynomialQ numerator = PolynomialQ::constant(n, 1);
    Rational denominator = 1;
    for (const auto& a : rs.positive_roots()) {
        const Rational shift = rs.pairing(a, rs.rho());
        numerator *= PolynomialQ::linear(VectorQ(rs.gram() * a), shift);
        denominator *= shift;
    }
    const PolynomialQ dim = numerator * (Rational(1) / denominator);
    return dim * dim;
}

PolyVectorFieldQ shifted_position_field(const RootSystem& rs, const PolynomialQ& g) {
    const int n = vars(rs);
    PolyVectorFieldQ field;
    for (int j = 0; j < n; ++j) {
        VectorQ e = VectorQ::Zero(n);
        e(j) = 1;
        field.components.push_back(PolynomialQ::linear(e, -rs.two_rho()(j)) * g);
    }
    return field;
}

ClaimReport verify_claim_identities(const RootSystem& rs, std::uint64_t seed, int random_affine) {
    const int n = vars(rs);
    const auto r = static_cast<long>(rs.num_positive_roots());
    const PolynomialQ top = h_top(rs);
    const PolynomialQ sub = h_sub(rs);
    const PolyVectorFieldQ grad = grad_h_top(rs);
    ClaimReport report;

    const auto record = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    record("top-at-rho", top.evaluate(rs.rho()) == 1, "H_d(rho) = " + to_string(top.evaluate(rs.rho())));
    record("sub-at-rho", sub.evaluate(rs.rho()) == Rational(2 * r),
           "H_{d-1}(rho) = " + to_string(sub.evaluate(rs.rho())));

    bool grad_ok = true;
    for (int j = 0; j < n && grad_ok; ++j) {
        VectorQ e = VectorQ::Zero(n);
        e(j) = 1;
        grad_ok = gram_pairing(rs, grad, e) == top.derivative(j);
    }
    record("gradient", grad_ok, "closed-form gradient vs coordinate derivatives");

    record("rho-derivative", gram_pairing(rs, grad, rs.rho()) == sub, "<grad H_d, rho> = H_{d-1}");
    record("euler", gram_pairing_with_position(rs, grad) == top * Rational(2 * r), "<grad H_d, x> = 2r H_d");

    std::vector<PolynomialQ> family{PolynomialQ::constant(n, 1)};
    for (int j = 0; j < n; ++j) family.push_back(PolynomialQ::variable(n, j));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    for (int k = 0; k < random_affine; ++k) {
        VectorQ b(n);
        for (auto& x : b) x = Rational(num(rng), den(rng));
        family.push_back(PolynomialQ::linear(b, Rational(num(rng), den(rng))));
    }

    VectorQ shift = -rs.two_rho();
    bool div_ok = true;
    std::string failure;
    for (const auto& f : family) {
        const PolynomialQ lhs = divergence(shifted_position_field(rs, f * top));
        // <grad f, x - 2rho> as a polynomial: sum_j df/dx_j (x_j - 2rho_j)
        PolynomialQ slope(n);
        for (int j = 0; j < n; ++j) {
            VectorQ e = VectorQ::Zero(n);
            e(j) = 1;
            slope += f.derivative(j) * PolynomialQ::linear(e, shift(j));
        }
        const PolynomialQ rhs = slope * top + f * top * Rational(2 * r + n) - f * sub * Rational(2);
        if (!(lhs == rhs)) {
            div_ok = false;
            failure = "fails for f = " + f.str();
            break;
        }
    }
    record("divergence", div_ok, div_ok ? "div((x-2rho) f H_d) identity" : failure);
    return report;
}

}  // namespace dfinv
