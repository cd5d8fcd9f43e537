#pragma once

// General sum-connectivity index: direct evaluation over chain graphs and the
// segment closed form valid on Omega chains.

#include "polychi/chain.hpp"

namespace polychi {

// Nonzero exponent within the guard range [-12, 12].
class Alpha {
public:
    static constexpr double kGuard = 12.0;

    // Throws DomainError for 0 and RangeError outside the guard range.
    explicit Alpha(double value);

    double value() const noexcept { return value_; }

private:
    double value_;
};

// Sum over edges of (d_u + d_v)^alpha.
double chi_direct(const PolyominoChain& c, Alpha a);

// Coefficient functions of the closed form. Defined for every real alpha.
double f_val(double a);  // 2*5^a - 6^(a+1) + 4*7^a
double g_val(double a);  // 2*6^a - 5^a - 7^a
double h_val(double a);  // 5*6^a - 2*5^a - 4*7^a + 8^a

// Alpha-only constant of the closed form: 2*4^a + 2*5^a + 6^a - 4*7^a.
double closed_form_constant(double a);

// Psi = f*segments + g*external_twos + h*internal_twos. Keeping the integer
// coefficients makes differences between chains exact.
struct PsiTerms {
    int segments = 0;       // s
    int external_twos = 0;  // beta_1 + beta_s
    int internal_twos = 0;  // sum of alpha_i

    double evaluate(double a) const;

    friend PsiTerms operator-(const PsiTerms& x, const PsiTerms& y) noexcept
    {
        return {x.segments - y.segments, x.external_twos - y.external_twos, x.internal_twos - y.internal_twos};
    }
    friend PsiTerms operator+(const PsiTerms& x, const PsiTerms& y) noexcept
    {
        return {x.segments + y.segments, x.external_twos + y.external_twos, x.internal_twos + y.internal_twos};
    }
    friend PsiTerms operator*(int k, const PsiTerms& x) noexcept
    {
        return {k * x.segments, k * x.external_twos, k * x.internal_twos};
    }
    friend bool operator==(const PsiTerms&, const PsiTerms&) = default;
};

// Throws DomainError if lv describes fewer than 3 squares.
PsiTerms psi_terms(const LengthVector& lv);
double psi(const LengthVector& lv, Alpha a);

// 3*6^a*n + closed_form_constant(a) + psi(lv, a). Only equals chi_direct for
// chains in Omega; the caller is responsible for that. Throws DomainError for n < 3.
double chi_closed(const LengthVector& lv, Alpha a);

// Sum of squared degrees.
double first_zagreb(const PolyominoChain& c);
// Sum over edges of 2 / (d_u + d_v).
double harmonic(const PolyominoChain& c);

}  // namespace polychi
