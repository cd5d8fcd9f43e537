#include "polychi/index.hpp"

#include <cmath>
#include <string>

#include "polychi/errors.hpp"

namespace polychi {

Alpha::Alpha(double value) : value_(value)
{
    if (value == 0.0) throw DomainError("alpha must be nonzero");
    if (!std::isfinite(value) || std::abs(value) > kGuard) {
        throw RangeError("alpha " + std::to_string(value) + " outside [-12, 12]");
    }
}

double chi_direct(const PolyominoChain& c, Alpha a)
{
    // Degree sums lie in {4,...,8}; evaluate each power once.
    double power[9] = {};
    for (int k = 2; k <= 8; ++k) power[k] = std::pow(static_cast<double>(k), a.value());

    int census[9] = {};
    for (const auto& e : c.edges()) ++census[c.degree_sum(e)];

    double sum = 0.0;
    for (int k = 2; k <= 8; ++k) sum += census[k] * power[k];
    return sum;
}

double f_val(double a) { return 2.0 * std::pow(5.0, a) - std::pow(6.0, a + 1.0) + 4.0 * std::pow(7.0, a); }

double g_val(double a) { return 2.0 * std::pow(6.0, a) - std::pow(5.0, a) - std::pow(7.0, a); }

double h_val(double a)
{
    return 5.0 * std::pow(6.0, a) - 2.0 * std::pow(5.0, a) - 4.0 * std::pow(7.0, a) + std::pow(8.0, a);
}

double closed_form_constant(double a)
{
    return 2.0 * std::pow(4.0, a) + 2.0 * std::pow(5.0, a) + std::pow(6.0, a) - 4.0 * std::pow(7.0, a);
}

double PsiTerms::evaluate(double a) const
{
    return segments * f_val(a) + external_twos * g_val(a) + internal_twos * h_val(a);
}

PsiTerms psi_terms(const LengthVector& lv)
{
    if (lv.squares() < 3) {
        throw DomainError("closed form needs n >= 3, got n = " + std::to_string(lv.squares()));
    }
    const auto ind = indicators(lv);
    return {lv.segment_count(), ind.beta1 + ind.beta_s, ind.alpha_sum()};
}

double psi(const LengthVector& lv, Alpha a) { return psi_terms(lv).evaluate(a.value()); }

double chi_closed(const LengthVector& lv, Alpha a)
{
    const double x = a.value();
    return 3.0 * std::pow(6.0, x) * lv.squares() + closed_form_constant(x) + psi(lv, a);
}

double first_zagreb(const PolyominoChain& c)
{
    double sum = 0.0;
    for (int d : c.degrees()) sum += static_cast<double>(d) * d;
    return sum;
}

double harmonic(const PolyominoChain& c)
{
    double sum = 0.0;
    for (const auto& e : c.edges()) sum += 2.0 / c.degree_sum(e);
    return sum;
}

}  // namespace polychi
