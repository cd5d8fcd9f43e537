// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "polychi/enumerate.hpp"
#include "polychi/extremal.hpp"
#include "polychi/index.hpp"

using namespace polychi;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string why)
    {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

std::set<CanonicalKey> keys_of(const std::vector<ChainRecord>& records)
{
    std::set<CanonicalKey> out;
    for (const auto& r : records) out.insert(r.key);
    return out;
}

// 1. Closed form equals direct evaluation on every Omega chain, 3 <= n <= 10.
Outcome closed_form_equivalence()
{
    Outcome o;
    const double alphas[] = {-8, -6, -5.46343, -4, -3.09997, -2, -1, -0.5, 0.5, 1, 2};
    std::size_t checked = 0;
    double worst = 0.0;
    for (int n = 3; n <= 10; ++n) {
        for (const auto& r : enumerate_chains({n, true, true})) {
            const auto c = build_from_turns(r.turns);
            for (double a : alphas) {
                const double d = rel_diff(chi_direct(c, Alpha(a)), chi_closed(r.lv, Alpha(a)));
                worst = std::max(worst, d);
                if (d > 1e-10) o.fail("n " + std::to_string(n) + " turns " + r.turns.to_string());
                ++checked;
            }
        }
    }
    if (o.ok) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%zu evaluations, worst relative gap %.1e", checked, worst);
        o.detail = buf;
    }
    return o;
}

// 2. Roots within 1e-4 of the published decimals, residuals below 1e-12.
Outcome roots_match()
{
    Outcome o;
    const double x0 = find_root(RootTarget::F);
    const double x1 = find_root(RootTarget::FPlusG);
    if (std::abs(x0 - -3.09997) > 1e-4) o.fail("x0 = " + std::to_string(x0));
    if (std::abs(x1 - -5.46343) > 1e-4) o.fail("x1 = " + std::to_string(x1));
    if (std::abs(f_val(x0)) >= 1e-12) o.fail("f(x0) residual too large");
    if (std::abs(f_val(x1) + g_val(x1)) >= 1e-12) o.fail("(f+g)(x1) residual too large");
    if (o.ok) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "x0 %.12f, x1 %.12f", x0, x1);
        o.detail = buf;
    }
    return o;
}

// 3. Brute-force extremal sets equal the predicted families, 4 <= n <= 9.
Outcome table_reproduction()
{
    Outcome o;
    const auto summary = verify_table1(4, 9, default_table1_alphas());
    for (const auto* r : summary.failures()) {
        o.fail("n " + std::to_string(r->n) + " alpha " + std::to_string(r->alpha) + " (" +
               std::string(to_string(r->regime)) + ")");
    }
    // Spot checks named in the criterion.
    const auto& roots = boundary_roots();
    for (int n = 4; n <= 9; ++n) {
        const auto linear = canonical_key(build_from_turns(make_linear(n)));
        const auto zigzag = canonical_key(build_from_turns(make_zigzag(n)));
        const auto zdagger = canonical_key(build_from_turns(make_zdagger(n)));
        auto only = [](const ExtremeSide& s, const CanonicalKey& k) { return keys_of(s.observed) == std::set{k}; };
        if (!only(extremal_search(n, 1.0).max, zigzag) || !only(extremal_search(n, 1.0).min, linear))
            o.fail("alpha 1, n " + std::to_string(n));
        if (!only(extremal_search(n, -0.5).max, linear) || !only(extremal_search(n, -0.5).min, zigzag))
            o.fail("alpha -0.5, n " + std::to_string(n));
        if (!only(extremal_search(n, -6.0).max, zdagger)) o.fail("alpha -6, n " + std::to_string(n));
        for (double a : {-2.0, roots.x0, -4.0, roots.x1, -6.0}) {
            if (!only(extremal_search(n, a).min, zigzag)) o.fail("min at alpha " + std::to_string(a));
        }
    }
    if (o.ok) o.detail = std::to_string(summary.reports.size()) + " (n, alpha) rows";
    return o;
}

// 4. At x0 the chains without a length-2 segment attain the bound, all others fall below.
Outcome bound_at_x0()
{
    Outcome o;
    const double x0 = boundary_roots().x0;
    const Alpha a(x0);
    std::size_t attaining = 0, below = 0;
    for (int n = 3; n <= 10; ++n) {
        const double bound = 3 * std::pow(6.0, x0) * n + closed_form_constant(x0);
        for (const auto& r : enumerate_chains({n, true, true})) {
            const double chi = chi_direct(build_from_turns(r.turns), a);
            if (classify_family(r.lv).no_length2_segment) {
                if (rel_diff(bound, chi) > 1e-10) o.fail("bound not attained by " + r.turns.to_string());
                ++attaining;
            } else {
                if (!(chi < bound) || rel_diff(bound, chi) <= 1e-10) o.fail("not strictly below: " + r.turns.to_string());
                ++below;
            }
        }
    }
    if (o.ok) o.detail = std::to_string(attaining) + " attain, " + std::to_string(below) + " strictly below";
    return o;
}

// 5. Exchange moves: stated delta equals the recomputed difference exactly and carries the claimed sign.
Outcome exchange_ledger()
{
    Outcome o;
    std::vector<double> grid;
    for (double a = -12.0; a < 0.0; a += 0.01) grid.push_back(a);
    grid.push_back(boundary_roots().x0);
    grid.push_back(boundary_roots().x1);

    std::map<MoveKind, std::size_t> per_kind;
    for (int n = 3; n <= 10; ++n) {
        for (const auto& l : oracle::length_vectors(n)) {
            const LengthVector lv(l);
            for (const auto& move : applicable_moves(lv)) {
                const auto moved = apply_move(lv, move);
                const auto [s0, b0, a0] = oracle::psi_coefficients(l);
                const auto [s1, b1, a1] =
                    oracle::psi_coefficients({moved.lengths().begin(), moved.lengths().end()});
                const PsiTerms recomputed{s1 - s0, b1 - b0, a1 - a0};
                const std::string where = std::string(to_string(move.kind)) + " on (" + lv.to_string() + ")";
                if (moved.squares() != n) o.fail(where + " changes n");
                if (!(stated_delta(lv, move) == recomputed)) o.fail(where + " stated delta mismatch");
                if (!(psi_exchange_delta_terms(lv, move) == recomputed)) o.fail(where + " delta mismatch");
                const auto claim = move_claim(move.kind);
                for (double a : grid) {
                    if (in_range(claim.range, a) && !(recomputed.evaluate(a) * claim.sign > 0)) {
                        o.fail(where + " sign at alpha " + std::to_string(a));
                        break;
                    }
                }
                ++per_kind[move.kind];
            }
        }
    }
    for (MoveKind k : all_move_kinds()) {
        if (per_kind[k] == 0) o.fail(std::string(to_string(k)) + " never applicable");
    }
    if (o.ok) {
        std::size_t total = 0;
        for (const auto& [k, c] : per_kind) total += c;
        o.detail = std::to_string(total) + " moves over " + std::to_string(per_kind.size()) + " kinds";
    }
    return o;
}

// 6. Graph sizes and degree sums, small class counts, and agreement of two enumerators.
Outcome structural_census()
{
    Outcome o;
    std::size_t chains = 0, vertex_mismatch = 0;
    std::string first_mismatch;
    for (int n = 3; n <= 10; ++n) {
        for (const auto& r : enumerate_chains({n, false, false})) {
            const auto c = build_from_turns(r.turns);
            int degree_total = 0;
            for (int d : c.degrees()) degree_total += d;
            if (c.edges().size() != static_cast<std::size_t>(3 * n + 1) || degree_total != 2 * (3 * n + 1)) {
                o.fail("edge count or degree sum broken by " + r.turns.to_string());
            }
            if (c.vertices().size() != static_cast<std::size_t>(2 * n + 2)) {
                if (vertex_mismatch++ == 0) {
                    first_mismatch = "n " + std::to_string(n) + " " + r.turns.to_string() + " has " +
                                     std::to_string(c.vertices().size()) + " vertices";
                }
            }
            ++chains;
        }
    }
    if (vertex_mismatch > 0) {
        o.fail("|V| = 2n+2 fails on " + std::to_string(vertex_mismatch) + " of " + std::to_string(chains) +
               " turn sequences (corner contacts), first " + first_mismatch +
               "; |E| and degree sums hold on all");
    }
    if (enumerate_chains({3, false, true}).size() != 2) o.fail("n = 3 count");
    if (enumerate_chains({4, false, true}).size() != 3) o.fail("n = 4 count");
    for (int n = 3; n <= 8; ++n) {
        std::set<CanonicalKey> paths;
        oracle::cell_paths(n, [&paths](const std::vector<Cell>& cells) { paths.insert(canonical_key(cells)); });
        if (paths != keys_of(enumerate_chains({n, false, true}))) o.fail("enumerators disagree at n " + std::to_string(n));
    }
    if (o.ok) o.detail = std::to_string(chains) + " turn sequences, enumerators agree for n <= 8";
    return o;
}

// 7. chi at 1 is the first Zagreb index; twice chi at -1 is the harmonic index.
Outcome classical_identities()
{
    Outcome o;
    std::size_t checked = 0;
    for (int n = 3; n <= 8; ++n) {
        for (const auto& r : enumerate_chains({n, false, false})) {
            const auto c = build_from_turns(r.turns);
            if (chi_direct(c, Alpha(1)) != first_zagreb(c)) o.fail("Zagreb mismatch at " + r.turns.to_string());
            if (std::abs(2 * chi_direct(c, Alpha(-1)) - harmonic(c)) > 1e-12) {
                o.fail("harmonic mismatch at " + r.turns.to_string());
            }
            ++checked;
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " chains";
    return o;
}

}  // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"1 closed form matches direct evaluation on Omega chains", closed_form_equivalence},
        {"2 boundary roots", roots_match},
        {"3 extremal table reproduced by brute force", table_reproduction},
        {"4 bound at x0 attained exactly by chains without length-2 segments", bound_at_x0},
        {"5 exchange-move deltas and signs", exchange_ledger},
        {"6 structural census", structural_census},
        {"7 Zagreb and harmonic identities", classical_identities},
    };

    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto outcome = check();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s: %s (%.2fs)\n", outcome.ok ? "PASS" : "FAIL", name, outcome.detail.c_str(), secs);
        failed += !outcome.ok;
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
