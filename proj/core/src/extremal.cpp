#include "polychi/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <string>
#include <thread>

#include "polychi/errors.hpp"

namespace polychi {

namespace {

double root_function(RootTarget which, double a)
{
    return which == RootTarget::F ? f_val(a) : f_val(a) + g_val(a);
}

std::string_view target_name(RootTarget which) { return which == RootTarget::F ? "f" : "f + g"; }

// chi_direct for every record; evaluated in contiguous chunks on worker threads.
std::vector<double> evaluate_all(const std::vector<ChainRecord>& records, Alpha a)
{
    std::vector<double> values(records.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t chunk = (records.size() + workers - 1) / workers;
    std::vector<std::future<void>> jobs;
    for (std::size_t begin = 0; begin < records.size(); begin += chunk) {
        const std::size_t end = std::min(records.size(), begin + chunk);
        jobs.push_back(std::async(std::launch::async, [&records, &values, a, begin, end] {
            for (std::size_t i = begin; i < end; ++i) values[i] = chi_direct(build_from_turns(records[i].turns), a);
        }));
    }
    for (auto& job : jobs) job.get();
    return values;
}

void judge(ExtremeSide& side, bool subset_allowed)
{
    std::set<CanonicalKey> observed, predicted;
    for (const auto& r : side.observed) observed.insert(r.key);
    for (const auto& r : side.predicted) predicted.insert(r.key);
    side.matches_whole_family = observed == predicted;
    const bool subset = !observed.empty() && std::includes(predicted.begin(), predicted.end(), observed.begin(), observed.end());
    side.verdict = (side.matches_whole_family || (subset_allowed && subset)) ? Verdict::Pass : Verdict::Fail;
}

}  // namespace

// ---------------------------------------------------------------------------
// Roots

double find_root(RootTarget which, double lo, double hi)
{
    if (lo > hi) std::swap(lo, hi);
    double f_lo = root_function(which, lo);
    const double f_hi = root_function(which, hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0) == (f_hi > 0)) {
        throw NoSignChange(std::string(target_name(which)) + " has no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = root_function(which, mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0) == (f_lo > 0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double find_root(RootTarget which)
{
    return which == RootTarget::F ? find_root(which, -4.0, -2.5) : find_root(which, -6.0, -5.0);
}

const BoundaryRoots& boundary_roots()
{
    static const BoundaryRoots roots{find_root(RootTarget::F), find_root(RootTarget::FPlusG)};
    return roots;
}

// ---------------------------------------------------------------------------
// Regimes

Regime regime_of(double alpha, double tolerance)
{
    if (alpha == 0.0) throw DomainError("alpha must be nonzero");
    if (!(tolerance > 0.0)) throw DomainError("boundary tolerance must be positive");
    if (alpha > 0.0) return Regime::PositiveAlpha;
    const auto& roots = boundary_roots();
    if (std::abs(alpha - roots.x0) <= tolerance) return Regime::AtX0;
    if (std::abs(alpha - roots.x1) <= tolerance) return Regime::AtX1;
    if (alpha > roots.x0) return Regime::BetweenX0AndZero;
    if (alpha > roots.x1) return Regime::BetweenX1AndX0;
    return Regime::BelowX1;
}

std::string_view to_string(Regime r)
{
    switch (r) {
    case Regime::PositiveAlpha: return "alpha > 0";
    case Regime::BetweenX0AndZero: return "x0 < alpha < 0";
    case Regime::AtX0: return "alpha = x0";
    case Regime::BetweenX1AndX0: return "x1 < alpha < x0";
    case Regime::AtX1: return "alpha = x1";
    case Regime::BelowX1: return "alpha < x1";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Families

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::Linear: return "L_n";
    case Family::Zigzag: return "Z_n";
    case Family::ZDagger: return "Z_n-dagger";
    case Family::ZStarClass: return "Z*_n class";
    case Family::ZClass: return "Z_n class";
    case Family::NoLength2Segment: return "no length-2 segment";
    }
    return "?";
}

bool FamilyTag::has(Family f) const noexcept
{
    switch (f) {
    case Family::Linear: return is_linear;
    case Family::Zigzag: return is_zigzag;
    case Family::ZDagger: return is_zdagger;
    case Family::ZStarClass: return in_zstar_class;
    case Family::ZClass: return in_z_class;
    case Family::NoLength2Segment: return no_length2_segment;
    }
    return false;
}

FamilyTag classify_family(const LengthVector& lv)
{
    const auto l = lv.lengths();
    const std::size_t s = l.size();
    auto count = [&](auto pred) { return std::count_if(l.begin(), l.end(), pred); };

    // With one segment, that segment is both external segments.
    std::vector<int> externals{l.front()};
    if (s > 1) externals.push_back(l.back());
    std::vector<int> internals;
    if (s > 2) internals.assign(l.begin() + 1, l.end() - 1);

    auto all_of = [](const std::vector<int>& v, auto pred) { return std::all_of(v.begin(), v.end(), pred); };
    const auto external_twos = std::count(externals.begin(), externals.end(), 2);
    const auto fours = count([](int x) { return x == 4; });

    FamilyTag tag;
    tag.is_linear = s == 1;
    tag.is_zigzag = count([](int x) { return x == 2; }) == static_cast<long>(s);
    tag.no_length2_segment = count([](int x) { return x == 2; }) == 0;
    tag.is_zdagger = all_of(internals, [](int x) { return x == 3; }) && all_of(externals, [](int x) { return x <= 3; }) &&
                     external_twos <= 1;
    tag.in_zstar_class = tag.no_length2_segment && count([](int x) { return x > 4; }) == 0 && fours <= 1;
    const bool internal_four = std::count(internals.begin(), internals.end(), 4) > 0;
    tag.in_z_class = all_of(internals, [](int x) { return x == 3 || x == 4; }) &&
                     all_of(externals, [](int x) { return x <= 4; }) && external_twos <= 1 && fours <= 1 &&
                     (!internal_four || all_of(externals, [](int x) { return x == 3; }));
    return tag;
}

Table1Prediction predicted_families(Regime r)
{
    switch (r) {
    case Regime::PositiveAlpha: return {Family::Zigzag, Family::Linear};
    case Regime::BetweenX0AndZero: return {Family::Linear, Family::Zigzag};
    case Regime::AtX0: return {Family::NoLength2Segment, Family::Zigzag};
    case Regime::BetweenX1AndX0: return {Family::ZStarClass, Family::Zigzag};
    case Regime::AtX1: return {Family::ZClass, Family::Zigzag};
    case Regime::BelowX1: return {Family::ZDagger, Family::Zigzag};
    }
    return {Family::Zigzag, Family::Linear};
}

// ---------------------------------------------------------------------------
// Extremal search

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unpredicted: return "unpredicted";
    }
    return "?";
}

ExtremalReport extremal_search(int n, double alpha, const SearchOptions& options)
{
    const Alpha a(alpha);
    ExtremalReport report;
    report.n = n;
    report.alpha = alpha;
    report.regime = regime_of(alpha, options.boundary_tolerance);
    report.omega_only = options.omega_only;

    const auto records = enumerate_chains({n, options.omega_only, true, options.ceiling});
    report.chains_searched = records.size();
    if (records.empty()) throw DomainError("no chains to search");
    const auto values = evaluate_all(records, a);

    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    report.max.value = *hi_it;
    report.min.value = *lo_it;

    const auto prediction = predicted_families(report.regime);
    report.max.predicted_family = prediction.max;
    report.min.predicted_family = prediction.min;

    for (std::size_t i = 0; i < records.size(); ++i) {
        if (std::abs(values[i] - report.max.value) <= options.tie_tolerance * std::abs(report.max.value)) {
            report.max.observed.push_back(records[i]);
        }
        if (std::abs(values[i] - report.min.value) <= options.tie_tolerance * std::abs(report.min.value)) {
            report.min.observed.push_back(records[i]);
        }
        if (records[i].in_omega) {
            const auto tag = classify_family(records[i].lv);
            if (tag.has(prediction.max)) report.max.predicted.push_back(records[i]);
            if (tag.has(prediction.min)) report.min.predicted.push_back(records[i]);
        }
    }

    if (options.omega_only) {
        judge(report.max, report.regime == Regime::AtX1);
        judge(report.min, false);
    }
    return report;
}

std::vector<const ExtremalReport*> Table1Summary::failures() const
{
    std::vector<const ExtremalReport*> out;
    for (const auto& r : reports) {
        if (!r.passed()) out.push_back(&r);
    }
    return out;
}

bool Table1Summary::passed() const noexcept
{
    return std::all_of(reports.begin(), reports.end(), [](const ExtremalReport& r) { return r.passed(); });
}

Table1Summary verify_table1(int n_min, int n_max, std::span<const double> alphas, const SearchOptions& options)
{
    Table1Summary summary;
    for (double alpha : alphas) {
        for (int n = n_min; n <= n_max; ++n) summary.reports.push_back(extremal_search(n, alpha, options));
    }
    return summary;
}

std::vector<double> default_table1_alphas()
{
    const auto& roots = boundary_roots();
    return {2.0, 1.0, -0.5, -2.0, roots.x0, -4.0, roots.x1, -6.0};
}

}  // namespace polychi
