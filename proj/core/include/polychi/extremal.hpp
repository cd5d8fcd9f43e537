#pragma once

// Regime boundaries, extremal families and brute-force verification of which
// Omega chains maximize and minimize the general sum-connectivity index.

#include <span>
#include <string_view>
#include <vector>

#include "polychi/enumerate.hpp"
#include "polychi/index.hpp"

namespace polychi {

// ---------------------------------------------------------------------------
// Roots

enum class RootTarget { F, FPlusG };

// Bisection to bracket width 1e-12; returns the midpoint of the final bracket.
// Throws NoSignChange if the endpoint values share a sign.
double find_root(RootTarget which, double lo, double hi);
// Default brackets: [-4, -2.5] for f, [-6, -5] for f + g.
double find_root(RootTarget which);

struct BoundaryRoots {
    double x0;  // f = 0
    double x1;  // f + g = 0
};

// Computed on first use.
const BoundaryRoots& boundary_roots();

// ---------------------------------------------------------------------------
// Regimes

enum class Regime { PositiveAlpha, BetweenX0AndZero, AtX0, BetweenX1AndX0, AtX1, BelowX1 };

inline constexpr double kDefaultBoundaryTolerance = 1e-9;

// Throws DomainError for alpha = 0 or a non-positive tolerance.
Regime regime_of(double alpha, double tolerance = kDefaultBoundaryTolerance);

std::string_view to_string(Regime r);

// ---------------------------------------------------------------------------
// Families

enum class Family { Linear, Zigzag, ZDagger, ZStarClass, ZClass, NoLength2Segment };

std::string_view to_string(Family f);

struct FamilyTag {
    bool is_linear = false;
    bool is_zigzag = false;
    bool is_zdagger = false;
    bool in_zstar_class = false;
    bool in_z_class = false;
    bool no_length2_segment = false;

    bool has(Family f) const noexcept;
    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Evaluated from the length vector alone; symmetric under reversal.
FamilyTag classify_family(const LengthVector& lv);

struct Table1Prediction {
    Family max;
    Family min;
};

Table1Prediction predicted_families(Regime r);

// ---------------------------------------------------------------------------
// Extremal search

inline constexpr double kTieTolerance = 1e-9;

enum class Verdict { Pass, Fail, Unpredicted };

std::string_view to_string(Verdict v);

struct ExtremeSide {
    double value = 0.0;
    std::vector<ChainRecord> observed;   // chains within tie tolerance of the extremum
    Family predicted_family = Family::Linear;
    std::vector<ChainRecord> predicted;  // enumerated chains carrying the predicted family flag
    // True when the observed set is the whole predicted family. Verdicts use
    // set equality except for the maximum at x1, where a nonempty subset of
    // the family passes and this flag records which case occurred.
    bool matches_whole_family = false;
    Verdict verdict = Verdict::Unpredicted;
};

struct ExtremalReport {
    int n = 0;
    double alpha = 0.0;
    Regime regime = Regime::PositiveAlpha;
    bool omega_only = true;
    std::size_t chains_searched = 0;
    ExtremeSide max;
    ExtremeSide min;

    bool passed() const noexcept { return max.verdict == Verdict::Pass && min.verdict == Verdict::Pass; }
};

struct SearchOptions {
    bool omega_only = true;
    double tie_tolerance = kTieTolerance;
    double boundary_tolerance = kDefaultBoundaryTolerance;
    int ceiling = kDefaultEnumerationCeiling;
};

// Ranks every enumerated chain by chi_direct. Chains outside Omega are never
// predicted, so searches with omega_only = false report Unpredicted.
ExtremalReport extremal_search(int n, double alpha, const SearchOptions& options = {});

struct Table1Summary {
    std::vector<ExtremalReport> reports;

    std::vector<const ExtremalReport*> failures() const;
    bool passed() const noexcept;
};

Table1Summary verify_table1(int n_min, int n_max, std::span<const double> alphas, const SearchOptions& options = {});

// {2, 1, -0.5, -2, x0, -4, x1, -6}
std::vector<double> default_table1_alphas();

// ---------------------------------------------------------------------------
// Exchange moves: the length-vector rewrites that show a chain is not extremal.

enum class MoveKind {
    None,
    SplitExternalIntoTwos,   // external l >= 3 -> l - 1 segments of length 2
    SplitInternalAtTwo,      // internal l >= 3 -> 2, l - 1
    MergeInternalTwo,        // internal 2 fused with its right neighbour
    SplitLongWithThree,      // l >= 5 -> 3, l - 2
    MergeTwoFours,           // two 4s -> two 3s plus a leading 3
    TrimPairedExternalTwos,  // (2, ..., x, 2) -> (3, ..., x)
    AbsorbExternalTwo,       // (2, l, ...) -> (l + 1, ...)
    ShaveFour,               // one 4 -> 3, pushing a square to the end of the chain
};

std::string_view to_string(MoveKind k);
std::span<const MoveKind> all_move_kinds();

struct ExchangeMove {
    MoveKind kind = MoveKind::None;
    int segment = 0;  // 0-based segment the move acts on
    int other = -1;   // second segment, MergeTwoFours only
};

// Rewritten vector; same square count. Throws MoveNotApplicable.
LengthVector apply_move(const LengthVector& lv, const ExchangeMove& move);

// Every applicable move of every kind (None excluded).
std::vector<ExchangeMove> applicable_moves(const LengthVector& lv);

// Psi(moved) - Psi(lv), recomputed from both vectors.
PsiTerms psi_exchange_delta_terms(const LengthVector& lv, const ExchangeMove& move);
double psi_exchange_delta(const LengthVector& lv, const ExchangeMove& move, double alpha);

// The closed expression the extremality argument assigns to the move,
// written as Psi(moved) - Psi(lv).
PsiTerms stated_delta(const LengthVector& lv, const ExchangeMove& move);

enum class AlphaRange { AtMostX0, BelowX0, BetweenX1AndX0, BelowX1 };

// Sign of Psi(moved) - Psi(lv) claimed for alpha in the given range.
struct MoveClaim {
    AlphaRange range;
    int sign;
};

MoveClaim move_claim(MoveKind k);
bool in_range(AlphaRange r, double alpha);

}  // namespace polychi
