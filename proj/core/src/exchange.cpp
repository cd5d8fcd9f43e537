#include <array>
#include <string>

#include "polychi/errors.hpp"
#include "polychi/extremal.hpp"

namespace polychi {

namespace {

using Lengths = std::vector<int>;

[[noreturn]] void not_applicable(const LengthVector& lv, const ExchangeMove& m, std::string_view why)
{
    throw MoveNotApplicable(std::string(to_string(m.kind)) + " at segment " + std::to_string(m.segment) + " of (" +
                            lv.to_string() + "): " + std::string(why));
}

Lengths reversed(const Lengths& l) { return Lengths(l.rbegin(), l.rend()); }

// Moves on an external segment are defined on the first one; the last one is
// handled through the reversed vector.
bool external_index(int i, int s) { return i == 0 || i == s - 1; }

constexpr PsiTerms kF{1, 0, 0};
constexpr PsiTerms kG{0, 1, 0};
constexpr PsiTerms kH{0, 0, 1};

constexpr std::array<MoveKind, 8> kMoveKinds{
    MoveKind::SplitExternalIntoTwos, MoveKind::SplitInternalAtTwo, MoveKind::MergeInternalTwo,
    MoveKind::SplitLongWithThree,    MoveKind::MergeTwoFours,      MoveKind::TrimPairedExternalTwos,
    MoveKind::AbsorbExternalTwo,     MoveKind::ShaveFour,
};

}  // namespace

std::string_view to_string(MoveKind k)
{
    switch (k) {
    case MoveKind::None: return "none";
    case MoveKind::SplitExternalIntoTwos: return "split-external-into-2s";
    case MoveKind::SplitInternalAtTwo: return "split-internal-at-2";
    case MoveKind::MergeInternalTwo: return "merge-internal-2";
    case MoveKind::SplitLongWithThree: return "split-length>=5-with-3";
    case MoveKind::MergeTwoFours: return "merge-two-4s";
    case MoveKind::TrimPairedExternalTwos: return "trim-paired-external-2s";
    case MoveKind::AbsorbExternalTwo: return "absorb-external-2";
    case MoveKind::ShaveFour: return "shave-4-to-end";
    }
    return "?";
}

std::span<const MoveKind> all_move_kinds() { return kMoveKinds; }

LengthVector apply_move(const LengthVector& lv, const ExchangeMove& m)
{
    const Lengths l(lv.lengths().begin(), lv.lengths().end());
    const int s = static_cast<int>(l.size());
    const int i = m.segment;
    if (m.kind != MoveKind::None && (i < 0 || i >= s)) not_applicable(lv, m, "segment index out of range");

    Lengths out;
    switch (m.kind) {
    case MoveKind::None: return lv;

    case MoveKind::SplitExternalIntoTwos: {
        if (s < 2 || !external_index(i, s)) not_applicable(lv, m, "needs an external segment of a kinked chain");
        const Lengths base = i == 0 ? l : reversed(l);
        if (base[0] < 3) not_applicable(lv, m, "segment shorter than 3");
        out.assign(base[0] - 1, 2);
        out.insert(out.end(), base.begin() + 1, base.end());
        if (i != 0) out = reversed(out);
        break;
    }

    case MoveKind::SplitInternalAtTwo: {
        if (!lv.is_internal(i) || l[i] < 3) not_applicable(lv, m, "needs an internal segment of length >= 3");
        out = l;
        out[i] = l[i] - 1;
        out.insert(out.begin() + i, 2);
        break;
    }

    case MoveKind::MergeInternalTwo: {
        if (!lv.is_internal(i) || l[i] != 2) not_applicable(lv, m, "needs an internal segment of length 2");
        out = l;
        out[i] = l[i] + l[i + 1] - 1;
        out.erase(out.begin() + i + 1);
        break;
    }

    case MoveKind::SplitLongWithThree: {
        if (l[i] < 5) not_applicable(lv, m, "segment shorter than 5");
        out = l;
        out[i] = l[i] - 2;
        out.insert(out.begin() + i, 3);
        break;
    }

    case MoveKind::MergeTwoFours: {
        const int j = m.other;
        if (j < 0 || j >= s || j == i || l[i] != 4 || l[j] != 4) not_applicable(lv, m, "needs two segments of length 4");
        if (l[0] == 2) not_applicable(lv, m, "first segment has length 2");
        out = l;
        --out[i];
        --out[j];
        out.insert(out.begin(), 3);
        break;
    }

    case MoveKind::TrimPairedExternalTwos: {
        if (s < 3 || l.front() != 2 || l.back() != 2) not_applicable(lv, m, "needs both external segments of length 2");
        if (l[s - 2] == 2) not_applicable(lv, m, "segment before the last has length 2");
        out.assign(l.begin(), l.end() - 1);
        ++out[0];
        break;
    }

    case MoveKind::AbsorbExternalTwo: {
        if (s < 2 || !external_index(i, s)) not_applicable(lv, m, "needs an external segment of a kinked chain");
        const Lengths base = i == 0 ? l : reversed(l);
        if (base[0] != 2 || base[1] < 3) not_applicable(lv, m, "needs an external 2 next to a segment of length >= 3");
        out.assign(base.begin() + 1, base.end());
        ++out[0];
        if (i != 0) out = reversed(out);
        break;
    }

    case MoveKind::ShaveFour: {
        if (l[i] != 4) not_applicable(lv, m, "segment length is not 4");
        out = l;
        if (i == 0) {
            out[0] = 3;
            out.insert(out.begin(), 2);
        } else if (i == s - 1) {
            out[i] = 3;
            out.push_back(2);
        } else if (l.back() == 2) {
            out[i] = 3;
            out.back() = 3;
        } else if (l.back() == 3) {
            out[i] = 3;
            out.push_back(2);
        } else {
            not_applicable(lv, m, "last segment must have length 2 or 3");
        }
        break;
    }
    }
    return LengthVector(std::move(out));
}

std::vector<ExchangeMove> applicable_moves(const LengthVector& lv)
{
    std::vector<ExchangeMove> candidates;
    const int s = lv.segment_count();
    for (MoveKind kind : kMoveKinds) {
        if (kind == MoveKind::TrimPairedExternalTwos) {
            candidates.push_back({kind, 0, -1});
        } else if (kind == MoveKind::MergeTwoFours) {
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j) candidates.push_back({kind, i, j});
        } else {
            for (int i = 0; i < s; ++i) candidates.push_back({kind, i, -1});
        }
    }

    std::vector<ExchangeMove> moves;
    for (const auto& m : candidates) {
        try {
            apply_move(lv, m);
            moves.push_back(m);
        } catch (const MoveNotApplicable&) {
        }
    }
    return moves;
}

PsiTerms psi_exchange_delta_terms(const LengthVector& lv, const ExchangeMove& move)
{
    return psi_terms(apply_move(lv, move)) - psi_terms(lv);
}

double psi_exchange_delta(const LengthVector& lv, const ExchangeMove& move, double alpha)
{
    return psi_exchange_delta_terms(lv, move).evaluate(alpha);
}

PsiTerms stated_delta(const LengthVector& lv, const ExchangeMove& m)
{
    apply_move(lv, m);  // validates
    const auto l = lv.lengths();
    const int s = lv.segment_count();
    const int i = m.segment;
    switch (m.kind) {
    case MoveKind::None: return {};
    case MoveKind::SplitExternalIntoTwos: {
        // g + (l - 2)(f + h)
        const int len = l[i];
        return kG + (len - 2) * (kF + kH);
    }
    case MoveKind::SplitInternalAtTwo: {
        // f + (1 + y)h, y = 1 when the remainder l - 1 is itself a 2
        const int y = l[i] == 3 ? 1 : 0;
        return kF + (1 + y) * kH;
    }
    case MoveKind::MergeInternalTwo: {
        if (i == s - 2) {
            // -(f + x g + h), x = 1 when the absorbed last segment was a 2
            const int x = l[s - 1] == 2 ? 1 : 0;
            return -1 * (kF + x * kG + kH);
        }
        // -(f + (1 + y)h), y = 1 when the absorbed neighbour was an internal 2
        const int y = l[i + 1] == 2 ? 1 : 0;
        return -1 * (kF + (1 + y) * kH);
    }
    case MoveKind::SplitLongWithThree:
    case MoveKind::MergeTwoFours: return kF;
    case MoveKind::TrimPairedExternalTwos: return -1 * (kF + 2 * kG);
    case MoveKind::AbsorbExternalTwo: return -1 * (kF + kG);
    case MoveKind::ShaveFour:
        if (lv.is_internal(i) && l[s - 1] == 2) return -1 * kG;
        return kF + kG;
    }
    return {};
}

MoveClaim move_claim(MoveKind k)
{
    switch (k) {
    case MoveKind::SplitExternalIntoTwos:
    case MoveKind::SplitInternalAtTwo: return {AlphaRange::AtMostX0, -1};
    case MoveKind::MergeInternalTwo:
    case MoveKind::SplitLongWithThree:
    case MoveKind::MergeTwoFours:
    case MoveKind::TrimPairedExternalTwos: return {AlphaRange::BelowX0, +1};
    case MoveKind::AbsorbExternalTwo: return {AlphaRange::BetweenX1AndX0, +1};
    case MoveKind::ShaveFour: return {AlphaRange::BelowX1, +1};
    case MoveKind::None: break;
    }
    return {AlphaRange::BelowX0, 0};
}

bool in_range(AlphaRange r, double alpha)
{
    const auto& roots = boundary_roots();
    switch (r) {
    case AlphaRange::AtMostX0: return alpha <= roots.x0;
    case AlphaRange::BelowX0: return alpha < roots.x0;
    case AlphaRange::BetweenX1AndX0: return alpha > roots.x1 && alpha < roots.x0;
    case AlphaRange::BelowX1: return alpha < roots.x1;
    }
    return false;
}

}  // namespace polychi
