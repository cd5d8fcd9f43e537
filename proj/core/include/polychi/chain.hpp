#pragma once

// Polyomino chain model: turn-sequence encoding, lattice realization,
// segment decomposition, Omega membership and symmetry-invariant keys.

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polychi {

// Placement of the next square relative to the current direction of travel.
enum class Turn : char { Straight = 'S', Left = 'L', Right = 'R' };

char to_char(Turn t) noexcept;

// A chain of n squares described by the n-2 turns taken at its
// non-terminal squares. The first two squares always run east from (0,0).
class TurnSequence {
public:
    TurnSequence() = default;
    TurnSequence(int n, std::vector<Turn> turns);

    // Text form over {S, L, R}; empty for n <= 2.
    static TurnSequence parse(int n, std::string_view text);

    int squares() const noexcept { return n_; }
    std::span<const Turn> turns() const noexcept { return turns_; }
    std::string to_string() const;

    // Number of non-Straight entries, i.e. the number of kinks.
    int kink_count() const noexcept;

    friend bool operator==(const TurnSequence&, const TurnSequence&) = default;
    friend auto operator<=>(const TurnSequence&, const TurnSequence&) = default;

private:
    int n_ = 1;
    std::vector<Turn> turns_;
};

struct Cell {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Unit side of the lattice, endpoints stored in increasing order.
struct LatticeEdge {
    LatticePoint a;
    LatticePoint b;
    friend auto operator<=>(const LatticeEdge&, const LatticeEdge&) = default;
};

// Ordered cells plus the realized vertex/edge graph. Construction validates
// the chain conditions, so every instance is a valid polyomino chain.
class PolyominoChain {
public:
    // Throws InvalidChain unless consecutive cells share a side, cells are
    // distinct and no two non-consecutive cells share a side.
    static PolyominoChain from_cells(std::vector<Cell> cells);

    int squares() const noexcept { return static_cast<int>(cells_.size()); }
    std::span<const Cell> cells() const noexcept { return cells_; }

    // Sorted, deduplicated cell corners.
    std::span<const LatticePoint> vertices() const noexcept { return vertices_; }
    // Sorted, deduplicated cell sides.
    std::span<const LatticeEdge> edges() const noexcept { return edges_; }
    // degrees()[i] is the degree of vertices()[i].
    std::span<const int> degrees() const noexcept { return degrees_; }

    // Degree of a lattice point; 0 if it is not a vertex of the chain.
    int degree_of(LatticePoint p) const noexcept;
    // d_u + d_v for an edge of this chain.
    int degree_sum(const LatticeEdge& e) const noexcept;

    // Indices of the kink squares (direction changes), increasing.
    std::vector<int> kink_indices() const;

private:
    explicit PolyominoChain(std::vector<Cell> cells);

    std::vector<Cell> cells_;
    std::vector<LatticePoint> vertices_;
    std::vector<LatticeEdge> edges_;
    std::vector<int> degrees_;
};

// Places the squares on the lattice starting at (0,0) heading east.
// Throws InvalidChain on collisions or side contacts between non-consecutive squares.
PolyominoChain build_from_turns(const TurnSequence& t);

// The four sides of a unit cell.
std::array<LatticeEdge, 4> cell_sides(Cell c) noexcept;

// Segment lengths (l_1, ..., l_s). Consecutive segments share one kink square,
// so the lengths sum to n + s - 1.
class LengthVector {
public:
    // Throws DomainError if empty, if a single segment has length < 1, or if
    // s >= 2 and some length is below 2.
    explicit LengthVector(std::vector<int> lengths);

    std::span<const int> lengths() const noexcept { return lengths_; }
    int segment_count() const noexcept { return static_cast<int>(lengths_.size()); }
    int squares() const noexcept;
    int operator[](std::size_t i) const { return lengths_.at(i); }
    bool is_internal(std::size_t i) const noexcept
    {
        return i > 0 && i + 1 < lengths_.size();
    }

    LengthVector reversed() const;
    // The lexicographically smaller of this vector and its reversal.
    LengthVector oriented() const;

    // Space separated, e.g. "2 3 2".
    std::string to_string() const;
    static LengthVector parse(std::string_view text);

    friend bool operator==(const LengthVector&, const LengthVector&) = default;
    friend auto operator<=>(const LengthVector&, const LengthVector&) = default;

private:
    std::vector<int> lengths_;
};

LengthVector length_vector(const TurnSequence& t);
LengthVector length_vector(const PolyominoChain& c);

// 0/1 flags marking length-2 segments. alpha covers the internal segments
// 2..s-1 only; the two external segments are covered by beta1 and beta_s.
struct SegmentIndicators {
    std::vector<int> alpha;
    int beta1 = 0;
    int beta_s = 0;

    int alpha_sum() const noexcept;
    friend bool operator==(const SegmentIndicators&, const SegmentIndicators&) = default;
};

SegmentIndicators indicators(const LengthVector& lv);

// True iff no internal segment of length 3 contains an edge joining two
// degree-3 vertices. Evaluated on the realized graph.
bool is_in_omega(const PolyominoChain& c);

// Key shared by all chains related by a lattice symmetry and/or path reversal:
// the lexicographically least translated-to-origin cell list among the 16 images.
class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::vector<Cell> cells) : cells_(std::move(cells)) {}

    std::span<const Cell> cells() const noexcept { return cells_; }

    // "x:y" tokens separated by spaces.
    std::string to_string() const;
    static CanonicalKey parse(std::string_view text);

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

private:
    std::vector<Cell> cells_;
};

// The 8 dihedral images of the cell path, each also reversed, translated so
// the minimum x and y are 0.
std::array<std::vector<Cell>, 16> symmetry_images(std::span<const Cell> cells);

CanonicalKey canonical_key(std::span<const Cell> cells);
CanonicalKey canonical_key(const PolyominoChain& c);

// Named families. Throw DomainError below the minimum n.
TurnSequence make_linear(int n);   // n >= 1
TurnSequence make_zigzag(int n);   // n >= 1
TurnSequence make_zdagger(int n);  // n >= 3; length vector (3,...,3) or (3,...,3,2)

// Any length vector, realized with alternating kink directions. The result is
// a staircase, hence always valid and in Omega.
TurnSequence turns_for(const LengthVector& lv);

}  // namespace polychi
