#include "polychi/chain.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "polychi/errors.hpp"

namespace polychi {

namespace {

// Unit steps, counter-clockwise from east.
constexpr std::array<Cell, 4> kSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

int direction_between(Cell from, Cell to)
{
    for (int d = 0; d < 4; ++d) {
        if (from.x + kSteps[d].x == to.x && from.y + kSteps[d].y == to.y) return d;
    }
    return -1;
}

bool side_adjacent(Cell a, Cell b) noexcept
{
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

std::vector<int> segment_bounds(int n, const std::vector<int>& kinks)
{
    std::vector<int> bounds;
    bounds.reserve(kinks.size() + 2);
    bounds.push_back(0);
    bounds.insert(bounds.end(), kinks.begin(), kinks.end());
    bounds.push_back(n - 1);
    return bounds;
}

LengthVector lengths_from_kinks(int n, const std::vector<int>& kinks)
{
    if (n <= 2) return LengthVector({n});
    const auto bounds = segment_bounds(n, kinks);
    std::vector<int> lengths;
    for (std::size_t i = 1; i < bounds.size(); ++i) lengths.push_back(bounds[i] - bounds[i - 1] + 1);
    return LengthVector(std::move(lengths));
}

int parse_int(std::string_view token)
{
    int value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw DomainError("not an integer: '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_spaces(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        if (i > start) out.push_back(text.substr(start, i - start));
    }
    return out;
}

}  // namespace

char to_char(Turn t) noexcept { return static_cast<char>(t); }

// ---------------------------------------------------------------------------
// TurnSequence

TurnSequence::TurnSequence(int n, std::vector<Turn> turns) : n_(n), turns_(std::move(turns))
{
    if (n < 1) throw InvalidChain("a chain needs at least one square");
    const auto expected = static_cast<std::size_t>(std::max(n - 2, 0));
    if (turns_.size() != expected) {
        throw InvalidChain("chain of " + std::to_string(n) + " squares needs " + std::to_string(expected) +
                           " turns, got " + std::to_string(turns_.size()));
    }
}

TurnSequence TurnSequence::parse(int n, std::string_view text)
{
    std::vector<Turn> turns;
    turns.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case 'S': turns.push_back(Turn::Straight); break;
        case 'L': turns.push_back(Turn::Left); break;
        case 'R': turns.push_back(Turn::Right); break;
        default: throw InvalidChain(std::string("unknown turn symbol '") + ch + "'");
        }
    }
    return TurnSequence(n, std::move(turns));
}

std::string TurnSequence::to_string() const
{
    std::string s;
    s.reserve(turns_.size());
    for (Turn t : turns_) s.push_back(to_char(t));
    return s;
}

int TurnSequence::kink_count() const noexcept
{
    return static_cast<int>(std::count_if(turns_.begin(), turns_.end(), [](Turn t) { return t != Turn::Straight; }));
}

// ---------------------------------------------------------------------------
// PolyominoChain

std::array<LatticeEdge, 4> cell_sides(Cell c) noexcept
{
    const LatticePoint p00{c.x, c.y}, p10{c.x + 1, c.y}, p01{c.x, c.y + 1}, p11{c.x + 1, c.y + 1};
    return {LatticeEdge{p00, p10}, LatticeEdge{p01, p11}, LatticeEdge{p00, p01}, LatticeEdge{p10, p11}};
}

PolyominoChain PolyominoChain::from_cells(std::vector<Cell> cells)
{
    if (cells.empty()) throw InvalidChain("a chain needs at least one square");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0 && !side_adjacent(cells[i - 1], cells[i])) {
            throw InvalidChain("squares " + std::to_string(i - 1) + " and " + std::to_string(i) + " do not share a side");
        }
        for (std::size_t j = 0; j + 1 < i; ++j) {
            if (cells[j] == cells[i]) {
                throw InvalidChain("squares " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
            }
            if (side_adjacent(cells[j], cells[i])) {
                throw InvalidChain("non-consecutive squares " + std::to_string(j) + " and " + std::to_string(i) +
                                   " share a side");
            }
        }
    }
    return PolyominoChain(std::move(cells));
}

PolyominoChain::PolyominoChain(std::vector<Cell> cells) : cells_(std::move(cells))
{
    vertices_.reserve(4 * cells_.size());
    edges_.reserve(4 * cells_.size());
    for (Cell c : cells_) {
        for (const auto& side : cell_sides(c)) {
            edges_.push_back(side);
            vertices_.push_back(side.a);
            vertices_.push_back(side.b);
        }
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    degrees_.assign(vertices_.size(), 0);
    auto index_of = [this](LatticePoint p) {
        return std::lower_bound(vertices_.begin(), vertices_.end(), p) - vertices_.begin();
    };
    for (const auto& e : edges_) {
        ++degrees_[index_of(e.a)];
        ++degrees_[index_of(e.b)];
    }
}

int PolyominoChain::degree_of(LatticePoint p) const noexcept
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || *it != p) return 0;
    return degrees_[it - vertices_.begin()];
}

int PolyominoChain::degree_sum(const LatticeEdge& e) const noexcept
{
    return degree_of(e.a) + degree_of(e.b);
}

std::vector<int> PolyominoChain::kink_indices() const
{
    std::vector<int> kinks;
    for (std::size_t i = 1; i + 1 < cells_.size(); ++i) {
        if (direction_between(cells_[i - 1], cells_[i]) != direction_between(cells_[i], cells_[i + 1])) {
            kinks.push_back(static_cast<int>(i));
        }
    }
    return kinks;
}

PolyominoChain build_from_turns(const TurnSequence& t)
{
    const int n = t.squares();
    std::vector<Cell> cells;
    cells.reserve(n);
    cells.push_back({0, 0});
    int dir = 0;
    for (int i = 1; i < n; ++i) {
        if (i >= 2) {
            const Turn turn = t.turns()[i - 2];
            if (turn == Turn::Left) dir = (dir + 1) % 4;
            else if (turn == Turn::Right) dir = (dir + 3) % 4;
        }
        const Cell prev = cells.back();
        cells.push_back({prev.x + kSteps[dir].x, prev.y + kSteps[dir].y});
    }
    return PolyominoChain::from_cells(std::move(cells));
}

// ---------------------------------------------------------------------------
// Segments

LengthVector::LengthVector(std::vector<int> lengths) : lengths_(std::move(lengths))
{
    if (lengths_.empty()) throw DomainError("length vector must have at least one segment");
    if (lengths_.size() == 1) {
        if (lengths_[0] < 1) throw DomainError("segment length must be positive");
        return;
    }
    for (int l : lengths_) {
        if (l < 2) throw DomainError("segments of a kinked chain have length >= 2, got " + std::to_string(l));
    }
}

int LengthVector::squares() const noexcept
{
    int sum = 0;
    for (int l : lengths_) sum += l;
    return sum - segment_count() + 1;
}

LengthVector LengthVector::reversed() const
{
    return LengthVector(std::vector<int>(lengths_.rbegin(), lengths_.rend()));
}

LengthVector LengthVector::oriented() const
{
    LengthVector r = reversed();
    return r < *this ? r : *this;
}

std::string LengthVector::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(lengths_[i]);
    }
    return s;
}

LengthVector LengthVector::parse(std::string_view text)
{
    std::vector<int> lengths;
    for (auto token : split_spaces(text)) lengths.push_back(parse_int(token));
    return LengthVector(std::move(lengths));
}

LengthVector length_vector(const TurnSequence& t)
{
    std::vector<int> kinks;
    const auto turns = t.turns();
    for (std::size_t k = 0; k < turns.size(); ++k) {
        if (turns[k] != Turn::Straight) kinks.push_back(static_cast<int>(k) + 1);
    }
    return lengths_from_kinks(t.squares(), kinks);
}

LengthVector length_vector(const PolyominoChain& c)
{
    return lengths_from_kinks(c.squares(), c.kink_indices());
}

int SegmentIndicators::alpha_sum() const noexcept
{
    int sum = 0;
    for (int a : alpha) sum += a;
    return sum;
}

SegmentIndicators indicators(const LengthVector& lv)
{
    SegmentIndicators ind;
    const auto l = lv.lengths();
    for (std::size_t i = 1; i + 1 < l.size(); ++i) ind.alpha.push_back(l[i] == 2 ? 1 : 0);
    ind.beta1 = l.front() == 2 ? 1 : 0;
    ind.beta_s = l.back() == 2 ? 1 : 0;
    return ind;
}

bool is_in_omega(const PolyominoChain& c)
{
    const int n = c.squares();
    if (n < 3) return true;
    const auto bounds = segment_bounds(n, c.kink_indices());
    const auto cells = c.cells();
    // Internal segments are those between two kinks: bounds[r]..bounds[r+1] for 1 <= r <= s-2.
    for (std::size_t r = 1; r + 2 < bounds.size(); ++r) {
        if (bounds[r + 1] - bounds[r] + 1 != 3) continue;
        for (int i = bounds[r]; i <= bounds[r + 1]; ++i) {
            for (const auto& side : cell_sides(cells[i])) {
                if (c.degree_of(side.a) == 3 && c.degree_of(side.b) == 3) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Canonical keys

std::array<std::vector<Cell>, 16> symmetry_images(std::span<const Cell> cells)
{
    std::array<std::vector<Cell>, 16> images;
    for (int sym = 0; sym < 8; ++sym) {
        std::vector<Cell> img;
        img.reserve(cells.size());
        for (Cell c : cells) {
            int x = (sym & 1) ? -c.x : c.x;
            int y = (sym & 2) ? -c.y : c.y;
            if (sym & 4) std::swap(x, y);
            img.push_back({x, y});
        }
        int min_x = img.front().x, min_y = img.front().y;
        for (Cell c : img) {
            min_x = std::min(min_x, c.x);
            min_y = std::min(min_y, c.y);
        }
        for (Cell& c : img) {
            c.x -= min_x;
            c.y -= min_y;
        }
        images[2 * sym + 1] = std::vector<Cell>(img.rbegin(), img.rend());
        images[2 * sym] = std::move(img);
    }
    return images;
}

CanonicalKey canonical_key(std::span<const Cell> cells)
{
    auto images = symmetry_images(cells);
    return CanonicalKey(std::move(*std::min_element(images.begin(), images.end())));
}

CanonicalKey canonical_key(const PolyominoChain& c) { return canonical_key(c.cells()); }

std::string CanonicalKey::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(cells_[i].x);
        s.push_back(':');
        s += std::to_string(cells_[i].y);
    }
    return s;
}

CanonicalKey CanonicalKey::parse(std::string_view text)
{
    std::vector<Cell> cells;
    for (auto token : split_spaces(text)) {
        const auto colon = token.find(':');
        if (colon == std::string_view::npos) throw DomainError("malformed key token '" + std::string(token) + "'");
        cells.push_back({parse_int(token.substr(0, colon)), parse_int(token.substr(colon + 1))});
    }
    return CanonicalKey(std::move(cells));
}

// ---------------------------------------------------------------------------
// Named families

TurnSequence make_linear(int n)
{
    if (n < 1) throw DomainError("linear chain needs n >= 1");
    return TurnSequence(n, std::vector<Turn>(std::max(n - 2, 0), Turn::Straight));
}

TurnSequence make_zigzag(int n)
{
    if (n < 1) throw DomainError("zigzag chain needs n >= 1");
    std::vector<Turn> turns;
    for (int k = 0; k < n - 2; ++k) turns.push_back(k % 2 == 0 ? Turn::Left : Turn::Right);
    return TurnSequence(n, std::move(turns));
}

TurnSequence make_zdagger(int n)
{
    if (n < 3) throw DomainError("Z-dagger chain needs n >= 3");
    std::vector<int> lengths(static_cast<std::size_t>((n - 1) / 2), 3);
    if (n % 2 == 0) lengths.push_back(2);
    return turns_for(LengthVector(std::move(lengths)));
}

TurnSequence turns_for(const LengthVector& lv)
{
    const int n = lv.squares();
    std::vector<Turn> turns;
    if (n > 2) turns.reserve(n - 2);
    const auto l = lv.lengths();
    int kink = 0;
    for (std::size_t r = 0; r < l.size(); ++r) {
        // Squares strictly inside segment r continue straight.
        const int interior = l[r] - 2;
        if (r > 0) turns.push_back(kink++ % 2 == 0 ? Turn::Left : Turn::Right);
        for (int i = 0; i < interior; ++i) turns.push_back(Turn::Straight);
    }
    return TurnSequence(n, std::move(turns));
}

}  // namespace polychi
