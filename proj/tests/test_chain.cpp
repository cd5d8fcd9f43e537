#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <span>

#include "oracles.hpp"
#include "polychi/chain.hpp"
#include "polychi/enumerate.hpp"
#include "polychi/errors.hpp"

using namespace polychi;

namespace {

PolyominoChain chain(int n, std::string_view turns) { return build_from_turns(TurnSequence::parse(n, turns)); }

std::map<int, int> degree_histogram(const PolyominoChain& c)
{
    std::map<int, int> h;
    for (int d : c.degrees()) ++h[d];
    return h;
}

int corner_contacts(std::span<const Cell> cells)
{
    int count = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 3; j < cells.size(); ++j) {
            count += std::abs(cells[i].x - cells[j].x) == 1 && std::abs(cells[i].y - cells[j].y) == 1;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("linear tromino realizes 8 vertices and 10 edges")
{
    const auto c = chain(3, "S");
    CHECK(c.vertices().size() == 8);
    CHECK(c.edges().size() == 10);
    CHECK(degree_histogram(c) == std::map<int, int>{{2, 4}, {3, 4}});
    CHECK(std::vector<Cell>(c.cells().begin(), c.cells().end()) == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}});
}

TEST_CASE("single square is a 4-cycle")
{
    const auto c = build_from_turns(TurnSequence(1, {}));
    CHECK(c.vertices().size() == 4);
    CHECK(c.edges().size() == 4);
    CHECK(degree_histogram(c) == std::map<int, int>{{2, 4}});
}

TEST_CASE("invalid chains are rejected")
{
    CHECK_THROWS_AS(chain(4, "LL"), InvalidChain);
    CHECK_THROWS_AS(chain(4, "RR"), InvalidChain);
    // spiral closing back onto the first square
    CHECK_THROWS_AS(chain(6, "LSLL"), InvalidChain);
    CHECK_THROWS_AS(TurnSequence::parse(4, "LX"), InvalidChain);
    CHECK_THROWS_AS(TurnSequence::parse(5, "LR"), InvalidChain);
    CHECK_THROWS_AS(TurnSequence(0, {}), InvalidChain);
    CHECK_THROWS_AS(PolyominoChain::from_cells({{0, 0}, {2, 0}}), InvalidChain);
    CHECK_THROWS_AS(PolyominoChain::from_cells({{0, 0}, {1, 0}, {0, 0}}), InvalidChain);
}

TEST_CASE("length vectors")
{
    CHECK(length_vector(TurnSequence::parse(5, "SSS")) == LengthVector({5}));
    CHECK(length_vector(TurnSequence::parse(5, "LSR")) == LengthVector({2, 3, 2}));
    CHECK(length_vector(TurnSequence::parse(4, "LR")) == LengthVector({2, 2, 2}));
    CHECK(length_vector(TurnSequence(2, {})) == LengthVector({2}));
    CHECK(length_vector(TurnSequence(1, {})) == LengthVector({1}));
    CHECK(LengthVector({2, 3, 2}).squares() == 5);

    CHECK_THROWS_AS(LengthVector({}), DomainError);
    CHECK_THROWS_AS(LengthVector({3, 1}), DomainError);
    CHECK(LengthVector::parse("2 3 4") == LengthVector({2, 3, 4}));
    CHECK(LengthVector({2, 3, 4}).oriented() == LengthVector({2, 3, 4}));
    CHECK(LengthVector({4, 3, 2}).oriented() == LengthVector({2, 3, 4}));
}

TEST_CASE("segment indicators")
{
    auto ind = indicators(LengthVector({2, 2, 2}));
    CHECK(ind.alpha == std::vector<int>{1});
    CHECK(ind.beta1 == 1);
    CHECK(ind.beta_s == 1);

    ind = indicators(LengthVector({6}));
    CHECK(ind.alpha.empty());
    CHECK(ind.beta1 == 0);
    CHECK(ind.beta_s == 0);

    ind = indicators(LengthVector({3, 2, 4}));
    CHECK(ind.alpha == std::vector<int>{1});
    CHECK(ind.beta1 == 0);
    CHECK(ind.beta_s == 0);
}

TEST_CASE("Omega membership on the realized graph")
{
    CHECK(is_in_omega(chain(7, "SSSSS")));
    CHECK(is_in_omega(chain(5, "LSR")));  // no internal segment of length 3
    // internal length-3 segments bounded by opposite turns
    CHECK(is_in_omega(chain(7, "LSRSL")));
    // bounded by same-direction turns: the outer side joins two degree-3 vertices
    const auto cis = chain(7, "LSLSL");
    CHECK_FALSE(is_in_omega(cis));
    CHECK(cis.degree_of({2, 1}) == 3);
    CHECK(cis.degree_of({2, 2}) == 3);
    // one cis and one trans segment
    CHECK_FALSE(is_in_omega(chain(7, "LSLSR")));
    // internal length-4 segments never disqualify
    CHECK(is_in_omega(chain(6, "LSSL")));
}

TEST_CASE("canonical keys")
{
    const auto c = chain(6, "SLSR");
    std::vector<Cell> mirrored;
    for (Cell x : c.cells()) mirrored.push_back({x.x, -x.y});
    std::vector<Cell> reversed(c.cells().rbegin(), c.cells().rend());

    CHECK(canonical_key(c) == canonical_key(mirrored));
    CHECK(canonical_key(c) == canonical_key(reversed));
    CHECK(canonical_key(chain(6, "SLSR")) == canonical_key(chain(6, "SRSL")));
    CHECK(canonical_key(chain(4, "SS")) != canonical_key(chain(4, "LR")));

    const auto key = canonical_key(c);
    CHECK(CanonicalKey::parse(key.to_string()) == key);
}

TEST_CASE("named family constructors")
{
    CHECK(make_linear(3).to_string() == "S");
    CHECK(length_vector(make_linear(3)) == LengthVector({3}));
    CHECK(make_zigzag(4).to_string() == "LR");
    CHECK(length_vector(make_zigzag(4)) == LengthVector({2, 2, 2}));

    const auto zd7 = make_zdagger(7);
    CHECK(length_vector(zd7) == LengthVector({3, 3, 3}));
    CHECK(is_in_omega(build_from_turns(zd7)));
    CHECK(length_vector(make_zdagger(8)) == LengthVector({3, 3, 3, 2}));
    CHECK(length_vector(make_zdagger(3)) == LengthVector({3}));
    CHECK(length_vector(make_zdagger(4)) == LengthVector({3, 2}));

    CHECK_THROWS_AS(make_linear(0), DomainError);
    CHECK_THROWS_AS(make_zigzag(0), DomainError);
    CHECK_THROWS_AS(make_zdagger(2), DomainError);

    for (int n = 3; n <= 14; ++n) {
        const auto z = length_vector(make_zigzag(n));
        CHECK(z.segment_count() == n - 1);
        CHECK(std::all_of(z.lengths().begin(), z.lengths().end(), [](int l) { return l == 2; }));
        CHECK(length_vector(make_linear(n)).segment_count() == 1);
        CHECK(is_in_omega(build_from_turns(make_zdagger(n))));
    }
}

TEST_CASE("turns_for realizes any length vector inside Omega")
{
    for (int n = 3; n <= 10; ++n) {
        for (const auto& l : oracle::length_vectors(n)) {
            const LengthVector lv(l);
            const auto turns = turns_for(lv);
            CHECK(length_vector(turns) == lv);
            CHECK(is_in_omega(build_from_turns(turns)));
        }
    }
}

TEST_CASE("structural invariants hold on every chain up to n = 10")
{
    int touching = 0;
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        for (const auto& turns : realizable_turn_sequences(n)) {
            const auto c = build_from_turns(turns);
            CAPTURE(turns.to_string());
            // non-consecutive cells meeting at a single corner merge two vertices
            const int contacts = corner_contacts(c.cells());
            REQUIRE(c.vertices().size() == static_cast<std::size_t>(2 * n + 2 - contacts));
            if (contacts > 0) {
                CHECK_FALSE(is_in_omega(c));
                ++touching;
            }
            REQUIRE(c.edges().size() == static_cast<std::size_t>(3 * n + 1));

            int degree_total = 0, fours = 0;
            for (int d : c.degrees()) {
                REQUIRE((d >= 2 && d <= 4));
                degree_total += d;
                fours += d == 4;
            }
            CHECK(degree_total == 2 * (3 * n + 1));
            CHECK(fours == turns.kink_count() + contacts);
            for (const auto& e : c.edges()) REQUIRE((c.degree_sum(e) >= 4 && c.degree_sum(e) <= 8));

            const auto lv = length_vector(turns);
            int sum = 0;
            for (int l : lv.lengths()) sum += l;
            CHECK(sum - (lv.segment_count() - 1) == n);
            CHECK(length_vector(c) == lv);

            // Degrees agree with an independent corner count.
            const auto deg = oracle::corner_degrees(c.cells());
            REQUIRE(deg.size() == c.vertices().size());
            for (const auto& [p, d] : deg) REQUIRE(c.degree_of({p.first, p.second}) == d);
        }
    }
    CHECK(touching > 0);
}
