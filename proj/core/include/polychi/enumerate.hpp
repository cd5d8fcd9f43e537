#pragma once

// Exhaustive generation of polyomino chains with n squares.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "polychi/chain.hpp"

namespace polychi {

inline constexpr int kDefaultEnumerationCeiling = 14;

struct EnumerationRequest {
    int n = 3;
    bool omega_only = false;
    bool dedupe = true;  // one representative per canonical key
    int ceiling = kDefaultEnumerationCeiling;
};

struct ChainRecord {
    TurnSequence turns;
    LengthVector lv;
    bool in_omega = false;
    CanonicalKey key;

    // Realizes the chain and derives the remaining fields. Throws InvalidChain.
    static ChainRecord from_turns(TurnSequence turns);

    friend bool operator==(const ChainRecord&, const ChainRecord&) = default;
};

// Calls visit once per chain, in lexicographic turn order (S < L < R). With
// dedupe, the representative of each symmetry class is its lexicographically
// first turn sequence. Throws DomainError for n < 3 and LimitExceeded above
// the ceiling.
void for_each_chain(const EnumerationRequest& req, const std::function<void(const ChainRecord&)>& visit);

std::vector<ChainRecord> enumerate_chains(const EnumerationRequest& req);

// Every realizable turn sequence of length n - 2, in lexicographic order.
// Generation is split over turn prefixes and run on worker threads.
std::vector<TurnSequence> realizable_turn_sequences(int n);

struct ClassCount {
    std::int64_t total = 0;
    std::int64_t omega = 0;
    friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

// Counts over the deduplicated chains with n squares. Length vectors are
// keyed in their reversal-oriented form, so (2,3) and (3,2) share a bucket.
struct Census {
    int n = 0;
    ClassCount chains;
    std::map<LengthVector, ClassCount> by_length_vector;
};

Census census(int n, int ceiling = kDefaultEnumerationCeiling);

}  // namespace polychi
