#include "polychi/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <future>
#include <iterator>
#include <set>
#include <string>
#include <thread>

#include "polychi/errors.hpp"

namespace polychi {

namespace {

constexpr std::array<Cell, 4> kSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
constexpr std::array<Turn, 3> kTurnOrder{Turn::Straight, Turn::Left, Turn::Right};

// Depth-first walk over turn sequences, carrying the occupied cells so that a
// colliding or side-touching square prunes the whole subtree.
class TurnWalker {
public:
    explicit TurnWalker(int n) : n_(n)
    {
        cells_.reserve(n);
        turns_.reserve(std::max(n - 2, 0));
        cells_.push_back({0, 0});
        cells_.push_back({1, 0});
    }

    // Tries to append the given prefix; false if it is not realizable.
    bool push_prefix(std::span<const Turn> prefix)
    {
        for (Turn t : prefix) {
            if (!push(t)) return false;
        }
        return true;
    }

    void walk(std::vector<TurnSequence>& out)
    {
        if (static_cast<int>(cells_.size()) == n_) {
            out.emplace_back(n_, turns_);
            return;
        }
        for (Turn t : kTurnOrder) {
            if (push(t)) {
                walk(out);
                pop();
            }
        }
    }

private:
    bool push(Turn t)
    {
        int dir = dir_;
        if (t == Turn::Left) dir = (dir + 1) % 4;
        else if (t == Turn::Right) dir = (dir + 3) % 4;
        const Cell last = cells_.back();
        const Cell next{last.x + kSteps[dir].x, last.y + kSteps[dir].y};
        for (std::size_t j = 0; j + 1 < cells_.size(); ++j) {
            const Cell c = cells_[j];
            if (std::abs(c.x - next.x) + std::abs(c.y - next.y) <= 1) return false;
        }
        dirs_.push_back(dir_);
        dir_ = dir;
        cells_.push_back(next);
        turns_.push_back(t);
        return true;
    }

    void pop()
    {
        cells_.pop_back();
        turns_.pop_back();
        dir_ = dirs_.back();
        dirs_.pop_back();
    }

    int n_;
    int dir_ = 0;
    std::vector<Cell> cells_;
    std::vector<Turn> turns_;
    std::vector<int> dirs_;
};

std::vector<std::vector<Turn>> prefixes(int depth)
{
    std::vector<std::vector<Turn>> out{{}};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::vector<Turn>> next;
        for (const auto& p : out) {
            for (Turn t : kTurnOrder) {
                auto q = p;
                q.push_back(t);
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    return out;
}

void check_request(int n, int ceiling)
{
    if (n < 3) throw DomainError("enumeration needs n >= 3, got " + std::to_string(n));
    if (n > ceiling) {
        throw LimitExceeded("n = " + std::to_string(n) + " exceeds the enumeration ceiling " + std::to_string(ceiling));
    }
}

}  // namespace

ChainRecord ChainRecord::from_turns(TurnSequence turns)
{
    const auto chain = build_from_turns(turns);
    auto lv = length_vector(turns);
    return ChainRecord{std::move(turns), std::move(lv), is_in_omega(chain), canonical_key(chain)};
}

// Runs work(prefix_sequences) for every turn prefix on its own thread and
// concatenates the results in prefix order, which is lexicographic order.
template <typename Work>
auto over_prefixes(int n, Work work)
{
    using Result = decltype(work(std::vector<TurnSequence>{}));
    const int depth = std::min(n - 2, 2);
    std::vector<std::future<Result>> jobs;
    for (const auto& prefix : prefixes(depth)) {
        jobs.push_back(std::async(std::launch::async, [n, prefix, &work] {
            std::vector<TurnSequence> found;
            TurnWalker walker(n);
            if (walker.push_prefix(prefix)) walker.walk(found);
            return work(std::move(found));
        }));
    }
    Result all;
    for (auto& job : jobs) {
        auto part = job.get();
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
}

std::vector<TurnSequence> realizable_turn_sequences(int n)
{
    if (n <= 2) return {TurnSequence(std::max(n, 1), {})};
    return over_prefixes(n, [](std::vector<TurnSequence> found) { return found; });
}

void for_each_chain(const EnumerationRequest& req, const std::function<void(const ChainRecord&)>& visit)
{
    check_request(req.n, req.ceiling);
    auto records = over_prefixes(req.n, [](std::vector<TurnSequence> found) {
        std::vector<ChainRecord> out;
        out.reserve(found.size());
        for (auto& t : found) out.push_back(ChainRecord::from_turns(std::move(t)));
        return out;
    });
    std::set<CanonicalKey> seen;
    for (const auto& record : records) {
        if (req.dedupe && !seen.insert(record.key).second) continue;
        if (req.omega_only && !record.in_omega) continue;
        visit(record);
    }
}

std::vector<ChainRecord> enumerate_chains(const EnumerationRequest& req)
{
    std::vector<ChainRecord> out;
    for_each_chain(req, [&out](const ChainRecord& r) { out.push_back(r); });
    return out;
}

Census census(int n, int ceiling)
{
    Census result;
    result.n = n;
    for_each_chain({n, false, true, ceiling}, [&result](const ChainRecord& r) {
        auto& bucket = result.by_length_vector[r.lv.oriented()];
        ++bucket.total;
        ++result.chains.total;
        if (r.in_omega) {
            ++bucket.omega;
            ++result.chains.omega;
        }
    });
    return result;
}

}  // namespace polychi
