#include "polychi/record_io.hpp"

#include <fmt/format.h>

#include <json.hpp>

#include "polychi/errors.hpp"

namespace polychi {

using nlohmann::json;

std::string to_json_line(const ChainRecord& r)
{
    json cells = json::array();
    const auto chain = build_from_turns(r.turns);
    for (Cell c : chain.cells()) cells.push_back({c.x, c.y});
    json lengths(std::vector<int>(r.lv.lengths().begin(), r.lv.lengths().end()));

    json j;
    j["n"] = r.turns.squares();
    j["turns"] = r.turns.to_string();
    j["cells"] = std::move(cells);
    j["length_vector"] = std::move(lengths);
    j["in_omega"] = r.in_omega;
    j["canonical_key"] = r.key.to_string();
    return j.dump();
}

ChainRecord parse_json_line(std::string_view line)
{
    json j;
    try {
        j = json::parse(line);
        return ChainRecord{
            TurnSequence::parse(j.at("n").get<int>(), j.at("turns").get<std::string>()),
            LengthVector(j.at("length_vector").get<std::vector<int>>()),
            j.at("in_omega").get<bool>(),
            CanonicalKey::parse(j.at("canonical_key").get<std::string>()),
        };
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed chain record: ") + e.what());
    }
}

bool is_consistent(const ChainRecord& r)
{
    try {
        return ChainRecord::from_turns(r.turns) == r;
    } catch (const InvalidChain&) {
        return false;
    }
}

std::string csv_header() { return "n,turns,length_vector,in_omega,canonical_key"; }

std::string to_csv_row(const ChainRecord& r)
{
    return fmt::format("{},{},{},{},{}", r.turns.squares(), r.turns.to_string(), r.lv.to_string(),
                       r.in_omega ? "true" : "false", r.key.to_string());
}

std::string format_value(double v) { return fmt::format("{:.12g}", v); }

}  // namespace polychi
