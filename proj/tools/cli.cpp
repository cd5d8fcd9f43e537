#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <ostream>
#include <set>
#include <stdexcept>

#include "polychi/enumerate.hpp"
#include "polychi/errors.hpp"
#include "polychi/extremal.hpp"
#include "polychi/index.hpp"
#include "polychi/record_io.hpp"

namespace polychi::cli {

namespace {

using nlohmann::ordered_json;

// Rounded to the printed precision so JSON and text output agree.
double rounded(double v) { return std::stod(format_value(v)); }

std::string chain_label(const ChainRecord& r)
{
    return fmt::format("{} ({})", r.turns.squares() <= 2 ? "-" : r.turns.to_string(), r.lv.to_string());
}

ordered_json record_json(const ChainRecord& r)
{
    return ordered_json{{"turns", r.turns.to_string()},
                        {"length_vector", std::vector<int>(r.lv.lengths().begin(), r.lv.lengths().end())},
                        {"in_omega", r.in_omega},
                        {"canonical_key", r.key.to_string()}};
}

ordered_json side_json(const ExtremeSide& side)
{
    ordered_json observed = ordered_json::array(), predicted = ordered_json::array();
    for (const auto& r : side.observed) observed.push_back(record_json(r));
    for (const auto& r : side.predicted) predicted.push_back(record_json(r));
    return ordered_json{{"value", rounded(side.value)},
                        {"predicted_family", std::string(to_string(side.predicted_family))},
                        {"verdict", std::string(to_string(side.verdict))},
                        {"matches_whole_family", side.matches_whole_family},
                        {"observed", std::move(observed)},
                        {"predicted", std::move(predicted)}};
}

ordered_json report_json(const ExtremalReport& r)
{
    return ordered_json{{"n", r.n},
                        {"alpha", rounded(r.alpha)},
                        {"regime", std::string(to_string(r.regime))},
                        {"omega_only", r.omega_only},
                        {"chains_searched", r.chains_searched},
                        {"max", side_json(r.max)},
                        {"min", side_json(r.min)}};
}

void print_side(std::ostream& out, std::string_view name, const ExtremeSide& side)
{
    out << fmt::format("{}: value {} predicted {} verdict {}{}\n", name, format_value(side.value),
                       to_string(side.predicted_family), to_string(side.verdict),
                       side.verdict == Verdict::Unpredicted ? ""
                       : side.matches_whole_family     ? " (whole family)"
                                                       : " (subset of family)");
    for (const auto& r : side.observed) out << "  " << chain_label(r) << '\n';
}

void print_report(std::ostream& out, const ExtremalReport& r)
{
    out << fmt::format("n {} alpha {} [{}] chains {}{}\n", r.n, format_value(r.alpha), to_string(r.regime),
                       r.chains_searched, r.omega_only ? " (Omega only)" : " (all chains)");
    print_side(out, "max", r.max);
    print_side(out, "min", r.min);
}

// Chains in exactly one of the observed and predicted sets.
void print_counterexamples(std::ostream& out, std::string_view name, const ExtremeSide& side)
{
    if (side.verdict != Verdict::Fail) return;
    std::set<CanonicalKey> observed, predicted;
    for (const auto& r : side.observed) observed.insert(r.key);
    for (const auto& r : side.predicted) predicted.insert(r.key);
    for (const auto& r : side.observed) {
        if (!predicted.count(r.key)) out << fmt::format("  {} extremal but not predicted: {}\n", name, chain_label(r));
    }
    for (const auto& r : side.predicted) {
        if (!observed.count(r.key)) out << fmt::format("  {} predicted but not extremal: {}\n", name, chain_label(r));
    }
}

void print_table(std::ostream& out, const Table1Summary& summary)
{
    out << fmt::format("{:<16} {:<17} {:>3}  {:<20} {:<5} {:>4}  {:<8} {:<5} {:>4}\n", "alpha", "regime", "n",
                       "max (predicted)", "max", "#max", "min", "min", "#min");
    for (const auto& r : summary.reports) {
        out << fmt::format("{:<16} {:<17} {:>3}  {:<20} {:<5} {:>4}  {:<8} {:<5} {:>4}\n", format_value(r.alpha),
                           to_string(r.regime), r.n, to_string(r.max.predicted_family), to_string(r.max.verdict),
                           r.max.observed.size(), to_string(r.min.predicted_family), to_string(r.min.verdict),
                           r.min.observed.size());
    }
    const auto failures = summary.failures();
    out << fmt::format("{} of {} rows pass\n", summary.reports.size() - failures.size(), summary.reports.size());
    if (!failures.empty()) {
        out << "counterexamples:\n";
        for (const auto* r : failures) {
            out << fmt::format(" n {} alpha {}\n", r->n, format_value(r->alpha));
            print_counterexamples(out, "max", r->max);
            print_counterexamples(out, "min", r->min);
        }
    }
}

struct Options {
    int n = 0;
    std::string turns;
    std::string alpha;
    bool closed_form = false;
    bool omega_only = false;
    bool no_dedupe = false;
    bool all_chains = false;
    std::string stream_format = "jsonl";
    std::string format = "text";
    int n_min = 4;
    int n_max = 9;
    std::vector<std::string> alpha_list;
};

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err)
{
    const Alpha a(parse_alpha(o.alpha));
    const auto turns = TurnSequence::parse(o.n, o.turns);
    const auto chain = build_from_turns(turns);
    const auto lv = length_vector(turns);
    const bool in_omega = is_in_omega(chain);
    const double direct = chi_direct(chain, a);

    out << "n " << o.n << '\n';
    out << "turns " << turns.to_string() << '\n';
    out << "length_vector " << lv.to_string() << '\n';
    out << "in_omega " << (in_omega ? "true" : "false") << '\n';
    out << "alpha " << format_value(a.value()) << '\n';
    out << "chi_direct " << format_value(direct) << '\n';
    if (o.closed_form) {
        if (o.n < 3) {
            err << "note: closed form needs n >= 3; not evaluated\n";
        } else {
            const double closed = chi_closed(lv, a);
            out << "chi_closed " << format_value(closed) << '\n';
            if (!in_omega) err << "warning: chain is not in Omega_n; the closed form does not apply\n";
            if (std::abs(closed - direct) > 1e-10 * std::max(1.0, std::abs(direct))) {
                err << "warning: closed form differs from direct value by " << format_value(closed - direct) << '\n';
            }
        }
    }
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const EnumerationRequest req{o.n, o.omega_only, !o.no_dedupe};
    if (o.stream_format == "csv") {
        out << csv_header() << '\n';
        for_each_chain(req, [&out](const ChainRecord& r) { out << to_csv_row(r) << '\n'; });
    } else {
        for_each_chain(req, [&out](const ChainRecord& r) { out << to_json_line(r) << '\n'; });
    }
    return kExitOk;
}

int cmd_extremal(const Options& o, std::ostream& out)
{
    SearchOptions options;
    options.omega_only = !o.all_chains;
    const auto report = extremal_search(o.n, parse_alpha(o.alpha), options);
    if (o.format == "json") out << report_json(report).dump(2) << '\n';
    else print_report(out, report);
    if (report.omega_only && !report.passed()) return kExitVerificationFailed;
    return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out)
{
    if (o.n_min > o.n_max) throw DomainError("--n-min exceeds --n-max");
    std::vector<double> alphas;
    if (o.alpha_list.empty()) {
        alphas = default_table1_alphas();
    } else {
        for (const auto& text : o.alpha_list) alphas.push_back(parse_alpha(text));
    }
    const auto summary = verify_table1(o.n_min, o.n_max, alphas);
    if (o.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& r : summary.reports) rows.push_back(report_json(r));
        out << ordered_json{{"passed", summary.passed()}, {"reports", std::move(rows)}}.dump(2) << '\n';
    } else {
        print_table(out, summary);
    }
    return summary.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_roots(std::ostream& out)
{
    const double x0 = find_root(RootTarget::F);
    const double x1 = find_root(RootTarget::FPlusG);
    out << fmt::format("x0 {:.12f} residual {:.3e}\n", x0, f_val(x0));
    out << fmt::format("x1 {:.12f} residual {:.3e}\n", x1, f_val(x1) + g_val(x1));
    return kExitOk;
}

}  // namespace

double parse_alpha(const std::string& text)
{
    if (text == "x0") return boundary_roots().x0;
    if (text == "x1") return boundary_roots().x1;
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) throw std::invalid_argument("invalid alpha '" + text + "'");
    return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"General sum-connectivity index of polyomino chains", "polychi"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "Evaluate the index of one chain");
    eval->add_option("--n", o.n, "Number of squares")->required()->check(CLI::Range(1, 1000));
    eval->add_option("--turns", o.turns, "Turn string over S, L, R (length n-2)");
    eval->add_option("--alpha", o.alpha, "Exponent (decimal, x0 or x1)")->required();
    eval->add_flag("--closed-form", o.closed_form, "Also evaluate the segment closed form");

    auto* enumerate = app.add_subcommand("enumerate", "Stream every chain with n squares");
    enumerate->add_option("--n", o.n, "Number of squares")->required();
    enumerate->add_flag("--omega-only", o.omega_only, "Only chains in Omega_n");
    enumerate->add_flag("--no-dedupe", o.no_dedupe, "Keep symmetric copies");
    enumerate->add_option("--format", o.stream_format, "Output format")->check(CLI::IsMember({"jsonl", "csv"}));

    auto* extremal = app.add_subcommand("extremal", "Find the chains with extremal index for (n, alpha)");
    extremal->add_option("--n", o.n, "Number of squares")->required();
    extremal->add_option("--alpha", o.alpha, "Exponent (decimal, x0 or x1)")->required();
    extremal->add_flag("--all-chains", o.all_chains, "Search all chains, not only Omega_n");
    extremal->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "Verify the extremal table over a range of n");
    table->add_option("--n-min", o.n_min, "Smallest n")->capture_default_str();
    table->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
    table->add_option("--alpha-list", o.alpha_list, "Exponents (decimal, x0 or x1), comma separated")->delimiter(',');
    table->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* roots = app.add_subcommand("roots", "Print the regime boundaries x0 and x1");

    std::vector<const char*> argv{"polychi"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, out, err);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (extremal->parsed()) return cmd_extremal(o, out);
        if (table->parsed()) return cmd_table(o, out);
        if (roots->parsed()) return cmd_roots(out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitUsage;
}

}  // namespace polychi::cli
