#include "purecross/cli.hpp"
#include "purecross/enumerate.hpp"
#include "purecross/partition.hpp"
#include "purecross/pipeline.hpp"
#include "purecross/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

namespace purecross::cli {

namespace {

const std::map<std::string, PartitionClass> class_names = {
    {"all", PartitionClass::All},
    {"nc", PartitionClass::Noncrossing},
    {"co", PartitionClass::Connected},
    {"pc+", PartitionClass::PcPlus},
    {"pc", PartitionClass::PurelyCrossing},
};

struct Config {
    std::string format = "plain";
    std::string partition_text;
    int n = 0;
    PartitionClass cls = PartitionClass::All;
    unsigned workers = 1;
    int max_n = 15;
    int check_enum_up_to = 0;
    std::string which = "A";
    int order = 15;
    std::string weights_file;
    int weighted_trials = 20;
    std::uint64_t seed = 1;
};

void add_format(CLI::App* sub, Config& cfg, const std::string& default_format)
{
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"plain", "tsv", "json"}))
        ->default_str(default_format);
}

void report_parse_error(const ParseError& e, const std::string& text, std::ostream& err)
{
    err << "error: " << e.what() << '\n';
    err << "  " << text << '\n';
    err << "  " << std::string(e.position(), ' ') << "^\n";
}

int do_classify(const Config& cfg, std::ostream& out, std::ostream& err)
{
    Partition pi;
    try {
        pi = Partition::parse(cfg.partition_text);
    } catch (const ParseError& e) {
        report_parse_error(e, cfg.partition_text, err);
        return UsageError;
    }
    nlohmann::ordered_json j;
    j["noncrossing"] = is_noncrossing(pi);
    j["has_neighbors"] = has_neighbors(pi);
    j["connected"] = is_connected(pi);
    j["pc_plus"] = is_pc_plus(pi);
    j["purely_crossing"] = is_purely_crossing(pi);
    j["cover"] = noncrossing_cover(pi).to_string();
    out << j.dump() << '\n';
    return Ok;
}

int do_enumerate(const Config& cfg, std::ostream& out)
{
    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for_each_partition(cfg.n, cfg.cls, [&](const Partition& p) { arr.push_back(p.to_string()); });
        out << arr.dump() << '\n';
    } else {
        for_each_partition(cfg.n, cfg.cls, [&](const Partition& p) { out << p.to_string() << '\n'; });
    }
    return Ok;
}

int do_count(const Config& cfg, std::ostream& out)
{
    out << to_string(count(cfg.n, cfg.cls, cfg.workers)) << '\n';
    return Ok;
}

int do_table(const Config& cfg, std::ostream& out)
{
    const auto t = table(cfg.max_n, cfg.check_enum_up_to, cfg.workers);
    if (cfg.format == "json")
        out << t.to_json().dump() << '\n';
    else
        out << t.to_tsv();
    return Ok;
}

int do_series(const Config& cfg, std::ostream& out)
{
    std::optional<WeightAssignment> weights;
    if (!cfg.weights_file.empty()) {
        std::ifstream in(cfg.weights_file);
        if (!in) throw CLI::ValidationError("--weights", "cannot open " + cfg.weights_file);
        weights = WeightAssignment::from_json(nlohmann::json::parse(in));
    }
    const Series s = series_for(cfg.which.front(), cfg.order, weights ? &*weights : nullptr);
    if (cfg.format == "json") {
        out << s.to_json().dump() << '\n';
    } else if (cfg.format == "tsv") {
        out << "k\tcoefficient\n";
        for (int k = 0; k <= s.order(); ++k) out << k << '\t' << to_string(s[k]) << '\n';
    } else {
        out << s.to_string() << '\n';
    }
    return Ok;
}

int do_verify(const Config& cfg, std::ostream& out)
{
    VerifyOptions opts;
    opts.max_n = cfg.max_n;
    opts.weighted_trials = cfg.weighted_trials;
    opts.seed = cfg.seed;
    opts.workers = cfg.workers;
    int failed = 0;
    auto results = run_verification(opts, [&](const CheckResult& r) {
        if (cfg.format != "json") {
            out << (r.passed ? "ok   " : "FAIL ") << r.name;
            if (!r.passed) out << ": " << r.detail;
            out << '\n' << std::flush;
        }
        failed += !r.passed;
    });
    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& r : results) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << arr.dump() << '\n';
    } else {
        out << (results.size() - static_cast<std::size_t>(failed)) << '/' << results.size() << " checks passed\n";
    }
    return failed ? VerificationFailed : Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Purely crossing, connected and arbitrary set partitions and their generating functions",
                 "purecross"};
    app.require_subcommand(1);
    Config cfg;

    auto* classify = app.add_subcommand("classify", "Classify one partition, e.g. \"1,3|2,4\"");
    classify->add_option("partition", cfg.partition_text, "Partition in text form")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List the members of a class");
    enumerate->add_option("--n", cfg.n, "Ground-set size")->required()->check(CLI::Range(1, 64));
    enumerate->add_option("--class", cfg.cls, "all | nc | co | pc+ | pc")
        ->required()
        ->transform(CLI::CheckedTransformer(class_names));
    add_format(enumerate, cfg, "plain");

    auto* count_cmd = app.add_subcommand("count", "Count the members of a class");
    count_cmd->add_option("--n", cfg.n, "Ground-set size")->required()->check(CLI::Range(1, 64));
    count_cmd->add_option("--class", cfg.cls, "all | nc | co | pc+ | pc")
        ->required()
        ->transform(CLI::CheckedTransformer(class_names));
    count_cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* table_cmd = app.add_subcommand("table", "Counts of PC, PC+, CO and P for n = 1..max-n");
    table_cmd->add_option("--max-n", cfg.max_n, "Largest n")->required()->check(CLI::Range(1, 200));
    table_cmd->add_option("--check-enum-up-to", cfg.check_enum_up_to, "Recount rows up to this n by enumeration")
        ->check(CLI::Range(0, 64));
    table_cmd->add_option("--workers", cfg.workers, "Worker threads for the enumeration check")
        ->check(CLI::Range(1u, 256u));
    add_format(table_cmd, cfg, "tsv");

    auto* series_cmd = app.add_subcommand("series", "Coefficients of A, B, C or D");
    series_cmd->add_option("--which", cfg.which, "A | B | C | D")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
    series_cmd->add_option("--order", cfg.order, "Truncation order")->required()->check(CLI::Range(1, 200));
    series_cmd->add_option("--weights", cfg.weights_file, "JSON weight assignment on purely crossing partitions");
    add_format(series_cmd, cfg, "plain");

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
    verify_cmd->add_option("--max-n", cfg.max_n, "Enumeration depth")->check(CLI::Range(1, 12))->default_val(8);
    verify_cmd->add_option("--weighted-trials", cfg.weighted_trials, "Random weight assignments")
        ->check(CLI::Range(0, 100000));
    verify_cmd->add_option("--seed", cfg.seed, "Random seed");
    verify_cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    add_format(verify_cmd, cfg, "plain");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }

    try {
        if (classify->parsed()) return do_classify(cfg, out, err);
        if (enumerate->parsed()) return do_enumerate(cfg, out);
        if (count_cmd->parsed()) return do_count(cfg, out);
        if (table_cmd->parsed()) return do_table(cfg, out);
        if (series_cmd->parsed()) return do_series(cfg, out);
        if (verify_cmd->parsed()) return do_verify(cfg, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: bad weights file: " << e.what() << '\n';
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return VerificationFailed;
    }
    return UsageError;
}

}  // namespace purecross::cli
