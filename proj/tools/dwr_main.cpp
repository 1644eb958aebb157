#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dwr/dwr.hpp"

namespace {

constexpr int kExitInvariant = 2;
constexpr int kExitParse = 64;
constexpr int kExitDimension = 65;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DWR_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 0);
        if (end == env || (end && *end != '\0'))
            throw dwr::ParseError("DWR_SEED is not an integer");
        return static_cast<std::uint64_t>(v);
    }
    return 0x5EED;
}

int run(int argc, char** argv) {
    CLI::App app{"Davis-Wielandt radius toolkit: quantities, bound catalog, block formulas"};
    app.require_subcommand(1);

    std::string file, builtin, format = "table";
    std::string block_file;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int fuzz_count = 0, fuzz_dim = 0;
    std::uint64_t fuzz_seed = 0;
    bool fuzz_seed_given = false;

    auto* analyze = app.add_subcommand("analyze", "profile a matrix and print the bound catalog");
    analyze->add_option("file", file, "matrix file (json)");
    analyze->add_option("--builtin", builtin, "named built-in matrix");
    analyze->add_option("--seed", seed, "search seed")->each([&](const std::string&) {
        seed_given = true;
    });
    analyze->add_option("--format", format, "table|csv|jsonl");

    auto* table = app.add_subcommand("paper-table", "reproduce the comparability table");
    table->add_option("--format", format, "table|csv|jsonl");

    auto* block = app.add_subcommand("block", "analyze a 2x2 block operator matrix spec");
    block->add_option("specfile", block_file, "block spec file (json)")->required();
    block->add_option("--seed", seed, "search seed")->each([&](const std::string&) {
        seed_given = true;
    });
    block->add_option("--format", format, "table|csv|jsonl");

    auto* fuzz = app.add_subcommand("fuzz", "run the property suites on random matrices");
    fuzz->add_option("--count", fuzz_count, "number of random matrices")->required();
    fuzz->add_option("--dim", fuzz_dim, "matrix dimension (2..16)")->required();
    fuzz->add_option("--seed", fuzz_seed, "base seed")->each([&](const std::string&) {
        fuzz_seed_given = true;
    });

    CLI11_PARSE(app, argc, argv);

    dwr::SolverOptions opts;
    opts.seed = seed_given ? seed : default_seed();

    if (analyze->parsed()) {
        const dwr::ReportFormat fmt = dwr::report_format_from_name(format);
        if (file.empty() == builtin.empty())
            throw dwr::ParseError("analyze needs exactly one of <file> or --builtin NAME");
        const dwr::ComplexMatrix t =
            builtin.empty() ? dwr::load_matrix_file(file) : dwr::builtin_matrix(builtin);
        const std::string label = builtin.empty() ? file : builtin;
        const auto result = dwr::analyze_matrix(label, t, opts);
        dwr::render_analyze(result, fmt, std::cout);
        return result.invariant_violation ? kExitInvariant : 0;
    }
    if (table->parsed()) {
        const dwr::ReportFormat fmt = dwr::report_format_from_name(format);
        const auto report = dwr::paper_table(opts);
        dwr::render_paper_table(report, fmt, std::cout);
        return 0;
    }
    if (block->parsed()) {
        const dwr::ReportFormat fmt = dwr::report_format_from_name(format);
        const auto spec = dwr::load_block_spec_file(block_file);
        const auto report = dwr::block_report(spec, opts);
        dwr::render_block_report(report, fmt, std::cout);
        return report.analysis.invariant_violation ? kExitInvariant : 0;
    }
    if (fuzz->parsed()) {
        const std::uint64_t s = fuzz_seed_given ? fuzz_seed : default_seed();
        const auto summary = dwr::run_fuzz(fuzz_count, fuzz_dim, s, opts);
        dwr::render_fuzz(summary, std::cout);
        return summary.violations == 0 ? 0 : kExitInvariant;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dwr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dwr::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const dwr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
