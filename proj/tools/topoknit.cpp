#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "topoknit/topoknit.hpp"

namespace tk = topoknit;

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kParse = 2, kEvaluation = 3 };

bool color_enabled() {
    const char* env = std::getenv("TOPOKNIT_COLOR");
    if (env && std::string(env) == "0") return false;
    return isatty(STDOUT_FILENO) != 0;
}

std::string paint(const std::string& s, const char* code) {
    if (!color_enabled()) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tk::Error("cannot write '" + path + "'");
    out << text;
}

std::string format_report(const tk::ValidationReport& r) {
    if (r.ok()) return "valid\n";
    std::ostringstream out;
    for (const auto& v : r.violations)
        out << v.rule << " at stitch (" << v.m << "," << v.n << "): " << v.message << "\n";
    return out.str();
}

/// Post-evaluation dump; cells that changed during evaluation are painted
/// when color is on, and always listed below the grid.
std::string dump_changes(const tk::CnGrid& before, const tk::CnGrid& after) {
    std::string out;
    for (int j = after.last_row(); j >= 0; --j) {
        for (int i = 0; i < after.width(); ++i) {
            if (i) out += " | ";
            const std::string cell = tk::format_cell(after.at(i, j));
            out += before.at(i, j) == after.at(i, j) ? cell : paint(cell, "36");
        }
        out += '\n';
    }
    for (int j = 0; j < after.height(); ++j)
        for (int i = 0; i < after.width(); ++i)
            if (!(before.at(i, j) == after.at(i, j)))
                out += "changed (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                       tk::to_string(before.at(i, j).av) + " -> " + tk::to_string(after.at(i, j).av) + "\n";
    return out;
}

struct Options {
    std::string pattern;
    std::string dump;
    std::string json_out;
    bool force = false;

    std::string format = "svg";
    int rows = 0;
    std::string output;
    tk::RenderStyle style;
    bool no_arrows = false;

    std::vector<int> sizes = tk::default_bench_sizes();
    double budget = 2.0;

    int count = 100;
    std::uint64_t seed = 42;
    std::string suite_template = "magenta";
};

int cmd_validate(const Options& o) {
    const tk::ValidationReport r = tk::validate(tk::load_pattern(o.pattern));
    std::cout << (r.ok() ? paint(format_report(r), "32") : paint(format_report(r), "31"));
    return r.ok() ? kOk : kInvalid;
}

/// Loads and validates; returns a nonzero exit code when the caller should stop.
int load_checked(const Options& o, tk::StitchPattern& p) {
    p = tk::load_pattern(o.pattern);
    const tk::ValidationReport r = tk::validate(p);
    if (r.ok() || o.force) return kOk;
    std::cerr << format_report(r);
    return kInvalid;
}

int cmd_eval(const Options& o) {
    tk::StitchPattern p;
    if (int rc = load_checked(o, p)) return rc;
    const tk::CnGrid before = tk::build_grid(p);
    tk::Evaluation ev{before, {}};
    ev.path = tk::follow_the_yarn(ev.grid);

    if (o.dump == "pre") std::cout << tk::dump_grid(before);
    if (o.dump == "post") std::cout << dump_changes(before, ev.grid);
    if (!o.json_out.empty()) {
        write_text(o.json_out, tk::path_to_json(ev.path).dump(2) + "\n");
    } else if (o.dump.empty()) {
        std::cout << "yarn path: " << ev.path.size() << " entries\n";
    }
    return kOk;
}

std::string render_as(const tk::TopologyGraph& tg, const Options& o) {
    if (o.format == "dot") return tk::render_dot(tg);
    if (o.format == "json") return tk::to_json(tg).dump(2) + "\n";
    return tk::render_svg(tg, o.style);
}

int cmd_render(Options o) {
    tk::StitchPattern p;
    if (int rc = load_checked(o, p)) return rc;
    o.style.arrowheads = !o.no_arrows;
    o.style.check();
    if (o.rows == 0) {
        write_text(o.output, render_as(tk::evaluate_graph(p), o));
        return kOk;
    }
    const auto snaps = tk::row_snapshots(p, o.rows);
    for (std::size_t k = 0; k < snaps.size(); ++k) {
        const std::string path = o.output + "-" + std::to_string(k + 1) + "." + o.format;
        write_text(path, render_as(snaps[k], o));
        std::cout << path << "\n";
    }
    return kOk;
}

int cmd_bench(const Options& o) {
    const tk::BenchReport rep = tk::run_bench(tk::load_pattern(o.pattern), o.sizes, o.budget);
    std::cout << std::left << std::setw(8) << "size" << std::setw(10) << "stitches" << std::setw(14) << "seconds"
              << "repeats\n";
    for (const auto& r : rep.rows)
        std::cout << std::setw(8) << r.size << std::setw(10) << r.stitches << std::setw(14) << std::setprecision(6)
                  << r.seconds << r.repeats << "\n";
    if (rep.fit) {
        std::cout << "slope " << rep.fit->slope << " s/stitch\n";
        std::cout << "r2 " << std::setprecision(4) << rep.fit->r2 << "\n";
    } else {
        std::cout << "no fit (fewer than two sizes)\n";
    }
    if (auto q = rep.ratio(150, 50)) std::cout << "ratio 150/50 " << std::setprecision(4) << *q << "\n";
    return kOk;
}

int cmd_random_suite(const Options& o) {
    const auto t = o.suite_template == "teal" ? tk::SuiteTemplate::Teal : tk::SuiteTemplate::Magenta;
    const tk::SuiteSummary s = tk::run_random_suite(o.count, o.seed, t);
    for (const auto& f : s.failures) {
        std::cout << "FAIL " << f.digest << "\n";
        for (const auto& msg : f.problems) std::cout << "  " << msg << "\n";
    }
    std::cout << s.passed << "/" << s.requested << " passed, " << s.resampled << " resampled\n";
    return s.ok() ? kOk : kEvaluation;
}

int cmd_oracle(const Options& o) {
    const tk::StitchPattern p = tk::load_pattern(o.pattern);
    std::cout << tk::oracle::format_trace(tk::oracle::simulate(p));
    const tk::CompareReport r = tk::compare_with_oracle(p);
    for (const auto& m : r.mismatches) std::cout << "mismatch: " << m << "\n";
    std::cout << (r.ok() ? "agree\n" : "disagree\n");
    return r.ok() ? kOk : kEvaluation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yarn topology evaluator for weft-knitted stitch patterns", "topoknit"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Check a pattern against the structural rules");
    validate->add_option("--pattern", o.pattern, "Pattern file")->required();

    auto* eval = app.add_subcommand("eval", "Populate the CN grid and trace the yarn path");
    eval->add_option("--pattern", o.pattern, "Pattern file")->required();
    eval->add_option("--dump-grid", o.dump, "Print the grid before or after evaluation")
        ->check(CLI::IsMember({"pre", "post"}));
    eval->add_option("--json", o.json_out, "Write the yarn path as JSON ('-' for stdout)");
    eval->add_flag("--force", o.force, "Evaluate even if validation fails");

    auto* render = app.add_subcommand("render", "Emit the topology graph");
    render->add_option("--pattern", o.pattern, "Pattern file")->required();
    render->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"svg", "dot", "json"}));
    auto* rows = render->add_option("--rows", o.rows, "Write one snapshot per stitch row up to this count")
                     ->check(CLI::PositiveNumber);
    render->add_option("-o,--output", o.output, "Output file, or file prefix with --rows");
    rows->needs(render->get_option("--output"));
    render->add_option("--spacing", o.style.spacing, "Grid spacing in px");
    render->add_option("--radius", o.style.disk_radius, "Node disk radius in px");
    render->add_option("--square", o.style.square_side, "UACN marker side in px");
    render->add_flag("--no-arrows", o.no_arrows, "Omit yarn direction arrowheads");
    render->add_flag("--force", o.force, "Render even if validation fails");

    auto* bench = app.add_subcommand("bench", "Time the pipeline on tiled copies of a block");
    bench->add_option("--block,--pattern", o.pattern, "Block pattern file")->required();
    bench->add_option("--sizes", o.sizes, "Square sizes to tile")->delimiter(',');
    bench->add_option("--budget", o.budget, "Total seconds to spend before stopping (at least 40 rounds run)");

    auto* suite = app.add_subcommand("random-suite", "Audit seeded random patterns");
    suite->add_option("--count", o.count, "Number of patterns")->check(CLI::NonNegativeNumber);
    suite->add_option("--seed", o.seed, "Random seed");
    suite->add_option("--template", o.suite_template, "Randomized region shape")
        ->check(CLI::IsMember({"teal", "magenta"}));

    auto* oracle = app.add_subcommand("oracle", "");
    oracle->group("");
    oracle->add_option("--pattern", o.pattern, "Pattern file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(o);
        if (*eval) return cmd_eval(o);
        if (*render) return cmd_render(o);
        if (*bench) return cmd_bench(o);
        if (*suite) return cmd_random_suite(o);
        if (*oracle) return cmd_oracle(o);
    } catch (const tk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const tk::LocatedError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kEvaluation;
    } catch (const tk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kOk;
}
