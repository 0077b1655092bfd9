// rainbow_forge: build, verify, solve and export rainbow matching instances.
//
// Exit codes: 0 verified / success, 1 claim failure, 2 usage or input error,
// 3 inconclusive (node budget).

#include "rainbow/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace rainbow;
namespace rio = rainbow::io;

constexpr int exit_ok = 0;
constexpr int exit_claim = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write " + out);
    file << text;
}

struct SolverFlags {
    int threads = 1;
    std::optional<std::uint64_t> budget;
    bool hall = false;

    void attach(CLI::App* app)
    {
        app->add_option("--threads", threads, "solver threads; 1 runs the serial kernels")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        app->add_option("--budget", budget,
                        "node budget (0 = unlimited); overrides RAINBOW_FORGE_BUDGET");
        app->add_flag("--hall", hall, "enable the Hall flow prune in backtracking");
    }

    SolveOptions options() const
    {
        SolveOptions o;
        o.threads = threads;
        o.hall_pruning = hall;
        if (budget) {
            o.node_budget = *budget;
        } else if (const char* env = std::getenv("RAINBOW_FORGE_BUDGET")) {
            try {
                o.node_budget = std::stoull(env);
            } catch (const std::exception&) {
                throw CLI::ValidationError("RAINBOW_FORGE_BUDGET", "must be a nonnegative integer");
            }
        }
        return o;
    }
};

int run_build(const std::string& family, const std::map<std::string, long long>& values,
              const std::string& net_path, const std::string& out)
{
    rio::FamilyParams params;
    params.values = values;
    if (!net_path.empty())
        params.net = rio::net_from_json(rio::json::parse(read_input(net_path)));
    write_output(rio::serialize(rio::build_family(family, params)), out);
    return exit_ok;
}

int run_verify(const std::string& input, const SolverFlags& flags, const std::string& out)
{
    const auto doc = rio::parse_document(read_input(input));
    const auto result = rio::verify_document(doc, flags.options());
    write_output(result.report.dump(2) + "\n", out);
    switch (result.verdict) {
    case rio::Verdict::verified: return exit_ok;
    case rio::Verdict::claim_failure: return exit_claim;
    case rio::Verdict::inconclusive: return exit_inconclusive;
    }
    return exit_claim;
}

int run_solve(const std::string& input, const std::string& method, const SolverFlags& flags, const std::string& out)
{
    const auto doc = rio::parse_document(read_input(input));
    const ColoredHypergraph instance = doc.instance();
    const SolveOptions options = flags.options();
    SolveReport report;
    if (method == "backtracking")
        report = find_frm(instance, options);
    else if (method == "decomposition")
        report = decompose_and_solve(instance, options);
    else if (method == "enumeration")
        report = brute_force_frm(instance, options);
    else
        report = decompose_max_rainbow(instance, options);
    write_output(rio::solve_report_to_json(report).dump(2) + "\n", out);
    return report.status == SolveStatus::inconclusive ? exit_inconclusive : exit_ok;
}

int run_export(const std::string& input, const std::string& format, const std::string& out)
{
    const auto doc = rio::parse_document(read_input(input));
    if (format == "dot")
        write_output(rio::export_dot(doc.instance()), out);
    else
        write_output(rio::serialize(doc), out);
    return exit_ok;
}

int run_list_families()
{
    for (const auto& f : rio::family_registry()) {
        std::cout << f.name << ": " << f.summary << "\n";
        for (const auto& p : f.params) {
            std::cout << "    --" << p.name << "  " << p.help;
            if (p.default_value)
                std::cout << " [default " << *p.default_value << "]";
            std::cout << "\n";
        }
        if (f.accepts_net)
            std::cout << "    --net  JSON net file replacing the standard net on r, s\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Build, verify, solve and export edge-colored hypergraphs without full rainbow matchings"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "build a family instance document");
    std::string family;
    std::string net_path;
    std::string out;
    build->add_option("family", family, "family name (see list-families)")->required();
    std::map<std::string, std::optional<long long>> ints;
    for (const char* name : {"r", "s", "t", "delta", "n", "m", "a1", "a2", "variant", "cycle"})
        build->add_option(std::string("--") + name, ints[name], std::string("family parameter ") + name);
    build->add_option("--net", net_path, "JSON net with \"mols\" or \"classes\"");
    build->add_option("--out", out, "write the document here instead of stdout");

    SolverFlags verify_flags;
    std::string verify_input;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "check every manifest claim; exit 0 iff all are certified");
    verify->add_option("document", verify_input, "document path, or - for stdin")->required();
    verify->add_option("--out", verify_out, "write the JSON report here instead of stdout");
    verify_flags.attach(verify);

    SolverFlags solve_flags;
    std::string solve_input;
    std::string solve_out;
    std::string method = "decomposition";
    auto* solve = app.add_subcommand("solve", "search for a full rainbow matching");
    solve->add_option("document", solve_input, "document path, or - for stdin")->required();
    solve->add_option("--method", method, "backtracking, decomposition, enumeration or max")
        ->check(CLI::IsMember({"backtracking", "decomposition", "enumeration", "max"}))
        ->capture_default_str();
    solve->add_option("--out", solve_out, "write the JSON report here instead of stdout");
    solve_flags.attach(solve);

    std::string export_input;
    std::string export_out;
    std::string format = "dot";
    auto* exp = app.add_subcommand("export", "render a document");
    exp->add_option("document", export_input, "document path, or - for stdin")->required();
    exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    exp->add_option("--out", export_out, "write here instead of stdout");

    auto* list = app.add_subcommand("list-families", "list the registered families and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (build->parsed()) {
            std::map<std::string, long long> values;
            for (const auto& [name, value] : ints)
                if (value)
                    values[name] = *value;
            return run_build(family, values, net_path, out);
        }
        if (verify->parsed())
            return run_verify(verify_input, verify_flags, verify_out);
        if (solve->parsed())
            return run_solve(solve_input, method, solve_flags, solve_out);
        if (exp->parsed())
            return run_export(export_input, format, export_out);
        if (list->parsed())
            return run_list_families();
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
