// rankone: reports on rank-one principal series data.
#include "report.hpp"

#include "rankone/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace rankone;
using rankone::cli::json;

namespace {

// "SO 3", "SU 2", "Sp 4" or "F4"; returns how many positionals were consumed.
std::size_t parse_family(const std::vector<std::string>& args, GroupFamily& out) {
    if (args.empty()) throw DomainError("missing family");
    std::string v = args[0];
    for (auto& ch : v) ch = char(std::toupper(static_cast<unsigned char>(ch)));
    if (v == "F4") {
        out = GroupFamily::f4();
        return 1;
    }
    if (args.size() < 2) throw DomainError("family " + args[0] + " needs n");
    int n;
    try {
        n = std::stoi(args[1]);
    } catch (const std::exception&) {
        throw DomainError("bad n '" + args[1] + "'");
    }
    out = GroupFamily::parse(args[0], n);
    return 2;
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos;
        int v = std::stoi(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("bad ") + what + " '" + s + "'");
}

void expect_count(const std::vector<std::string>& args, std::size_t used, std::size_t want, const char* usage) {
    if (args.size() != used + want) throw DomainError(std::string("usage: ") + usage);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-one principal series: structure, K-types, scalars and checks"};
    app.require_subcommand(1);

    cli::Options opt;
    std::string format = "json", out_path;
    app.add_option("--seed", opt.seed, "Seed for so-model sampling and random triples");
    app.add_option("--depth", opt.depth, "Coordinate bound for verification sweeps")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tolerance", opt.tolerance, "Tolerance for so-model numerics");
    app.add_option("--out", out_path, "Write the report here instead of stdout");

    std::vector<std::string> args;
    int count = 6;
    std::string mu_text = "0";

    auto* structure = app.add_subcommand("structure", "Restricted root data, rho(H), exceptional parameters");
    structure->add_option("family", args, "FAMILY [n]")->required();
    auto* exceptional = app.add_subcommand("exceptional", "Exceptional parameters by both routes");
    exceptional->add_option("family", args, "FAMILY [n]")->required();
    exceptional->add_option("--count", count, "Number of parameters");
    auto* socle = app.add_subcommand("socle", "Socle, minimal K-type and Langlands data at mu_ell");
    socle->add_option("args", args, "FAMILY [n] ELL")->required();
    auto* tensor = app.add_subcommand("tensor", "Decomposition of Y (x) p");
    tensor->add_option("args", args, "FAMILY [n] LABEL")->required();
    auto* scalars = app.add_subcommand("scalars", "lambda, nu and T for a pair of K-types");
    scalars->add_option("args", args, "FAMILY [n] V Y")->required();
    scalars->add_option("--mu", mu_text, "mu(H) as a rational");
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "all, groups, tensor, spherical, scalars or so-model");
    for (auto* sub : {structure, exceptional, socle, tensor, scalars, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    json report;
    try {
        GroupFamily g = GroupFamily::f4();
        if (*structure) {
            expect_count(args, parse_family(args, g), 0, "structure FAMILY [n]");
            report = cli::cmd_structure(g);
        } else if (*exceptional) {
            expect_count(args, parse_family(args, g), 0, "exceptional FAMILY [n] [--count N]");
            report = cli::cmd_exceptional(g, count);
        } else if (*socle) {
            std::size_t used = parse_family(args, g);
            expect_count(args, used, 1, "socle FAMILY [n] ELL");
            report = cli::cmd_socle(g, parse_int(args[used], "ell"));
        } else if (*tensor) {
            std::size_t used = parse_family(args, g);
            expect_count(args, used, 1, "tensor FAMILY [n] LABEL");
            report = cli::cmd_tensor(g, KTypeLabel::parse(g, args[used]));
        } else if (*scalars) {
            std::size_t used = parse_family(args, g);
            expect_count(args, used, 2, "scalars FAMILY [n] V Y [--mu M]");
            report = cli::cmd_scalars(g, KTypeLabel::parse(g, args[used]), KTypeLabel::parse(g, args[used + 1]),
                                      parse_rational(mu_text));
        } else {
            report = cli::cmd_verify(suite, opt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal check failure: " << e.what() << "\n";
        return 1;
    }

    std::string text = format == "csv" ? cli::to_csv(report) : report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return cli::passed(report) ? 0 : 1;
}
