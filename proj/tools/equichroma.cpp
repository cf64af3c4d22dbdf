// Command-line front end: generate wheel-related families, build or search
// equitable colorings, compute exact coloring statistics, evaluate the
// published closed forms, and run the verification harness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "equichroma/equichroma.hpp"

namespace {

using namespace equichroma;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
}

std::vector<long long> parse_size_list(const std::string& csv) {
    std::vector<long long> sizes;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("--sizes: '" + item + "' is not an integer");
        }
        if (used != item.size())
            throw std::invalid_argument("--sizes: '" + item + "' is not an integer");
        sizes.push_back(value);
    }
    if (sizes.empty()) throw std::invalid_argument("--sizes: empty list");
    return sizes;
}

std::vector<Theorem> parse_theorem_list(const std::string& arg) {
    std::vector<Theorem> theorems;
    if (arg == "all") {
        theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
        return theorems;
    }
    std::istringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) theorems.push_back(theorem_from_string(item));
    if (theorems.empty()) throw std::invalid_argument("--theorems: empty list");
    return theorems;
}

struct VerifyCliArgs {
    std::string theorems;
    int n_min = 0;
    int n_max = 0;
    std::string report = "csv";
    std::string out;
    bool strict = false;
    std::string expect_erratum;
    int jobs = 1;
    bool with_chi_e = false;
    bool with_oracle = false;
    bool with_ecc = false;
};

int run_verify(const VerifyCliArgs& args) {
    VerifyOptions options;
    options.jobs = args.jobs;
    options.with_chi_e = args.with_chi_e;
    options.with_oracle = args.with_oracle;
    options.with_ecc = args.with_ecc;
    const auto records = verify_range(parse_theorem_list(args.theorems), args.n_min, args.n_max,
                                      options);
    if (args.report == "csv") write_output(report_csv(records), args.out);
    else if (args.report == "json") write_output(report_json(records), args.out);
    else write_output(report_table(records), args.out);

    if (!args.strict) return 0;
    const bool exempt_wheel_odd = args.expect_erratum == "wheel-odd-variance";
    for (const auto& rec : records) {
        if (record_has_mismatch(rec)) {
            if (exempt_wheel_odd && record_is_wheel_odd_erratum(rec)) continue;
            return 2;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable colorings and exact chromatic statistics of wheel-related graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family graph");
    std::string gen_family, gen_format = "json";
    int gen_n = 0;
    gen->add_option("--family", gen_family, "family name")->required();
    gen->add_option("--n", gen_n, "rim/cycle parameter (>= 3)")->required();
    gen->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"dimacs", "json", "dot"}));

    // color
    auto* color = app.add_subcommand("color", "produce an equitable coloring");
    std::string color_family, color_method = "constructive";
    int color_n = 0, color_k = -1;
    color->add_option("--family", color_family, "family name")->required();
    color->add_option("--n", color_n, "rim/cycle parameter (>= 3)")->required();
    color->add_option("--k", color_k, "color count (defaults to the documented count)");
    color->add_option("--method", color_method, "coloring method")
        ->check(CLI::IsMember({"constructive", "solver"}));

    // stats
    auto* stats = app.add_subcommand("stats", "exact mean and variance of a coloring");
    std::string stats_file, stats_sizes;
    auto* stats_file_opt = stats->add_option("--coloring", stats_file, "coloring JSON file");
    auto* stats_sizes_opt =
        stats->add_option("--sizes", stats_sizes, "comma-separated class sizes");
    stats_file_opt->excludes(stats_sizes_opt);

    // formula
    auto* formula = app.add_subcommand("formula", "evaluate a published closed form");
    std::string formula_theorem;
    int formula_n = 0;
    bool formula_corrected = false;
    formula->add_option("--theorem", formula_theorem, "theorem id")->required();
    formula->add_option("--n", formula_n, "rim/cycle parameter (>= 3)")->required();
    formula->add_flag("--corrected", formula_corrected,
                      "use the repaired odd-wheel variance polynomial");

    // chie
    auto* chie = app.add_subcommand("chie", "equitable chromatic number");
    std::string chie_family;
    int chie_n = 0;
    bool chie_oracle = false;
    chie->add_option("--family", chie_family, "family name")->required();
    chie->add_option("--n", chie_n, "rim/cycle parameter (>= 3)")->required();
    chie->add_flag("--oracle", chie_oracle, "use the brute-force enumeration (<= 13 vertices)");

    // verify
    auto* verify = app.add_subcommand("verify", "compare computed statistics with closed forms");
    VerifyCliArgs verify_args;
    verify->add_option("--theorems", verify_args.theorems, "'all' or comma-separated theorem ids")
        ->required();
    verify->add_option("--n-min", verify_args.n_min, "smallest n")->required();
    verify->add_option("--n-max", verify_args.n_max, "largest n")->required();
    verify->add_option("--report", verify_args.report, "report format")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    verify->add_option("--out", verify_args.out, "write the report to a file");
    verify->add_flag("--strict", verify_args.strict, "exit 2 on unexpected mismatches");
    verify->add_option("--expect-erratum", verify_args.expect_erratum,
                       "mismatch family to treat as expected")
        ->check(CLI::IsMember({"wheel-odd-variance"}));
    verify->add_option("--jobs", verify_args.jobs, "parallel instance evaluation")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--with-chie", verify_args.with_chi_e, "fill the chi_e_solver column");
    verify->add_flag("--with-oracle", verify_args.with_oracle,
                     "fill the chi_e_oracle column (<= 13 vertices)");
    verify->add_flag("--with-ecc", verify_args.with_ecc, "fill the ecc column");

    // ecc
    auto* ecc = app.add_subcommand("ecc", "check chi_e <= max degree over a range");
    std::string ecc_family, ecc_report = "csv", ecc_out;
    int ecc_n_min = 0, ecc_n_max = 0;
    bool ecc_strict = false;
    ecc->add_option("--family", ecc_family, "family name")->required();
    ecc->add_option("--n-min", ecc_n_min, "smallest n")->required();
    ecc->add_option("--n-max", ecc_n_max, "largest n")->required();
    ecc->add_option("--report", ecc_report, "report format")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    ecc->add_option("--out", ecc_out, "write the report to a file");
    ecc->add_flag("--strict", ecc_strict, "exit 2 on violations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "equichroma: " << e.what() << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) {
            const Graph g = generate({family_from_string(gen_family), gen_n});
            if (gen_format == "dimacs") std::cout << to_dimacs(g);
            else if (gen_format == "dot") std::cout << to_dot(g);
            else std::cout << to_json(g);
            return 0;
        }

        if (color->parsed()) {
            const FamilyId id{family_from_string(color_family), color_n};
            Coloring result;
            if (color_method == "constructive") {
                if (color_k != -1 && color_k != equitable_color_count(id))
                    throw std::invalid_argument(
                        "the constructive pattern for " + color_family + " n=" +
                        std::to_string(color_n) + " uses k=" +
                        std::to_string(equitable_color_count(id)) +
                        "; use --method solver for other k");
                result = constructive_coloring(id);
            } else {
                const Graph g = generate(id);
                const int k = color_k == -1 ? equitable_color_count(id) : color_k;
                const auto found = find_equitable_coloring(g, k);
                if (!found)
                    throw std::invalid_argument("no equitable " + std::to_string(k) +
                                                "-coloring of " + color_family + " n=" +
                                                std::to_string(color_n) + " exists");
                result = *found;
            }
            std::cout << coloring_to_json(result, color_family, color_n);
            return 0;
        }

        if (stats->parsed()) {
            ColorDistribution d;
            if (!stats_file.empty()) {
                d = distribution_of(coloring_from_json(read_file(stats_file)).coloring);
            } else if (!stats_sizes.empty()) {
                d = distribution_from_sizes(parse_size_list(stats_sizes));
            } else {
                throw std::invalid_argument("stats: pass --coloring FILE or --sizes LIST");
            }
            std::cout << stats_to_json(stats_of(d));
            return 0;
        }

        if (formula->parsed()) {
            const Theorem t = theorem_from_string(formula_theorem);
            ChromaticStats result = closed_form(t, formula_n);
            if (formula_corrected) {
                if (t != Theorem::thm1_wheel || formula_n % 2 == 0)
                    throw std::invalid_argument(
                        "--corrected applies only to thm1_wheel with odd n");
                result.variance = corrected_wheel_odd_variance(formula_n);
            }
            std::cout << stats_to_json(result);
            return 0;
        }

        if (chie->parsed()) {
            const Graph g = generate({family_from_string(chie_family), chie_n});
            const int value = chie_oracle ? brute_force_chi_e(g) : equitable_chromatic_number(g);
            std::cout << value << "\n";
            return 0;
        }

        if (verify->parsed()) return run_verify(verify_args);

        if (ecc->parsed()) {
            const auto records =
                ecc_range(family_from_string(ecc_family), ecc_n_min, ecc_n_max);
            if (ecc_report == "csv") write_output(ecc_report_csv(records), ecc_out);
            else if (ecc_report == "json") write_output(ecc_report_json(records), ecc_out);
            else write_output(ecc_report_table(records), ecc_out);
            if (ecc_strict)
                for (const auto& rec : records)
                    if (rec.outcome == EccOutcome::violated) return 2;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "equichroma: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
