// Command line front end for ribbon tableau generation, spin polynomials,
// matrix coding, and oracle verification.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbon/generator.hpp"
#include "ribbon/head_array.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/verify.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;

struct ShapeArgs {
    std::string outer;
    std::string inner;
    int ribbon = 0;
    std::string weight;
    int parallel = 1;
};

void add_shape_options(CLI::App* cmd, ShapeArgs& args, bool with_weight) {
    cmd->add_option("--outer", args.outer, "outer partition, e.g. 8,7,6,5,1")->required();
    cmd->add_option("--inner", args.inner, "inner partition (default empty)");
    cmd->add_option("--ribbon", args.ribbon, "ribbon order k")->required();
    if (with_weight)
        cmd->add_option("--weight", args.weight, "weight composition, e.g. 3,3,2,1")->required();
    cmd->add_option("--parallel", args.parallel, "worker threads (default 1)");
}

ribbon::SkewShape parse_shape(const ShapeArgs& args) {
    return {ribbon::Partition::parse(args.outer), ribbon::Partition::parse(args.inner)};
}

std::vector<int> parse_weight(const std::string& text) {
    std::vector<int> weight;
    std::stringstream ss{text};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            weight.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad weight literal: '" + text + "'");
        }
    }
    if (weight.empty()) throw std::invalid_argument("weight must not be empty");
    return weight;
}

ribbon::PolyStyle parse_poly_style(const std::string& name) {
    if (name == "plain") return ribbon::PolyStyle::plain;
    if (name == "latex") return ribbon::PolyStyle::latex;
    if (name == "json") return ribbon::PolyStyle::json;
    throw std::invalid_argument("unknown format: " + name);
}

ribbon::Orientation parse_orientation(const std::string& name) {
    if (name == "top-down") return ribbon::Orientation::top_down;
    if (name == "bottom-up") return ribbon::Orientation::bottom_up;
    throw std::invalid_argument("unknown orientation: " + name);
}

std::string format_spin2(int spin2) {
    if (spin2 % 2 == 0) return std::to_string(spin2 / 2);
    return std::to_string(spin2) + "/2";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run(int argc, char** argv) {
    CLI::App app{"k-ribbon tableau toolkit"};
    app.require_subcommand(1);

    ShapeArgs poly_args;
    bool cospin = false, no_memo = false;
    std::string poly_format = "plain";
    auto* poly_cmd = app.add_subcommand("spin-poly", "spin or cospin polynomial");
    add_shape_options(poly_cmd, poly_args, true);
    poly_cmd->add_flag("--cospin", cospin, "cospin polynomial instead of spin");
    poly_cmd->add_flag("--no-memo", no_memo, "walk every tableau instead of memoizing");
    poly_cmd->add_option("--format", poly_format, "plain|latex|json");

    ShapeArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "number of tableaux");
    add_shape_options(count_cmd, count_args, true);

    ShapeArgs gen_args;
    long long limit = 0;
    std::string gen_format = "matrix";
    std::string gen_orientation = "top-down";
    auto* gen_cmd = app.add_subcommand("generate", "stream every tableau");
    add_shape_options(gen_cmd, gen_args, true);
    gen_cmd->add_option("--limit", limit, "stop after N tableaux (0 = all)");
    gen_cmd->add_option("--format", gen_format, "json|ascii|matrix");
    gen_cmd->add_option("--orientation", gen_orientation, "top-down|bottom-up");

    ShapeArgs stats_args;
    auto* stats_cmd = app.add_subcommand("stats", "per-label node and shape counts");
    add_shape_options(stats_cmd, stats_args, true);

    std::string matrix_file;
    int decode_ribbon = 0;
    std::string decode_orientation = "top-down";
    auto* decode_cmd = app.add_subcommand("decode", "decode a head matrix file");
    decode_cmd->add_option("--matrix", matrix_file, "matrix file, one row per line")->required();
    decode_cmd->add_option("--ribbon", decode_ribbon, "ribbon order k")->required();
    decode_cmd->add_option("--orientation", decode_orientation, "top-down|bottom-up");

    std::string grid_file;
    int encode_ribbon = 0;
    std::string encode_orientation = "top-down";
    auto* encode_cmd = app.add_subcommand("encode", "head matrix from a cell-label grid");
    encode_cmd->add_option("--grid", grid_file, "label per cell, -1 on inner cells")->required();
    encode_cmd->add_option("--ribbon", encode_ribbon, "ribbon order k")->required();
    encode_cmd->add_option("--orientation", encode_orientation, "top-down|bottom-up");

    ShapeArgs max_args;
    auto* max_cmd = app.add_subcommand("max-spin", "maximum tiling spin");
    add_shape_options(max_cmd, max_args, false);

    std::string verify_outer, verify_inner, verify_weight;
    std::vector<int> verify_ribbons;
    int verify_max_cells = 9;
    int verify_parallel = 1;
    auto* verify_cmd = app.add_subcommand("verify", "generator vs brute-force oracle");
    verify_cmd->add_option("--max-cells", verify_max_cells, "outer size bound for the sweep");
    verify_cmd->add_option("--ribbon", verify_ribbons, "ribbon orders (default 1 2 3)");
    verify_cmd->add_option("--outer", verify_outer, "check a single shape instead of sweeping");
    verify_cmd->add_option("--inner", verify_inner, "inner partition for --outer");
    verify_cmd->add_option("--weight", verify_weight, "single weight for --outer");
    verify_cmd->add_option("--parallel", verify_parallel, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (poly_cmd->parsed()) {
            const ribbon::GenOptions options{!no_memo, poly_args.parallel};
            const auto shape = parse_shape(poly_args);
            const auto weight = parse_weight(poly_args.weight);
            const ribbon::SpinPolynomial poly =
                cospin ? ribbon::cospin_polynomial(shape, poly_args.ribbon, weight, options)
                       : ribbon::spin_polynomial(shape, poly_args.ribbon, weight, options);
            std::cout << poly.format(parse_poly_style(poly_format)) << "\n";
        } else if (count_cmd->parsed()) {
            const auto shape = parse_shape(count_args);
            const auto weight = parse_weight(count_args.weight);
            const ribbon::GenOptions options{true, count_args.parallel};
            std::cout << ribbon::spin_polynomial(shape, count_args.ribbon, weight, options)
                             .eval_one()
                             .str()
                      << "\n";
        } else if (gen_cmd->parsed()) {
            const auto shape = parse_shape(gen_args);
            const auto weight = parse_weight(gen_args.weight);
            const auto orientation = parse_orientation(gen_orientation);
            if (gen_format != "json" && gen_format != "ascii" && gen_format != "matrix")
                throw std::invalid_argument("unknown format: " + gen_format);
            long long emitted = 0;
            bool first = true;
            ribbon::enumerate_tableaux(
                shape, gen_args.ribbon, weight,
                [&](const ribbon::HeadArray& array, int spin2) {
                    if (gen_format == "json") {
                        nlohmann::json record{{"heads", array.rows()}, {"spin2", spin2}};
                        std::cout << record.dump() << "\n";
                    } else if (gen_format == "matrix") {
                        if (!first) std::cout << "\n";
                        std::cout << array.to_text(orientation);
                    } else {
                        if (!first) std::cout << "\n";
                        std::cout << ribbon::render_text(ribbon::decode(array)) << "\n"
                                  << "spin: " << format_spin2(spin2) << "\n";
                    }
                    first = false;
                    ++emitted;
                    return limit == 0 || emitted < limit;
                },
                {true, gen_args.parallel});
        } else if (stats_cmd->parsed()) {
            const auto shape = parse_shape(stats_args);
            const auto weight = parse_weight(stats_args.weight);
            const ribbon::GenOptions options{true, stats_args.parallel};
            const ribbon::LevelStats stats =
                ribbon::level_stats(shape, stats_args.ribbon, weight, options);
            for (size_t i = 0; i < stats.nodes.size(); ++i)
                std::cout << (i ? "," : "") << stats.nodes[i].str();
            std::cout << "\n";
            for (size_t i = 0; i < stats.distinct_shapes.size(); ++i)
                std::cout << (i ? "," : "") << stats.distinct_shapes[i];
            std::cout << "\n";
        } else if (decode_cmd->parsed()) {
            const auto array = ribbon::HeadArray::parse_text(
                read_file(matrix_file), decode_ribbon, parse_orientation(decode_orientation));
            const ribbon::RibbonTableau tableau = ribbon::decode(array);
            std::cout << ribbon::render_text(tableau) << "\n";
            std::cout << "shape: " << tableau.shape().outer().to_string();
            if (!tableau.shape().inner().empty())
                std::cout << " / " << tableau.shape().inner().to_string();
            std::cout << "\n";
            const auto weight = ribbon::tableau_weight(tableau);
            std::cout << "weight: ";
            for (size_t i = 0; i < weight.size(); ++i) std::cout << (i ? "," : "") << weight[i];
            std::cout << "\n";
            std::cout << "spin: " << format_spin2(ribbon::tableau_spin2(tableau)) << "\n";
        } else if (encode_cmd->parsed()) {
            const auto orientation = parse_orientation(encode_orientation);
            const ribbon::RibbonTableau tableau =
                ribbon::tableau_from_grid(read_file(grid_file), encode_ribbon, orientation);
            std::cout << ribbon::encode(tableau).to_text(orientation);
        } else if (max_cmd->parsed()) {
            const auto shape = parse_shape(max_args);
            const ribbon::GenOptions options{true, max_args.parallel};
            std::cout << format_spin2(ribbon::max_spin2(shape, max_args.ribbon, options)) << "\n";
        } else if (verify_cmd->parsed()) {
            ribbon::SweepOptions options;
            options.max_cells = verify_max_cells;
            options.threads = verify_parallel;
            if (!verify_ribbons.empty()) options.ribbon_orders = verify_ribbons;
            ribbon::SweepReport report;
            if (!verify_outer.empty()) {
                const ribbon::SkewShape shape{ribbon::Partition::parse(verify_outer),
                                              ribbon::Partition::parse(verify_inner)};
                std::optional<std::vector<int>> weight;
                if (!verify_weight.empty()) weight = parse_weight(verify_weight);
                if (verify_ribbons.size() != 1)
                    throw std::invalid_argument("--outer needs exactly one --ribbon");
                report = ribbon::verify_instance(shape, verify_ribbons[0], weight, options);
            } else {
                report = ribbon::oracle_sweep(options);
            }
            std::cout << report.summary() << "\n";
            if (!report.clean()) return kExitMismatch;
        }
    } catch (const ribbon::NoTiling& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
