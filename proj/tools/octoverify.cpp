// Command-line front end: runs the verification suites, renders the
// computed tables, and decomposes/branches representations on demand.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage
// error, 3 mathematical error reported by the engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "octo/characters.hpp"
#include "octo/checks.hpp"
#include "octo/errors.hpp"
#include "octo/root_system.hpp"
#include "octo/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_math = 3;

std::optional<std::string> default_output_dir() {
    const char* dir = std::getenv("OCTOVERIFY_OUT");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::string(dir);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw octo::Error("cannot write to '" + path + "'");
    out << content;
}

octo::Weight parse_weight(const octo::RootSystem& rs, const std::string& text) {
    octo::Vec coords;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            throw octo::UsageError("empty coordinate in weight '" + text + "'");
        try {
            coords.push_back(octo::Rational::from_string(tok));
        } catch (const std::exception&) {
            throw octo::UsageError("bad weight coordinate '" + tok + "'");
        }
    }
    if (static_cast<int>(coords.size()) != rs.ambient)
        throw octo::UsageError("weight needs " + std::to_string(rs.ambient) +
                               " coordinates for " + rs.label);
    return octo::weight_from_rationals(coords);
}

octo::Weight preset_weight(const octo::RootSystem& rs, const std::string& preset) {
    if (preset == "spinor16") {
        if (rs.label == "D5") return octo::half_spin_highest_weight(rs, +1);
        if (rs.label == "B4") return octo::spinor_highest_weight(rs);
        throw octo::UsageError("preset 'spinor16' is defined for D5 and B4");
    }
    if (preset == "spinor") return octo::spinor_highest_weight(rs);
    if (preset == "halfspin+") return octo::half_spin_highest_weight(rs, +1);
    if (preset == "halfspin-") return octo::half_spin_highest_weight(rs, -1);
    if (preset == "vector") return octo::vector_highest_weight(rs);
    if (preset == "adjoint") return octo::adjoint_highest_weight(rs);
    throw octo::UsageError("unknown weight preset '" + preset + "'");
}

octo::WeightProjection projection_between(const std::string& from, const std::string& to) {
    return octo::preset_projection(from + "->" + to);
}

std::string render_rep(const octo::RootSystem& rs, const octo::VirtualRep& rep,
                       const std::string& format) {
    if (format == "json")
        return octo::virtual_rep_to_json(rs, rep).dump(2) + "\n";
    std::ostringstream os;
    os << rep.algebra << ": " << octo::virtual_rep_to_string(rs, rep) << "\n";
    os << "| highest weight (x2 coords) | coeff | dim |\n|---|---|---|\n";
    for (const auto& [hw, coeff] : rep.terms) {
        os << "| (";
        for (std::size_t i = 0; i < hw.size(); ++i)
            os << (i ? "," : "") << hw[i];
        os << ") | " << coeff << " | " << octo::weyl_dim(rs, hw).to_string() << " |\n";
    }
    os << "total dim: " << octo::virtual_dimension(rs, rep).get_str() << "\n";
    return os.str();
}

int run_verify_command(const std::string& suite, const std::string& format,
                       const std::string& out_path) {
    const octo::Report report = octo::run_verify(suite);
    const std::string rendered = format == "json"
                                     ? octo::report_to_json(report).dump(2) + "\n"
                                     : octo::report_to_markdown(report);
    std::cout << rendered;
    std::string path = out_path;
    if (path.empty()) {
        if (auto dir = default_output_dir())
            path = *dir + "/report." + (format == "json" ? "json" : "md");
    }
    if (!path.empty()) {
        write_file(path, rendered);
        std::cerr << "report written to " << path << "\n";
    }
    return report.all_green() ? exit_ok : exit_check_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for octonion, spinor and root-system identities"};
    app.set_version_flag("--version", octo::engine_version);
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    std::string verify_format = "md";
    std::string out_path;
    verify->add_option("--suite", suite, "all, octonions, stabilizers, weyl, magic, multiplets, table35");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "md"}));
    verify->add_option("--out", out_path, "write the report to this path");

    // table
    auto* table = app.add_subcommand("table", "render a computed table");
    std::string table_name;
    table->add_option("name", table_name, "magic-square, sugra-triplet, table35, spheres")
        ->required();

    // decompose
    auto* dec = app.add_subcommand("decompose", "decompose a (power of a) representation");
    std::string dec_algebra, dec_hw, dec_preset, dec_branch_to;
    std::string dec_format = "md";
    long long dec_power = -1;
    dec->add_option("--algebra", dec_algebra, "root system label, e.g. D5")->required();
    dec->add_option("--hw", dec_hw, "highest weight coordinates, e.g. 1/2,1/2,1/2,1/2,1/2");
    dec->add_option("--preset", dec_preset, "spinor16, spinor, halfspin+, halfspin-, vector, adjoint");
    dec->add_option("--power", dec_power, "decompose the k-th alternating power");
    dec->add_option("--branch-to", dec_branch_to, "branch the result, e.g. B4");
    dec->add_option("--format", dec_format)->check(CLI::IsMember({"json", "md"}));

    // branch
    auto* br = app.add_subcommand("branch", "branch an irrep through a preset projection");
    std::string br_from, br_to, br_hw, br_preset;
    std::string br_format = "md";
    br->add_option("--from", br_from)->required();
    br->add_option("--to", br_to)->required();
    br->add_option("--hw", br_hw);
    br->add_option("--preset", br_preset);
    br->add_option("--format", br_format)->check(CLI::IsMember({"json", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify->parsed())
            return run_verify_command(suite, verify_format, out_path);

        if (table->parsed()) {
            std::cout << octo::render_table(table_name);
            return exit_ok;
        }

        if (dec->parsed()) {
            const octo::RootSystem rs = octo::build_root_system(dec_algebra);
            if (dec_hw.empty() == dec_preset.empty())
                throw octo::UsageError("decompose needs exactly one of --hw or --preset");
            const octo::Weight hw =
                dec_hw.empty() ? preset_weight(rs, dec_preset) : parse_weight(rs, dec_hw);
            octo::WeightMultiset ws = octo::irrep_character(rs, hw);
            if (dec_power >= 0)
                ws = octo::alt_power(ws, dec_power);
            octo::VirtualRep rep = octo::decompose(std::move(ws), rs);
            const octo::RootSystem* out_rs = &rs;
            octo::RootSystem target;
            if (!dec_branch_to.empty()) {
                target = octo::build_root_system(dec_branch_to);
                rep = octo::branch(rs, rep, target, projection_between(rs.label, target.label));
                out_rs = &target;
            }
            std::cout << render_rep(*out_rs, rep, dec_format);
            return exit_ok;
        }

        if (br->parsed()) {
            const octo::RootSystem from = octo::build_root_system(br_from);
            const octo::RootSystem to = octo::build_root_system(br_to);
            if (br_hw.empty() == br_preset.empty())
                throw octo::UsageError("branch needs exactly one of --hw or --preset");
            const octo::Weight hw =
                br_hw.empty() ? preset_weight(from, br_preset) : parse_weight(from, br_hw);
            octo::VirtualRep rep;
            rep.algebra = from.label;
            rep.terms[hw] = 1;
            const octo::VirtualRep out =
                octo::branch(from, rep, to, projection_between(from.label, to.label));
            std::cout << render_rep(to, out, br_format);
            return exit_ok;
        }
    } catch (const octo::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const octo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_math;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_math;
    }
    return exit_usage;
}
