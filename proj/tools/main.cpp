// Command-line front end: parsing, validation, matrix and DOT export for
// hypergraphs, chemical systems and reaction networks.
//
// Exit codes: 0 success, 1 input-content failure (violations are printed to
// stderr one per line), 2 usage error. Payload goes to --out or stdout;
// diagnostics never touch the output stream.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <hypernest/hypernest.hpp>

namespace {

using namespace hypernest;

// Command-line level problem: wrong flags, unreadable files, bad format.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool color_enabled() {
    const char* value = std::getenv("HYPERNEST_COLOR");
    return value && std::string(value) == "1";
}

void diagnose(const std::string& prefix, const std::string& message) {
    if (color_enabled())
        std::cerr << "\033[31m" << prefix << "\033[0m" << message << "\n";
    else
        std::cerr << prefix << message << "\n";
}

void report_error(const std::string& message) { diagnose("error: ", message); }
void report_violation(const std::string& message) { diagnose("violation: ", message); }

enum class Format { Canonical, CrnDsl, ChemDoc };

struct IoOptions {
    std::string input_path; // empty or "-" reads stdin
    std::string out_path;   // empty writes stdout
    std::string format_name;
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", io.input_path, "input file (defaults to stdin)");
    cmd->add_option("--out", io.out_path, "write output to this file instead of stdout");
    cmd->add_option("--format", io.format_name, "input format override")
        ->check(CLI::IsMember({"canonical", "crn", "chem"}));
}

Format detect_format(const IoOptions& io, Format fallback) {
    if (io.format_name == "canonical") return Format::Canonical;
    if (io.format_name == "crn") return Format::CrnDsl;
    if (io.format_name == "chem") return Format::ChemDoc;
    const std::string& path = io.input_path;
    if (path.empty() || path == "-") return fallback;
    if (path.ends_with(".hg")) return Format::Canonical;
    if (path.ends_with(".crn")) return Format::CrnDsl;
    if (path.ends_with(".chem")) return Format::ChemDoc;
    throw UsageError("cannot infer format of '" + path + "'; pass --format");
}

std::string read_input(const IoOptions& io) {
    if (io.input_path.empty() || io.input_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(io.input_path, std::ios::binary);
    if (!in) throw UsageError("cannot read input file '" + io.input_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const IoOptions& io, const std::string& payload) {
    if (io.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(io.out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write output file '" + io.out_path + "'");
    out << payload;
}

// Parses and validates a reaction network; error-level violations abort with
// content failure, warnings are only reported.
Crn load_crn(const std::string& text) {
    Crn crn = parse_crn(text);
    std::vector<Violation> violations = validate(crn);
    for (const Violation& v : violations) report_violation(v.message);
    if (!is_valid(violations)) throw std::runtime_error("invalid reaction network");
    return crn;
}

Hypergraph load_hypergraph(const std::string& text, Format format) {
    switch (format) {
    case Format::Canonical: return from_canonical(text);
    case Format::ChemDoc: return build_chemical_hypergraph(parse_chemical_system(text));
    case Format::CrnDsl: return to_reaction_hypergraph(load_crn(text));
    }
    throw UsageError("unreachable format");
}

std::string kind_name(HypergraphKind kind) {
    if (kind.is_simple()) return "simple";
    if (kind.nested && kind.directed) return "nested directed";
    return kind.nested ? "nested" : "directed";
}

int cmd_validate(const IoOptions& io) {
    std::string text = read_input(io);
    switch (detect_format(io, Format::Canonical)) {
    case Format::Canonical: from_canonical(text); break;
    case Format::ChemDoc: build_chemical_hypergraph(parse_chemical_system(text)); break;
    case Format::CrnDsl: load_crn(text); break;
    }
    write_output(io, "ok\n");
    return 0;
}

int cmd_classify(const IoOptions& io) {
    Hypergraph g = load_hypergraph(read_input(io), detect_format(io, Format::Canonical));
    write_output(io, kind_name(g.classify()) + "\n");
    return 0;
}

int cmd_matrix(const IoOptions& io, const std::string& kind) {
    std::string text = read_input(io);
    if (kind == "stoich-complexes" || kind == "stoich-reactions") {
        Format format = detect_format(io, Format::CrnDsl);
        if (format != Format::CrnDsl)
            throw UsageError("matrix kind '" + kind + "' needs reaction-network input");
        Crn crn = load_crn(text);
        write_output(io, to_csv(kind == "stoich-complexes" ? stoichiometric_complexes(crn)
                                                           : stoichiometric_reactions_signed(crn)));
        return 0;
    }
    Hypergraph g = load_hypergraph(text, detect_format(io, Format::Canonical));
    if (kind == "incidence") {
        write_output(io, to_csv(incidence(g)));
    } else if (kind == "signed") {
        write_output(io, to_csv(directed_incidence_signed(g)));
    } else { // split
        SplitIncidence split = directed_incidence_split(g);
        write_output(io, to_csv(split.source) + "\n" + to_csv(split.target));
    }
    return 0;
}

int cmd_dot(const IoOptions& io) {
    Hypergraph g = load_hypergraph(read_input(io), detect_format(io, Format::Canonical));
    write_output(io, to_dot(g));
    return 0;
}

int cmd_crn_parse(const IoOptions& io, const std::string& matrix_kind) {
    Crn crn = load_crn(read_input(io));
    if (matrix_kind.empty())
        write_output(io, render_crn(crn));
    else
        write_output(io, to_csv(matrix_kind == "complexes" ? stoichiometric_complexes(crn)
                                                           : stoichiometric_reactions_signed(crn)));
    return 0;
}

int cmd_crn_hypergraph(const IoOptions& io) {
    write_output(io, to_canonical(to_reaction_hypergraph(load_crn(read_input(io)))));
    return 0;
}

int cmd_chem_build(const IoOptions& io, const std::string& molecule) {
    ChemicalSystemSpec spec = parse_chemical_system(read_input(io));
    if (molecule.empty()) {
        write_output(io, to_canonical(build_chemical_hypergraph(spec)));
        return 0;
    }
    const MoleculeSpec* m = spec.find_molecule(molecule);
    if (!m) throw std::runtime_error("document declares no molecule '" + molecule + "'");
    write_output(io, to_canonical(build_molecular_hypergraph(*m)));
    return 0;
}

int cmd_example(const IoOptions& io, const std::string& name) {
    if (name == "benzene") {
        ChemicalSystemSpec spec;
        spec.molecules = {benzene_fixture()};
        write_output(io, render_chemical_system(spec));
    } else if (name == "hydrogenation") {
        write_output(io, render_chemical_system(hydrogenation_fixture()));
    } else if (name == "feinberg") {
        write_output(io, feinberg_fixture());
    } else if (name == "metabolic") {
        write_output(io, metabolic_fixture());
    } else if (name == "lesmis") {
        write_output(io, to_canonical(lesmis_fixture()));
    } else {
        throw UsageError("unknown example '" + name + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unified hypergraph toolkit: molecular, multilevel chemical and "
                 "reaction-network hypergraphs"};
    app.require_subcommand(1);

    std::function<int()> run;

    IoOptions validate_io;
    add_io_options(app.add_subcommand("validate", "check an input document"), validate_io);

    IoOptions classify_io;
    add_io_options(app.add_subcommand("classify", "report simple/nested/directed"), classify_io);

    IoOptions matrix_io;
    std::string matrix_kind;
    CLI::App* matrix_cmd = app.add_subcommand("matrix", "emit a matrix as CSV");
    matrix_cmd
        ->add_option("--kind", matrix_kind, "matrix kind")
        ->required()
        ->check(CLI::IsMember({"incidence", "split", "signed", "stoich-complexes",
                               "stoich-reactions"}));
    add_io_options(matrix_cmd, matrix_io);

    IoOptions dot_io;
    add_io_options(app.add_subcommand("dot", "emit DOT"), dot_io);

    IoOptions crn_parse_io;
    std::string crn_matrix;
    CLI::App* crn_parse_cmd =
        app.add_subcommand("crn-parse", "parse and validate a reaction list");
    crn_parse_cmd->add_option("--matrix", crn_matrix, "emit a stoichiometric matrix instead")
        ->check(CLI::IsMember({"complexes", "reactions"}));
    add_io_options(crn_parse_cmd, crn_parse_io);

    IoOptions crn_hg_io;
    add_io_options(app.add_subcommand("crn-hypergraph", "compile a reaction list to a hypergraph"),
                   crn_hg_io);

    IoOptions chem_io;
    std::string chem_molecule;
    CLI::App* chem_cmd =
        app.add_subcommand("chem-build", "compile a chemical system to a hypergraph");
    chem_cmd->add_option("--molecule", chem_molecule,
                         "build the molecular hypergraph of one named molecule instead");
    add_io_options(chem_cmd, chem_io);

    IoOptions example_io;
    std::string example_name;
    CLI::App* example_cmd = app.add_subcommand("example", "emit a built-in worked example");
    example_cmd->add_option("name", example_name, "benzene|hydrogenation|feinberg|metabolic|lesmis")
        ->required();
    add_io_options(example_cmd, example_io, /*with_input=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        report_error(err.what());
        return 2;
    }

    if (app.got_subcommand("validate")) run = [&] { return cmd_validate(validate_io); };
    if (app.got_subcommand("classify")) run = [&] { return cmd_classify(classify_io); };
    if (app.got_subcommand("matrix")) run = [&] { return cmd_matrix(matrix_io, matrix_kind); };
    if (app.got_subcommand("dot")) run = [&] { return cmd_dot(dot_io); };
    if (app.got_subcommand("crn-parse")) run = [&] { return cmd_crn_parse(crn_parse_io, crn_matrix); };
    if (app.got_subcommand("crn-hypergraph")) run = [&] { return cmd_crn_hypergraph(crn_hg_io); };
    if (app.got_subcommand("chem-build"))
        run = [&] { return cmd_chem_build(chem_io, chem_molecule); };
    if (app.got_subcommand("example")) run = [&] { return cmd_example(example_io, example_name); };

    try {
        return run();
    } catch (const UsageError& err) {
        report_error(err.what());
        return 2;
    } catch (const std::exception& err) {
        report_violation(err.what());
        return 1;
    }
}
