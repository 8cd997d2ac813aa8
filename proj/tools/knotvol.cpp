// knotvol: diagram-based upper bounds on hyperbolic link volumes.
//
// Reads `name: X(a,b,c,d),...` lines, evaluates the selected volume bounds on
// each diagram, and emits a CSV or JSON report.  --verify runs the numeric
// self-checks (volume table, drop constants, log bounds, maximizer).

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotvol/batch.hpp"
#include "knotvol/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"diagram-based upper bounds on hyperbolic link volumes"};
    app.get_formatter()->column_width(34);

    std::string input;
    std::string reference;
    std::string bounds = "all";
    std::string format = "csv";
    bool assert_twist_reduced = false;
    bool verify = false;
    bool full_precision = false;

    app.add_option("--input", input, "batch file: one 'name: X(...),...' per line");
    app.add_option("--reference", reference, "reference volumes: 'name,volume' per line");
    app.add_option("--bounds", bounds, "'all' or comma list (tetrahedral,octahedral,...)")
        ->capture_default_str();
    app.add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_flag("--assert-twist-reduced", assert_twist_reduced,
                 "assert the input diagrams are twist reduced (gates the BCB bound)");
    app.add_flag("--verify", verify, "run the geometry verification suite and exit");
    app.add_flag("--full-precision", full_precision, "emit full double precision values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cout << (e.get_exit_code() == 0 ? app.help() : "");
        if (e.get_exit_code() != 0) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
        return 0;
    }

    if (verify) {
        return knotvol::verify_geometry(std::cout) == 0 ? 0 : 1;
    }
    if (input.empty()) {
        std::cerr << "error: --input is required (or use --verify)\n";
        return 2;
    }

    knotvol::BatchConfig config;
    config.input_path = input;
    if (!reference.empty()) config.reference_path = reference;
    config.format = format == "json" ? knotvol::OutputFormat::json : knotvol::OutputFormat::csv;
    config.assert_twist_reduced = assert_twist_reduced;
    config.full_precision = full_precision;

    if (bounds != "all") {
        config.bounds.clear();
        std::size_t pos = 0;
        while (pos <= bounds.size()) {
            const auto comma = bounds.find(',', pos);
            const std::string tok =
                bounds.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!tok.empty()) {
                const auto bn = knotvol::bound_from_string(tok);
                if (!bn) {
                    std::cerr << "error: unknown bound name '" << tok << "'\n";
                    return 2;
                }
                config.bounds.push_back(*bn);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (config.bounds.empty()) {
            std::cerr << "error: empty bound selection\n";
            return 2;
        }
    }

    const knotvol::BatchResult result = knotvol::run_batch(config, std::cout, std::cerr);
    return result.exit_code;
}
