// symclass - classify symplectic matrices and Wonenburger triples in the
// GIT quotients of Sp(4), analyze one-parameter families for bifurcations,
// and draw the stability diagram of the base plane.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "symclass/report.hpp"
#include "symclass/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

double env_default_tol() {
    if (const char* s = std::getenv("SYMCLASS_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end != s && v > 0) return v;
        std::cerr << "warning: ignoring invalid SYMCLASS_TOL\n";
    }
    return 1e-9;
}

struct CommonFlags {
    std::string input;
    double tol = env_default_tol();
    bool tol_given = false;
    std::string quotient;
};

symclass::InputDocument load(const CommonFlags& flags) {
    symclass::InputDocument doc = symclass::load_input(flags.input);
    // Priority: explicit flag > file settings block > SYMCLASS_TOL > default.
    if (flags.tol_given)
        doc.tol = flags.tol;
    else if (!doc.tol_from_file)
        doc.tol = flags.tol;
    if (!flags.quotient.empty())
        doc.quotient = flags.quotient == "Sp4" ? symclass::Quotient::Sp4
                                               : symclass::Quotient::SpI;
    return doc;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const symclass::Json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const symclass::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Classification of 2x2 and 4x4 symplectic matrices: strata, "
        "B/Krein signatures, normal forms, stability, and topological "
        "obstructions to orbit cylinders."};
    app.require_subcommand(1);

    CommonFlags classify_flags;
    bool classify_pretty = true;
    CLI::App* classify = app.add_subcommand(
        "classify", "Full report for a single triple or matrix");
    classify->add_option("input", classify_flags.input, "JSON input file")
        ->required();
    classify->add_option("--tol", classify_flags.tol, "comparison tolerance");
    classify->add_option("--quotient", classify_flags.quotient,
                         "SpI or Sp4 (affects component ids shown)")
        ->check(CLI::IsMember({"SpI", "Sp4"}));
    (void)classify_pretty;

    CommonFlags nf_flags;
    CLI::App* nf = app.add_subcommand(
        "normal-form", "Representative-only view of the classification");
    nf->add_option("input", nf_flags.input, "JSON input file")->required();
    nf->add_option("--tol", nf_flags.tol, "comparison tolerance");

    CommonFlags fam_flags;
    int fam_kmax = 6;
    std::string csv_out;
    CLI::App* family = app.add_subcommand(
        "family", "Scan a one-parameter family for wall crossings");
    family->add_option("input", fam_flags.input, "JSON family file")->required();
    family->add_option("--tol", fam_flags.tol, "comparison tolerance");
    family->add_option("--k-max", fam_kmax, "resonance pencil order (>= 3)");
    family->add_option("--quotient", fam_flags.quotient, "SpI or Sp4")
        ->check(CLI::IsMember({"SpI", "Sp4"}));
    family->add_option("--csv-out", csv_out, "write samples as CSV");

    symclass::DiagramOptions dopts;
    std::string svg_out = "diagram.svg";
    std::string overlay_path;
    int diag_kmax = 0;
    CLI::App* diagram =
        app.add_subcommand("diagram", "Render the stability diagram as SVG");
    diagram->add_option("--xrange", dopts.x_max, "tau half-range (plot is symmetric)");
    diagram->add_option("--yrange", dopts.y_max, "delta half-range");
    diagram->add_option("--k-max", diag_kmax, "overlay the resonance pencil");
    diagram->add_option("--overlay", overlay_path, "family JSON to overlay");
    diagram->add_option("--out", svg_out, "output SVG path");

    CLI11_PARSE(app, argc, argv);

    classify_flags.tol_given = classify->count("--tol") > 0;
    nf_flags.tol_given = nf->count("--tol") > 0;
    fam_flags.tol_given = family->count("--tol") > 0;

    if (classify->parsed()) {
        return guarded([&] {
            const auto doc = load(classify_flags);
            std::cout << symclass::classify_report(doc).dump(2) << "\n";
            return kExitOk;
        });
    }
    if (nf->parsed()) {
        return guarded([&] {
            const auto doc = load(nf_flags);
            std::cout << symclass::normal_form_report(doc).dump(2) << "\n";
            return kExitOk;
        });
    }
    if (family->parsed()) {
        return guarded([&] {
            auto doc = load(fam_flags);
            doc.k_max = fam_kmax;
            const symclass::FamilyOutput out = symclass::family_report(doc);
            std::cout << out.table << "---\n" << out.document.dump(2) << "\n";
            if (!csv_out.empty()) {
                std::ofstream f(csv_out, std::ios::binary);
                if (!f) throw std::ios_base::failure("cannot write " + csv_out);
                f << out.csv;
            }
            return kExitOk;
        });
    }
    // diagram
    return guarded([&] {
        dopts.x_min = -dopts.x_max;
        dopts.y_min = -dopts.y_max;
        dopts.k_max = diag_kmax;
        const symclass::PathReport* overlay = nullptr;
        symclass::PathReport overlay_report;
        if (!overlay_path.empty()) {
            CommonFlags f;
            f.input = overlay_path;
            auto doc = load(f);
            overlay_report =
                symclass::analyze_path(doc.family, doc.k_max, doc.tol);
            overlay = &overlay_report;
        }
        const std::string svg = symclass::render_diagram(dopts, overlay);
        std::ofstream out(svg_out, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot write " + svg_out);
        out << svg;
        std::cout << "wrote " << svg_out << "\n";
        return kExitOk;
    });
}
