#include "symclass/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace symclass {

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

namespace {

Mat mat_from_json(const Json& j, int n, const std::string& field) {
    if (!j.is_array() || int(j.size()) != n * n)
        throw InvalidInput(field + " must be a row-major array of " +
                           std::to_string(n * n) + " numbers");
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Json& cell = j[size_t(i * n + k)];
            if (!cell.is_number())
                throw InvalidInput(field + " entries must be numbers");
            m(i, k) = cell.get<double>();
        }
    if (!m.is_finite()) throw InvalidInput(field + " entries must be finite");
    return m;
}

int block_dim(const Json& j, const std::string& field) {
    if (!j.is_array()) throw InvalidInput(field + " must be an array");
    switch (j.size()) {
        case 1: return 1;
        case 4: return 2;
        case 16: return 4;
        default:
            throw InvalidInput(field + " must hold 1, 4, or 16 numbers");
    }
}

WonenburgerTriple triple_from_json(const Json& j, double tol) {
    if (j.contains("M")) {
        const int dim = block_dim(j.at("M"), "M");
        if (dim == 1) throw InvalidInput("M must be 2x2 or 4x4");
        return from_matrix(mat_from_json(j.at("M"), dim, "M"), tol);
    }
    for (const char* field : {"A", "B", "C"})
        if (!j.contains(field))
            throw InvalidInput(std::string("missing field ") + field);
    int n = j.contains("n") ? j.at("n").get<int>() : block_dim(j.at("A"), "A");
    if (n != 1 && n != 2) throw InvalidInput("n must be 1 or 2");
    return validate_triple(mat_from_json(j.at("A"), n, "A"),
                           mat_from_json(j.at("B"), n, "B"),
                           mat_from_json(j.at("C"), n, "C"), tol);
}

Json mat_to_json(const Mat& m) {
    Json a = Json::array();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) a.push_back(m(i, j));
    return a;
}

Json complex_to_json(cd z) { return Json::array({z.real(), z.imag()}); }

std::string stability_name(StabilityKind k) {
    switch (k) {
        case StabilityKind::Unstable: return "unstable";
        case StabilityKind::StableNotStrong: return "stable-not-strong";
        case StabilityKind::StronglyStable: return "strongly-stable";
    }
    return "?";
}

std::string sign_name(BSign s) {
    switch (s) {
        case BSign::Positive: return "+";
        case BSign::Negative: return "-";
        case BSign::Zero: return "0";
    }
    return "?";
}

Json planar_class_to_json(const PlanarClass& c) {
    Json j;
    switch (c.chart) {
        case PlanarClass::Chart::Circle:
            j["chart"] = "circle";
            j["theta"] = c.theta;
            break;
        case PlanarClass::Chart::HyperbolaPoint:
            j["chart"] = "hyperbola";
            j["cosh_part"] = c.cosh_part;
            j["sinh_part"] = c.sinh_part;
            break;
        case PlanarClass::Chart::RealRay:
            j["chart"] = "ray";
            j["r"] = c.r;
            break;
    }
    return j;
}

Json spectrum_to_json(const Spectrum& spec) {
    Json arr = Json::array();
    for (const auto& e : spec.values) {
        Json ev;
        ev["value"] = complex_to_json(e.value);
        ev["multiplicity"] = e.multiplicity;
        ev["semisimple"] = e.semisimple;
        arr.push_back(ev);
    }
    return arr;
}

Json normal_form_to_json(const NormalForm& nf) {
    Json j;
    j["stratum"] = to_string(nf.stratum.label);
    j["parameters"] = nf.parameters;
    j["sign_pattern"] = nf.sign_pattern;
    j["representative"]["A"] = mat_to_json(nf.representative.A);
    j["representative"]["B"] = mat_to_json(nf.representative.B);
    j["representative"]["C"] = mat_to_json(nf.representative.C);
    if (nf.realizing) j["realizing"] = mat_to_json(nf.realizing->R);
    else j["realizing"] = nullptr;
    j["git_collapsed"] = nf.git_collapsed;
    return j;
}

}  // namespace

InputDocument parse_input(const std::string& raw) {
    const Json j = Json::parse(raw);  // parse_error propagates (I/O class)
    InputDocument doc;
    doc.hash = fnv1a_hex(raw);
    if (j.contains("schema")) doc.schema = j.at("schema").get<int>();
    if (doc.schema != 1) throw InvalidInput("unsupported schema version");

    if (j.contains("settings")) {
        const Json& s = j.at("settings");
        if (s.contains("tol")) {
            doc.tol = s.at("tol").get<double>();
            doc.tol_from_file = true;
        }
        if (s.contains("k_max")) doc.k_max = s.at("k_max").get<int>();
        if (s.contains("quotient")) {
            const std::string q = s.at("quotient").get<std::string>();
            if (q == "SpI") doc.quotient = Quotient::SpI;
            else if (q == "Sp4") doc.quotient = Quotient::Sp4;
            else throw InvalidInput("quotient must be \"SpI\" or \"Sp4\"");
        }
        if (doc.tol <= 0 || !std::isfinite(doc.tol))
            throw InvalidInput("tol must be a positive number");
        if (doc.k_max < 1) throw InvalidInput("k_max must be >= 1");
    }

    if (j.contains("family")) {
        const Json& fam = j.at("family");
        if (!fam.is_array() || fam.size() < 2)
            throw InvalidInput("family must be an array of >= 2 samples");
        double prev = 0.0;
        bool first = true;
        for (const Json& item : fam) {
            if (!item.contains("param"))
                throw InvalidInput("family samples need a param field");
            const double p = item.at("param").get<double>();
            if (!first && !(p > prev))
                throw InvalidInput("family parameters must increase strictly");
            first = false;
            prev = p;
            doc.family.emplace_back(p, triple_from_json(item, doc.tol));
        }
        doc.n = doc.family.front().second.n;
        return doc;
    }

    doc.triple = triple_from_json(j, doc.tol);
    doc.n = doc.triple->n;
    return doc;
}

InputDocument load_input(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_input(ss.str());
}

Json classify_report(const InputDocument& in) {
    if (!in.triple) throw InvalidInput("classify expects a single class input");
    const WonenburgerTriple& t = *in.triple;
    const double tol = in.tol;

    Json r;
    r["input_hash"] = in.hash;
    r["n"] = t.n;
    r["tolerance"] = tol;

    const Mat m = assemble(t);
    r["eigenvalues"]["A"] = spectrum_to_json(eigs(t.A, tol));
    r["eigenvalues"]["M"] = spectrum_to_json(eigs(m, tol));

    if (t.n == 1) {
        const PlanarModel pm = planar_model(t, tol);
        r["planar"]["sp_i"] = planar_class_to_json(pm.sp_i);
        r["planar"]["sp2"] = planar_class_to_json(pm.sp2);
        r["planar"]["base"] = pm.base;
        r["stability"] = stability_name(stability_check(m, tol).kind);
        return r;
    }

    const BasePoint base = base_from_triple(t);
    const Stratum st = classify_base(base, tol);
    r["base_point"]["tau"] = base.tau;
    r["base_point"]["delta"] = base.delta;
    r["stratum"]["label"] = to_string(st.label);
    r["stratum"]["kind"] = st.kind == StratumKind::Region ? "region"
                           : st.kind == StratumKind::WallBranch ? "wall-branch"
                                                                : "singular-point";
    r["stratum"]["on_bifurcation_locus"] = on_bifurcation_locus(st.label);
    if (st.singular_adjacent) r["stratum"]["singular_adjacent"] = true;

    try {
        Json bt = Json::array();
        for (const BType& b : b_signature(t, tol)) {
            Json e;
            e["mu"] = b.mu;
            e["sign"] = sign_name(b.sign);
            e["b"] = b.b_value;
            bt.push_back(e);
        }
        r["b_types"] = bt;
    } catch (const Error&) {
        // none over N / Jordan classes
    }

    try {
        Json kr = Json::array();
        for (const KreinEntry& k : krein_from_btype(t, tol)) {
            Json e;
            e["lambda"] = complex_to_json(k.lambda);
            e["p"] = k.p;
            e["q"] = k.q;
            kr.push_back(e);
        }
        r["krein"] = kr;
    } catch (const Error&) {
        // no elliptic eigenvalues
    }

    const StabilityVerdict sv = stability_check(m, tol);
    r["stability"]["verdict"] = stability_name(sv.kind);
    if (sv.kind != StabilityKind::StronglyStable)
        r["stability"]["witness"] = complex_to_json(sv.witness);

    const SheetLabel spi = quotient_label(t, Quotient::SpI, tol);
    const SheetLabel sp4 = project_label(spi);
    r["labels"]["SpI"] = to_string(spi);
    r["labels"]["Sp4"] = to_string(sp4);

    if (!on_bifurcation_locus(st.label)) {
        r["components"]["SpI"] = component_id(t, Quotient::SpI, tol);
        r["components"]["Sp4"] = component_id(t, Quotient::Sp4, tol);
        const ComponentGraph& g = component_graph(Quotient::SpI);
        const int idx = g.node_index(spi.stratum, spi.decoration);
        r["strongly_stable_component"] =
            idx >= 0 && g.nodes[size_t(idx)].strongly_stable_component;
    } else {
        r["components"] = nullptr;
        r["note"] = "class lies on the bifurcation locus";
    }

    r["normal_form"] = normal_form_to_json(normal_form(t, tol));
    return r;
}

Json normal_form_report(const InputDocument& in) {
    if (!in.triple) throw InvalidInput("normal-form expects a single class input");
    if (in.triple->n != 2)
        throw WrongDimension("normal forms are for n = 2 inputs");
    Json r;
    r["input_hash"] = in.hash;
    r["normal_form"] = normal_form_to_json(normal_form(*in.triple, in.tol));
    return r;
}

Json path_report_to_json(const PathReport& report, Quotient q) {
    Json j;
    Json samples = Json::array();
    for (const PathSample& s : report.samples) {
        Json e;
        e["param"] = s.param;
        e["tau"] = s.base.tau;
        e["delta"] = s.base.delta;
        e["label"] =
            to_string(q == Quotient::SpI ? s.spi_label : s.sp4_label);
        e["stability"] = stability_name(s.stability);
        samples.push_back(e);
    }
    j["samples"] = samples;

    Json events = Json::array();
    for (const PathEvent& ev : report.events) {
        Json e;
        e["param"] = ev.param;
        e["kind"] = to_string(ev.kind);
        e["line"] = ev.line;
        if (ev.kind == PathEventKind::ResonanceCrossing) {
            e["k"] = ev.k;
            e["ell"] = ev.ell;
        }
        if (ev.touch) e["touch"] = true;
        if (ev.kind == PathEventKind::StabilityTransition) {
            e["from"] = stability_name(ev.stability_from);
            e["to"] = stability_name(ev.stability_to);
        }
        events.push_back(e);
    }
    j["events"] = events;
    j["verdict"] = report.verdict == PathVerdict::Obstructed
                       ? "obstructed"
                       : "single-component";
    if (report.obstructing_event >= 0)
        j["obstructing_event"] = report.obstructing_event;
    return j;
}

FamilyOutput family_report(const InputDocument& in) {
    if (in.family.size() < 2)
        throw InvalidInput("family analysis expects a family input");
    const PathReport report = analyze_path(in.family, in.k_max, in.tol);

    FamilyOutput out;
    out.document = Json();
    out.document["input_hash"] = in.hash;
    out.document["quotient"] = to_string(in.quotient);
    out.document["report"] = path_report_to_json(report, in.quotient);

    std::ostringstream table;
    char line[160];
    std::snprintf(line, sizeof line, "%-14s %-22s %-16s %s\n", "param", "event",
                  "line", "detail");
    table << line;
    for (const PathEvent& ev : report.events) {
        std::string detail;
        if (ev.kind == PathEventKind::ResonanceCrossing)
            detail = "k=" + std::to_string(ev.k) + " ell=" + std::to_string(ev.ell);
        if (ev.kind == PathEventKind::StabilityTransition)
            detail = stability_name(ev.stability_from) + " -> " +
                     stability_name(ev.stability_to);
        if (ev.touch) detail += (detail.empty() ? "" : " ") + std::string("(touch)");
        std::snprintf(line, sizeof line, "%-14.8g %-22s %-16s %s\n", ev.param,
                      to_string(ev.kind).c_str(), ev.line.c_str(), detail.c_str());
        table << line;
    }
    table << "verdict: "
          << (report.verdict == PathVerdict::Obstructed ? "obstructed"
                                                        : "single-component")
          << "\n";
    out.table = table.str();

    std::ostringstream csv;
    csv << "param,tau,delta,label\n";
    for (const PathSample& s : report.samples) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,", s.param,
                      s.base.tau, s.base.delta);
        csv << line
            << to_string(in.quotient == Quotient::SpI ? s.spi_label : s.sp4_label)
            << "\n";
    }
    out.csv = csv.str();
    return out;
}

}  // namespace symclass
