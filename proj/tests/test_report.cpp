#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "symclass/report.hpp"
#include "symclass/svg.hpp"

using namespace symclass;
using namespace symclass::testing;

namespace {

std::string e2_input_json() {
    // E2 normal form with theta1 = 2.0 > theta2 = 1.0, signs (-,-)
    const WonenburgerTriple t = e2_form(2.0, 1.0, '-', '-');
    Json j;
    j["schema"] = 1;
    j["n"] = 2;
    Json a = Json::array(), b = Json::array(), c = Json::array();
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            a.push_back(t.A(i, k));
            b.push_back(t.B(i, k));
            c.push_back(t.C(i, k));
        }
    j["A"] = a;
    j["B"] = b;
    j["C"] = c;
    return j.dump();
}

}  // namespace

TEST_CASE("input parsing: triple, matrix, family, and failures") {
    const InputDocument doc = parse_input(e2_input_json());
    CHECK(doc.n == 2);
    CHECK(doc.triple.has_value());
    CHECK(doc.hash.substr(0, 6) == "fnv1a:");

    const InputDocument m = parse_input(
        R"({"schema":1,"M":[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]})");
    CHECK(m.triple.has_value());
    CHECK(m.n == 2);

    CHECK_THROWS_AS(parse_input(R"({"schema":1,"A":[1,0,0,1]})"), InvalidInput);
    CHECK_THROWS_AS(
        parse_input(R"({"schema":1,"A":[1,0,0,1],"B":[1,0,0,1],"C":[1,0,0,1]})"),
        StructureViolation);
    CHECK_THROWS_AS(parse_input("{"), Json::parse_error);
    CHECK_THROWS_AS(parse_input(R"({"schema":2,"M":[1]})"), InvalidInput);
    CHECK_THROWS_AS(
        parse_input(R"({"schema":1,"M":[2,0,0,0, 0,3,0,0, 0,0,0.5,0, 0,0,0,0.3333333333333333]})"),
        NotInSpI);
}

TEST_CASE("classify report carries the full classification") {
    const InputDocument doc = parse_input(e2_input_json());
    const Json r = classify_report(doc);
    CHECK(r.at("input_hash") == doc.hash);
    CHECK(r.at("stratum").at("label") == "E2");
    CHECK(r.at("stratum").at("on_bifurcation_locus") == false);
    CHECK(r.at("labels").at("SpI") == "E2[--]");
    CHECK(r.at("labels").at("Sp4") == "E2[--]");
    CHECK(r.at("stability").at("verdict") == "strongly-stable");
    CHECK(r.at("strongly_stable_component") == true);
    CHECK(r.at("b_types").size() == 2);
    CHECK(r.at("krein").size() == 2);
    CHECK(r.at("normal_form").at("sign_pattern") == "--");

    // determinism: identical input, byte-identical report
    CHECK(classify_report(doc).dump(2) == r.dump(2));

    // schema round-trip
    const Json reparsed = Json::parse(r.dump(2));
    CHECK(reparsed == r);
}

TEST_CASE("classify report over the bifurcation locus and N") {
    InputDocument doc;
    doc.hash = "fnv1a:0";
    doc.triple = WonenburgerTriple{Mat::identity(2), Mat(2), Mat(2)};
    doc.n = 2;
    const Json r = classify_report(doc);
    CHECK(r.at("stratum").at("label") == "(2,1)");
    CHECK(r.at("stratum").at("on_bifurcation_locus") == true);
    CHECK(r.at("components").is_null());
    CHECK(std::string(r.at("note")).find("bifurcation") != std::string::npos);

    InputDocument ndoc;
    ndoc.hash = "fnv1a:0";
    ndoc.triple = seed_triple(StratumLabel::N, {1.2, 0.9}, "");
    ndoc.n = 2;
    const Json rn = classify_report(ndoc);
    CHECK_FALSE(rn.contains("b_types"));  // no real eigenvalues over N
    CHECK(rn.at("stability").at("verdict") == "unstable");
}

TEST_CASE("planar classify report") {
    InputDocument doc;
    doc.hash = "fnv1a:0";
    const double th = 1.0;
    doc.triple = WonenburgerTriple{Mat(1, {std::cos(th)}), Mat(1, {-std::sin(th)}),
                                   Mat(1, {std::sin(th)})};
    doc.n = 1;
    const Json r = classify_report(doc);
    CHECK(r.at("planar").at("sp_i").at("chart") == "circle");
    CHECK(double(r.at("planar").at("base")) == doctest::Approx(std::cos(th)));
    CHECK(r.at("stability") == "strongly-stable");
}

TEST_CASE("family report: table, csv, and json agree") {
    Json j;
    j["schema"] = 1;
    Json fam = Json::array();
    for (int i = 0; i < 8; ++i) {
        const WonenburgerTriple t = e2_form(2.0, 1.0, '-', '-');
        Json item;
        item["param"] = 0.1 * i;
        Json a = Json::array(), b = Json::array(), c = Json::array();
        for (int r = 0; r < 2; ++r)
            for (int k = 0; k < 2; ++k) {
                a.push_back(t.A(r, k));
                b.push_back(t.B(r, k));
                c.push_back(t.C(r, k));
            }
        item["A"] = a;
        item["B"] = b;
        item["C"] = c;
        fam.push_back(item);
    }
    j["family"] = fam;
    const InputDocument doc = parse_input(j.dump());
    REQUIRE(doc.family.size() == 8);
    const FamilyOutput out = family_report(doc);
    CHECK(out.table.find("single-component") != std::string::npos);
    CHECK(out.document.at("report").at("verdict") == "single-component");
    CHECK(out.csv.substr(0, 21) == "param,tau,delta,label");

    // non-monotone parameters are rejected at parse time
    j["family"][1]["param"] = -1.0;
    CHECK_THROWS_AS(parse_input(j.dump()), InvalidInput);
}

TEST_CASE("diagram SVG is deterministic and structured") {
    DiagramOptions opts;
    opts.k_max = 4;
    const std::string svg1 = render_diagram(opts);
    const std::string svg2 = render_diagram(opts);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") != std::string::npos);
    CHECK(svg1.find("polyline") != std::string::npos);     // parabola
    CHECK(svg1.find("E2  4/4") != std::string::npos);      // labelled counts
    CHECK(svg1.find("stroke-dasharray") != std::string::npos);  // pencil

    const std::string no_pencil = render_diagram(DiagramOptions{});
    CHECK(no_pencil.find("stroke-dasharray") == std::string::npos);
}

TEST_CASE("diagram overlay draws the family and its event markers") {
    std::vector<std::pair<double, WonenburgerTriple>> fam;
    const double mu1 = std::cos(2.0);
    for (int i = 0; i < 200; ++i) {
        const double s = double(i) / 199.0;
        const double mu2 = 1.0 + (s - 0.62) * 0.1;
        const double w1 = std::sqrt(std::abs(mu1 * mu1 - 1));
        const double w2 = std::sqrt(std::abs(mu2 * mu2 - 1));
        fam.emplace_back(
            s, WonenburgerTriple{
                   Mat::diag({mu1, mu2}), Mat::diag({-w1, -w2}),
                   Mat::diag({(mu1 * mu1 - 1) / -w1,
                              w2 == 0 ? 0 : (mu2 * mu2 - 1) / -w2})});
    }
    const PathReport pr = analyze_path(fam, 6);
    const std::string svg = render_diagram(DiagramOptions{}, &pr);
    CHECK(svg.find("#119944") != std::string::npos);  // family polyline
    CHECK(svg.find("#dd8800") != std::string::npos);  // event marker
    CHECK(svg == render_diagram(DiagramOptions{}, &pr));
}

TEST_CASE("fnv1a hash is stable") {
    CHECK(fnv1a_hex("") == "fnv1a:cbf29ce484222325");
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}
