#include "symclass/components.hpp"

#include <algorithm>

namespace symclass {

namespace {

std::string multiset(std::string dec) {
    std::sort(dec.begin(), dec.end());  // '+' < '-' in ASCII
    return dec;
}

/// Sheets whose matrices have unit-circle, semi-simple spectrum.
bool stable_stratum(StratumLabel s) {
    return s == StratumLabel::E2 || s == StratumLabel::Gd2;
}

}  // namespace

int ComponentGraph::node_index(StratumLabel s, const std::string& dec) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].label.stratum == s && nodes[i].label.decoration == dec)
            return int(i);
    return -1;
}

bool ComponentGraph::adjacent(int a, int b) const {
    for (const auto& e : edges)
        if ((e.first == a && e.second == b) || (e.first == b && e.second == a))
            return true;
    return false;
}

std::vector<int> ComponentGraph::component_members(int component) const {
    std::vector<int> out;
    for (size_t i = 0; i < nodes.size(); ++i)
        if (component_of[i] == component) out.push_back(int(i));
    return out;
}

ComponentGraph build_component_graph(Quotient q) {
    ComponentGraph g;
    g.quotient = q;

    const StratumLabel node_strata[] = {
        StratumLabel::E2,  StratumLabel::EHp, StratumLabel::EHm,
        StratumLabel::Hpp, StratumLabel::Hmp, StratumLabel::Hmm,
        StratumLabel::N,   StratumLabel::Gd1, StratumLabel::Gd2,
        StratumLabel::Gd3};
    for (StratumLabel s : node_strata)
        for (const std::string& dec : stratum_decorations(s, q))
            g.nodes.push_back({SheetLabel{q, s, dec}, false});

    // A parabola branch with B-form signature sig is glued to exactly the
    // incident region sheets whose decoration limits to sig. The unique
    // nonreal sheet has indefinite B and meets only the mixed branches.
    auto connect = [&](StratumLabel wall, StratumLabel region) {
        for (size_t i = 0; i < g.nodes.size(); ++i) {
            if (g.nodes[i].label.stratum != wall) continue;
            const std::string& wall_dec = g.nodes[i].label.decoration;
            for (size_t j = 0; j < g.nodes.size(); ++j) {
                if (g.nodes[j].label.stratum != region) continue;
                const std::string& region_dec = g.nodes[j].label.decoration;
                bool touch;
                if (region == StratumLabel::N) {
                    // Signed branches meet N only when mixed; the collapsed
                    // (sign-free) Sp4 branches over Gd1/Gd3 meet it outright.
                    touch = wall_dec.empty() || multiset(wall_dec) == "+-";
                } else if (wall_dec.empty() || region_dec.empty()) {
                    touch = wall_dec.empty() && region_dec.empty();
                } else {
                    touch = multiset(region_dec) == multiset(wall_dec);
                }
                if (touch)
                    g.edges.push_back({int(std::min(i, j)), int(std::max(i, j))});
            }
        }
    };
    connect(StratumLabel::Gd2, StratumLabel::E2);
    connect(StratumLabel::Gd2, StratumLabel::N);
    connect(StratumLabel::Gd3, StratumLabel::Hpp);
    connect(StratumLabel::Gd3, StratumLabel::N);
    connect(StratumLabel::Gd1, StratumLabel::Hmm);
    connect(StratumLabel::Gd1, StratumLabel::N);

    // Connected components by traversal.
    g.component_of.assign(g.nodes.size(), -1);
    int comp = 0;
    for (size_t seed = 0; seed < g.nodes.size(); ++seed) {
        if (g.component_of[seed] >= 0) continue;
        std::vector<size_t> stack{seed};
        g.component_of[seed] = comp;
        while (!stack.empty()) {
            const size_t u = stack.back();
            stack.pop_back();
            for (const auto& e : g.edges) {
                size_t v = SIZE_MAX;
                if (e.first == int(u)) v = size_t(e.second);
                else if (e.second == int(u)) v = size_t(e.first);
                if (v != SIZE_MAX && g.component_of[v] < 0) {
                    g.component_of[v] = comp;
                    stack.push_back(v);
                }
            }
        }
        ++comp;
    }
    g.component_count = comp;

    // Mark the components made entirely of stable sheets.
    std::vector<bool> all_stable(size_t(comp), true);
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (!stable_stratum(g.nodes[i].label.stratum))
            all_stable[size_t(g.component_of[i])] = false;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        g.nodes[i].strongly_stable_component =
            all_stable[size_t(g.component_of[i])];

    return g;
}

const ComponentGraph& component_graph(Quotient q) {
    static const ComponentGraph spi = build_component_graph(Quotient::SpI);
    static const ComponentGraph sp4 = build_component_graph(Quotient::Sp4);
    return q == Quotient::SpI ? spi : sp4;
}

int component_id(const WonenburgerTriple& t, Quotient q, double tol) {
    const SheetLabel label = quotient_label(t, q, tol);
    if (on_bifurcation_locus(label.stratum))
        throw OnBifurcationLocus("class lies over " + to_string(label.stratum));
    const ComponentGraph& g = component_graph(q);
    const int idx = g.node_index(label.stratum, label.decoration);
    if (idx < 0)
        throw InvalidInput("no sheet named " + to_string(label));
    return g.component_of[size_t(idx)];
}

ObstructionVerdict cylinder_obstruction(const WonenburgerTriple& t1,
                                        const WonenburgerTriple& t2, Quotient q,
                                        double tol) {
    ObstructionVerdict v;
    v.component_a = component_id(t1, q, tol);
    v.component_b = component_id(t2, q, tol);
    v.obstructed = (v.component_a != v.component_b);
    v.reason = v.obstructed ? "different-component" : "possibly-connected";
    return v;
}

}  // namespace symclass
