#include "tdual/serialize.hpp"

#include <sstream>

namespace tdual {

namespace {

const std::vector<int>& coords(const homs::HomElement& e) { return e.b; }
const std::vector<int>& coords(const beilinson::Monomial& m) { return m.exponents; }

std::string edge_label(const homs::HomElement& e) { return offset_label(e.b); }
std::string edge_label(const beilinson::Monomial& m) { return monomial_label(m); }

template <class Basis>
Json to_json_impl(const homs::BasicQuiver<Basis>& q, const char* kind) {
    Json j;
    j["n"] = q.n;
    j["kind"] = kind;
    j["objects"] = q.objects;
    Json homs = Json::array();
    for (const auto& [key, basis] : q.homs) {
        Json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        Json vectors = Json::array();
        for (const auto& e : basis) vectors.push_back(coords(e));
        entry["basis"] = std::move(vectors);
        homs.push_back(std::move(entry));
    }
    j["homs"] = std::move(homs);
    Json comps = Json::array();
    for (const auto& c : q.compositions) {
        comps.push_back(Json{{"i", c.i},
                             {"j", c.j},
                             {"k", c.k},
                             {"f", coords(q.hom(c.i, c.j).at(c.f_index))},
                             {"g", coords(q.hom(c.j, c.k).at(c.g_index))},
                             {"result", coords(c.result)}});
    }
    j["compositions"] = std::move(comps);
    return j;
}

template <class Basis>
std::string to_dot_impl(const homs::BasicQuiver<Basis>& q, const char* name, char prefix) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    auto node = [&](int k) { return std::string("\"") + prefix + "(" + std::to_string(k) + ")\""; };
    for (int k : q.objects) out << "  " << node(k) << ";\n";
    for (std::size_t s = 0; s + 1 < q.objects.size(); ++s) {
        const int i = q.objects[s];
        const int j = q.objects[s + 1];
        for (const auto& e : q.hom(i, j)) {
            out << "  " << node(i) << " -> " << node(j) << " [label=\"" << edge_label(e) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string offset_label(const homs::MultiIndex& b) {
    std::ostringstream out;
    out << "e^(";
    for (std::size_t l = 0; l < b.size(); ++l) out << (l ? "," : "") << b[l];
    out << ")";
    return out.str();
}

std::string monomial_label(const beilinson::Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t l = 0; l < m.exponents.size(); ++l) {
        const int e = m.exponents[l];
        if (e == 0) continue;
        out << (first ? "" : "*") << "x" << l;
        if (e > 1) out << "^" << e;
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

Json quiver_to_json(const homs::Quiver& q) { return to_json_impl(q, "cells"); }
Json quiver_to_json(const beilinson::SheafQuiver& q) { return to_json_impl(q, "sheaves"); }

std::string quiver_to_dot(const homs::Quiver& q) { return to_dot_impl(q, "cells", 'U'); }
std::string quiver_to_dot(const beilinson::SheafQuiver& q) { return to_dot_impl(q, "sheaves", 'O'); }

}  // namespace tdual
