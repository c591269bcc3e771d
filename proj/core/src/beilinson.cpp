#include "tdual/beilinson.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tdual::beilinson {

namespace {

void enumerate_exponents(std::size_t pos, int remaining, std::vector<int>& cur, int i, int j,
                         std::vector<Monomial>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(Monomial{i, j, cur});
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate_exponents(pos + 1, remaining - e, cur, i, j, out);
    }
}

Json hom_json(const HomElement& e) {
    return Json{{"source", e.source}, {"target", e.target}, {"b", e.b}, {"degree", e.degree}};
}

Json monomial_json(const Monomial& m) {
    return Json{{"source", m.source}, {"target", m.target}, {"exponents", m.exponents}};
}

}  // namespace

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::vector<Monomial> monomial_hom_basis(int i, int j, std::size_t n) {
    std::vector<Monomial> out;
    if (n == 0) throw std::invalid_argument("monomial basis needs n >= 1");
    if (j < i) return out;
    std::vector<int> cur(n + 1, 0);
    enumerate_exponents(0, j - i, cur, i, j, out);
    return out;
}

Monomial monomial_compose(const Monomial& g, const Monomial& f) {
    if (g.source != f.target) {
        throw std::invalid_argument("cannot compose: O(" + std::to_string(f.target) + ") and O(" +
                                    std::to_string(g.source) + ") differ");
    }
    if (g.exponents.size() != f.exponents.size()) {
        throw std::invalid_argument("cannot compose monomials in different numbers of variables");
    }
    Monomial out{f.source, g.target, f.exponents};
    for (std::size_t l = 0; l < out.exponents.size(); ++l) out.exponents[l] += g.exponents[l];
    return out;
}

Monomial nu(const HomElement& e) {
    Monomial m{e.source, e.target, std::vector<int>(e.b.size() + 1)};
    int lead = e.target - e.source;
    for (std::size_t l = 0; l < e.b.size(); ++l) {
        if (e.b[l] > 0) throw std::invalid_argument("hom element offsets must be nonpositive");
        lead += e.b[l];
        m.exponents[l + 1] = -e.b[l];
    }
    if (lead < 0) throw std::invalid_argument("hom element offsets sum below i - j");
    m.exponents[0] = lead;
    return m;
}

long long euler_pairing(int i, int j, std::size_t n) {
    if (j < i) throw std::invalid_argument("euler_pairing expects j >= i");
    long long result = 1;
    const long long d = j - i;
    for (std::size_t t = 1; t <= n; ++t) {
        result = result * (d + static_cast<long long>(t)) / static_cast<long long>(t);
    }
    return result;
}

SheafQuiver sheaf_quiver(std::size_t n) {
    if (n == 0) throw std::invalid_argument("quiver needs n >= 1");
    SheafQuiver q;
    q.n = n;
    const int top = static_cast<int>(n);
    for (int k = -top - 1; k <= -1; ++k) q.objects.push_back(k);
    for (int i : q.objects) {
        for (int j : q.objects) {
            if (i <= j) q.homs[{i, j}] = monomial_hom_basis(i, j, n);
        }
    }
    for (int i : q.objects) {
        for (int j = i; j <= -1; ++j) {
            for (int k = j; k <= -1; ++k) {
                const auto& fs = q.hom(i, j);
                const auto& gs = q.hom(j, k);
                for (std::size_t fi = 0; fi < fs.size(); ++fi) {
                    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                        q.compositions.push_back({i, j, k, fi, gi, monomial_compose(gs[gi], fs[fi])});
                    }
                }
            }
        }
    }
    return q;
}

CheckReport EquivalenceReport::to_check_report() const {
    CheckReport r;
    r.check = "equivalence";
    r.anchor = "cell quiver and line-bundle quiver coincide under nu";
    r.parameters = Json{{"n", n}};
    r.max_deviation = pass ? 0.0 : 1.0;
    r.witness = witness;
    r.pass = pass;
    r.details = Json{{"hom_pairs", hom_pairs},
                     {"basis_elements", basis_elements},
                     {"composable_pairs", composable_pairs},
                     {"nu_bijective", bijective},
                     {"nu_homomorphism", homomorphism}};
    return r;
}

EquivalenceReport verify_equivalence(const Quiver& cells, const SheafQuiver& sheaves) {
    EquivalenceReport report;
    report.n = cells.n;
    auto fail_bijection = [&](Json w) {
        report.bijective = false;
        report.pass = false;
        if (!report.witness) report.witness = std::move(w);
    };
    auto fail_homomorphism = [&](Json w) {
        report.homomorphism = false;
        report.pass = false;
        if (!report.witness) report.witness = std::move(w);
    };

    if (cells.n != sheaves.n || cells.objects != sheaves.objects) {
        fail_bijection(Json{{"reason", "object lists differ"},
                            {"cell_objects", cells.objects},
                            {"sheaf_objects", sheaves.objects}});
        return report;
    }

    // (1) nu restricted to each hom space is a bijection onto the monomial basis.
    for (int i : cells.objects) {
        for (int j : cells.objects) {
            ++report.hom_pairs;
            const auto& source = cells.hom(i, j);
            const auto& target = sheaves.hom(i, j);
            report.basis_elements += source.size();
            std::set<Monomial> wanted(target.begin(), target.end());
            std::set<Monomial> seen;
            for (const auto& e : source) {
                Monomial image;
                try {
                    image = nu(e);
                } catch (const std::invalid_argument& err) {
                    fail_bijection(Json{{"reason", err.what()}, {"i", i}, {"j", j}, {"element", hom_json(e)}});
                    continue;
                }
                if (!wanted.count(image)) {
                    fail_bijection(Json{{"reason", "image outside the monomial basis"},
                                        {"i", i},
                                        {"j", j},
                                        {"element", hom_json(e)},
                                        {"image", monomial_json(image)}});
                } else if (!seen.insert(image).second) {
                    fail_bijection(Json{{"reason", "two basis elements share an image"},
                                        {"i", i},
                                        {"j", j},
                                        {"element", hom_json(e)},
                                        {"image", monomial_json(image)}});
                }
            }
            if (seen.size() != wanted.size() && report.bijective) {
                fail_bijection(Json{{"reason", "nu is not surjective"},
                                    {"i", i},
                                    {"j", j},
                                    {"cell_dimension", source.size()},
                                    {"sheaf_dimension", target.size()}});
            }
        }
    }

    // (2) nu(g . f) = nu(g) nu(f) for every composable basis pair.
    std::set<std::tuple<int, int, int, std::size_t, std::size_t>> covered;
    for (const auto& c : cells.compositions) {
        const auto& fs = cells.hom(c.i, c.j);
        const auto& gs = cells.hom(c.j, c.k);
        if (c.f_index >= fs.size() || c.g_index >= gs.size()) {
            fail_homomorphism(Json{{"reason", "composition entry indexes outside the basis"},
                                   {"i", c.i}, {"j", c.j}, {"k", c.k}});
            continue;
        }
        covered.insert({c.i, c.j, c.k, c.f_index, c.g_index});
        const auto& f = fs[c.f_index];
        const auto& g = gs[c.g_index];
        bool ok = false;
        Json detail;
        try {
            const auto lhs = nu(c.result);
            const auto rhs = monomial_compose(nu(g), nu(f));
            ok = lhs == rhs;
            detail = Json{{"nu_of_composite", monomial_json(lhs)}, {"product_of_images", monomial_json(rhs)}};
        } catch (const std::invalid_argument& err) {
            detail = Json{{"error", err.what()}};
        }
        if (!ok) {
            Json w{{"reason", "nu does not respect composition"},
                   {"i", c.i},
                   {"j", c.j},
                   {"k", c.k},
                   {"f", hom_json(f)},
                   {"g", hom_json(g)},
                   {"composite", hom_json(c.result)}};
            w.update(detail);
            fail_homomorphism(std::move(w));
        }
    }
    for (std::size_t a = 0; a < cells.objects.size(); ++a) {
        for (std::size_t b = a; b < cells.objects.size(); ++b) {
            for (std::size_t d = b; d < cells.objects.size(); ++d) {
                const int i = cells.objects[a];
                const int j = cells.objects[b];
                const int k = cells.objects[d];
                const std::size_t nf = cells.hom(i, j).size();
                const std::size_t ng = cells.hom(j, k).size();
                report.composable_pairs += nf * ng;
                for (std::size_t fi = 0; fi < nf; ++fi) {
                    for (std::size_t gi = 0; gi < ng; ++gi) {
                        if (!covered.count({i, j, k, fi, gi})) {
                            fail_homomorphism(Json{{"reason", "composable pair missing from the composition table"},
                                                   {"i", i}, {"j", j}, {"k", k},
                                                   {"f", hom_json(cells.hom(i, j)[fi])},
                                                   {"g", hom_json(cells.hom(j, k)[gi])}});
                        }
                    }
                }
            }
        }
    }
    return report;
}

EquivalenceReport verify_equivalence(std::size_t n) {
    return verify_equivalence(homs::quotient_quiver(n), sheaf_quiver(n));
}

}  // namespace tdual::beilinson
