#include "tdual/cohomology_oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace tdual::oracle {

namespace {

using Polygon = std::vector<RationalPoint>;

struct Arrangement {
    std::vector<RationalPoint> vertices;
    std::vector<std::array<std::size_t, 2>> edges;
    std::vector<std::vector<std::size_t>> faces;  // boundary cycles, n = 2 only
};

Integer floor_of(const Rational& v) {
    const Integer num = boost::multiprecision::numerator(v);
    const Integer den = boost::multiprecision::denominator(v);
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r < 0) --q;
    return q;
}

bool is_integer(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

Rational functional(std::size_t f, const RationalPoint& p) {
    if (f < p.size()) return p[f];
    Rational s = 0;
    for (const auto& x : p) s += x;
    return s;
}

Rational sum_of(const RationalPoint& p) { return functional(p.size(), p); }

// Closed simplex {x_l <= upper_l, sum x >= lower_sum}: upper and the points
// upper - (sum upper - lower_sum) e_l.
std::vector<RationalPoint> simplex_corners(const RationalPoint& upper, const Rational& lower_sum) {
    const Rational side = sum_of(upper) - lower_sum;
    if (side <= 0) throw std::invalid_argument("closed simplex is empty");
    std::vector<RationalPoint> corners{upper};
    for (std::size_t l = 0; l < upper.size(); ++l) {
        auto c = upper;
        c[l] -= side;
        corners.push_back(std::move(c));
    }
    return corners;
}

std::vector<Polygon> split(const Polygon& poly, std::size_t f, const Rational& c) {
    std::vector<Rational> vals(poly.size());
    bool neg = false;
    bool pos = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        vals[i] = functional(f, poly[i]) - c;
        neg = neg || vals[i] < 0;
        pos = pos || vals[i] > 0;
    }
    if (!(neg && pos)) return {poly};
    Polygon lo;
    Polygon hi;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const std::size_t nx = (i + 1) % poly.size();
        const auto& p = poly[i];
        const auto& q = poly[nx];
        if (vals[i] <= 0) lo.push_back(p);
        if (vals[i] >= 0) hi.push_back(p);
        if ((vals[i] < 0 && vals[nx] > 0) || (vals[i] > 0 && vals[nx] < 0)) {
            const Rational t = vals[i] / (vals[i] - vals[nx]);
            RationalPoint x(p.size());
            for (std::size_t l = 0; l < p.size(); ++l) x[l] = p[l] + (q[l] - p[l]) * t;
            lo.push_back(x);
            hi.push_back(std::move(x));
        }
    }
    return {std::move(lo), std::move(hi)};
}

// Integers c with lo < c < hi.
std::vector<Rational> integers_between(const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    for (Integer c = floor_of(lo) + 1; Rational(c) < hi; ++c) out.emplace_back(c);
    return out;
}

// The closed simplex cut by the integer arrangement.
Arrangement build_arrangement(const RationalPoint& upper, const Rational& lower_sum) {
    const std::size_t n = upper.size();
    const auto corners = simplex_corners(upper, lower_sum);
    Arrangement arr;

    if (n == 1) {
        const Rational lo = lower_sum;
        const Rational hi = upper[0];
        arr.vertices.push_back({lo});
        for (const auto& c : integers_between(lo, hi)) arr.vertices.push_back({c});
        arr.vertices.push_back({hi});
        for (std::size_t v = 0; v + 1 < arr.vertices.size(); ++v) arr.edges.push_back({v, v + 1});
        return arr;
    }
    if (n != 2) throw std::invalid_argument("arrangement supports n in {1, 2}");

    std::vector<Polygon> faces{corners};
    for (std::size_t f = 0; f <= n; ++f) {
        Rational lo = functional(f, corners[0]);
        Rational hi = lo;
        for (const auto& c : corners) {
            lo = std::min(lo, functional(f, c));
            hi = std::max(hi, functional(f, c));
        }
        for (const auto& c : integers_between(lo, hi)) {
            std::vector<Polygon> next;
            for (const auto& poly : faces) {
                for (auto& piece : split(poly, f, c)) next.push_back(std::move(piece));
            }
            faces = std::move(next);
        }
    }

    std::map<RationalPoint, std::size_t> index;
    for (const auto& poly : faces) {
        for (const auto& p : poly) {
            if (index.emplace(p, arr.vertices.size()).second) arr.vertices.push_back(p);
        }
    }

    std::set<std::array<std::size_t, 2>> edges;
    for (const auto& poly : faces) {
        std::vector<std::size_t> cycle;
        for (std::size_t e = 0; e < poly.size(); ++e) {
            const auto& p = poly[e];
            const auto& q = poly[(e + 1) % poly.size()];
            cycle.push_back(index.at(p));
            const Rational dx = q[0] - p[0];
            const Rational dy = q[1] - p[1];
            const Rational len2 = dx * dx + dy * dy;
            // Arrangement vertices lying strictly inside the edge, in order.
            std::vector<std::pair<Rational, std::size_t>> inner;
            for (std::size_t v = 0; v < arr.vertices.size(); ++v) {
                const auto& w = arr.vertices[v];
                const Rational wx = w[0] - p[0];
                const Rational wy = w[1] - p[1];
                if (dx * wy - dy * wx != 0) continue;
                const Rational t = (dx * wx + dy * wy) / len2;
                if (t > 0 && t < 1) inner.emplace_back(t, v);
            }
            std::sort(inner.begin(), inner.end());
            for (const auto& [t, v] : inner) cycle.push_back(v);
        }
        for (std::size_t e = 0; e < cycle.size(); ++e) {
            std::array<std::size_t, 2> edge{cycle[e], cycle[(e + 1) % cycle.size()]};
            std::sort(edge.begin(), edge.end());
            edges.insert(edge);
        }
        arr.faces.push_back(std::move(cycle));
    }
    arr.edges.assign(edges.begin(), edges.end());
    return arr;
}

RationalPoint centroid(const std::vector<RationalPoint>& pts) {
    RationalPoint c(pts.front().size(), Rational(0));
    for (const auto& p : pts) {
        for (std::size_t l = 0; l < c.size(); ++l) c[l] += p[l];
    }
    for (auto& x : c) x /= static_cast<long>(pts.size());
    return c;
}

bool in_simplex(const RationalPoint& p, const RationalPoint& upper, const Rational& lower_sum, bool strict) {
    for (std::size_t l = 0; l < p.size(); ++l) {
        if (strict ? !(p[l] < upper[l]) : !(p[l] <= upper[l])) return false;
    }
    const Rational s = sum_of(p);
    return strict ? s > lower_sum : s >= lower_sum;
}

// Whether the torus image of p lies in U^a(k) (strict) or its closure.
bool in_torus_cell(const RationalPoint& p, const homs::CellObject& cell, bool strict) {
    const std::size_t n = p.size();
    const long m = static_cast<long>(n) + 1;
    RationalPoint upper(n);
    Rational lower = cell.k;
    for (std::size_t l = 0; l < n; ++l) {
        upper[l] = cell.a[l];
        lower += cell.a[l];
    }
    std::vector<int> t(n, -2);
    while (true) {
        RationalPoint q = p;
        for (std::size_t l = 0; l < n; ++l) q[l] -= m * t[l];
        if (in_simplex(q, upper, lower, strict)) return true;
        std::size_t d = 0;
        for (; d < n; ++d) {
            if (++t[d] <= 2) break;
            t[d] = -2;
        }
        if (d == n) return false;
    }
}

void validate_cell(const homs::CellObject& c, std::size_t n) {
    const int top = static_cast<int>(n);
    if (c.a.size() != n) throw std::invalid_argument("cell offset has wrong dimension");
    if (c.k < -top - 1 || c.k > -1) throw std::invalid_argument("cell level must lie in {-n-1, ..., -1}");
    for (int v : c.a) {
        if (v < -top || v > 0) throw std::invalid_argument("cell offsets must lie in {-n, ..., 0}");
    }
}

RationalPoint inner_upper(const homs::CellObject& inner) {
    RationalPoint u(inner.a.size());
    for (std::size_t l = 0; l < u.size(); ++l) u[l] = inner.a[l];
    return u;
}

Rational inner_lower(const homs::CellObject& inner) {
    Rational s = inner.k;
    for (int v : inner.a) s += v;
    return s;
}

// Simplices of a triangulation of the arrangement, by dimension.
std::vector<std::vector<std::vector<std::size_t>>> triangulate(Arrangement& arr, std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out(n + 1);
    const std::size_t base_vertices = arr.vertices.size();
    for (std::size_t v = 0; v < base_vertices; ++v) out[0].push_back({v});
    for (const auto& e : arr.edges) out[1].push_back({e[0], e[1]});
    if (n == 2) {
        for (const auto& cycle : arr.faces) {
            std::vector<RationalPoint> pts;
            for (std::size_t v : cycle) pts.push_back(arr.vertices[v]);
            const std::size_t c = arr.vertices.size();
            arr.vertices.push_back(centroid(pts));
            out[0].push_back({c});
            for (std::size_t e = 0; e < cycle.size(); ++e) {
                std::vector<std::size_t> spoke{cycle[e], c};
                std::sort(spoke.begin(), spoke.end());
                out[1].push_back(spoke);
                std::vector<std::size_t> tri{c, cycle[e], cycle[(e + 1) % cycle.size()]};
                std::sort(tri.begin(), tri.end());
                out[2].push_back(std::move(tri));
            }
        }
    }
    return out;
}

}  // namespace

CellLabel arrangement_label(const RationalPoint& p) {
    CellLabel label(p.size() + 1);
    for (std::size_t f = 0; f <= p.size(); ++f) {
        const Rational v = functional(f, p);
        const Integer fl = floor_of(v);
        label[f] = static_cast<long>(2 * fl + (is_integer(v) ? 0 : 1));
    }
    return label;
}

bool PolyhedralRegion::contains_label(const CellLabel& label) const {
    return std::any_of(cells.begin(), cells.end(), [&](const RegionCell& c) { return c.label == label; });
}

std::vector<std::size_t> PolyhedralRegion::cell_counts() const {
    std::vector<std::size_t> counts(n + 1, 0);
    for (const auto& c : cells) ++counts.at(static_cast<std::size_t>(c.dimension));
    return counts;
}

RegionPair region_pair(const homs::CellObject& outer, const homs::CellObject& inner) {
    const std::size_t n = outer.a.size();
    if (n != 1 && n != 2) throw std::invalid_argument("cohomology oracle supports n in {1, 2}");
    validate_cell(outer, n);
    validate_cell(inner, n);

    RegionPair pair;
    pair.n = n;
    pair.outer = outer;
    pair.inner = inner;
    pair.x.n = n;
    pair.a.n = n;

    const auto upper = inner_upper(inner);
    const auto lower = inner_lower(inner);
    Arrangement arr = build_arrangement(upper, lower);

    // Vertex gap of the arrangement.
    bool have_gap = false;
    for (std::size_t f = 0; f <= n; ++f) {
        std::set<Rational> values;
        for (const auto& v : arr.vertices) values.insert(functional(f, v));
        for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it) {
            const Rational gap = *std::next(it) - *it;
            if (!have_gap || gap < pair.vertex_gap) pair.vertex_gap = gap;
            have_gap = true;
        }
    }

    auto classify = [&](int dim, std::vector<RationalPoint> verts) {
        RegionCell cell;
        cell.dimension = dim;
        cell.interior = centroid(verts);
        cell.vertices = std::move(verts);
        if (!in_simplex(cell.interior, upper, lower, true)) return;
        if (!in_torus_cell(cell.interior, outer, false)) return;
        cell.label = arrangement_label(cell.interior);
        const bool on_boundary = !in_torus_cell(cell.interior, outer, true);
        if (on_boundary) pair.a.cells.push_back(cell);
        pair.x.cells.push_back(std::move(cell));
    };
    for (const auto& v : arr.vertices) classify(0, {v});
    for (const auto& e : arr.edges) classify(1, {arr.vertices[e[0]], arr.vertices[e[1]]});
    for (const auto& cycle : arr.faces) {
        std::vector<RationalPoint> pts;
        for (std::size_t v : cycle) pts.push_back(arr.vertices[v]);
        classify(2, std::move(pts));
    }
    return pair;
}

std::vector<std::size_t> SimplicialPair::counts_x() const {
    std::vector<std::size_t> c(n + 1, 0);
    for (std::size_t d = 0; d < simplices.size() && d <= n; ++d) c[d] = simplices[d].size();
    return c;
}

std::vector<std::size_t> SimplicialPair::counts_a() const {
    std::vector<std::size_t> c(n + 1, 0);
    for (std::size_t d = 0; d < in_a.size() && d <= n; ++d) {
        c[d] = static_cast<std::size_t>(std::count(in_a[d].begin(), in_a[d].end(), true));
    }
    return c;
}

void SimplicialPair::validate() const {
    if (simplices.size() != in_a.size()) throw std::logic_error("simplicial pair: membership table size mismatch");
    std::vector<std::map<std::vector<std::size_t>, bool>> lookup(simplices.size());
    for (std::size_t d = 0; d < simplices.size(); ++d) {
        if (simplices[d].size() != in_a[d].size()) throw std::logic_error("simplicial pair: membership table size mismatch");
        for (std::size_t s = 0; s < simplices[d].size(); ++s) {
            const auto& simplex = simplices[d][s];
            if (simplex.size() != d + 1 || !std::is_sorted(simplex.begin(), simplex.end()) ||
                std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end()) {
                throw std::logic_error("simplicial pair: malformed simplex");
            }
            for (std::size_t v : simplex) {
                if (v >= vertices.size()) throw std::logic_error("simplicial pair: vertex index out of range");
            }
            if (!lookup[d].emplace(simplex, in_a[d][s]).second) {
                throw std::logic_error("simplicial pair: duplicate simplex");
            }
        }
    }
    for (std::size_t d = 1; d < simplices.size(); ++d) {
        for (std::size_t s = 0; s < simplices[d].size(); ++s) {
            for (std::size_t drop = 0; drop <= d; ++drop) {
                auto face = simplices[d][s];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                auto it = lookup[d - 1].find(face);
                if (it == lookup[d - 1].end()) throw std::logic_error("simplicial pair: X is not closed under faces");
                if (in_a[d][s] && !it->second) throw std::logic_error("simplicial pair: A is not closed under faces");
            }
        }
    }
}

SimplicialPair shrink_and_triangulate(const RegionPair& pair, const Rational& epsilon) {
    if (!(epsilon > 0) || !(epsilon * 4 < pair.vertex_gap)) {
        throw std::invalid_argument("shrink parameter must satisfy 0 < epsilon < vertex_gap / 4");
    }
    SimplicialPair out;
    out.n = pair.n;
    out.simplices.assign(pair.n + 1, {});
    out.in_a.assign(pair.n + 1, {});
    if (pair.x.empty()) return out;

    auto upper = inner_upper(pair.inner);
    for (auto& u : upper) u -= epsilon;
    const Rational lower = inner_lower(pair.inner) + epsilon;
    Arrangement arr = build_arrangement(upper, lower);
    const auto all = triangulate(arr, pair.n);
    out.vertices = arr.vertices;

    for (std::size_t d = 0; d <= pair.n; ++d) {
        for (const auto& simplex : all[d]) {
            std::vector<RationalPoint> pts;
            for (std::size_t v : simplex) pts.push_back(arr.vertices[v]);
            const auto label = arrangement_label(centroid(pts));
            if (!pair.x.contains_label(label)) continue;
            out.simplices[d].push_back(simplex);
            out.in_a[d].push_back(pair.a.contains_label(label));
        }
    }
    out.validate();
    return out;
}

long BettiProfile::alternating_sum() const {
    long s = 0;
    for (std::size_t d = 0; d < betti.size(); ++d) {
        s += (d % 2 == 0 ? 1 : -1) * static_cast<long>(betti[d]);
    }
    return s;
}

BettiProfile relative_cohomology(const SimplicialPair& pair) {
    pair.validate();
    const std::size_t top = pair.n;
    BettiProfile profile;
    profile.betti.assign(top + 1, 0);

    // Relative cells and their positions.
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> rel(top + 1);
    for (std::size_t d = 0; d <= top && d < pair.simplices.size(); ++d) {
        for (std::size_t s = 0; s < pair.simplices[d].size(); ++s) {
            if (pair.in_a[d][s]) continue;
            const std::size_t pos = rel[d].size();
            rel[d].emplace(pair.simplices[d][s], pos);
        }
        profile.euler_characteristic += (d % 2 == 0 ? 1 : -1) * static_cast<long>(rel[d].size());
    }

    // rank of delta^d : C^d -> C^{d+1}
    std::vector<std::size_t> rank(top + 1, 0);
    for (std::size_t d = 0; d < top; ++d) {
        IntegerMatrix delta(rel[d + 1].size(), rel[d].size());
        for (const auto& [simplex, row] : rel[d + 1]) {
            for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
                auto face = simplex;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                auto it = rel[d].find(face);
                if (it == rel[d].end()) continue;  // face lies in A
                delta(row, it->second) = (drop % 2 == 0) ? 1 : -1;
            }
        }
        rank[d] = (delta.rows() == 0 || delta.cols() == 0) ? 0 : bareiss_rank(std::move(delta));
    }
    for (std::size_t d = 0; d <= top; ++d) {
        const std::size_t below = d == 0 ? 0 : rank[d - 1];
        profile.betti[d] = rel[d].size() - rank[d] - below;
    }
    return profile;
}

Json PairAudit::to_json() const {
    return Json{{"i", i},
                {"j", j},
                {"b", b},
                {"betti", profile.betti},
                {"cells", Json{{"x", cells_x}, {"a", cells_a}}}};
}

OracleResult oracle_hom_dim(int i, int j, std::size_t n, const Rational& epsilon) {
    if (n != 1 && n != 2) throw std::invalid_argument("cohomology oracle supports n in {1, 2}");
    OracleResult result;
    result.i = i;
    result.j = j;
    result.n = n;
    result.dims.assign(n + 1, 0);

    const homs::CellObject outer{i, homs::MultiIndex(n, 0)};
    const int top = static_cast<int>(n);
    homs::MultiIndex b(n, -top);
    while (true) {
        const auto pair = region_pair(outer, homs::CellObject{j, b});
        const auto complex = shrink_and_triangulate(pair, epsilon);
        PairAudit audit{i, j, b, relative_cohomology(complex), complex.counts_x(), complex.counts_a()};
        for (std::size_t d = 0; d <= n; ++d) result.dims[d] += audit.profile.betti[d];
        result.pairs.push_back(std::move(audit));

        std::size_t d = 0;
        for (; d < n; ++d) {
            if (++b[d] <= 0) break;
            b[d] = -top;
        }
        if (d == n) break;
    }
    return result;
}

Rational default_epsilon() { return Rational(1, 8); }

}  // namespace tdual::oracle
