#include "tdual/combinatorial_homs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tdual::homs {

namespace {

int period_of(std::size_t n) { return static_cast<int>(n) + 1; }

int floor_mod(int v, int m) {
    const int r = v % m;
    return r < 0 ? r + m : r;
}

void validate(const CellObject& c, std::size_t n) {
    const int top = static_cast<int>(n);
    if (c.a.size() != n) throw std::invalid_argument("cell offset has wrong dimension");
    if (c.k < -top - 1 || c.k > -1) {
        throw std::invalid_argument("cell level must lie in {-n-1, ..., -1}, got " + std::to_string(c.k));
    }
}

void enumerate_offsets(std::size_t pos, int budget, MultiIndex& cur, int i, int j,
                       std::vector<HomElement>& out) {
    if (pos == cur.size()) {
        out.push_back(HomElement{i, j, cur, 0});
        return;
    }
    // Components are nonpositive and the running sum may not drop below i - j.
    for (int v = -budget; v <= 0; ++v) {
        cur[pos] = v;
        enumerate_offsets(pos + 1, budget + v, cur, i, j, out);
    }
}

}  // namespace

DeckElement::DeckElement(std::size_t n, MultiIndex alpha) : alpha_(std::move(alpha)) {
    if (alpha_.size() != n) throw std::invalid_argument("deck element has wrong dimension");
    for (int& v : alpha_) v = floor_mod(v, period_of(n));
}

DeckElement DeckElement::operator+(const DeckElement& other) const {
    if (other.dimension() != dimension()) throw std::invalid_argument("deck elements differ in dimension");
    MultiIndex sum(alpha_.size());
    for (std::size_t l = 0; l < sum.size(); ++l) sum[l] = alpha_[l] + other.alpha_[l];
    return DeckElement(dimension(), std::move(sum));
}

MultiIndex normalize_offset(const MultiIndex& a, std::size_t n) {
    MultiIndex out(a.size());
    const int m = period_of(n);
    for (std::size_t l = 0; l < a.size(); ++l) out[l] = -floor_mod(-a[l], m);
    return out;
}

std::optional<MultiIndex> containing_lift(const CellObject& outer, const CellObject& inner) {
    const std::size_t n = outer.a.size();
    validate(outer, n);
    validate(inner, n);
    const int m = period_of(n);

    // c = b' - a, searched over the residue class of b - a inside [-m, m]^n.
    std::vector<std::vector<int>> choices(n);
    for (std::size_t l = 0; l < n; ++l) {
        const int residue = floor_mod(inner.a[l] - outer.a[l], m);
        for (int c = residue - 2 * m; c <= m; c += m) {
            if (c >= -m) choices[l].push_back(c);
        }
    }

    std::optional<MultiIndex> found;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        int sum = 0;
        bool fits = true;
        for (std::size_t l = 0; l < n; ++l) {
            const int c = choices[l][idx[l]];
            fits = fits && c <= 0;
            sum += c;
        }
        if (fits && sum >= outer.k - inner.k) {
            if (found) throw std::logic_error("two lifts realize one cell containment");
            MultiIndex lift(n);
            for (std::size_t l = 0; l < n; ++l) lift[l] = outer.a[l] + choices[l][idx[l]];
            found = std::move(lift);
        }
        std::size_t d = 0;
        for (; d < n; ++d) {
            if (++idx[d] < choices[d].size()) break;
            idx[d] = 0;
        }
        if (d == n) break;
    }
    return found;
}

bool cell_contains(const CellObject& outer, const CellObject& inner) {
    return containing_lift(outer, inner).has_value();
}

std::vector<HomElement> hom_basis(int i, int j, std::size_t n) {
    std::vector<HomElement> out;
    if (n == 0) throw std::invalid_argument("hom basis needs n >= 1");
    if (j < i) return out;
    MultiIndex cur(n, 0);
    enumerate_offsets(0, j - i, cur, i, j, out);
    return out;
}

std::size_t hom_dimension(int i, int j, std::size_t n) {
    if (j < i) return 0;
    // C(j - i + n, n)
    std::size_t result = 1;
    const std::size_t d = static_cast<std::size_t>(j - i);
    for (std::size_t t = 1; t <= n; ++t) result = result * (d + t) / t;
    return result;
}

HomElement compose(const HomElement& g, const HomElement& f) {
    if (g.source != f.target) {
        throw std::invalid_argument("cannot compose: middle objects U(" + std::to_string(f.target) + ") and U(" +
                                    std::to_string(g.source) + ") differ");
    }
    if (g.b.size() != f.b.size()) throw std::invalid_argument("cannot compose offsets of different dimension");
    HomElement out{f.source, g.target, MultiIndex(f.b.size()), f.degree + g.degree};
    for (std::size_t l = 0; l < out.b.size(); ++l) out.b[l] = f.b[l] + g.b[l];
    return out;
}

CellObject gamma_act(const DeckElement& alpha, const CellObject& x) {
    if (alpha.dimension() != x.a.size()) throw std::invalid_argument("deck element and cell differ in dimension");
    MultiIndex shifted(x.a.size());
    for (std::size_t l = 0; l < shifted.size(); ++l) shifted[l] = x.a[l] + alpha.components()[l];
    return CellObject{x.k, normalize_offset(shifted, x.a.size())};
}

CoverMorphism gamma_act(const DeckElement& alpha, const CoverMorphism& x) {
    CoverMorphism out = x;
    for (std::size_t l = 0; l < alpha.dimension(); ++l) {
        out.source_lift.at(l) += alpha.components()[l];
        out.target_lift.at(l) += alpha.components()[l];
    }
    return out;
}

CoverMorphism compose(const CoverMorphism& g, const CoverMorphism& f) {
    if (g.source != f.target || g.source_lift != f.target_lift) {
        throw std::invalid_argument("cannot compose cover morphisms through different cells");
    }
    return CoverMorphism{f.source, f.source_lift, g.target, g.target_lift};
}

HomElement to_hom_element(const CoverMorphism& m) {
    if (m.source_lift.size() != m.target_lift.size()) throw std::invalid_argument("cover morphism lifts differ in dimension");
    MultiIndex b(m.source_lift.size());
    for (std::size_t l = 0; l < b.size(); ++l) b[l] = m.target_lift[l] - m.source_lift[l];
    return HomElement{m.source, m.target, std::move(b), 0};
}

std::vector<HomElement> graded_hom(const Quiver& q, int i, int j, int degree) {
    std::vector<HomElement> out;
    for (const auto& e : q.hom(i, j)) {
        if (e.degree == degree) out.push_back(e);
    }
    return out;
}

Quiver quotient_quiver(std::size_t n) {
    if (n == 0) throw std::invalid_argument("quiver needs n >= 1");
    Quiver q;
    q.n = n;
    const int top = static_cast<int>(n);
    for (int k = -top - 1; k <= -1; ++k) q.objects.push_back(k);

    for (int i : q.objects) {
        for (int j : q.objects) {
            if (i <= j) q.homs[{i, j}] = hom_basis(i, j, n);
        }
    }
    for (int i : q.objects) {
        for (int j = i; j <= -1; ++j) {
            for (int k = j; k <= -1; ++k) {
                const auto& fs = q.hom(i, j);
                const auto& gs = q.hom(j, k);
                for (std::size_t fi = 0; fi < fs.size(); ++fi) {
                    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                        q.compositions.push_back({i, j, k, fi, gi, compose(gs[gi], fs[fi])});
                    }
                }
            }
        }
    }
    return q;
}

bool is_strong_exceptional(const Quiver& q) {
    const auto position = [&](int obj) {
        return std::find(q.objects.begin(), q.objects.end(), obj) - q.objects.begin();
    };
    for (const auto& [key, basis] : q.homs) {
        const auto [i, j] = key;
        if (position(i) == static_cast<std::ptrdiff_t>(q.objects.size()) ||
            position(j) == static_cast<std::ptrdiff_t>(q.objects.size())) {
            return false;
        }
        if (position(i) > position(j) && !basis.empty()) return false;
        for (const auto& e : basis) {
            if (e.degree != 0 || e.source != i || e.target != j) return false;
        }
    }
    for (int i : q.objects) {
        const auto& ends = q.hom(i, i);
        if (ends.size() != 1) return false;
        const auto& id = ends.front();
        if (std::any_of(id.b.begin(), id.b.end(), [](int v) { return v != 0; })) return false;
    }
    for (const auto& c : q.compositions) {
        const auto& target = q.hom(c.i, c.k);
        if (c.f_index >= q.hom(c.i, c.j).size() || c.g_index >= q.hom(c.j, c.k).size()) return false;
        if (std::find(target.begin(), target.end(), c.result) == target.end()) return false;
    }
    return true;
}

}  // namespace tdual::homs
