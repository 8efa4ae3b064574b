// Generating-series identities: both sides are built as truncated series in
// u, v (and w), subtracted and inspected on a certified window.

#include <sstream>
#include <stdexcept>

#include "sy/presentation.hpp"

namespace sy {

bool Window::contains(const Exponents& e) const {
    int sum = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] > caps[k]) return false;
        sum += e[k];
    }
    return total < 0 || sum <= total;
}

std::string Window::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < vars.size(); ++k) os << (k ? "," : "") << vars[k] << "<=" << caps[k];
    if (total >= 0) os << ",total<=" << total;
    return os.str();
}

std::string SeriesReport::key() const {
    std::ostringstream os;
    os << id << '(';
    for (std::size_t k = 0; k < indices.size(); ++k) os << (k ? "," : "") << indices[k].first << '=' << indices[k].second;
    os << ')';
    return os.str();
}

namespace {

using TS = TruncatedSeries;
using Idx = std::vector<std::pair<std::string, int>>;

int sgn(int x) { return (x & 1) ? -1 : 1; }

struct Env {
    const YangianContext& ctx;
    std::vector<std::string> vars;
    std::vector<int> caps;

    TS at(const MatrixSeries& m, int i, int j, int which) const { return m.at(i, j).embed(vars, caps, which); }
    TS zero() const { return TS(vars, caps); }
    TS mul(const TS& a, const TS& b) const { return multiply(a, b, &ctx); }
    TS br(const TS& a, const TS& b) const { return supercommutator(a, b, &ctx); }
};

TS scaled(int sign, TS s) {
    if (sign < 0) s = -s;
    return s;
}

struct Collector {
    std::string id;
    Window window;
    std::vector<SeriesReport> out;

    void check(Idx idx, const TS& lhs, const TS& rhs) {
        SeriesReport rep;
        rep.id = id;
        rep.indices = std::move(idx);
        rep.window = window;
        TS diff = lhs - rhs;
        for (std::size_t k = 0; k < diff.flat_size(); ++k) {
            Exponents e = diff.unflatten(k);
            if (!window.contains(e)) continue;
            ++rep.checked;
            if (rep.zero && !diff.flat(k).is_zero()) {
                rep.zero = false;
                rep.first_nonzero = e;
                rep.residual = diff.flat(k).str();
            }
        }
        out.push_back(std::move(rep));
    }
};

// Ranges of an entry of E_{a,a+1} / F_{a+1,a}: rows, cols.
void require_blocks(const std::string& id, const Composition& mu, int n) {
    if (mu.blocks() != n)
        throw std::invalid_argument(id + " needs a composition with " + std::to_string(n) + " parts, got (" +
                                    mu.parts_str() + ")");
}

// (u - v)[t_ij(u), t'_hk(v)]
void tt_identities(const YangianContext& ctx, int L, Collector& col) {
    const int C = L + 1;
    Env env{ctx, {"u", "v"}, {C, C}};
    MatrixSeries T = t_matrix(ctx, C);
    MatrixSeries Tp = invert(T, &ctx);
    const int n = ctx.dim();
    auto p = [&](int i) { return ctx.parity(i); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int h = 1; h <= n; ++h)
                for (int k = 1; k <= n; ++k) {
                    TS lhs = multiply_by_difference(env.br(env.at(T, i, j, 0), env.at(Tp, h, k, 1)));
                    TS rhs = env.zero();
                    for (int g = 1; g <= n; ++g) {
                        if (h == j) rhs += env.mul(env.at(T, i, g, 0), env.at(Tp, g, k, 1));
                        if (i == k) rhs -= env.mul(env.at(Tp, h, g, 1), env.at(T, g, j, 0));
                    }
                    col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}}, lhs,
                              scaled(sgn(p(i) * p(j) + p(i) * p(h) + p(j) * p(h)), rhs));
                }
}

void prop_n2(const std::string& id, const YangianContext& ctx, const Composition& mu, int L, Collector& col) {
    const int C = L + 1;
    Env env{ctx, {"u", "v"}, {C, C}};
    GaussFactors g = decompose(ctx, mu, C);
    const int m1 = mu.part(1), m2 = mu.part(2);
    auto p = [&](int a, int i) { return mu.restricted_parity(a, i); };
    const MatrixSeries &D1 = g.d(1), &D2 = g.d(2), &Dp1 = g.dp(1), &Dp2 = g.dp(2), &E = g.e(1, 2), &F = g.f(2, 1);
    auto uv = [&](const MatrixSeries& m, int i, int j) { return env.at(m, i, j, 0) - env.at(m, i, j, 1); };
    auto lhs_of = [&](const MatrixSeries& x, int i, int j, const MatrixSeries& y, int h, int k) {
        return multiply_by_difference(env.br(env.at(x, i, j, 0), env.at(y, h, k, 1)));
    };
    // loops over (i,j) in x-block shape and (h,k) in y-block shape
    auto each = [&](int ri, int rj, int rh, int rk, auto&& body) {
        for (int i = 1; i <= ri; ++i)
            for (int j = 1; j <= rj; ++j)
                for (int h = 1; h <= rh; ++h)
                    for (int k = 1; k <= rk; ++k) body(i, j, h, k);
    };
    auto idx = [](int i, int j, int h, int k) { return Idx{{"i", i}, {"j", j}, {"h", h}, {"k", k}}; };

    if (id == "R5.1")
        each(m1, m1, m1, m2, [&](int i, int j, int h, int k) {
            TS rhs = env.zero();
            if (h == j)
                for (int q = 1; q <= m1; ++q) rhs += env.mul(env.at(D1, i, q, 0), -uv(E, q, k));
            col.check(idx(i, j, h, k), lhs_of(D1, i, j, E, h, k), scaled(sgn(p(1, h) * p(1, j)), rhs));
        });
    else if (id == "R5.2")
        each(m1, m2, m2, m2, [&](int i, int j, int h, int k) {
            TS rhs = env.zero();
            if (h == j)
                for (int q = 1; q <= m2; ++q) rhs += env.mul(uv(E, i, q), env.at(Dp2, q, k, 1));
            col.check(idx(i, j, h, k), lhs_of(E, i, j, Dp2, h, k), scaled(sgn(p(2, h) * p(2, j)), rhs));
        });
    else if (id == "R5.3")
        each(m2, m2, m1, m2, [&](int i, int j, int h, int k) {
            TS rhs = env.mul(env.at(D2, i, k, 0), uv(E, h, j));
            int e = p(1, h) * p(2, k) + p(1, h) * p(2, j) + p(2, j) * p(2, k);
            col.check(idx(i, j, h, k), lhs_of(D2, i, j, E, h, k), scaled(sgn(e), rhs));
        });
    else if (id == "R5.4")
        each(m1, m1, m2, m1, [&](int i, int j, int h, int k) {
            TS rhs = env.zero();
            if (i == k)
                for (int q = 1; q <= m1; ++q) rhs += env.mul(uv(F, h, q), env.at(D1, q, j, 0));
            int e = p(1, i) * p(1, j) + p(2, h) * p(1, i) + p(2, h) * p(1, j);
            col.check(idx(i, j, h, k), lhs_of(D1, i, j, F, h, k), scaled(sgn(e), rhs));
        });
    else if (id == "R5.5")
        each(m2, m1, m2, m2, [&](int i, int j, int h, int k) {
            TS rhs = env.zero();
            if (i == k)
                for (int q = 1; q <= m2; ++q) rhs += env.mul(env.at(Dp2, h, q, 1), -uv(F, q, j));
            int e = p(2, h) * p(2, i) + p(2, h) * p(1, j) + p(1, j) * p(2, k);
            col.check(idx(i, j, h, k), lhs_of(F, i, j, Dp2, h, k), scaled(sgn(e), rhs));
        });
    else if (id == "R5.6")
        each(m2, m2, m2, m1, [&](int i, int j, int h, int k) {
            TS rhs = env.mul(-uv(F, i, k), env.at(D2, h, j, 0));
            int e = p(2, h) * p(1, k) + p(2, h) * p(2, j) + p(2, j) * p(1, k);
            col.check(idx(i, j, h, k), lhs_of(D2, i, j, F, h, k), scaled(sgn(e), rhs));
        });
    else if (id == "R5.7")
        each(m1, m2, m2, m1, [&](int i, int j, int h, int k) {
            int e1 = p(2, h) * p(1, i) + p(1, i) * p(2, j) + p(2, h) * p(2, j);
            int e2 = p(2, h) * p(1, k) + p(2, j) * p(1, k) + p(2, h) * p(2, j);
            TS rhs = scaled(sgn(e1), env.mul(env.at(D2, h, j, 0), env.at(Dp1, i, k, 0))) -
                     scaled(sgn(e2), env.mul(env.at(Dp1, i, k, 1), env.at(D2, h, j, 1)));
            col.check(idx(i, j, h, k), lhs_of(E, i, j, F, h, k), rhs);
        });
    else if (id == "R5.8")
        each(m1, m2, m1, m2, [&](int i, int j, int h, int k) {
            int e = p(1, h) * p(2, j) + p(2, j) * p(2, k) + p(1, h) * p(2, k);
            col.check(idx(i, j, h, k), lhs_of(E, i, j, E, h, k), scaled(sgn(e), env.mul(uv(E, i, k), uv(E, h, j))));
        });
    else if (id == "R5.9")
        each(m2, m1, m2, m1, [&](int i, int j, int h, int k) {
            int e = p(2, i) * p(1, j) + p(2, h) * p(2, i) + p(2, h) * p(1, j);
            col.check(idx(i, j, h, k), lhs_of(F, i, j, F, h, k), scaled(sgn(e), env.mul(-uv(F, h, j), uv(F, i, k))));
        });
}

void n3_pair_identities(const std::string& id, const YangianContext& ctx, const Composition& mu, int L, Collector& col) {
    // the 1/(u-v) identities are checked after division, certified for r+s <= C+1
    const bool divided = id == "R6.1b" || id == "R6.2b";
    const int C = divided ? 2 * L - 1 : L;
    Env env{ctx, {"u", "v"}, {C, C}};
    GaussFactors g = decompose(ctx, mu, C);
    const int m1 = mu.part(1), m2 = mu.part(2), m3 = mu.part(3);
    auto p = [&](int a, int i) { return mu.restricted_parity(a, i); };
    const MatrixSeries &E1 = g.e(1, 2), &E2 = g.e(2, 3), &E13 = g.e(1, 3);
    const MatrixSeries &F1 = g.f(2, 1), &F2 = g.f(3, 2), &F31 = g.f(3, 1);
    auto U = [&](const MatrixSeries& m, int i, int j) { return env.at(m, i, j, 0); };
    auto V = [&](const MatrixSeries& m, int i, int j) { return env.at(m, i, j, 1); };
    auto range = [](int n) {
        std::vector<int> r(n);
        for (int k = 0; k < n; ++k) r[k] = k + 1;
        return r;
    };

    if (id == "R6.1a") {
        for (int i : range(m1)) for (int j : range(m2)) for (int h : range(m3)) for (int k : range(m2))
            col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}}, env.br(U(E1, i, j), V(F2, h, k)), env.zero());
    } else if (id == "R6.1b") {
        for (int i : range(m1)) for (int j : range(m2)) for (int h : range(m2)) for (int k : range(m3)) {
            TS rhs = env.zero();
            if (h == j) {
                TS num = V(E13, i, k) - U(E13, i, k);
                for (int q : range(m2)) num += env.mul(U(E1, i, q) - V(E1, i, q), V(E2, q, k));
                rhs = scaled(sgn(p(2, j) * p(2, h)), divide_by_difference(num, &ctx));
            }
            col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}}, env.br(U(E1, i, j), V(E2, h, k)), rhs);
        }
    } else if (id == "R6.1c") {
        for (int i : range(m1)) for (int j : range(m3)) for (int h : range(m2)) for (int k : range(m3))
            for (int gg : range(m2)) {
                int e = p(1, i) * p(3, j) + p(1, i) * p(2, h) + p(2, h) * p(3, j) + p(2, gg);
                TS rhs = env.mul(V(E2, h, j), env.br(U(E1, i, gg), V(E2, gg, k)));
                col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}, {"g", gg}}, env.br(U(E13, i, j), V(E2, h, k)),
                          scaled(sgn(e), rhs));
            }
    } else if (id == "R6.1d") {
        for (int i : range(m1)) for (int j : range(m2)) for (int h : range(m1)) for (int k : range(m3))
            for (int gg : range(m2)) {
                TS inner = V(E13, h, k);
                for (int q : range(m2)) inner -= env.mul(V(E1, h, q), V(E2, q, k));
                int e = p(1, h) * p(2, j) + p(2, j) * p(3, k) + p(1, h) * p(3, k) + p(2, gg) + 1;
                TS rhs = env.mul(env.br(U(E1, i, gg), V(E2, gg, k)), U(E1, h, j));
                col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}, {"g", gg}}, env.br(U(E1, i, j), inner),
                          scaled(sgn(e), rhs));
            }
    } else if (id == "R6.2a") {
        for (int i : range(m2)) for (int j : range(m1)) for (int h : range(m2)) for (int k : range(m3))
            col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}}, env.br(U(F1, i, j), V(E2, h, k)), env.zero());
    } else if (id == "R6.2b") {
        for (int i : range(m2)) for (int j : range(m1)) for (int h : range(m3)) for (int k : range(m2)) {
            TS rhs = env.zero();
            if (i == k) {
                TS num = U(F31, h, j) - V(F31, h, j);
                for (int q : range(m2)) num += env.mul(V(F2, h, q), V(F1, q, j) - U(F1, q, j));
                int e = p(2, i) * p(1, j) + p(2, i) * p(3, h) + p(1, j) * p(3, h);
                rhs = scaled(sgn(e), divide_by_difference(num, &ctx));
            }
            col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}}, env.br(U(F1, i, j), V(F2, h, k)), rhs);
        }
    } else if (id == "R6.2c") {
        for (int i : range(m3)) for (int j : range(m1)) for (int h : range(m3)) for (int k : range(m2))
            for (int gg : range(m2)) {
                int e = p(3, i) * p(1, j) + p(3, i) * p(3, h) + p(1, j) * p(3, h) + p(2, gg) + 1;
                TS rhs = env.mul(env.br(V(F2, h, gg), U(F1, gg, j)), V(F2, i, k));
                col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}, {"g", gg}}, env.br(U(F31, i, j), V(F2, h, k)),
                          scaled(sgn(e), rhs));
            }
    } else if (id == "R6.2d") {
        for (int i : range(m2)) for (int j : range(m1)) for (int h : range(m3)) for (int k : range(m1))
            for (int gg : range(m2)) {
                TS inner = -V(F31, h, k);
                for (int q : range(m2)) inner += env.mul(V(F2, h, q), V(F1, q, k));
                int e = (p(3, h) + p(1, j)) * (p(1, k) + p(2, gg));
                TS rhs = env.mul(U(F1, i, k), env.br(U(F1, gg, j), V(F2, h, gg)));
                col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}, {"g", gg}}, env.br(U(F1, i, j), inner),
                          scaled(sgn(e), rhs));
            }
    }
}

// Cubic identities; the E-forms are (a)-(d), the F-forms (e)-(h).
void n3_cubic_identities(const std::string& id, const YangianContext& ctx, const Composition& mu, int L, Collector& col) {
    const char form = id.back();
    const bool upper = form <= 'd';
    const bool three = form == 'c' || form == 'd' || form == 'g' || form == 'h';
    std::vector<std::string> vars = three ? std::vector<std::string>{"u", "v", "w"} : std::vector<std::string>{"u", "v"};
    Env env{ctx, vars, std::vector<int>(vars.size(), L)};
    GaussFactors g = decompose(ctx, mu, L);
    const MatrixSeries& X1 = upper ? g.e(1, 2) : g.f(2, 1);
    const MatrixSeries& X2 = upper ? g.e(2, 3) : g.f(3, 2);
    // row / column block sizes of X_1 and X_2
    const int r1 = upper ? mu.part(1) : mu.part(2), c1 = upper ? mu.part(2) : mu.part(1);
    const int r2 = upper ? mu.part(2) : mu.part(3), c2 = upper ? mu.part(3) : mu.part(2);
    const bool outer_first = form == 'a' || form == 'c' || form == 'e' || form == 'g';
    // (a)/(c): [[X1(u), X2(.)], X2(.)] with two X2's; (b)/(d): [X1(.), [X1(.), X2(.)]]
    const int rh = outer_first ? r2 : r1, ch = outer_first ? c2 : c1;
    for (int i = 1; i <= r1; ++i)
        for (int j = 1; j <= c1; ++j)
            for (int h = 1; h <= rh; ++h)
                for (int k = 1; k <= ch; ++k)
                    for (int f = 1; f <= r2; ++f)
                        for (int gg = 1; gg <= c2; ++gg) {
                            auto x1 = [&](int a, int b, int w) { return env.at(X1, a, b, w); };
                            auto x2 = [&](int a, int b, int w) { return env.at(X2, a, b, w); };
                            TS lhs;
                            if (outer_first && !three)
                                lhs = env.br(env.br(x1(i, j, 0), x2(h, k, 1)), x2(f, gg, 1));
                            else if (!three)
                                lhs = env.br(x1(i, j, 0), env.br(x1(h, k, 0), x2(f, gg, 1)));
                            else if (outer_first)
                                lhs = env.br(env.br(x1(i, j, 0), x2(h, k, 1)), x2(f, gg, 2)) +
                                      env.br(env.br(x1(i, j, 0), x2(h, k, 2)), x2(f, gg, 1));
                            else
                                lhs = env.br(x1(i, j, 0), env.br(x1(h, k, 1), x2(f, gg, 2))) +
                                      env.br(x1(i, j, 1), env.br(x1(h, k, 0), x2(f, gg, 2)));
                            col.check({{"i", i}, {"j", j}, {"h", h}, {"k", k}, {"f", f}, {"g", gg}}, lhs, env.zero());
                        }
}

}  // namespace

std::vector<SeriesReport> evaluate_series_identity(const std::string& id, const YangianContext& ctx,
                                                   const Composition& mu, int cap) {
    if (cap < 1) throw std::invalid_argument("series cap must be positive");
    if (!(mu.sequence() == ctx.sequence())) throw std::invalid_argument("composition does not match the 01-sequence");
    Collector col{id, {}, {}};
    if (id == "R3.11") {
        col.window = Window{{"u", "v"}, {cap, cap}};
        tt_identities(ctx, cap, col);
    } else if (id.rfind("R5.", 0) == 0 && id.size() == 4 && id[3] >= '1' && id[3] <= '9') {
        require_blocks(id, mu, 2);
        col.window = Window{{"u", "v"}, {cap, cap}};
        prop_n2(id, ctx, mu, cap, col);
    } else if (id.size() == 5 && (id.rfind("R6.1", 0) == 0 || id.rfind("R6.2", 0) == 0) && id[4] >= 'a' &&
               id[4] <= 'd') {
        require_blocks(id, mu, 3);
        col.window = Window{{"u", "v"}, {cap, cap}};
        n3_pair_identities(id, ctx, mu, cap, col);
    } else if (id.size() == 5 && id.rfind("R6.3", 0) == 0 && id[4] >= 'a' && id[4] <= 'h') {
        require_blocks(id, mu, 3);
        const char form = id[4];
        const bool three = form == 'c' || form == 'd' || form == 'g' || form == 'h';
        col.window = three ? Window{{"u", "v", "w"}, {cap, cap, cap}} : Window{{"u", "v"}, {cap, cap}};
        n3_cubic_identities(id, ctx, mu, cap, col);
    } else {
        throw std::invalid_argument("unknown series identity '" + id + "'");
    }
    return std::move(col.out);
}

}  // namespace sy
