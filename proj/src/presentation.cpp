#include "sy/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sy {

int RelationInstance::required_cap() const { return std::max({lhs.max_degree(), rhs.max_degree(), 0}); }

std::string RelationInstance::key() const {
    std::ostringstream os;
    os << id << '(';
    for (std::size_t k = 0; k < indices.size(); ++k) os << (k ? "," : "") << indices[k].first << '=' << indices[k].second;
    static const char* names[] = {"r", "s", "l"};
    os << ';';
    for (std::size_t k = 0; k < degrees.size(); ++k) os << (k ? "," : "") << names[k] << '=' << degrees[k];
    os << ')';
    return os.str();
}

const std::vector<std::string>& relation_ids() {
    static const std::vector<std::string> ids = {"R7.1",  "R7.2",  "R7.3",  "R7.4",  "R7.5",  "R7.6",
                                                 "R7.7",  "R7.8",  "R7.9",  "R7.10", "R7.11", "R7.12",
                                                 "R7.13", "R7.14", "R7.15", "R7.16", "R6.4E", "R6.4F"};
    return ids;
}

const std::vector<std::string>& series_identity_ids() {
    static const std::vector<std::string> ids = {
        "R3.11", "R5.1",  "R5.2",  "R5.3",  "R5.4",  "R5.5",  "R5.6",  "R5.7",  "R5.8",  "R5.9",
        "R6.1a", "R6.1b", "R6.1c", "R6.1d", "R6.2a", "R6.2b", "R6.2c", "R6.2d", "R6.3a", "R6.3b",
        "R6.3c", "R6.3d", "R6.3e", "R6.3f", "R6.3g", "R6.3h"};
    return ids;
}

std::vector<std::string> resolve_relation_ids(const std::string& spec) {
    std::vector<std::string> out;
    auto push = [&](const std::string& id) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    };
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) continue;
        if (tok == "all") {
            for (const auto& id : relation_ids()) push(id);
            continue;
        }
        if (tok == "SERRE-E") tok = "R7.15";
        if (tok == "SERRE-F") tok = "R7.16";
        bool found = false;
        for (const auto* list : {&relation_ids(), &series_identity_ids()}) {
            for (const auto& id : *list) {
                // exact id, or a group prefix such as "R7" / "R6.3"
                bool group = id.size() > tok.size() && id.compare(0, tok.size(), tok) == 0 &&
                             (id[tok.size()] == '.' || (tok.find('.') != std::string::npos && std::isalpha(id[tok.size()])));
                if (id == tok || group) {
                    push(id);
                    found = true;
                }
            }
        }
        if (!found) throw std::invalid_argument("unknown relation id '" + tok + "'");
    }
    return out;
}

namespace {

Expr num(int v) { return Expr::number(Rational(v)); }
int sgn(int x) { return (x & 1) ? -1 : 1; }
int delta(int x, int y) { return x == y ? 1 : 0; }

// Generator references of the parabolic alphabet. D^(0) and D'^(0)
// collapse to delta; E and F of degree 0 are zero.
struct Gen {
    const Composition& mu;
    int p(int a, int i) const { return mu.restricted_parity(a, i); }
    Expr D(int a, int i, int j, int t) const {
        if (t == 0) return num(delta(i, j));
        return Expr::atom({Family::D, {a, i, j, t}});
    }
    Expr Dp(int a, int i, int j, int t) const {
        if (t == 0) return num(delta(i, j));
        return Expr::atom({Family::DPRIME, {a, i, j, t}});
    }
    // E_{a;i,j} = E_{a,a+1;i,j}
    Expr E(int a, int i, int j, int t) const {
        if (t <= 0) return num(0);
        return Expr::atom({Family::E, {a, a + 1, i, j, t}});
    }
    // F_{a;i,j} = F_{a+1,a;i,j}
    Expr F(int a, int i, int j, int t) const {
        if (t <= 0) return num(0);
        return Expr::atom({Family::F, {a + 1, a, i, j, t}});
    }
};

using Sink = std::function<void(RelationInstance)>;
using Idx = std::vector<std::pair<std::string, int>>;

void emit(const Sink& fn, const char* id, Idx idx, std::vector<int> deg, Expr lhs, Expr rhs) {
    fn(RelationInstance{id, std::move(idx), std::move(deg), std::move(lhs), std::move(rhs)});
}

void r71(const Composition& mu, int, const Sink& fn) {
    for (int a = 1; a <= mu.blocks(); ++a)
        for (int i = 1; i <= mu.part(a); ++i)
            for (int j = 1; j <= mu.part(a); ++j)
                emit(fn, "R7.1", {{"a", a}, {"i", i}, {"j", j}}, {}, Expr::atom({Family::D, {a, i, j, 0}}),
                     num(delta(i, j)));
}

void r72(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    for (int a = 1; a <= mu.blocks(); ++a)
        for (int i = 1; i <= mu.part(a); ++i)
            for (int j = 1; j <= mu.part(a); ++j)
                for (int r = 0; r <= R; ++r) {
                    Expr lhs;
                    for (int p = 1; p <= mu.part(a); ++p)
                        for (int t = 0; t <= r; ++t) lhs += g.D(a, i, p, t) * g.Dp(a, p, j, r - t);
                    emit(fn, "R7.2", {{"a", a}, {"i", i}, {"j", j}}, {r}, lhs, num(delta(r, 0) * delta(i, j)));
                }
}

void r73(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    const int n = mu.blocks();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a); ++j)
                    for (int h = 1; h <= mu.part(b); ++h)
                        for (int k = 1; k <= mu.part(b); ++k)
                            for (int r = 0; r <= R; ++r)
                                for (int s = 0; s <= R; ++s) {
                                    Expr rhs;
                                    if (a == b) {
                                        int e = g.p(a, i) * g.p(a, j) + g.p(a, i) * g.p(a, h) + g.p(a, j) * g.p(a, h);
                                        for (int t = 0; t <= std::min(r, s) - 1; ++t)
                                            rhs += g.D(a, h, j, t) * g.D(a, i, k, r + s - 1 - t) -
                                                   g.D(a, h, j, r + s - 1 - t) * g.D(a, i, k, t);
                                        rhs = Rational(sgn(e)) * rhs;
                                    }
                                    emit(fn, "R7.3",
                                         {{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s},
                                         bracket(g.D(a, i, j, r), g.D(b, h, k, s)), rhs);
                                }
}

void r74(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    const int n = mu.blocks();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b < n; ++b)
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a); ++j)
                    for (int h = 1; h <= mu.part(b); ++h)
                        for (int k = 1; k <= mu.part(b + 1); ++k)
                            for (int r = 0; r <= R; ++r)
                                for (int s = 1; s <= R; ++s) {
                                    Expr rhs;
                                    if (a == b && h == j) {
                                        Expr sum;
                                        for (int p = 1; p <= mu.part(a); ++p)
                                            for (int t = 0; t <= r - 1; ++t)
                                                sum += g.D(a, i, p, t) * g.E(b, p, k, r + s - 1 - t);
                                        rhs += Rational(sgn(g.p(a, h) * g.p(a, j))) * sum;
                                    }
                                    if (a == b + 1) {
                                        int e = g.p(b, h) * g.p(a, k) + g.p(b, h) * g.p(a, j) + g.p(a, j) * g.p(a, k);
                                        Expr sum;
                                        for (int t = 0; t <= r - 1; ++t)
                                            sum += g.D(a, i, k, t) * g.E(b, h, j, r + s - 1 - t);
                                        rhs -= Rational(sgn(e)) * sum;
                                    }
                                    emit(fn, "R7.4",
                                         {{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s},
                                         bracket(g.D(a, i, j, r), g.E(b, h, k, s)), rhs);
                                }
}

// The a=b term carries delta_{ik} and a minus sign, as in the n=2 series
// form (F(u) - F(v)) D(u); the coefficient form as printed has neither.
void r75(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    const int n = mu.blocks();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b < n; ++b)
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a); ++j)
                    for (int h = 1; h <= mu.part(b + 1); ++h)
                        for (int k = 1; k <= mu.part(b); ++k)
                            for (int r = 0; r <= R; ++r)
                                for (int s = 1; s <= R; ++s) {
                                    Expr rhs;
                                    if (a == b && i == k) {
                                        int e = g.p(a, i) * g.p(a, j) + g.p(a + 1, h) * g.p(a, i) +
                                                g.p(a + 1, h) * g.p(a, j);
                                        Expr sum;
                                        for (int p = 1; p <= mu.part(a); ++p)
                                            for (int t = 0; t <= r - 1; ++t)
                                                sum += g.F(b, h, p, r + s - 1 - t) * g.D(a, p, j, t);
                                        rhs -= Rational(sgn(e)) * sum;
                                    }
                                    if (a == b + 1) {
                                        int e = g.p(a, h) * g.p(b, k) + g.p(a, h) * g.p(a, j) + g.p(a, j) * g.p(b, k);
                                        Expr sum;
                                        for (int t = 0; t <= r - 1; ++t)
                                            sum += g.F(b, i, k, r + s - 1 - t) * g.D(a, h, j, t);
                                        rhs += Rational(sgn(e)) * sum;
                                    }
                                    emit(fn, "R7.5",
                                         {{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s},
                                         bracket(g.D(a, i, j, r), g.F(b, h, k, s)), rhs);
                                }
}

void r76(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    const int n = mu.blocks();
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a + 1); ++j)
                    for (int h = 1; h <= mu.part(b + 1); ++h)
                        for (int k = 1; k <= mu.part(b); ++k)
                            for (int r = 1; r <= R; ++r)
                                for (int s = 1; s <= R; ++s) {
                                    Expr rhs;
                                    if (a == b) {
                                        int e = g.p(a + 1, h) * g.p(a, k) + g.p(a + 1, j) * g.p(a, k) +
                                                g.p(a + 1, h) * g.p(a + 1, j) + 1;
                                        for (int t = 0; t <= r + s - 1; ++t)
                                            rhs += g.Dp(a, i, k, r + s - 1 - t) * g.D(a + 1, h, j, t);
                                        rhs = Rational(sgn(e)) * rhs;
                                    }
                                    emit(fn, "R7.6",
                                         {{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s},
                                         bracket(g.E(a, i, j, r), g.F(b, h, k, s)), rhs);
                                }
}

void r77(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    for (int a = 1; a < mu.blocks(); ++a)
        for (int i = 1; i <= mu.part(a); ++i)
            for (int j = 1; j <= mu.part(a + 1); ++j)
                for (int h = 1; h <= mu.part(a); ++h)
                    for (int k = 1; k <= mu.part(a + 1); ++k)
                        for (int r = 1; r <= R; ++r)
                            for (int s = 1; s <= R; ++s) {
                                int e = g.p(a, h) * g.p(a + 1, j) + g.p(a + 1, j) * g.p(a + 1, k) +
                                        g.p(a, h) * g.p(a + 1, k);
                                Expr rhs;
                                for (int t = 1; t <= s - 1; ++t) rhs += g.E(a, i, k, r + s - 1 - t) * g.E(a, h, j, t);
                                for (int t = 1; t <= r - 1; ++t) rhs -= g.E(a, i, k, r + s - 1 - t) * g.E(a, h, j, t);
                                emit(fn, "R7.7", {{"a", a}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s},
                                     bracket(g.E(a, i, j, r), g.E(a, h, k, s)), Rational(sgn(e)) * rhs);
                            }
}

void r78(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    for (int a = 1; a < mu.blocks(); ++a)
        for (int i = 1; i <= mu.part(a + 1); ++i)
            for (int j = 1; j <= mu.part(a); ++j)
                for (int h = 1; h <= mu.part(a + 1); ++h)
                    for (int k = 1; k <= mu.part(a); ++k)
                        for (int r = 1; r <= R; ++r)
                            for (int s = 1; s <= R; ++s) {
                                int e = g.p(a + 1, h) * g.p(a, j) + g.p(a, j) * g.p(a, k) + g.p(a + 1, h) * g.p(a, k);
                                Expr rhs;
                                for (int t = 1; t <= r - 1; ++t) rhs += g.F(a, i, k, r + s - 1 - t) * g.F(a, h, j, t);
                                for (int t = 1; t <= s - 1; ++t) rhs -= g.F(a, i, k, r + s - 1 - t) * g.F(a, h, j, t);
                                emit(fn, "R7.8", {{"a", a}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s},
                                     bracket(g.F(a, i, j, r), g.F(a, h, k, s)), Rational(sgn(e)) * rhs);
                            }
}

void r79(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    for (int a = 1; a + 1 < mu.blocks(); ++a)
        for (int i = 1; i <= mu.part(a); ++i)
            for (int j = 1; j <= mu.part(a + 1); ++j)
                for (int h = 1; h <= mu.part(a + 1); ++h)
                    for (int k = 1; k <= mu.part(a + 2); ++k)
                        for (int r = 1; r <= R; ++r)
                            for (int s = 1; s <= R; ++s) {
                                Expr lhs = bracket(g.E(a, i, j, r + 1), g.E(a + 1, h, k, s)) -
                                           bracket(g.E(a, i, j, r), g.E(a + 1, h, k, s + 1));
                                Expr rhs;
                                if (h == j) {
                                    for (int q = 1; q <= mu.part(a + 1); ++q)
                                        rhs += g.E(a, i, q, r) * g.E(a + 1, q, k, s);
                                    rhs = Rational(sgn(g.p(a + 1, j) * g.p(a + 1, h))) * rhs;
                                }
                                emit(fn, "R7.9", {{"a", a}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s}, lhs, rhs);
                            }
}

void r710(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    for (int a = 1; a + 1 < mu.blocks(); ++a)
        for (int i = 1; i <= mu.part(a + 1); ++i)
            for (int j = 1; j <= mu.part(a); ++j)
                for (int h = 1; h <= mu.part(a + 2); ++h)
                    for (int k = 1; k <= mu.part(a + 1); ++k)
                        for (int r = 1; r <= R; ++r)
                            for (int s = 1; s <= R; ++s) {
                                Expr lhs = bracket(g.F(a, i, j, r + 1), g.F(a + 1, h, k, s)) -
                                           bracket(g.F(a, i, j, r), g.F(a + 1, h, k, s + 1));
                                Expr rhs;
                                if (i == k) {
                                    int e = g.p(a + 1, i) * (g.p(a, j) + g.p(a + 2, h)) + g.p(a, j) * g.p(a + 2, h) + 1;
                                    for (int q = 1; q <= mu.part(a + 1); ++q)
                                        rhs += g.F(a + 1, h, q, s) * g.F(a, q, j, r);
                                    rhs = Rational(sgn(e)) * rhs;
                                }
                                emit(fn, "R7.10", {{"a", a}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s}, lhs, rhs);
                            }
}

void r711(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    const int n = mu.blocks();
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            if (std::abs(b - a) <= 1 && b != a + 1) continue;
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a + 1); ++j)
                    for (int h = 1; h <= mu.part(b); ++h)
                        for (int k = 1; k <= mu.part(b + 1); ++k) {
                            if (b == a + 1 && h == j) continue;
                            for (int r = 1; r <= R; ++r)
                                for (int s = 1; s <= R; ++s)
                                    emit(fn, "R7.11",
                                         {{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s},
                                         bracket(g.E(a, i, j, r), g.E(b, h, k, s)), num(0));
                        }
        }
}

void r712(const Composition& mu, int R, const Sink& fn) {
    Gen g{mu};
    const int n = mu.blocks();
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            if (std::abs(b - a) <= 1 && b != a + 1) continue;
            for (int i = 1; i <= mu.part(a + 1); ++i)
                for (int j = 1; j <= mu.part(a); ++j)
                    for (int h = 1; h <= mu.part(b + 1); ++h)
                        for (int k = 1; k <= mu.part(b); ++k) {
                            if (b == a + 1 && i == k) continue;
                            for (int r = 1; r <= R; ++r)
                                for (int s = 1; s <= R; ++s)
                                    emit(fn, "R7.12",
                                         {{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"h", h}, {"k", k}}, {r, s},
                                         bracket(g.F(a, i, j, r), g.F(b, h, k, s)), num(0));
                        }
        }
}

// E (or F) Serre-type triple brackets, |a-b| >= 1.
void r713_14(const Composition& mu, int R, const Sink& fn, bool upper) {
    Gen g{mu};
    const int n = mu.blocks();
    // block sizes of the row / column index of X_{a;i,j}
    auto rows = [&](int a) { return upper ? mu.part(a) : mu.part(a + 1); };
    auto cols = [&](int a) { return upper ? mu.part(a + 1) : mu.part(a); };
    auto X = [&](int a, int i, int j, int t) { return upper ? g.E(a, i, j, t) : g.F(a, i, j, t); };
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            if (a == b) continue;
            for (int i = 1; i <= rows(a); ++i)
                for (int j = 1; j <= cols(a); ++j)
                    for (int h = 1; h <= rows(a); ++h)
                        for (int k = 1; k <= cols(a); ++k)
                            for (int f = 1; f <= rows(b); ++f)
                                for (int gg = 1; gg <= cols(b); ++gg)
                                    for (int r = 1; r <= R; ++r)
                                        for (int s = 1; s <= R; ++s)
                                            for (int l = 1; l <= R; ++l) {
                                                Expr lhs = bracket(X(a, i, j, r), bracket(X(a, h, k, s), X(b, f, gg, l))) +
                                                           bracket(X(a, i, j, s), bracket(X(a, h, k, r), X(b, f, gg, l)));
                                                emit(fn, upper ? "R7.13" : "R7.14",
                                                     {{"a", a}, {"b", b}, {"i", i}, {"j", j}, {"h", h}, {"k", k},
                                                      {"f", f}, {"g", gg}},
                                                     {r, s, l}, lhs, num(0));
                                            }
        }
}

// Quartic super Serre relations. `conditional` restricts to the parity side
// condition of the presentation; otherwise every index choice is emitted.
void serre_e(const Composition& mu, int R, const Sink& fn, bool conditional) {
    Gen g{mu};
    const int n = mu.blocks();
    for (int a = 1; a + 3 <= n; ++a)
        for (int i = 1; i <= mu.part(a); ++i)
            for (int f1 = 1; f1 <= mu.part(a + 1); ++f1)
                for (int f2 = 1; f2 <= mu.part(a + 1); ++f2)
                    for (int h = 1; h <= mu.part(a + 1); ++h)
                        for (int g1 = 1; g1 <= mu.part(a + 2); ++g1)
                            for (int g2 = 1; g2 <= mu.part(a + 2); ++g2)
                                for (int j = 1; j <= mu.part(a + 2); ++j)
                                    for (int k = 1; k <= mu.part(a + 3); ++k) {
                                        if (conditional && g.p(a + 1, h) + g.p(a + 2, j) != 1) continue;
                                        for (int r = 1; r <= R; ++r)
                                            for (int s = 1; s <= R; ++s) {
                                                Expr lhs = bracket(bracket(g.E(a, i, f1, r), g.E(a + 1, f2, j, 1)),
                                                                   bracket(g.E(a + 1, h, g1, 1), g.E(a + 2, g2, k, s)));
                                                emit(fn, conditional ? "R7.15" : "R6.4E",
                                                     {{"a", a}, {"i", i}, {"f1", f1}, {"f2", f2}, {"j", j}, {"h", h},
                                                      {"g1", g1}, {"g2", g2}, {"k", k}},
                                                     {r, s}, lhs, num(0));
                                            }
                                    }
}

// R7.16 uses F_{a;i,f1}, F_{a+1;f2,j}, F_{a+1;h,g1}, F_{a+2;g2,k}
// with condition |j|_{a+1} + |h|_{a+2} = 1; R6.4F, without the condition, uses
// the transposed index placement F_{a;f1,i}, F_{a+1;j,f2}, F_{a+1;g1,h}, F_{a+2;k,g2}.
void serre_f(const Composition& mu, int R, const Sink& fn, bool conditional) {
    Gen g{mu};
    const int n = mu.blocks();
    for (int a = 1; a + 3 <= n; ++a) {
        // ranges of (i, f1, f2, j, h, g1, g2, k)
        std::vector<int> ranges = conditional
            ? std::vector<int>{mu.part(a + 1), mu.part(a), mu.part(a + 2), mu.part(a + 1), mu.part(a + 2),
                               mu.part(a + 1), mu.part(a + 3), mu.part(a + 2)}
            : std::vector<int>{mu.part(a), mu.part(a + 1), mu.part(a + 1), mu.part(a + 2), mu.part(a + 1),
                               mu.part(a + 2), mu.part(a + 2), mu.part(a + 3)};
        std::vector<int> v(8, 1);
        while (true) {
            const int i = v[0], f1 = v[1], f2 = v[2], j = v[3], h = v[4], g1 = v[5], g2 = v[6], k = v[7];
            bool admissible = !conditional || g.p(a + 1, j) + g.p(a + 2, h) == 1;
            if (admissible) {
                for (int r = 1; r <= R; ++r)
                    for (int s = 1; s <= R; ++s) {
                        Expr lhs = conditional
                            ? bracket(bracket(g.F(a, i, f1, r), g.F(a + 1, f2, j, 1)),
                                      bracket(g.F(a + 1, h, g1, 1), g.F(a + 2, g2, k, s)))
                            : bracket(bracket(g.F(a, f1, i, r), g.F(a + 1, j, f2, 1)),
                                      bracket(g.F(a + 1, g1, h, 1), g.F(a + 2, k, g2, s)));
                        emit(fn, conditional ? "R7.16" : "R6.4F",
                             {{"a", a}, {"i", i}, {"f1", f1}, {"f2", f2}, {"j", j}, {"h", h}, {"g1", g1},
                              {"g2", g2}, {"k", k}},
                             {r, s}, lhs, num(0));
                    }
            }
            int pos = 7;
            while (pos >= 0 && v[pos] == ranges[pos]) v[pos--] = 1;
            if (pos < 0) break;
            ++v[pos];
        }
    }
}

}  // namespace

void for_each_instance(const std::string& id, const Composition& mu, int R, const Sink& fn) {
    if (id == "R7.1") return r71(mu, R, fn);
    if (id == "R7.2") return r72(mu, R, fn);
    if (id == "R7.3") return r73(mu, R, fn);
    if (id == "R7.4") return r74(mu, R, fn);
    if (id == "R7.5") return r75(mu, R, fn);
    if (id == "R7.6") return r76(mu, R, fn);
    if (id == "R7.7") return r77(mu, R, fn);
    if (id == "R7.8") return r78(mu, R, fn);
    if (id == "R7.9") return r79(mu, R, fn);
    if (id == "R7.10") return r710(mu, R, fn);
    if (id == "R7.11") return r711(mu, R, fn);
    if (id == "R7.12") return r712(mu, R, fn);
    if (id == "R7.13") return r713_14(mu, R, fn, true);
    if (id == "R7.14") return r713_14(mu, R, fn, false);
    if (id == "R7.15" || id == "SERRE-E") return serre_e(mu, R, fn, true);
    if (id == "R7.16" || id == "SERRE-F") return serre_f(mu, R, fn, true);
    if (id == "R6.4E") return serre_e(mu, R, fn, false);
    if (id == "R6.4F") return serre_f(mu, R, fn, false);
    throw std::invalid_argument("unknown relation id '" + id + "'");
}

std::vector<RelationInstance> enumerate_instances(const std::string& id, const Composition& mu, int R) {
    std::vector<RelationInstance> out;
    for_each_instance(id, mu, R, [&](RelationInstance inst) { out.push_back(std::move(inst)); });
    return out;
}

Element gamma_atom(const Atom& at, const GaussFactors& g, const YangianContext& ctx) {
    const auto& x = at.idx;
    switch (at.family) {
        case Family::D: return g.D_coeff(x[0], x[1], x[2], x[3]);
        case Family::DPRIME: return g.Dp_coeff(x[0], x[1], x[2], x[3]);
        case Family::E:
            if (x[1] <= x[0]) throw std::invalid_argument("E[a,b,...] needs a < b: " + at.str());
            if (x[4] == 0) return Element();
            return g.E_coeff(x[0], x[1], x[2], x[3], x[4]);
        case Family::F:
            if (x[1] >= x[0]) throw std::invalid_argument("F[b,a,...] needs b > a: " + at.str());
            if (x[4] == 0) return Element();
            return g.F_coeff(x[0], x[1], x[2], x[3], x[4]);
        case Family::T: return ctx.t(x[0], x[1], x[2]);
        default: throw std::invalid_argument("no image under Gamma for " + at.str());
    }
}

Element evaluate_under_gamma(const RelationInstance& inst, const GaussFactors& g, const YangianContext& ctx) {
    const int need = inst.required_cap();
    if (g.cap < need)
        throw std::invalid_argument(inst.key() + ": Gauss factors at cap " + std::to_string(g.cap) +
                                    " are too short, need cap >= " + std::to_string(need));
    auto resolve = [&](const Atom& a) { return gamma_atom(a, g, ctx); };
    Element lhs = inst.lhs.evaluate(resolve, &ctx);
    Element rhs = inst.rhs.evaluate(resolve, &ctx);
    return ctx.normalize(lhs - rhs);
}

}  // namespace sy
