#include "sy/gauss.hpp"

#include <stdexcept>

namespace sy {

MatrixSeries t_matrix(const YangianContext& ctx, int cap, const std::string& var) {
    const int n = ctx.dim();
    MatrixSeries t(n, n, TruncatedSeries::single(var, cap));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int r = 0; r <= cap; ++r) t.at(i, j).set(r, ctx.t(i, j, r));
    return t;
}

MatrixSeries mu_block(const MatrixSeries& m, const Composition& mu, int a, int b) {
    return m.block(mu.block_start(a) + 1, mu.part(a), mu.block_start(b) + 1, mu.part(b));
}

const MatrixSeries& GaussFactors::d(int a) const {
    if (a < 1 || a > blocks()) throw std::out_of_range("D block " + std::to_string(a));
    return D[a - 1];
}

const MatrixSeries& GaussFactors::dp(int a) const {
    if (a < 1 || a > blocks()) throw std::out_of_range("D' block " + std::to_string(a));
    return Dp[a - 1];
}

const MatrixSeries& GaussFactors::e(int a, int b) const {
    auto it = E.find({a, b});
    if (it == E.end()) throw std::out_of_range("no E block (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return it->second;
}

const MatrixSeries& GaussFactors::f(int b, int a) const {
    auto it = F.find({b, a});
    if (it == F.end()) throw std::out_of_range("no F block (" + std::to_string(b) + "," + std::to_string(a) + ")");
    return it->second;
}

namespace {

Element entry_coeff(const MatrixSeries& m, int i, int j, int r, int cap, const char* what) {
    if (i < 1 || j < 1 || i > m.rows() || j > m.cols()) throw std::out_of_range(std::string(what) + " entry index");
    if (r < 0) throw std::out_of_range(std::string(what) + " degree must be >= 0");
    if (r > cap)
        throw std::out_of_range(std::string(what) + " degree " + std::to_string(r) + " exceeds factor cap " +
                                std::to_string(cap));
    return m.at(i, j).coeff(r);
}

}  // namespace

Element GaussFactors::D_coeff(int a, int i, int j, int r) const { return entry_coeff(d(a), i, j, r, cap, "D"); }
Element GaussFactors::Dp_coeff(int a, int i, int j, int r) const { return entry_coeff(dp(a), i, j, r, cap, "D'"); }
Element GaussFactors::E_coeff(int a, int b, int i, int j, int r) const {
    return entry_coeff(e(a, b), i, j, r, cap, "E");
}
Element GaussFactors::F_coeff(int b, int a, int i, int j, int r) const {
    return entry_coeff(f(b, a), i, j, r, cap, "F");
}

MatrixSeries GaussFactors::full_D() const {
    const int n = config.total();
    MatrixSeries m(n, n, D[0].zero_like());
    for (int a = 1; a <= blocks(); ++a) m.set_block(config.block_start(a) + 1, config.block_start(a) + 1, d(a));
    return m;
}

MatrixSeries GaussFactors::full_E() const {
    const int n = config.total();
    MatrixSeries m = MatrixSeries::identity(n, D[0].zero_like());
    for (const auto& [key, blk] : E) m.set_block(config.block_start(key.first) + 1, config.block_start(key.second) + 1, blk);
    return m;
}

MatrixSeries GaussFactors::full_F() const {
    const int n = config.total();
    MatrixSeries m = MatrixSeries::identity(n, D[0].zero_like());
    for (const auto& [key, blk] : F) m.set_block(config.block_start(key.first) + 1, config.block_start(key.second) + 1, blk);
    return m;
}

GaussFactors decompose(const YangianContext& ctx, const Composition& mu, int cap) {
    if (!(mu.sequence() == ctx.sequence()))
        throw std::invalid_argument("composition is over " + mu.sequence().str() + ", context is " + ctx.sequence().str());
    if (cap < 0) throw std::invalid_argument("negative cap");
    const int n = mu.blocks();
    const MatrixSeries T = t_matrix(ctx, cap);
    GaussFactors g{mu, cap, {}, {}, {}, {}};
    // fd[(b,c)] = F_{b,c} D_c, filled as F blocks appear
    std::map<std::pair<int, int>, MatrixSeries> fd;
    auto eliminated = [&](int row, int col, int upto) {
        MatrixSeries acc = mu_block(T, mu, row, col);
        for (int c = 1; c < upto; ++c) acc -= multiply(fd.at({row, c}), g.e(c, col), &ctx);
        return acc;
    };
    for (int a = 1; a <= n; ++a) {
        g.D.push_back(eliminated(a, a, a));
        g.Dp.push_back(invert(g.D.back(), &ctx));
        const MatrixSeries& dpa = g.Dp.back();
        for (int b = a + 1; b <= n; ++b) {
            g.E.emplace(std::make_pair(a, b), multiply(dpa, eliminated(a, b, a), &ctx));
            g.F.emplace(std::make_pair(b, a), multiply(eliminated(b, a, a), dpa, &ctx));
        }
        for (int b = a + 1; b <= n; ++b) fd.emplace(std::make_pair(b, a), multiply(g.f(b, a), g.d(a), &ctx));
    }
    return g;
}

MatrixSeries quasideterminant(const MatrixSeries& A, const MatrixSeries& B, const MatrixSeries& C,
                              const MatrixSeries& Dblock, const NormalOrdering* ring) {
    if (!A.is_monic()) throw std::invalid_argument("quasideterminant: A must be monic");
    return Dblock - multiply(multiply(C, invert(A, ring), ring), B, ring);
}

namespace {

// Rows [1, n_{a-1}] x columns of block b, etc.
MatrixSeries leading(const MatrixSeries& T, const Composition& mu, int a) {
    int k = mu.block_start(a);
    return T.block(1, k, 1, k);
}

}  // namespace

MatrixSeries parabolic_by_quasidet(const YangianContext& ctx, const Composition& mu, int cap, ParabolicKind kind,
                                   int first, int second) {
    const int n = mu.blocks();
    const MatrixSeries T = t_matrix(ctx, cap);
    auto qd = [&](int a, int row, int col) {
        if (a == 1) return mu_block(T, mu, row, col);
        const int k = mu.block_start(a);
        MatrixSeries A = leading(T, mu, a);
        MatrixSeries B = T.block(1, k, mu.block_start(col) + 1, mu.part(col));
        MatrixSeries C = T.block(mu.block_start(row) + 1, mu.part(row), 1, k);
        return quasideterminant(A, B, C, mu_block(T, mu, row, col), &ctx);
    };
    switch (kind) {
        case ParabolicKind::D: {
            if (first < 1 || first > n) throw std::out_of_range("D block index");
            return qd(first, first, first);
        }
        case ParabolicKind::E: {
            int a = first, b = second;
            if (a < 1 || b > n || a >= b) throw std::out_of_range("E block needs 1 <= a < b <= n");
            MatrixSeries dpa = invert(qd(a, a, a), &ctx);
            return multiply(dpa, qd(a, a, b), &ctx);
        }
        case ParabolicKind::F: {
            int b = first, a = second;
            if (a < 1 || b > n || a >= b) throw std::out_of_range("F block needs 1 <= a < b <= n");
            MatrixSeries dpa = invert(qd(a, a, a), &ctx);
            return multiply(qd(a, b, a), dpa, &ctx);
        }
    }
    throw std::logic_error("unreachable");
}

MatrixSeries higher_e_via_bracket(const YangianContext& ctx, const GaussFactors& g, int a, int b, int k) {
    const Composition& mu = g.config;
    if (a < 1 || b > mu.blocks() || b <= a + 1) throw std::invalid_argument("bracket recursion needs b > a+1");
    if (k < 1 || k > mu.part(b - 1)) throw std::out_of_range("pivot k outside 1..mu_{b-1}");
    const MatrixSeries& lower = g.e(a, b - 1);
    const MatrixSeries& step = g.e(b - 1, b);
    MatrixSeries out(mu.part(a), mu.part(b), step.zero_like());
    const Rational sign = mu.restricted_parity(b - 1, k) ? -1 : 1;
    for (int i = 1; i <= mu.part(a); ++i)
        for (int j = 1; j <= mu.part(b); ++j) {
            const Element e1 = step.at(k, j).coeff(1);
            for (int r = 1; r <= g.cap; ++r)
                out.at(i, j).set(r, ctx.bracket_normalized(lower.at(i, k).coeff(r), e1) * sign);
        }
    return out;
}

MatrixSeries higher_f_via_bracket(const YangianContext& ctx, const GaussFactors& g, int b, int a, int k) {
    const Composition& mu = g.config;
    if (a < 1 || b > mu.blocks() || b <= a + 1) throw std::invalid_argument("bracket recursion needs b > a+1");
    if (k < 1 || k > mu.part(b - 1)) throw std::out_of_range("pivot k outside 1..mu_{b-1}");
    const MatrixSeries& lower = g.f(b - 1, a);
    const MatrixSeries& step = g.f(b, b - 1);
    MatrixSeries out(mu.part(b), mu.part(a), step.zero_like());
    const Rational sign = mu.restricted_parity(b - 1, k) ? -1 : 1;
    for (int j = 1; j <= mu.part(b); ++j)
        for (int i = 1; i <= mu.part(a); ++i) {
            const Element f1 = step.at(j, k).coeff(1);
            for (int r = 1; r <= g.cap; ++r)
                out.at(j, i).set(r, ctx.bracket_normalized(f1, lower.at(k, i).coeff(r)) * sign);
        }
    return out;
}

int parabolic_parity_D(const Composition& mu, int a, int i, int j) {
    return mu.restricted_parity(a, i) ^ mu.restricted_parity(a, j);
}

int parabolic_parity_E(const Composition& mu, int a, int b, int i, int j) {
    return mu.restricted_parity(a, i) ^ mu.restricted_parity(b, j);
}

int parabolic_parity_F(const Composition& mu, int b, int a, int i, int j) {
    return mu.restricted_parity(b, i) ^ mu.restricted_parity(a, j);
}

}  // namespace sy
