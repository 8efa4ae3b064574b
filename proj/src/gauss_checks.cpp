#include "sy/gauss.hpp"

#include <string>

namespace sy {

namespace {

std::string mu_str(const Composition& mu) {
    std::string s;
    for (int p : mu.parts()) s += (s.empty() ? "" : ",") + std::to_string(p);
    return "s=" + mu.sequence().str() + ",mu=(" + s + ")";
}

// first differing entry, for the report
std::string first_diff(const MatrixSeries& x, const MatrixSeries& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return "shape";
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j)
            for (const auto& e : x.at(i, j).exponents())
                if (!(x.at(i, j).coeff(e) == y.at(i, j).coeff(e)))
                    return "(" + std::to_string(i) + "," + std::to_string(j) + ") degree " + std::to_string(e[0]) +
                           ": " + x.at(i, j).coeff(e).str() + " vs " + y.at(i, j).coeff(e).str();
    return "";
}

}  // namespace

ClaimReport check_gauss_reconstruction(const YangianContext& ctx, const Composition& mu, int cap) {
    ClaimReport rep("gauss-reconstruction", mu_str(mu), "cap=" + std::to_string(cap));
    GaussFactors g = decompose(ctx, mu, cap);
    const MatrixSeries T = t_matrix(ctx, cap);
    auto same = [&](const MatrixSeries& got, const MatrixSeries& want, const std::string& what) {
        ++rep.checked;
        if (!(got == want)) rep.fail(what + " " + first_diff(got, want));
    };
    same(multiply(multiply(g.full_F(), g.full_D(), &ctx), g.full_E(), &ctx), T, "F D E != T at");
    if (mu.blocks() != 2) return rep;

    auto mul = [&](const MatrixSeries& a, const MatrixSeries& b) { return multiply(a, b, &ctx); };
    const MatrixSeries &D1 = g.d(1), &D2 = g.d(2), &D1p = g.dp(1), &D2p = g.dp(2);
    const MatrixSeries &E = g.e(1, 2), &F = g.f(2, 1);
    same(mu_block(T, mu, 1, 1), D1, "t_{11} block");
    same(mu_block(T, mu, 1, 2), mul(D1, E), "t_{12} block");
    same(mu_block(T, mu, 2, 1), mul(F, D1), "t_{21} block");
    same(mu_block(T, mu, 2, 2), mul(mul(F, D1), E) + D2, "t_{22} block");
    const MatrixSeries Tp = invert(T, &ctx);
    same(mu_block(Tp, mu, 1, 1), D1p + mul(mul(E, D2p), F), "t'_{11} block");
    same(mu_block(Tp, mu, 1, 2), -mul(E, D2p), "t'_{12} block");
    same(mu_block(Tp, mu, 2, 1), -mul(D2p, F), "t'_{21} block");
    same(mu_block(Tp, mu, 2, 2), D2p, "t'_{22} block");
    return rep;
}

ClaimReport check_quasidet_agreement(const YangianContext& ctx, const Composition& mu, int cap) {
    ClaimReport rep("quasideterminant", mu_str(mu), "cap=" + std::to_string(cap) + ",all pivots");
    GaussFactors g = decompose(ctx, mu, cap);
    const int n = mu.blocks();
    auto same = [&](const MatrixSeries& got, const MatrixSeries& want, const std::string& what) {
        ++rep.checked;
        if (!(got == want)) rep.fail(what + " " + first_diff(got, want));
    };
    for (int a = 1; a <= n; ++a) {
        same(parabolic_by_quasidet(ctx, mu, cap, ParabolicKind::D, a), g.d(a), "D_" + std::to_string(a));
        for (int b = a + 1; b <= n; ++b) {
            const std::string ab = std::to_string(a) + "," + std::to_string(b);
            const std::string ba = std::to_string(b) + "," + std::to_string(a);
            same(parabolic_by_quasidet(ctx, mu, cap, ParabolicKind::E, a, b), g.e(a, b), "E_{" + ab + "}");
            same(parabolic_by_quasidet(ctx, mu, cap, ParabolicKind::F, b, a), g.f(b, a), "F_{" + ba + "}");
            if (b == a + 1) continue;
            for (int k = 1; k <= mu.part(b - 1); ++k) {
                const std::string piv = " pivot k=" + std::to_string(k);
                same(higher_e_via_bracket(ctx, g, a, b, k), g.e(a, b), "E_{" + ab + "} by bracket" + piv);
                same(higher_f_via_bracket(ctx, g, b, a, k), g.f(b, a), "F_{" + ba + "} by bracket" + piv);
            }
        }
    }
    return rep;
}

}  // namespace sy
