#include "sy/evaluate.hpp"

#include <set>
#include <stdexcept>

#include "sy/envelope.hpp"
#include "sy/gauss.hpp"
#include "sy/presentation.hpp"
#include "sy/rtt.hpp"

namespace sy {

namespace {

void collect_families(const Expr& e, std::set<Family>& out) {
    if (e.kind() == Expr::Kind::atom) {
        out.insert(e.atom_value().family);
        return;
    }
    for (const auto& c : e.children()) collect_families(c, out);
}

}  // namespace

std::set<Family> families_in(const Expr& expr) {
    std::set<Family> out;
    collect_families(expr, out);
    return out;
}

Evaluated evaluate_expression(const Expr& expr, const ZeroOneSequence& seq, const std::optional<Composition>& mu,
                              int cap) {
    const std::set<Family> fam = families_in(expr);

    bool lie = fam.count(Family::E_LIE), loop = fam.count(Family::X_LOOP);
    bool gauss = fam.count(Family::D) || fam.count(Family::DPRIME) || fam.count(Family::E) || fam.count(Family::F);
    bool yangian = gauss || fam.count(Family::T) || fam.count(Family::TPRIME);
    if (int(lie) + int(loop) + int(yangian) > 1)
        throw std::invalid_argument("expression mixes generators of different algebras");
    if (expr.max_degree() > cap)
        throw std::invalid_argument("degree " + std::to_string(expr.max_degree()) + " exceeds cap " +
                                    std::to_string(cap));

    Evaluated out;
    if (lie || loop) {
        LieContext ctx(seq, loop);
        out.algebra = loop ? "U(gl[x])" : "U(gl)";
        out.value = expr.evaluate(
            [&](const Atom& a) {
                Element x = loop ? ctx.x(a.idx[0], a.idx[1], a.idx[2]) : ctx.e(a.idx[0], a.idx[1]);
                ctx.validate(x);
                return x;
            },
            &ctx);
        return out;
    }

    YangianContext ctx(seq);
    out.algebra = "Y(" + seq.str() + ")";
    std::optional<GaussFactors> g;
    if (gauss) {
        if (!mu) throw std::invalid_argument("D, Dp, E, F need a composition");
        g = decompose(ctx, *mu, cap);
    }
    std::optional<MatrixSeries> inv;
    if (fam.count(Family::TPRIME)) inv = invert(t_matrix(ctx, cap), &ctx);
    out.value = expr.evaluate(
        [&](const Atom& a) -> Element {
            if (a.family == Family::TPRIME) {
                int i = a.idx[0], j = a.idx[1], r = a.idx[2];
                if (i < 1 || j < 1 || i > ctx.dim() || j > ctx.dim() || r < 0)
                    throw std::invalid_argument("index out of range in " + a.str());
                return inv->at(i, j).coeff(r);
            }
            if (a.family == Family::T) {
                int i = a.idx[0], j = a.idx[1], r = a.idx[2];
                if (r == 0) return i == j ? Element(1) : Element();
                return ctx.t(i, j, r);
            }
            return gamma_atom(a, *g, ctx);
        },
        &ctx);
    out.value = ctx.normalize(out.value);
    return out;
}

}  // namespace sy
