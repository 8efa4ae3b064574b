// Python bindings: strings in, strings out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "sy/evaluate.hpp"
#include "sy/gauss.hpp"
#include "sy/morphisms.hpp"
#include "sy/parser.hpp"
#include "sy/presentation.hpp"
#include "sy/properties.hpp"

namespace py = pybind11;
using namespace sy;

namespace {

Composition composition(const ZeroOneSequence& s, const std::optional<std::string>& mu) {
    return mu ? Composition::parse(s, *mu) : Composition::trivial(s);
}

std::string normalize_text(const std::string& expr, const std::string& seq, const std::optional<std::string>& mu, int cap) {
    ZeroOneSequence s = ZeroOneSequence::parse(seq);
    std::optional<Composition> m;
    if (mu) m = Composition::parse(s, *mu);
    return evaluate_expression(parse_expression(expr), s, m, cap).value.str();
}

std::map<std::string, std::string> gauss(const std::string& seq, const std::string& mu, int cap) {
    ZeroOneSequence s = ZeroOneSequence::parse(seq);
    Composition m = Composition::parse(s, mu);
    YangianContext ctx(s);
    GaussFactors g = decompose(ctx, m, cap);
    std::map<std::string, std::string> out;
    auto key = [](const char* f, std::initializer_list<int> idx) {
        std::string k = std::string(f) + "[";
        bool first = true;
        for (int v : idx) {
            k += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
        return k + "]";
    };
    const int n = m.blocks();
    for (int a = 1; a <= n; ++a)
        for (int i = 1; i <= m.part(a); ++i)
            for (int j = 1; j <= m.part(a); ++j)
                for (int r = 1; r <= cap; ++r) {
                    out[key("D", {a, i, j, r})] = g.D_coeff(a, i, j, r).str();
                    out[key("Dp", {a, i, j, r})] = g.Dp_coeff(a, i, j, r).str();
                }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int r = 1; r <= cap; ++r) {
                for (int i = 1; i <= m.part(a); ++i)
                    for (int j = 1; j <= m.part(b); ++j) out[key("E", {a, b, i, j, r})] = g.E_coeff(a, b, i, j, r).str();
                for (int i = 1; i <= m.part(b); ++i)
                    for (int j = 1; j <= m.part(a); ++j) out[key("F", {b, a, i, j, r})] = g.F_coeff(b, a, i, j, r).str();
            }
    return out;
}

std::string apply(const std::string& kind, const std::string& seq, const std::string& expr, int cap,
                  const std::string& prefix) {
    MorphismKind k = parse_morphism_kind(kind);
    Morphism m(k, ZeroOneSequence::parse(seq), cap, ZeroOneSequence::parse(prefix));
    Expr e = parse_expression(expr);
    for (Family f : families_in(e))
        if (f != Family::T) throw std::invalid_argument("morphisms act on expressions in t[i,j,r] only");
    Element x = e.evaluate(
        [&](const Atom& a) -> Element {
            if (a.idx[2] == 0) return a.idx[0] == a.idx[1] ? Element(1) : Element();
            return m.source().t(a.idx[0], a.idx[1], a.idx[2]);
        },
        nullptr);
    return k == MorphismKind::delta ? m.apply_tensor(x).str() : m.apply(x).str();
}

// id -> (checked, failures); relation ids only
std::map<std::string, std::pair<std::size_t, std::size_t>> verify(const std::string& seq,
                                                                  const std::optional<std::string>& mu,
                                                                  const std::string& relations, int max_degree) {
    ZeroOneSequence s = ZeroOneSequence::parse(seq);
    Composition m = composition(s, mu);
    YangianContext ctx(s);
    std::map<int, GaussFactors> factors;
    std::map<std::string, std::pair<std::size_t, std::size_t>> out;
    for (const auto& id : resolve_relation_ids(relations)) {
        auto& [checked, failures] = out[id];
        for_each_instance(id, m, max_degree, [&](RelationInstance inst) {
            const int cap = inst.required_cap();
            auto it = factors.find(cap);
            if (it == factors.end()) it = factors.emplace(cap, decompose(ctx, m, cap)).first;
            ++checked;
            if (!evaluate_under_gamma(inst, it->second, ctx).is_zero()) ++failures;
        });
    }
    return out;
}

std::tuple<bool, std::size_t, std::string> confluence(const std::string& seq, int samples, std::uint64_t seed,
                                                      int max_len, int max_r) {
    YangianContext ctx(ZeroOneSequence::parse(seq));
    ClaimReport r = check_confluence(ctx, samples, seed, max_len, max_r);
    return {r.ok(), r.checked, r.counterexample};
}

}  // namespace

PYBIND11_MODULE(syang, m) {
    m.doc() = "Normal forms, Gauss coefficients and relation checks in super Yangians";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("normalize", &normalize_text, py::arg("expr"), py::arg("seq"), py::arg("mu") = py::none(), py::arg("cap") = 3,
          "Normal form of an expression, as text.");
    m.def("gauss", &gauss, py::arg("seq"), py::arg("mu"), py::arg("cap") = 3,
          "Coefficients D, Dp, E, F of the block Gauss decomposition, keyed like 'D[2,1,1,2]'.");
    m.def("apply", &apply, py::arg("kind"), py::arg("seq"), py::arg("expr"), py::arg("cap") = 3,
          py::arg("prefix") = "0", "Image of a t-expression under rho, omega, zeta, phi, psi, ev or delta.");
    m.def("verify", &verify, py::arg("seq"), py::arg("mu") = py::none(), py::arg("relations") = "all",
          py::arg("max_degree") = 2, "Per relation id: (instances checked, nonzero residuals).");
    m.def("confluence", &confluence, py::arg("seq"), py::arg("samples") = 50, py::arg("seed") = 0,
          py::arg("max_len") = 3, py::arg("max_r") = 3, "(ok, samples checked, first counterexample).");
    m.def("relation_ids", &relation_ids);
}
