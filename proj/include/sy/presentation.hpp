#pragma once

// The relation catalog of the parabolic presentation: instantiation over
// concrete indices and degrees, evaluation through the Gauss factors, the
// generating-series identities, and the PBW / Levi audits.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sy/envelope.hpp"
#include "sy/expr.hpp"
#include "sy/gauss.hpp"

namespace sy {

struct RelationInstance {
    std::string id;                                     // "R7.4", "R7.15", ...
    std::vector<std::pair<std::string, int>> indices;   // bound block/entry indices, in order
    std::vector<int> degrees;                           // r, s, l as applicable
    Expr lhs;
    Expr rhs;

    /// Highest coefficient degree referenced by either side.
    int required_cap() const;
    /// Stable key, e.g. "R7.4(a=1,b=1,i=1,j=1,h=1,k=1;r=2,s=1)".
    std::string key() const;
};

/// Coefficient-form relations in catalog order: R7.1 ... R7.16, then the
/// unconditional super Serre forms R6.4E / R6.4F.
const std::vector<std::string>& relation_ids();
/// Generating-series identities: R3.11, R5.1-R5.9, R6.1a-d, R6.2a-d, R6.3a-h.
const std::vector<std::string>& series_identity_ids();
/// Expands "all", "R7" (prefix groups), "SERRE-E"/"SERRE-F" and comma lists.
std::vector<std::string> resolve_relation_ids(const std::string& spec);

/// Calls fn on every admissible instance of `id` on mu with all degrees
/// r, s, l <= max_degree (D-degrees start at 0, E/F-degrees at 1).
/// Throws std::invalid_argument for an unknown id.
void for_each_instance(const std::string& id, const Composition& mu, int max_degree,
                       const std::function<void(RelationInstance)>& fn);
std::vector<RelationInstance> enumerate_instances(const std::string& id, const Composition& mu, int max_degree);

/// Gamma on one generator reference: D/Dp/E/F coefficients from the factors,
/// t/tp from the RTT side. Throws std::out_of_range with the required cap
/// when the factors are too short.
Element gamma_atom(const Atom& a, const GaussFactors& g, const YangianContext& ctx);

/// Normal-ordered LHS - RHS under Gamma. Refuses (std::invalid_argument)
/// when g.cap < inst.required_cap().
Element evaluate_under_gamma(const RelationInstance& inst, const GaussFactors& g, const YangianContext& ctx);

/// Per-exponent certified region of a series check.
struct Window {
    std::vector<std::string> vars;
    std::vector<int> caps;   // e[v] <= caps[v]
    int total = -1;          // when >= 0, also sum(e) <= total
    bool contains(const Exponents& e) const;
    std::string str() const;
};

struct SeriesReport {
    std::string id;
    std::vector<std::pair<std::string, int>> indices;
    Window window;
    std::size_t checked = 0;                // coefficients inside the window
    bool zero = true;
    std::optional<Exponents> first_nonzero;
    std::string residual;                   // rendering of the first nonzero coefficient
    std::string key() const;
};

/// Builds both sides of a series identity as truncated series, subtracts and
/// reports on the certified window with per-variable cap `cap`. n must match
/// the identity (any n for R3.11, 2 for R5.x, 3 for R6.x).
std::vector<SeriesReport> evaluate_series_identity(const std::string& id, const YangianContext& ctx,
                                                   const Composition& mu, int cap);

/// Parabolic generators D_{a;i,j}^(r), E_{a,b;i,j}^(r), F_{b,a;i,j}^(r) with
/// 1 <= r <= rmax, sorted in the monomial order (F < D < E).
std::vector<Symbol> parabolic_generators(const Composition& mu, int rmax);
/// Nonempty nondecreasing words in `letters` with no repeated odd letter and
/// weight sum(loop_degree + 1) <= weight_bound.
std::vector<Word> ordered_supermonomials(std::vector<Symbol> letters, int weight_bound);
/// Gamma of a word in parabolic generators, normal-ordered in the RTT algebra.
Element gamma_word(const Word& w, const GaussFactors& g, const YangianContext& ctx);
/// The longest-word part of the gr image of Gamma(w) in U(gl[x]).
Element gr_leading(const Word& w, const GaussFactors& g, const YangianContext& ctx, const LieContext& loop);

struct PbwReport {
    int degree_bound = 0;
    std::size_t monomials = 0;              // ordered supermonomials enumerated
    std::size_t distinct_leading = 0;       // distinct gr leading monomials
    std::size_t loop_count = 0;             // U(gl[x]) monomials in the same window
    std::size_t mismatched_generators = 0;  // generators whose gr image is not the predicted one
    std::size_t bad_leading = 0;            // leading part not a single +-1 monomial
    bool ok = false;
    std::string detail;
};

/// Enumerates ordered supermonomials in the parabolic generators of weight
/// sum(r) <= degree_bound + 1, maps them through Gamma, takes gr leading
/// terms and compares them with the U(gl[x]) PBW monomials of the same
/// weight. A generator of degree r must land on (-1)^{|i|} x[i',j',r-1]
/// with i', j' the global indices.
PbwReport pbw_audit(const YangianContext& ctx, const Composition& mu, int degree_bound);

struct LeviReport {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

/// D-D brackets: zero across blocks, RTT-shaped inside a block, for r, s <= cap.
LeviReport levi_audit(const YangianContext& ctx, const Composition& mu, int cap);

}  // namespace sy
