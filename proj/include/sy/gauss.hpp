#pragma once

// Block Gauss decomposition T(u) = F(u) D(u) E(u) relative to a composition,
// with the quasideterminant and bracket-recursion descriptions as audits.

#include <map>
#include <utility>

#include "sy/grading.hpp"
#include "sy/report.hpp"
#include "sy/rtt.hpp"
#include "sy/series.hpp"

namespace sy {

/// T(u) = (t_ij(u)) in variable "u" truncated at cap.
MatrixSeries t_matrix(const YangianContext& ctx, int cap, const std::string& var = "u");
/// The (a,b) block of a matrix partitioned by mu.
MatrixSeries mu_block(const MatrixSeries& m, const Composition& mu, int a, int b);

struct GaussFactors {
    Composition config;
    int cap = 0;
    std::vector<MatrixSeries> D;                     // D[a-1]
    std::vector<MatrixSeries> Dp;                    // inverse of D[a-1]
    std::map<std::pair<int, int>, MatrixSeries> E;   // key (a, b), a < b
    std::map<std::pair<int, int>, MatrixSeries> F;   // key (b, a), a < b

    int blocks() const { return config.blocks(); }
    const MatrixSeries& d(int a) const;
    const MatrixSeries& dp(int a) const;
    const MatrixSeries& e(int a, int b) const;
    const MatrixSeries& f(int b, int a) const;

    /// Coefficients; r = 0 gives delta_ij for D and D', zero for E and F.
    Element D_coeff(int a, int i, int j, int r) const;
    Element Dp_coeff(int a, int i, int j, int r) const;
    Element E_coeff(int a, int b, int i, int j, int r) const;
    Element F_coeff(int b, int a, int i, int j, int r) const;

    /// Full block-diagonal D, block upper unitriangular E, block lower F.
    MatrixSeries full_D() const;
    MatrixSeries full_E() const;
    MatrixSeries full_F() const;
};

/// Block LDU elimination; all coefficients normal-ordered.
GaussFactors decompose(const YangianContext& ctx, const Composition& mu, int cap);

/// D - C A^{-1} B for monic A.
MatrixSeries quasideterminant(const MatrixSeries& A, const MatrixSeries& B, const MatrixSeries& C,
                              const MatrixSeries& Dblock, const NormalOrdering* ring);

enum class ParabolicKind { D, E, F };

/// D_a, E_{a,b} or F_{b,a} straight from the quasideterminant formulas.
/// For kind D only `a` is used; for E it is E_{a,b}; for F it is F_{b,a}
/// with (first, second) = (b, a).
MatrixSeries parabolic_by_quasidet(const YangianContext& ctx, const Composition& mu, int cap, ParabolicKind kind,
                                   int first, int second = 0);

/// E_{a,b} for b > a+1 via E_{a,b;i,j} = (-1)^{|k|_{b-1}} [E_{a,b-1;i,k}, E_{b-1;k,j}^{(1)}],
/// one step from the E_{a,b-1} of the factors; k is any index of block b-1.
MatrixSeries higher_e_via_bracket(const YangianContext& ctx, const GaussFactors& g, int a, int b, int k);
/// F_{b,a} for b > a+1 via F_{b,a;j,i} = (-1)^{|k|_{b-1}} [F_{b-1;j,k}^{(1)}, F_{b-1,a;k,i}].
MatrixSeries higher_f_via_bracket(const YangianContext& ctx, const GaussFactors& g, int b, int a, int k);

/// F D E = T at cap. For two blocks also the entry formulas
///   T = [D1, D1 E; F D1, F D1 E + D2],  T^{-1} = [D1' + E D2' F, -E D2'; -D2' F, D2'].
ClaimReport check_gauss_reconstruction(const YangianContext& ctx, const Composition& mu, int cap);

/// Elimination against the quasideterminant formulas for every D, E, F block,
/// and against the bracket recursion for E_{a,b}, F_{b,a} (b > a+1) at every
/// pivot k.
ClaimReport check_quasidet_agreement(const YangianContext& ctx, const Composition& mu, int cap);

/// Parity of D_{a;i,j}, E_{a,b;i,j}, F_{b,a;i,j} from restricted parities.
int parabolic_parity_D(const Composition& mu, int a, int i, int j);
int parabolic_parity_E(const Composition& mu, int a, int b, int i, int j);
int parabolic_parity_F(const Composition& mu, int b, int a, int i, int j);

}  // namespace sy
