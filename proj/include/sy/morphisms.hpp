#pragma once

// Maps between super Yangians (rho, omega, zeta, phi, psi), the evaluation
// map to U(gl(M|N)) and the coproduct, as substitutions on the t-alphabet
// followed by normal ordering in the target.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>

#include "sy/envelope.hpp"
#include "sy/gauss.hpp"
#include "sy/report.hpp"
#include "sy/rtt.hpp"

namespace sy {

/// Sum of c * (x ⊗ y) over pairs of normal words. Products use the super
/// sign rule (a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(Rational scalar);  // NOLINT(implicit)
    static TensorElement pure(const Element& x, const Element& y);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const auto& terms() const { return terms_; }

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Rational& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend bool operator==(const TensorElement& a, const TensorElement& b);

    /// Product with both factors normal-ordered in `ring`.
    static TensorElement multiply(const TensorElement& a, const TensorElement& b, const NormalOrdering& ring);

    /// "t[1,2,1] (x) 1 + 1 (x) t[1,2,1]".
    std::string str() const;

private:
    struct PairLess {
        bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const;
    };
    void add(const Word& x, const Word& y, const Rational& c);
    std::map<std::pair<Word, Word>, Rational, PairLess> terms_;
};

enum class MorphismKind { rho, omega, zeta, phi, psi, ev, delta };

MorphismKind parse_morphism_kind(const std::string& name);
const char* morphism_name(MorphismKind k);

/// One map out of Y(s). Generator images are computed once and cached. For
/// omega, zeta and psi the images come from inverting T(u) at `cap`, so only
/// generators t[i,j,r] with r <= cap can be mapped.
class Morphism {
public:
    /// `prefix` is s_1 for phi / psi and ignored otherwise.
    Morphism(MorphismKind kind, ZeroOneSequence source, int cap, ZeroOneSequence prefix = {});

    MorphismKind kind() const { return kind_; }
    const YangianContext& source() const { return *source_; }
    /// Yangian target of rho, omega, zeta, phi, psi and the factor of delta.
    const YangianContext& target() const { return *target_; }
    /// U(gl) target of ev.
    const LieContext& lie_target() const { return *lie_; }
    int cap() const { return cap_; }
    /// L = p + q for phi / psi.
    int shift() const { return shift_; }

    /// Image of t[i,j,r] (r >= 0), normal-ordered in the target.
    Element image(int i, int j, int r) const;
    /// Extends multiplicatively; x must be over the t-alphabet of the source.
    /// Not for delta.
    Element apply(const Element& x) const;
    /// Coefficientwise image of a one-variable series.
    TruncatedSeries apply(const TruncatedSeries& s) const;
    /// delta only.
    TensorElement apply_tensor(const Element& x) const;
    TensorElement tensor_image(int i, int j, int r) const;

    /// "rho: Y(01) -> Y(01)" style description.
    std::string str() const;

private:
    Element compute_image(int i, int j, int r) const;
    void check_range(int i, int j, int r) const;

    MorphismKind kind_;
    int cap_;
    int shift_ = 0;
    std::shared_ptr<YangianContext> source_;
    std::shared_ptr<YangianContext> target_;
    std::shared_ptr<LieContext> lie_;
    MatrixSeries inverse_;       // T(u)^{-1} of the relevant algebra, when needed
    // psi = omega_big . phi . omega_small
    std::unique_ptr<Morphism> small_omega_;
    std::unique_ptr<Morphism> big_omega_;
    mutable std::map<std::tuple<int, int, int>, Element> cache_;
};

/// psi_L(t_ij(u)) from the quasideterminant of the leading (L+1)x(L+1)
/// corner of T(u) in Y(prefix . s), at cap.
TruncatedSeries psi_by_quasidet(const YangianContext& big, int L, int i, int j, int cap);

/// The relation t_ij^(r) t_hk^(s) - (-1)^{..} t_hk^(s) t_ij^(r) - [RHS] as a
/// free (unnormalized) element; it is zero in Y(s).
Element rtt_relation(const YangianContext& ctx, int i, int j, int h, int k, int r, int s);


/// D_a, E_a, F_a of (s, mu) are psi_{n_{a-1}} of D_1, E_1, F_1 of the tail
/// configuration, up to cap.
ClaimReport check_psi_transport(const YangianContext& ctx, const Composition& mu, int cap);
/// zeta sends D_a, E_a, F_a onto the reversed Gauss data of (s^dagger, reversed mu).
ClaimReport check_zeta_flip(const YangianContext& ctx, const Composition& mu, int cap);
/// In Y(s1 . s): t[i,j,r] with i, j <= L supercommute with psi_L(t[h,k,s]).
ClaimReport check_commuting_subalgebras(const ZeroOneSequence& prefix, const ZeroOneSequence& seq, int cap);
/// ev of every RTT relation with r, s <= cap is zero in U(gl).
ClaimReport check_ev_homomorphism(const YangianContext& ctx, int cap);
/// delta of every RTT relation with r, s <= cap is zero in the tensor square.
ClaimReport check_delta_homomorphism(const YangianContext& ctx, int cap);
/// psi as omega.phi.omega agrees with the quasideterminant formula.
ClaimReport check_psi_quasidet(const ZeroOneSequence& prefix, const ZeroOneSequence& seq, int cap);
/// zeta equals rho.omega and omega.omega = id on generators up to cap.
ClaimReport check_zeta_composition(const YangianContext& ctx, int cap);

}  // namespace sy
