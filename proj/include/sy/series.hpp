#pragma once

// Truncated power series in one or several inverse variables u^-1, v^-1, ...
// with algebra-element coefficients, and matrices of such series.

#include <string>
#include <vector>

#include "sy/element.hpp"
#include "sy/normal_order.hpp"

namespace sy {

using Exponents = std::vector<int>;

/// Sum over exponent tuples e of c_e * u1^{-e1} u2^{-e2} ..., with each
/// exponent truncated at its variable's cap. Arithmetic is the quotient
/// ring: anything beyond a cap is discarded.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(std::vector<std::string> vars, std::vector<int> caps);
    static TruncatedSeries single(const std::string& var, int cap);
    static TruncatedSeries constant(std::vector<std::string> vars, std::vector<int> caps, const Element& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& caps() const { return caps_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    bool same_shape(const TruncatedSeries& o) const { return vars_ == o.vars_ && caps_ == o.caps_; }

    const Element& coeff(const Exponents& e) const;
    void set(const Exponents& e, Element c);
    /// Single-variable shorthand.
    const Element& coeff(int r) const { return coeff(Exponents{r}); }
    void set(int r, Element c) { set(Exponents{r}, std::move(c)); }
    bool in_cap(const Exponents& e) const;

    /// All exponent tuples within the caps, in lexicographic order.
    std::vector<Exponents> exponents() const;
    std::size_t flat_size() const { return coeffs_.size(); }
    const Element& flat(std::size_t k) const { return coeffs_[k]; }
    Element& flat(std::size_t k) { return coeffs_[k]; }
    Exponents unflatten(std::size_t k) const;

    bool is_zero() const;
    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Applies f to every coefficient.
    template <class Fn>
    TruncatedSeries map(Fn&& f) const {
        TruncatedSeries out = *this;
        for (auto& c : out.coeffs_) c = f(c);
        return out;
    }

    /// Re-reads this one-variable series as a series in variable `which`
    /// of a larger variable set.
    TruncatedSeries embed(const std::vector<std::string>& vars, const std::vector<int>& caps, int which) const;
    /// u -> -u in every variable: coefficient of degree |e| picks up (-1)^{|e|}.
    TruncatedSeries negate_variables() const;

    /// "c0 + c1*u^-1 + ... + O(u^-(L+1))".
    std::string str() const;

private:
    std::size_t index(const Exponents& e) const;

    std::vector<std::string> vars_;
    std::vector<int> caps_;
    std::vector<std::size_t> strides_;
    std::vector<Element> coeffs_;
};

/// Cauchy product with truncation. When `ring` is given, coefficient products
/// are normal-ordered; otherwise words are only concatenated.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, const NormalOrdering* ring = nullptr);
/// [a, b] = ab - (-1)^{|a||b|} ba coefficientwise; parities must be homogeneous.
TruncatedSeries supercommutator(const TruncatedSeries& a, const TruncatedSeries& b, const NormalOrdering* ring);
/// Normal-orders every coefficient.
TruncatedSeries normalize(const TruncatedSeries& s, const NormalOrdering& ring);
/// Parity shared by every coefficient (zero coefficients are ignored).
int series_parity(const TruncatedSeries& s);

/// Exact coefficient lookup; throws std::out_of_range beyond the cap.
Element extract_coefficient(const TruncatedSeries& s, const Exponents& e);

/// Multiplies a two-variable series by (u - v), where u, v are the variables
/// at positions iu, iv. The input must have no pure-u or pure-v terms
/// (exponent 0 in either variable), otherwise positive powers would appear.
/// Output coefficients are exact for e[iu] < cap[iu] and e[iv] < cap[iv];
/// the rest are zeroed.
TruncatedSeries multiply_by_difference(const TruncatedSeries& s, int iu = 0, int iv = 1);

/// Solves (u - v) * Q = S for a series S in (u, v) that vanishes at u = v.
/// Q is supported on r, s >= 1 and certified for r + s <= L + 1 where L is
/// the common cap; coefficients outside that window are zero.
/// Throws std::domain_error naming the offending anti-diagonal when S(u,u) != 0.
TruncatedSeries divide_by_difference(const TruncatedSeries& s, const NormalOrdering* ring = nullptr);

class MatrixSeries {
public:
    MatrixSeries() = default;
    MatrixSeries(int rows, int cols, const TruncatedSeries& zero_like);
    static MatrixSeries identity(int n, const TruncatedSeries& zero_like);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    /// 1-based entry access.
    const TruncatedSeries& at(int i, int j) const { return entries_[(i - 1) * cols_ + (j - 1)]; }
    TruncatedSeries& at(int i, int j) { return entries_[(i - 1) * cols_ + (j - 1)]; }
    const TruncatedSeries& zero_like() const { return zero_; }

    /// Rows [r0, r0+nr) and columns [c0, c0+nc), 1-based starts.
    MatrixSeries block(int r0, int nr, int c0, int nc) const;
    void set_block(int r0, int c0, const MatrixSeries& m);

    /// Constant term is the identity matrix over scalars.
    bool is_monic() const;
    bool is_zero() const;

    MatrixSeries operator-() const;
    MatrixSeries& operator+=(const MatrixSeries& o);
    MatrixSeries& operator-=(const MatrixSeries& o);
    friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
    friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }
    friend bool operator==(const MatrixSeries& a, const MatrixSeries& b);

    template <class Fn>
    MatrixSeries map(Fn&& f) const {
        MatrixSeries out = *this;
        for (auto& e : out.entries_) e = f(e);
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    TruncatedSeries zero_;
    std::vector<TruncatedSeries> entries_;
};

MatrixSeries multiply(const MatrixSeries& a, const MatrixSeries& b, const NormalOrdering* ring = nullptr);
/// Inverse of a monic square matrix series by solving T * Y = I degree by
/// degree. Throws std::invalid_argument for non-monic input.
MatrixSeries invert(const MatrixSeries& t, const NormalOrdering* ring = nullptr);

}  // namespace sy
