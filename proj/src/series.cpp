#include "sy/series.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace sy {

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, std::vector<int> caps)
    : vars_(std::move(vars)), caps_(std::move(caps)) {
    if (vars_.size() != caps_.size()) throw std::invalid_argument("series: one cap per variable");
    if (vars_.empty()) throw std::invalid_argument("series: at least one variable");
    std::size_t n = 1;
    strides_.assign(vars_.size(), 0);
    for (int k = nvars() - 1; k >= 0; --k) {
        if (caps_[k] < 0) throw std::invalid_argument("series: negative cap");
        strides_[k] = n;
        n *= static_cast<std::size_t>(caps_[k] + 1);
    }
    coeffs_.assign(n, Element{});
}

TruncatedSeries TruncatedSeries::single(const std::string& var, int cap) { return TruncatedSeries({var}, {cap}); }

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> vars, std::vector<int> caps, const Element& c) {
    TruncatedSeries s(std::move(vars), std::move(caps));
    s.coeffs_[0] = c;
    return s;
}

bool TruncatedSeries::in_cap(const Exponents& e) const {
    if (e.size() != vars_.size()) return false;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] < 0 || e[k] > caps_[k]) return false;
    return true;
}

std::size_t TruncatedSeries::index(const Exponents& e) const {
    if (e.size() != vars_.size()) throw std::invalid_argument("series: exponent arity mismatch");
    std::size_t k = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] < 0 || e[v] > caps_[v])
            throw std::out_of_range("coefficient of " + vars_[v] + "^-" + std::to_string(e[v]) +
                                    " is beyond the truncation " + vars_[v] + "^-" + std::to_string(caps_[v]));
        k += strides_[v] * static_cast<std::size_t>(e[v]);
    }
    return k;
}

const Element& TruncatedSeries::coeff(const Exponents& e) const { return coeffs_[index(e)]; }
void TruncatedSeries::set(const Exponents& e, Element c) { coeffs_[index(e)] = std::move(c); }

Exponents TruncatedSeries::unflatten(std::size_t k) const {
    Exponents e(vars_.size());
    for (std::size_t v = 0; v < e.size(); ++v) {
        e[v] = static_cast<int>(k / strides_[v]);
        k %= strides_[v];
    }
    return e;
}

std::vector<Exponents> TruncatedSeries::exponents() const {
    std::vector<Exponents> out;
    out.reserve(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.push_back(unflatten(k));
    return out;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

static void require_shape(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("series: variables or caps differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_shape(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_shape(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.same_shape(b) && a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::embed(const std::vector<std::string>& vars, const std::vector<int>& caps,
                                       int which) const {
    if (nvars() != 1) throw std::invalid_argument("embed: source must be a one-variable series");
    TruncatedSeries out(vars, caps);
    if (which < 0 || which >= out.nvars()) throw std::out_of_range("embed: variable position");
    Exponents e(vars.size(), 0);
    for (int r = 0; r <= std::min(caps_[0], caps[which]); ++r) {
        e[which] = r;
        out.set(e, coeffs_[r]);
    }
    return out;
}

TruncatedSeries TruncatedSeries::negate_variables() const {
    TruncatedSeries out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        int total = 0;
        for (int r : unflatten(k)) total += r;
        if (total & 1) out.coeffs_[k] = -out.coeffs_[k];
    }
    return out;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        Exponents e = unflatten(k);
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) mono += (mono.empty() ? "" : "*") + vars_[v] + "^-" + std::to_string(e[v]);
        if (!first) os << " + ";
        first = false;
        std::string c = coeffs_[k].str();
        if (mono.empty())
            os << c;
        else if (coeffs_[k].size() == 1)
            os << c << "*" << mono;
        else
            os << "(" << c << ")*" << mono;
    }
    if (first) os << "0";
    for (std::size_t v = 0; v < vars_.size(); ++v)
        os << " + O(" << vars_[v] << "^-" << caps_[v] + 1 << ")";
    return os.str();
}

namespace {

Element product(const Element& x, const Element& y, const NormalOrdering* ring) {
    if (x.is_zero() || y.is_zero()) return {};
    return ring ? ring->multiply(x, y) : x * y;
}

}  // namespace

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, const NormalOrdering* ring) {
    require_shape(a, b);
    TruncatedSeries out(a.vars(), a.caps());
    const std::size_t n = a.flat_size();
    std::vector<Exponents> ex = a.exponents();
    std::vector<std::size_t> nz_b;
    for (std::size_t k = 0; k < n; ++k)
        if (!b.flat(k).is_zero()) nz_b.push_back(k);
    Exponents sum(a.nvars());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.flat(i).is_zero()) continue;
        for (std::size_t j : nz_b) {
            bool ok = true;
            for (int v = 0; v < a.nvars(); ++v) {
                sum[v] = ex[i][v] + ex[j][v];
                if (sum[v] > a.caps()[v]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Element p = product(a.flat(i), b.flat(j), ring);
            if (!p.is_zero()) {
                std::size_t k = 0;
                std::size_t stride = 1;
                for (int v = a.nvars() - 1; v >= 0; --v) {
                    k += stride * static_cast<std::size_t>(sum[v]);
                    stride *= static_cast<std::size_t>(a.caps()[v] + 1);
                }
                out.flat(k) += p;
            }
        }
    }
    return out;
}

int series_parity(const TruncatedSeries& s) {
    std::optional<int> p;
    for (std::size_t k = 0; k < s.flat_size(); ++k) {
        const Element& c = s.flat(k);
        if (c.is_zero()) continue;
        int q = c.homogeneous_parity();
        if (p && *p != q) throw std::invalid_argument("series is not parity-homogeneous");
        p = q;
    }
    return p.value_or(0);
}

TruncatedSeries supercommutator(const TruncatedSeries& a, const TruncatedSeries& b, const NormalOrdering* ring) {
    int pa = series_parity(a), pb = series_parity(b);
    TruncatedSeries ab = multiply(a, b, ring);
    TruncatedSeries ba = multiply(b, a, ring);
    if (pa & pb)
        ab += ba;
    else
        ab -= ba;
    return ab;
}

TruncatedSeries normalize(const TruncatedSeries& s, const NormalOrdering& ring) {
    return s.map([&](const Element& c) { return ring.normalize(c); });
}

Element extract_coefficient(const TruncatedSeries& s, const Exponents& e) { return s.coeff(e); }

TruncatedSeries multiply_by_difference(const TruncatedSeries& s, int iu, int iv) {
    if (iu == iv || iu < 0 || iv < 0 || iu >= s.nvars() || iv >= s.nvars())
        throw std::invalid_argument("multiply_by_difference: bad variable positions");
    TruncatedSeries out(s.vars(), s.caps());
    for (std::size_t k = 0; k < s.flat_size(); ++k) {
        Exponents e = s.unflatten(k);
        if ((e[iu] == 0 || e[iv] == 0) && !s.flat(k).is_zero())
            throw std::domain_error("multiply_by_difference: term without both " + s.vars()[iu] + " and " +
                                    s.vars()[iv] + " would produce a positive power");
    }
    // coefficient at u^-r v^-s of (u - v) Q is Q[r+1,s] - Q[r,s+1]
    for (std::size_t k = 0; k < s.flat_size(); ++k) {
        Exponents e = s.unflatten(k);
        if (e[iu] >= s.caps()[iu] || e[iv] >= s.caps()[iv]) continue;
        Exponents a = e, b = e;
        a[iu] += 1;
        b[iv] += 1;
        out.flat(k) = s.coeff(a) - s.coeff(b);
    }
    return out;
}

TruncatedSeries divide_by_difference(const TruncatedSeries& s, const NormalOrdering* ring) {
    if (s.nvars() != 2 || s.caps()[0] != s.caps()[1])
        throw std::invalid_argument("divide_by_difference: need a two-variable series with equal caps");
    const int L = s.caps()[0];
    auto norm = [&](const Element& x) { return ring ? ring->normalize(x) : x; };
    for (int d = 0; d <= L; ++d) {
        Element diag;
        for (int k = 0; k <= d; ++k) diag += s.coeff({k, d - k});
        if (!norm(diag).is_zero())
            throw std::domain_error("divide_by_difference: S(u,u) has nonzero coefficient of u^-" +
                                    std::to_string(d) + ": " + norm(diag).str());
    }
    // q[r,s] = sum_{k<r} S[k, r+s-1-k]
    TruncatedSeries q(s.vars(), s.caps());
    for (int r = 1; r <= L; ++r)
        for (int t = 1; r + t <= L + 1; ++t) {
            Element acc;
            for (int k = 0; k < r; ++k) acc += s.coeff({k, r + t - 1 - k});
            q.set({r, t}, acc);
        }
    return q;
}

MatrixSeries::MatrixSeries(int rows, int cols, const TruncatedSeries& zero_like)
    : rows_(rows), cols_(cols), zero_(zero_like.map([](const Element&) { return Element{}; })) {
    entries_.assign(static_cast<std::size_t>(rows) * cols, zero_);
}

MatrixSeries MatrixSeries::identity(int n, const TruncatedSeries& zero_like) {
    MatrixSeries m(n, n, zero_like);
    Exponents zero(zero_like.nvars(), 0);
    for (int i = 1; i <= n; ++i) m.at(i, i).set(zero, Element(1));
    return m;
}

MatrixSeries MatrixSeries::block(int r0, int nr, int c0, int nc) const {
    if (r0 < 1 || c0 < 1 || r0 + nr - 1 > rows_ || c0 + nc - 1 > cols_) throw std::out_of_range("matrix block");
    MatrixSeries out(nr, nc, zero_);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) out.at(i + 1, j + 1) = at(r0 + i, c0 + j);
    return out;
}

void MatrixSeries::set_block(int r0, int c0, const MatrixSeries& m) {
    if (r0 < 1 || c0 < 1 || r0 + m.rows() - 1 > rows_ || c0 + m.cols() - 1 > cols_)
        throw std::out_of_range("matrix block");
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) at(r0 + i - 1, c0 + j - 1) = m.at(i, j);
}

bool MatrixSeries::is_monic() const {
    if (rows_ != cols_) return false;
    Exponents zero(zero_.nvars(), 0);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            if (!(at(i, j).coeff(zero) == Element(i == j ? 1 : 0))) return false;
    return true;
}

bool MatrixSeries::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

MatrixSeries MatrixSeries::operator-() const {
    return map([](const TruncatedSeries& s) { return -s; });
}

MatrixSeries& MatrixSeries::operator+=(const MatrixSeries& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

MatrixSeries& MatrixSeries::operator-=(const MatrixSeries& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
}

bool operator==(const MatrixSeries& a, const MatrixSeries& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

MatrixSeries multiply(const MatrixSeries& a, const MatrixSeries& b, const NormalOrdering* ring) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    MatrixSeries out(a.rows(), b.cols(), a.zero_like());
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= b.cols(); ++j) {
            TruncatedSeries acc = a.zero_like();
            for (int k = 1; k <= a.cols(); ++k) acc += multiply(a.at(i, k), b.at(k, j), ring);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

MatrixSeries invert(const MatrixSeries& t, const NormalOrdering* ring) {
    if (!t.is_monic()) throw std::invalid_argument("invert: matrix series is not monic (constant term must be I)");
    if (t.zero_like().nvars() != 1) throw std::invalid_argument("invert: one-variable series only");
    const int n = t.rows();
    const int L = t.zero_like().caps()[0];
    MatrixSeries y = MatrixSeries::identity(n, t.zero_like());
    // Y^(r) = - sum_{s=1}^{r} T^(s) Y^(r-s)
    for (int r = 1; r <= L; ++r)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Element acc;
                for (int s = 1; s <= r; ++s)
                    for (int k = 1; k <= n; ++k) acc -= product(t.at(i, k).coeff(s), y.at(k, j).coeff(r - s), ring);
                y.at(i, j).set(r, std::move(acc));
            }
    return y;
}

}  // namespace sy
