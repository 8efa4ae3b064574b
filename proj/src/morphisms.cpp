#include "sy/morphisms.hpp"

#include <sstream>
#include <stdexcept>

namespace sy {

// ---- TensorElement ----

TensorElement::TensorElement(Rational scalar) {
    if (!scalar.is_zero()) terms_.emplace(std::make_pair(Word{}, Word{}), std::move(scalar));
}

bool TensorElement::PairLess::operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    if (word_less(a.first, b.first)) return true;
    if (word_less(b.first, a.first)) return false;
    return word_less(a.second, b.second);
}

void TensorElement::add(const Word& x, const Word& y, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(x, y);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorElement TensorElement::pure(const Element& x, const Element& y) {
    TensorElement out;
    for (const auto& a : x.terms())
        for (const auto& b : y.terms()) out.add(a.word, b.word, a.coeff * b.coeff);
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

TensorElement TensorElement::multiply(const TensorElement& a, const TensorElement& b, const NormalOrdering& ring) {
    TensorElement out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Rational c = ca * cb;
            if (word_parity(ka.second) & word_parity(kb.first)) c = -c;
            Element left = ring.multiply(Element::word(ka.first), Element::word(kb.first));
            Element right = ring.multiply(Element::word(ka.second), Element::word(kb.second));
            for (const auto& l : left.terms())
                for (const auto& r : right.terms()) out.add(l.word, r.word, c * l.coeff * r.coeff);
        }
    return out;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = c;
        bool neg = mag < Rational(0);
        if (neg) mag = -mag;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (!mag.is_one()) os << mag.str() << '*';
        os << (k.first.empty() ? "1" : word_str(k.first)) << " (x) " << (k.second.empty() ? "1" : word_str(k.second));
    }
    return os.str();
}

// ---- Morphism ----

MorphismKind parse_morphism_kind(const std::string& name) {
    static const std::map<std::string, MorphismKind> names = {
        {"rho", MorphismKind::rho}, {"omega", MorphismKind::omega}, {"zeta", MorphismKind::zeta},
        {"phi", MorphismKind::phi}, {"psi", MorphismKind::psi},     {"ev", MorphismKind::ev},
        {"delta", MorphismKind::delta}};
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown morphism '" + name + "'");
    return it->second;
}

const char* morphism_name(MorphismKind k) {
    switch (k) {
        case MorphismKind::rho: return "rho";
        case MorphismKind::omega: return "omega";
        case MorphismKind::zeta: return "zeta";
        case MorphismKind::phi: return "phi";
        case MorphismKind::psi: return "psi";
        case MorphismKind::ev: return "ev";
        case MorphismKind::delta: return "delta";
    }
    return "?";
}

Morphism::Morphism(MorphismKind kind, ZeroOneSequence source, int cap, ZeroOneSequence prefix)
    : kind_(kind), cap_(cap) {
    if (cap < 0) throw std::invalid_argument("morphism cap must be nonnegative");
    source_ = std::make_shared<YangianContext>(source);
    switch (kind) {
        case MorphismKind::rho: target_ = std::make_shared<YangianContext>(source.dagger()); break;
        case MorphismKind::omega:
            target_ = source_;
            inverse_ = invert(t_matrix(*source_, cap), source_.get());
            break;
        case MorphismKind::zeta:
            target_ = std::make_shared<YangianContext>(source.dagger());
            inverse_ = invert(t_matrix(*target_, cap), target_.get());
            break;
        case MorphismKind::phi:
            shift_ = prefix.size();
            target_ = std::make_shared<YangianContext>(prefix.concat(source));
            break;
        case MorphismKind::psi:
            shift_ = prefix.size();
            target_ = std::make_shared<YangianContext>(prefix.concat(source));
            small_omega_ = std::make_unique<Morphism>(MorphismKind::omega, source, cap);
            big_omega_ = std::make_unique<Morphism>(MorphismKind::omega, target_->sequence(), cap);
            break;
        case MorphismKind::ev: lie_ = std::make_shared<LieContext>(source, false); break;
        case MorphismKind::delta: target_ = source_; break;
    }
}

std::string Morphism::str() const {
    std::ostringstream os;
    os << morphism_name(kind_) << ": Y(" << source_->sequence().str() << ") -> ";
    if (kind_ == MorphismKind::ev)
        os << "U(gl(" << source_->sequence().str() << "))";
    else if (kind_ == MorphismKind::delta)
        os << "Y(" << source_->sequence().str() << ") (x) Y(" << source_->sequence().str() << ")";
    else
        os << "Y(" << target_->sequence().str() << ")";
    return os.str();
}

void Morphism::check_range(int i, int j, int r) const {
    const int n = source_->dim();
    if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("t index outside 1.." + std::to_string(n));
    if (r < 0) throw std::invalid_argument("negative series degree");
    bool inverts = kind_ == MorphismKind::omega || kind_ == MorphismKind::zeta || kind_ == MorphismKind::psi;
    if (inverts && r > cap_)
        throw std::out_of_range(std::string(morphism_name(kind_)) + " image of degree " + std::to_string(r) +
                                " needs cap >= " + std::to_string(r) + " (have " + std::to_string(cap_) + ")");
}

Element Morphism::image(int i, int j, int r) const {
    if (kind_ == MorphismKind::delta) throw std::logic_error("delta lands in the tensor square; use tensor_image");
    check_range(i, j, r);
    auto key = std::make_tuple(i, j, r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Element img = compute_image(i, j, r);
    cache_.emplace(key, img);
    return img;
}

Element Morphism::compute_image(int i, int j, int r) const {
    if (r == 0) return Element(i == j ? 1 : 0);
    const int n = source_->dim();
    switch (kind_) {
        case MorphismKind::rho: return target_->t(n + 1 - i, n + 1 - j, r) * Rational(r % 2 ? -1 : 1);
        case MorphismKind::omega: return inverse_.at(i, j).coeff(r) * Rational(r % 2 ? -1 : 1);
        case MorphismKind::zeta: return inverse_.at(n + 1 - i, n + 1 - j).coeff(r);
        case MorphismKind::phi: return target_->t(shift_ + i, shift_ + j, r);
        case MorphismKind::psi: {
            Element inner = small_omega_->image(i, j, r);
            Element shifted;
            // phi: shift every index by L, then omega of the big algebra
            for (const auto& term : inner.terms()) {
                Element acc(term.coeff);
                for (Symbol s : term.word)
                    acc = target_->multiply(acc, big_omega_->image(shift_ + s.i(), shift_ + s.j(), s.r()));
                shifted += acc;
            }
            return shifted;
        }
        case MorphismKind::ev:
            if (r == 1) return lie_->e(i, j) * Rational(source_->parity(i) ? -1 : 1);
            return Element();
        case MorphismKind::delta: break;
    }
    throw std::logic_error("unreachable");
}

Element Morphism::apply(const Element& x) const {
    source_->validate(x);
    const NormalOrdering& ring = kind_ == MorphismKind::ev ? static_cast<const NormalOrdering&>(*lie_) : *target_;
    TermAccumulator acc;
    for (const auto& term : x.terms()) {
        Element prod(term.coeff);
        for (Symbol s : term.word) {
            prod = ring.multiply(prod, image(s.i(), s.j(), s.r()));
            if (prod.is_zero()) break;
        }
        acc.add(prod);
    }
    return acc.finish();
}

TruncatedSeries Morphism::apply(const TruncatedSeries& s) const {
    return s.map([&](const Element& c) { return apply(c); });
}

TensorElement Morphism::tensor_image(int i, int j, int r) const {
    if (kind_ != MorphismKind::delta) throw std::logic_error("tensor_image is for delta only");
    check_range(i, j, r);
    TensorElement out;
    for (int s = 0; s <= r; ++s)
        for (int k = 1; k <= source_->dim(); ++k)
            out += TensorElement::pure(source_->t(i, k, r - s), source_->t(k, j, s));
    return out;
}

TensorElement Morphism::apply_tensor(const Element& x) const {
    source_->validate(x);
    TensorElement out;
    for (const auto& term : x.terms()) {
        TensorElement prod(term.coeff);
        for (Symbol s : term.word) prod = TensorElement::multiply(prod, tensor_image(s.i(), s.j(), s.r()), *source_);
        out += prod;
    }
    return out;
}

TruncatedSeries psi_by_quasidet(const YangianContext& big, int L, int i, int j, int cap) {
    MatrixSeries T = t_matrix(big, cap);
    if (L == 0) return T.at(i, j);
    MatrixSeries q = quasideterminant(T.block(1, L, 1, L), T.block(1, L, L + j, 1), T.block(L + i, 1, 1, L),
                                      T.block(L + i, 1, L + j, 1), &big);
    return q.at(1, 1);
}

Element rtt_relation(const YangianContext& ctx, int i, int j, int h, int k, int r, int s) {
    Symbol a = ctx.t_symbol(i, j, r), b = ctx.t_symbol(h, k, s);
    Element x = Element::symbol(a), y = Element::symbol(b);
    return supercommutator(x, y) - ctx.bracket(a, b);
}

// ---- checks ----

namespace {

std::string cfg(const ZeroOneSequence& s, const Composition* mu = nullptr) {
    std::string out = "s=" + s.str();
    if (mu) out += " mu=(" + mu->parts_str() + ")";
    return out;
}

}  // namespace

ClaimReport check_psi_transport(const YangianContext& ctx, const Composition& mu, int cap) {
    ClaimReport rep{"psi-transport", cfg(ctx.sequence(), &mu), "r<=" + std::to_string(cap)};
    GaussFactors big = decompose(ctx, mu, cap);
    const int n = mu.blocks();
    for (int a = 1; a <= n; ++a) {
        const int L = mu.block_start(a);
        Composition tail = mu.tail(a);
        YangianContext small(tail.sequence());
        GaussFactors g = decompose(small, tail, cap);
        Morphism psi(MorphismKind::psi, tail.sequence(), cap, ctx.sequence().slice(0, L));
        auto cmp = [&](const std::string& what, const Element& src, const Element& want) {
            ++rep.checked;
            Element got = psi.apply(src);
            if (!(got == want)) rep.fail(what + ": psi gives " + got.str() + ", expected " + want.str());
        };
        for (int r = 1; r <= cap; ++r) {
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a); ++j)
                    cmp("D[" + std::to_string(a) + "," + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(r) + "]",
                        g.D_coeff(1, i, j, r), big.D_coeff(a, i, j, r));
            if (a == n) continue;
            for (int i = 1; i <= mu.part(a); ++i)
                for (int j = 1; j <= mu.part(a + 1); ++j) {
                    std::string tag = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) + "]";
                    cmp("E[" + std::to_string(a) + "," + std::to_string(a + 1) + "," + tag, g.E_coeff(1, 2, i, j, r),
                        big.E_coeff(a, a + 1, i, j, r));
                }
            for (int i = 1; i <= mu.part(a + 1); ++i)
                for (int j = 1; j <= mu.part(a); ++j) {
                    std::string tag = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) + "]";
                    cmp("F[" + std::to_string(a + 1) + "," + std::to_string(a) + "," + tag, g.F_coeff(2, 1, i, j, r),
                        big.F_coeff(a + 1, a, i, j, r));
                }
        }
    }
    return rep;
}

ClaimReport check_zeta_flip(const YangianContext& ctx, const Composition& mu, int cap) {
    ClaimReport rep{"zeta-flip", cfg(ctx.sequence(), &mu), "r<=" + std::to_string(cap)};
    Morphism zeta(MorphismKind::zeta, ctx.sequence(), cap);
    Composition rmu = mu.reversed_dagger();
    GaussFactors g = decompose(ctx, mu, cap);
    GaussFactors h = decompose(zeta.target(), rmu, cap);
    const int n = mu.blocks();
    auto cmp = [&](const std::string& what, const Element& src, const Element& want) {
        ++rep.checked;
        Element got = zeta.apply(src);
        if (!(got == want)) rep.fail(what + ": zeta gives " + got.str() + ", expected " + want.str());
    };
    auto tag = [](const char* f, std::initializer_list<int> xs) {
        std::string s = std::string(f) + "[";
        bool first = true;
        for (int x : xs) {
            s += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
        return s + "]";
    };
    for (int r = 1; r <= cap; ++r)
        for (int a = 1; a <= n; ++a) {
            const int ma = mu.part(a);
            for (int i = 1; i <= ma; ++i)
                for (int j = 1; j <= ma; ++j)
                    cmp(tag("D", {a, i, j, r}), g.D_coeff(a, i, j, r), h.Dp_coeff(n + 1 - a, ma + 1 - i, ma + 1 - j, r));
            if (a == n) continue;
            const int mb = mu.part(a + 1);
            for (int hh = 1; hh <= ma; ++hh)
                for (int k = 1; k <= mb; ++k) {
                    cmp(tag("E", {a, a + 1, hh, k, r}), g.E_coeff(a, a + 1, hh, k, r),
                        -h.F_coeff(n - a + 1, n - a, ma + 1 - hh, mb + 1 - k, r));
                    cmp(tag("F", {a + 1, a, k, hh, r}), g.F_coeff(a + 1, a, k, hh, r),
                        -h.E_coeff(n - a, n - a + 1, mb + 1 - k, ma + 1 - hh, r));
                }
        }
    return rep;
}

ClaimReport check_commuting_subalgebras(const ZeroOneSequence& prefix, const ZeroOneSequence& seq, int cap) {
    ClaimReport rep{"commuting-subalgebras", "s1=" + prefix.str() + " s=" + seq.str(), "r,s<=" + std::to_string(cap)};
    Morphism psi(MorphismKind::psi, seq, cap, prefix);
    const YangianContext& big = psi.target();
    const int L = prefix.size();
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j)
            for (int r = 1; r <= cap; ++r)
                for (int h = 1; h <= seq.size(); ++h)
                    for (int k = 1; k <= seq.size(); ++k)
                        for (int s = 1; s <= cap; ++s) {
                            ++rep.checked;
                            Element b = big.bracket_normalized(big.t(i, j, r), psi.image(h, k, s));
                            if (!b.is_zero())
                                rep.fail("[t[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) +
                                         "], psi(t[" + std::to_string(h) + "," + std::to_string(k) + "," +
                                         std::to_string(s) + "])] = " + b.str());
                        }
    return rep;
}

ClaimReport check_ev_homomorphism(const YangianContext& ctx, int cap) {
    ClaimReport rep{"ev-homomorphism", cfg(ctx.sequence()), "r,s<=" + std::to_string(cap)};
    Morphism ev(MorphismKind::ev, ctx.sequence(), cap);
    const int n = ctx.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int h = 1; h <= n; ++h)
                for (int k = 1; k <= n; ++k)
                    for (int r = 1; r <= cap; ++r)
                        for (int s = 1; s <= cap; ++s) {
                            ++rep.checked;
                            Element img = ev.apply(rtt_relation(ctx, i, j, h, k, r, s));
                            if (!img.is_zero())
                                rep.fail("ev of relation (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(h) + "," + std::to_string(k) + ";" + std::to_string(r) + "," +
                                         std::to_string(s) + ") = " + img.str());
                        }
    return rep;
}

ClaimReport check_delta_homomorphism(const YangianContext& ctx, int cap) {
    ClaimReport rep{"delta-homomorphism", cfg(ctx.sequence()), "r,s<=" + std::to_string(cap)};
    Morphism delta(MorphismKind::delta, ctx.sequence(), cap);
    const int n = ctx.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int h = 1; h <= n; ++h)
                for (int k = 1; k <= n; ++k)
                    for (int r = 1; r <= cap; ++r)
                        for (int s = 1; s <= cap; ++s) {
                            ++rep.checked;
                            TensorElement img = delta.apply_tensor(rtt_relation(ctx, i, j, h, k, r, s));
                            if (!img.is_zero())
                                rep.fail("delta of relation (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(h) + "," + std::to_string(k) + ";" + std::to_string(r) + "," +
                                         std::to_string(s) + ") = " + img.str());
                        }
    return rep;
}

ClaimReport check_psi_quasidet(const ZeroOneSequence& prefix, const ZeroOneSequence& seq, int cap) {
    ClaimReport rep{"psi-quasideterminant", "s1=" + prefix.str() + " s=" + seq.str(), "r<=" + std::to_string(cap)};
    Morphism psi(MorphismKind::psi, seq, cap, prefix);
    for (int i = 1; i <= seq.size(); ++i)
        for (int j = 1; j <= seq.size(); ++j) {
            TruncatedSeries q = psi_by_quasidet(psi.target(), prefix.size(), i, j, cap);
            for (int r = 1; r <= cap; ++r) {
                ++rep.checked;
                Element got = psi.image(i, j, r);
                if (!(got == q.coeff(r)))
                    rep.fail("psi(t[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) +
                             "]) = " + got.str() + " but the quasideterminant gives " + q.coeff(r).str());
            }
        }
    return rep;
}

ClaimReport check_zeta_composition(const YangianContext& ctx, int cap) {
    ClaimReport rep{"zeta-composition", cfg(ctx.sequence()), "r<=" + std::to_string(cap)};
    Morphism zeta(MorphismKind::zeta, ctx.sequence(), cap);
    Morphism omega(MorphismKind::omega, ctx.sequence(), cap);
    Morphism rho(MorphismKind::rho, ctx.sequence(), cap);
    const int n = ctx.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int r = 1; r <= cap; ++r) {
                std::string t = "t[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) + "]";
                ++rep.checked;
                Element w = omega.image(i, j, r);
                if (!(rho.apply(w) == zeta.image(i, j, r))) rep.fail("rho(omega(" + t + ")) != zeta(" + t + ")");
                ++rep.checked;
                if (!(omega.apply(w) == ctx.t(i, j, r))) rep.fail("omega(omega(" + t + ")) != " + t);
            }
    return rep;
}

}  // namespace sy
