#include "sy/expr.hpp"

#include <sstream>
#include <stdexcept>

namespace sy {

int Atom::arity(Family f) {
    switch (f) {
        case Family::T:
        case Family::TPRIME:
        case Family::X_LOOP: return 3;
        case Family::E_LIE: return 2;
        case Family::D:
        case Family::DPRIME: return 4;
        case Family::E:
        case Family::F: return 5;
    }
    return 0;
}

std::string Atom::str() const {
    std::string s = family_name(family);
    s += '[';
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(idx[k]);
    }
    return s + ']';
}

Expr Expr::number(Rational q) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::number;
    n->value = std::move(q);
    return Expr(std::move(n));
}

Expr Expr::atom(Atom a) {
    if (static_cast<int>(a.idx.size()) != Atom::arity(a.family))
        throw std::invalid_argument(std::string(family_name(a.family)) + " takes " +
                                    std::to_string(Atom::arity(a.family)) + " indices, got " +
                                    std::to_string(a.idx.size()));
    auto n = std::make_shared<Node>();
    n->kind = Kind::atom;
    n->atom = std::move(a);
    return Expr(std::move(n));
}

Expr Expr::sum(std::vector<std::pair<Rational, Expr>> terms) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::sum;
    for (auto& [c, e] : terms) {
        n->coeffs.push_back(std::move(c));
        n->children.push_back(std::move(e));
    }
    return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
    if (factors.empty()) return number(1);
    if (factors.size() == 1) return factors[0];
    auto n = std::make_shared<Node>();
    n->kind = Kind::product;
    n->children = std::move(factors);
    return Expr(std::move(n));
}

Expr Expr::bracket(Expr x, Expr y) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::bracket;
    n->children = {std::move(x), std::move(y)};
    return Expr(std::move(n));
}

Expr bracket(const Expr& x, const Expr& y) { return Expr::bracket(x, y); }

namespace {

void append_terms(std::vector<std::pair<Rational, Expr>>& out, const Expr& e, const Rational& c) {
    if (e.is_zero_literal() || c.is_zero()) return;
    if (e.kind() == Expr::Kind::number) {
        out.emplace_back(Rational(1), Expr::number(c * e.value()));
        return;
    }
    if (e.kind() == Expr::Kind::sum) {
        for (std::size_t k = 0; k < e.children().size(); ++k) append_terms(out, e.children()[k], c * e.coefficients()[k]);
        return;
    }
    out.emplace_back(c, e);
}

Expr make_sum(std::vector<std::pair<Rational, Expr>> t) {
    if (t.empty()) return Expr::number(0);
    if (t.size() == 1 && t[0].first.is_one()) return t[0].second;
    return Expr::sum(std::move(t));
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
    std::vector<std::pair<Rational, Expr>> t;
    append_terms(t, a, 1);
    append_terms(t, b, 1);
    return make_sum(std::move(t));
}

Expr operator-(const Expr& a, const Expr& b) {
    std::vector<std::pair<Rational, Expr>> t;
    append_terms(t, a, 1);
    append_terms(t, b, -1);
    return make_sum(std::move(t));
}

Expr operator-(const Expr& a) {
    std::vector<std::pair<Rational, Expr>> t;
    append_terms(t, a, -1);
    return make_sum(std::move(t));
}

Expr operator*(const Rational& c, const Expr& a) {
    if (a.kind() == Expr::Kind::number) return Expr::number(c * a.value());
    std::vector<std::pair<Rational, Expr>> t;
    append_terms(t, a, c);
    return make_sum(std::move(t));
}

// numbers and one-term sums give up their scalar, so a product is coeff * (non-scalar factors)
Expr multiply_all(const std::vector<Expr>& factors) {
    Rational coeff(1);
    std::vector<Expr> f;
    auto take = [&](const Expr& x) {
        if (x.kind() == Expr::Kind::product)
            f.insert(f.end(), x.children().begin(), x.children().end());
        else
            f.push_back(x);
    };
    for (const Expr& x : factors) {
        if (x.kind() == Expr::Kind::number) {
            coeff *= x.value();
        } else if (x.kind() == Expr::Kind::sum && x.children().size() == 1) {
            coeff *= x.coefficients()[0];
            take(x.children()[0]);
        } else {
            take(x);
        }
    }
    if (coeff.is_zero()) return Expr::number(0);
    Expr base = Expr::product(std::move(f));
    return coeff.is_one() ? base : coeff * base;
}

Expr operator*(const Expr& a, const Expr& b) { return multiply_all({a, b}); }

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Expr::Kind::number: return a.value() == b.value();
        case Expr::Kind::atom: return a.atom_value() == b.atom_value();
        default: return a.coefficients() == b.coefficients() && a.children() == b.children();
    }
}

std::string Expr::str() const {
    switch (kind()) {
        case Kind::number: return value().sign() < 0 ? "(" + value().str() + ")" : value().str();
        case Kind::atom: return atom_value().str();
        case Kind::bracket: return "[" + children()[0].str() + ", " + children()[1].str() + "]";
        case Kind::product: {
            std::string s;
            for (std::size_t k = 0; k < children().size(); ++k) {
                if (k) s += "*";
                const Expr& c = children()[k];
                s += c.kind() == Kind::sum ? "(" + c.str() + ")" : c.str();
            }
            return s;
        }
        case Kind::sum: {
            std::string s;
            for (std::size_t k = 0; k < children().size(); ++k) {
                const Rational& c = coefficients()[k];
                const Expr& e = children()[k];
                std::string body = e.kind() == Kind::sum ? "(" + e.str() + ")" : e.str();
                Rational mag = c.sign() < 0 ? -c : c;
                if (!mag.is_one()) body = mag.str() + "*" + body;
                if (k == 0)
                    s += c.sign() < 0 ? "-" + body : body;
                else
                    s += (c.sign() < 0 ? " - " : " + ") + body;
            }
            return s;
        }
    }
    return {};
}

Element Expr::evaluate(const std::function<Element(const Atom&)>& resolve, const NormalOrdering* ring) const {
    switch (kind()) {
        case Kind::number: return Element(value());
        case Kind::atom: return resolve(atom_value());
        case Kind::sum: {
            Element acc;
            for (std::size_t k = 0; k < children().size(); ++k)
                acc += children()[k].evaluate(resolve, ring) * coefficients()[k];
            return acc;
        }
        case Kind::product: {
            Element acc = children()[0].evaluate(resolve, ring);
            for (std::size_t k = 1; k < children().size() && !acc.is_zero(); ++k) {
                Element y = children()[k].evaluate(resolve, ring);
                acc = ring ? ring->multiply(acc, y) : acc * y;
            }
            return acc;
        }
        case Kind::bracket: {
            Element x = children()[0].evaluate(resolve, ring);
            if (x.is_zero()) return {};
            Element y = children()[1].evaluate(resolve, ring);
            if (y.is_zero()) return {};
            return ring ? ring->bracket_normalized(x, y) : supercommutator(x, y);
        }
    }
    return {};
}

int Expr::max_degree() const {
    switch (kind()) {
        case Kind::number: return -1;
        case Kind::atom: {
            const Atom& a = atom_value();
            if (a.family == Family::E_LIE) return 0;
            return a.idx.back();
        }
        default: {
            int m = -1;
            for (const auto& c : children()) m = std::max(m, c.max_degree());
            return m;
        }
    }
}

}  // namespace sy
