#pragma once

// Small expression trees over generator references: the common currency of
// the relation catalog and the command-line parser.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sy/normal_order.hpp"

namespace sy {

/// A generator reference before it is resolved in some algebra: family plus
/// its index tuple, e.g. E[1,2,1,1,3] or t[2,1,0]. Degree 0 is allowed here.
struct Atom {
    Family family = Family::T;
    std::vector<int> idx;

    /// Expected number of indices for a family.
    static int arity(Family f);
    std::string str() const;
    friend bool operator==(const Atom&, const Atom&) = default;
};

class Expr {
public:
    enum class Kind { number, atom, sum, product, bracket };

    Expr() : Expr(number(0)) {}
    static Expr number(Rational q);
    static Expr atom(Atom a);
    static Expr sum(std::vector<std::pair<Rational, Expr>> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr bracket(Expr x, Expr y);

    Kind kind() const { return node_->kind; }
    const Rational& value() const { return node_->value; }
    const Atom& atom_value() const { return node_->atom; }
    /// Children of product / bracket nodes.
    const std::vector<Expr>& children() const { return node_->children; }
    /// Signed terms of a sum node.
    const std::vector<Rational>& coefficients() const { return node_->coeffs; }

    bool is_zero_literal() const { return kind() == Kind::number && value().is_zero(); }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator*(const Rational& c, const Expr& a);
    Expr& operator+=(const Expr& b) { return *this = *this + b; }
    Expr& operator-=(const Expr& b) { return *this = *this - b; }

    friend bool operator==(const Expr& a, const Expr& b);

    /// Text in the input grammar: "[t[1,2,1], t[2,1,1]]", "1/2*t[1,2,1]*t[1,2,1]".
    std::string str() const;

    /// Evaluates with every atom sent through `resolve`; products and
    /// brackets are normal-ordered in `ring` when it is given, otherwise
    /// kept as free words.
    Element evaluate(const std::function<Element(const Atom&)>& resolve, const NormalOrdering* ring) const;

    /// Largest series degree among the atoms (e[i,j] counts as 0), or -1
    /// when there are no atoms.
    int max_degree() const;

private:
    struct Node {
        Kind kind;
        Rational value;
        Atom atom;
        std::vector<Expr> children;
        std::vector<Rational> coeffs;
    };
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Expr bracket(const Expr& x, const Expr& y);

/// Product of all factors with their numeric parts pulled into one coefficient.
Expr multiply_all(const std::vector<Expr>& factors);

}  // namespace sy
