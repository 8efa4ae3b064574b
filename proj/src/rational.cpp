#include "sy/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace sy {

namespace {

mpq_class small_to_mpq(std::int64_t n, std::int64_t d) {
    mpz_class zn, zd;
    mpz_set_si(zn.get_mpz_t(), n);
    mpz_set_si(zd.get_mpz_t(), d);
    mpq_class q(zn, zd);
    q.canonicalize();
    return q;
}

bool fits_i64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    normalize_small();
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

void Rational::normalize_small() {
    if (den_ < 0) {
        if (num_ == INT64_MIN || den_ == INT64_MIN) {
            assign_big(small_to_mpq(num_, den_));
            return;
        }
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

void Rational::assign_big(mpq_class q) {
    q.canonicalize();
    if (fits_i64(q.get_num()) && fits_i64(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : small_to_mpq(num_, den_); }

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_ || num_ == INT64_MIN) return Rational(mpq_class(-to_mpq()));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s)) {
                num_ = s;
                return *this;
            }
        } else {
            // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g))
            std::int64_t g = std::gcd(den_, o.den_);
            std::int64_t x, y, n, d;
            if (!__builtin_mul_overflow(num_, o.den_ / g, &x) &&
                !__builtin_mul_overflow(o.num_, den_ / g, &y) && !__builtin_add_overflow(x, y, &n) &&
                !__builtin_mul_overflow(den_, o.den_ / g, &d)) {
                num_ = n;
                den_ = d;
                normalize_small();
                return *this;
            }
        }
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        std::int64_t g1 = std::gcd(num_, o.den_);
        std::int64_t g2 = std::gcd(o.num_, den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        std::int64_t n, d;
        if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) &&
            !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d)) {
            num_ = n;
            den_ = d;
            if (num_ == 0) den_ = 1;
            return *this;
        }
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    assign_big(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rational& a, const Rational& b) { return a.to_mpq() < b.to_mpq(); }

}  // namespace sy
