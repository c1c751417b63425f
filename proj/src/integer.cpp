#include "indhom/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace indhom {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

mpz_class mpz_from_i64(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

Integer::Integer(const mpz_class& v) : big_(std::make_unique<mpz_class>(v)) { normalize(); }

Integer::Integer(const std::string& decimal) {
    mpz_class z;
    if (z.set_str(decimal, 10) != 0) throw std::invalid_argument("not a decimal integer: " + decimal);
    big_ = std::make_unique<mpz_class>(std::move(z));
    normalize();
}

Integer& Integer::operator=(const Integer& o) {
    if (this == &o) return *this;
    small_ = o.small_;
    if (o.big_) {
        if (big_)
            *big_ = *o.big_;
        else
            big_ = std::make_unique<mpz_class>(*o.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Integer::normalize() {
    if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
        small_ = mpz_get_si(big_->get_mpz_t());
        big_.reset();
    }
}

int Integer::sign() const noexcept {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : mpz_from_i64(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer Integer::operator-() const {
    if (!big_ && small_ != kMin) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    *this = Integer(mpz_class(to_mpz() + o.to_mpz()));
    return *this;
}

Integer& Integer::operator-=(const Integer& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    *this = Integer(mpz_class(to_mpz() - o.to_mpz()));
    return *this;
}

Integer& Integer::operator*=(const Integer& o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    *this = Integer(mpz_class(to_mpz() * o.to_mpz()));
    return *this;
}

void Integer::submul(const Integer& q, const Integer& b) {
    if (!big_ && !q.big_ && !b.big_) {
        std::int64_t prod, r;
        if (!__builtin_mul_overflow(q.small_, b.small_, &prod) && !__builtin_sub_overflow(small_, prod, &r)) {
            small_ = r;
            return;
        }
    }
    mpz_class z = to_mpz();
    mpz_submul(z.get_mpz_t(), q.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    *this = Integer(z);
}

void Integer::addmul(const Integer& q, const Integer& b) {
    if (!big_ && !q.big_ && !b.big_) {
        std::int64_t prod, r;
        if (!__builtin_mul_overflow(q.small_, b.small_, &prod) && !__builtin_add_overflow(small_, prod, &r)) {
            small_ = r;
            return;
        }
    }
    mpz_class z = to_mpz();
    mpz_addmul(z.get_mpz_t(), q.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    *this = Integer(z);
}

bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
    return false;  // normalized: a big value never fits in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small() && !(a.small_value() == kMin && b.small_value() == -1)) {
        std::int64_t x = a.small_value(), y = b.small_value();
        std::int64_t q = x / y;
        if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
        return Integer(q);
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer mod(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("modulo by zero");
    if (a.is_small() && b.is_small() && b.small_value() != kMin) {
        std::int64_t m = b.small_value() < 0 ? -b.small_value() : b.small_value();
        std::int64_t r = a.small_value() % m;
        if (r < 0) r += m;
        return Integer(r);
    }
    mpz_class r;
    mpz_class m = abs(b).to_mpz();
    mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), m.get_mpz_t());
    return Integer(r);
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && !(a.small_value() == kMin && b.small_value() == -1))
        return Integer(a.small_value() / b.small_value());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return mod(a, d).is_zero();
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small_value() != kMin && b.small_value() != kMin) {
        std::int64_t x = a.small_value() < 0 ? -a.small_value() : a.small_value();
        std::int64_t y = b.small_value() < 0 ? -b.small_value() : b.small_value();
        while (y != 0) {
            std::int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(x);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

int compare_abs(const Integer& a, const Integer& b) noexcept {
    if (a.is_small() && b.is_small() && a.small_value() != kMin && b.small_value() != kMin) {
        std::int64_t x = a.small_value() < 0 ? -a.small_value() : a.small_value();
        std::int64_t y = b.small_value() < 0 ? -b.small_value() : b.small_value();
        return (x > y) - (x < y);
    }
    mpz_class x = a.to_mpz(), y = b.to_mpz();
    int c = mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
    return (c > 0) - (c < 0);
}

}  // namespace indhom
