#pragma once

// Exact integer with an inline 64-bit fast path. Values that leave the
// int64 range are promoted to a GMP integer and demoted again as soon as
// they fit.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace indhom {

class Integer {
public:
    Integer() noexcept = default;
    Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
    Integer(int v) noexcept : small_(v) {}           // NOLINT(google-explicit-constructor)
    explicit Integer(const mpz_class& v);
    explicit Integer(const std::string& decimal);

    Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o);
    Integer& operator=(Integer&&) noexcept = default;
    ~Integer() = default;

    bool is_small() const noexcept { return !big_; }
    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_one() const noexcept { return !big_ && small_ == 1; }
    bool is_unit() const noexcept { return !big_ && (small_ == 1 || small_ == -1); }
    int sign() const noexcept;

    // Only meaningful when is_small().
    std::int64_t small_value() const noexcept { return small_; }
    mpz_class to_mpz() const;
    std::string to_string() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);

    // this -= q * b, the elimination primitive.
    void submul(const Integer& q, const Integer& b);
    // this += q * b
    void addmul(const Integer& q, const Integer& b);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

private:
    void normalize();

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& v);
// Floor division and the matching non-negative-divisor remainder.
Integer floor_div(const Integer& a, const Integer& b);
// Euclidean remainder in [0, |b|).
Integer mod(const Integer& a, const Integer& b);
// a / b when b divides a exactly.
Integer exact_div(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
int compare_abs(const Integer& a, const Integer& b) noexcept;

}  // namespace indhom
