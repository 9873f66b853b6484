#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace intsep {

// Arbitrary-precision signed integer, sign-magnitude, base 2^32 limbs
// stored little-endian with no leading zero limbs.
class BigInt {
public:
    BigInt() = default;
    explicit BigInt(long long v);
    static BigInt from_i128(__int128 v);

    bool is_zero() const { return limbs_.empty(); }
    bool negative() const { return neg_; }
    BigInt negated() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Quotient truncated toward zero; remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(const BigInt& a, const BigInt& b);

    // -1, 0, +1
    int cmp(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return cmp(o) == 0; }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }

    bool fits_i64() const;
    long long to_i64() const; // valid only when fits_i64()

    std::string to_string() const;
    static std::optional<BigInt> parse_decimal_digits(std::string_view digits);

    static BigInt pow10(size_t k);

private:
    bool neg_ = false;
    std::vector<uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void shr1_mag(std::vector<uint32_t>& a);
    bool bit(size_t i) const;
    size_t bit_length() const;
    void set_bit(size_t i);
    friend struct BigRational;
};

struct BigRational {
    BigInt num;
    BigInt den; // > 0, gcd(|num|, den) == 1; num == 0 => den == 1

    static BigRational make(BigInt n, BigInt d);
    BigRational add(const BigRational& o) const;
    BigRational sub(const BigRational& o) const;
    BigRational mul(const BigRational& o) const;
    BigRational neg() const;
    int cmp(const BigRational& o) const;
};

// Exact rational number. Values that fit a reduced int64 numerator/denominator
// use an inline representation; anything larger is promoted to a heap
// BigRational. Results demote back when they fit, so the representation is
// canonical and equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : num_(v) {}
    Scalar(int v) : num_(v) {}
    static Scalar fraction(long long num, long long den); // den != 0

    static const Scalar& zero();

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }

    Scalar half() const { return *this * fraction(1, 2); }
    Scalar abs() const { return sign() < 0 ? -*this : *this; }
    int sign() const;
    bool is_zero() const { return !big_ && num_ == 0; }

    int cmp(const Scalar& o) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }
    bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
    bool operator>(const Scalar& o) const { return cmp(o) > 0; }
    bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }

    // Lowest terms, "p" or "p/q" with q > 1.
    std::string str() const;

    // Accepts "p", "-p", "p/q" (q > 0) and exact decimals like "-3.25".
    static std::optional<Scalar> parse(std::string_view text);

private:
    // fast representation: value = num_/den_, den_ >= 1, reduced; unused when big_ set
    long long num_ = 0;
    long long den_ = 1;
    std::shared_ptr<const BigRational> big_;

    static Scalar from_i128(__int128 num, __int128 den);
    static Scalar from_big(BigRational r);
    BigRational to_big() const;
};

inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

} // namespace intsep
