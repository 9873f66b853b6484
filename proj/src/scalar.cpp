#include "intsep/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace intsep {

// ---------------------------------------------------------------- BigInt

BigInt::BigInt(long long v) {
    neg_ = v < 0;
    unsigned long long m = neg_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                : static_cast<unsigned long long>(v);
    if (m) limbs_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) limbs_.push_back(static_cast<uint32_t>(m >> 32));
    trim();
}

BigInt BigInt::from_i128(__int128 v) {
    BigInt r;
    r.neg_ = v < 0;
    unsigned __int128 m = r.neg_ ? ~static_cast<unsigned __int128>(v) + 1
                                 : static_cast<unsigned __int128>(v);
    while (m) {
        r.limbs_.push_back(static_cast<uint32_t>(m));
        m >>= 32;
    }
    r.trim();
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

BigInt BigInt::negated() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& hi = a.size() >= b.size() ? a : b;
    const auto& lo = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> out(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    out[hi.size()] = static_cast<uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return r;
        if (c > 0) {
            r.limbs_ = sub_mag(limbs_, o.limbs_);
            r.neg_ = neg_;
        } else {
            r.limbs_ = sub_mag(o.limbs_, limbs_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + o.negated(); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (is_zero() || o.is_zero()) return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.neg_ = neg_ != o.neg_;
    r.trim();
    return r;
}

bool BigInt::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

void BigInt::set_bit(size_t i) {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
    limbs_[limb] |= (1u << (i % 32));
}

void BigInt::shr1_mag(std::vector<uint32_t>& a) {
    uint32_t carry = 0;
    for (size_t i = a.size(); i-- > 0;) {
        uint32_t next = a[i] & 1u;
        a[i] = (a[i] >> 1) | (carry << 31);
        carry = next;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt division by zero");
    q = BigInt();
    r = BigInt();
    BigInt babs = b.abs();
    // shift-subtract long division on magnitudes
    for (size_t i = a.bit_length(); i-- > 0;) {
        // r = r*2 + bit(a, i)
        r.limbs_ = add_mag(r.limbs_, r.limbs_);
        if (a.bit(i)) r.limbs_ = add_mag(r.limbs_, {1u});
        if (cmp_mag(r.limbs_, babs.limbs_) >= 0) {
            r.limbs_ = sub_mag(r.limbs_, babs.limbs_);
            q.set_bit(i);
        }
    }
    q.neg_ = (a.neg_ != b.neg_);
    r.neg_ = a.neg_;
    q.trim();
    r.trim();
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    // binary gcd on magnitudes
    std::vector<uint32_t> u = a.limbs_, v = b.limbs_;
    if (u.empty()) return b.abs();
    if (v.empty()) return a.abs();
    size_t shift = 0;
    auto even = [](const std::vector<uint32_t>& x) { return !x.empty() && (x[0] & 1u) == 0; };
    while (even(u) && even(v)) {
        shr1_mag(u);
        shr1_mag(v);
        ++shift;
    }
    while (even(u)) shr1_mag(u);
    while (!v.empty()) {
        while (even(v)) shr1_mag(v);
        if (cmp_mag(u, v) > 0) std::swap(u, v);
        v = sub_mag(v, u);
    }
    BigInt g;
    g.limbs_ = u;
    for (size_t k = 0; k < shift; ++k) g.limbs_ = add_mag(g.limbs_, g.limbs_);
    g.trim();
    return g;
}

int BigInt::cmp(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return neg_ ? -c : c;
}

bool BigInt::fits_i64() const {
    if (limbs_.size() > 2) return false;
    unsigned long long m = 0;
    if (!limbs_.empty()) m = limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<unsigned long long>(limbs_[1]) << 32;
    return m <= 0x7fffffffffffffffULL;
}

long long BigInt::to_i64() const {
    unsigned long long m = 0;
    if (!limbs_.empty()) m = limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<unsigned long long>(limbs_[1]) << 32;
    long long v = static_cast<long long>(m);
    return neg_ ? -v : v;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> m = limbs_;
    std::string out;
    while (!m.empty()) {
        // divide magnitude by 10^9
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
            if (m.empty() && rem == 0) break;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (neg_) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<BigInt> BigInt::parse_decimal_digits(std::string_view digits) {
    if (digits.empty()) return std::nullopt;
    BigInt r;
    for (char ch : digits) {
        if (ch < '0' || ch > '9') return std::nullopt;
        // r = r*10 + digit
        uint64_t carry = static_cast<uint64_t>(ch - '0');
        for (size_t i = 0; i < r.limbs_.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r.limbs_[i]) * 10 + carry;
            r.limbs_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    }
    r.trim();
    return r;
}

BigInt BigInt::pow10(size_t k) {
    BigInt r(1);
    BigInt ten(10);
    for (size_t i = 0; i < k; ++i) r = r * ten;
    return r;
}

// ----------------------------------------------------------- BigRational

BigRational BigRational::make(BigInt n, BigInt d) {
    if (d.is_zero()) throw std::domain_error("rational with zero denominator");
    if (d.negative()) {
        n = n.negated();
        d = d.negated();
    }
    if (n.is_zero()) return {BigInt(0), BigInt(1)};
    BigInt g = BigInt::gcd(n, d);
    BigInt q, r;
    BigInt::divmod(n, g, q, r);
    n = q;
    BigInt::divmod(d, g, q, r);
    d = q;
    return {std::move(n), std::move(d)};
}

BigRational BigRational::add(const BigRational& o) const {
    return make(num * o.den + o.num * den, den * o.den);
}

BigRational BigRational::sub(const BigRational& o) const {
    return make(num * o.den - o.num * den, den * o.den);
}

BigRational BigRational::mul(const BigRational& o) const {
    return make(num * o.num, den * o.den);
}

BigRational BigRational::neg() const { return {num.negated(), den}; }

int BigRational::cmp(const BigRational& o) const {
    return (num * o.den).cmp(o.num * den);
}

// ----------------------------------------------------------------- Scalar

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kI64Max = 0x7fffffffffffffffLL;

} // namespace

const Scalar& Scalar::zero() {
    static const Scalar z;
    return z;
}

Scalar Scalar::from_i128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Scalar();
    __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if ((num < 0 ? -num : num) <= kI64Max && den <= kI64Max) {
        Scalar s;
        s.num_ = static_cast<long long>(num);
        s.den_ = static_cast<long long>(den);
        return s;
    }
    BigRational r{BigInt::from_i128(num), BigInt::from_i128(den)};
    Scalar s;
    s.big_ = std::make_shared<const BigRational>(std::move(r));
    return s;
}

Scalar Scalar::from_big(BigRational r) {
    if (r.num.fits_i64() && r.den.fits_i64()) {
        Scalar s;
        s.num_ = r.num.to_i64();
        s.den_ = r.den.to_i64();
        return s;
    }
    Scalar s;
    s.big_ = std::make_shared<const BigRational>(std::move(r));
    return s;
}

BigRational Scalar::to_big() const {
    if (big_) return *big_;
    return {BigInt(num_), BigInt(den_)};
}

Scalar Scalar::fraction(long long num, long long den) {
    return from_i128(num, den);
}

int Scalar::sign() const {
    if (big_) return big_->num.negative() ? -1 : (big_->num.is_zero() ? 0 : 1);
    return num_ < 0 ? -1 : (num_ == 0 ? 0 : 1);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            long long s;
            if (!__builtin_add_overflow(num_, o.num_, &s)) return Scalar(s);
        }
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_i128(n, d);
    }
    return from_big(to_big().add(o.to_big()));
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            long long s;
            if (!__builtin_sub_overflow(num_, o.num_, &s)) return Scalar(s);
        }
        __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_i128(n, d);
    }
    return from_big(to_big().sub(o.to_big()));
}

Scalar Scalar::operator-() const {
    if (!big_) {
        if (num_ != std::numeric_limits<long long>::min()) {
            Scalar s;
            s.num_ = -num_;
            s.den_ = den_;
            return s;
        }
        return from_i128(-static_cast<__int128>(num_), den_);
    }
    return from_big(big_->neg());
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (!big_ && !o.big_) {
        __int128 n = static_cast<__int128>(num_) * o.num_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from_i128(n, d);
    }
    return from_big(to_big().mul(o.to_big()));
}

int Scalar::cmp(const Scalar& o) const {
    if (!big_ && !o.big_) {
        __int128 lhs = static_cast<__int128>(num_) * o.den_;
        __int128 rhs = static_cast<__int128>(o.num_) * den_;
        return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
    }
    return to_big().cmp(o.to_big());
}

bool Scalar::operator==(const Scalar& o) const {
    if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
    return cmp(o) == 0;
}

std::string Scalar::str() const {
    if (big_) {
        std::string s = big_->num.to_string();
        if (!(big_->den == BigInt(1))) {
            s += "/";
            s += big_->den.to_string();
        }
        return s;
    }
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += "/";
        s += std::to_string(den_);
    }
    return s;
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        pos = 1;
    }
    size_t int_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == int_start) return std::nullopt;
    std::string_view int_part = text.substr(int_start, pos - int_start);

    if (pos == text.size()) {
        auto n = BigInt::parse_decimal_digits(int_part);
        if (!n) return std::nullopt;
        BigInt num = neg ? n->negated() : *n;
        return from_big(BigRational::make(std::move(num), BigInt(1)));
    }

    if (text[pos] == '.') {
        std::string_view frac = text.substr(pos + 1);
        if (frac.empty()) return std::nullopt;
        std::string all(int_part);
        all.append(frac);
        auto n = BigInt::parse_decimal_digits(all);
        if (!n) return std::nullopt;
        BigInt num = neg ? n->negated() : *n;
        return from_big(BigRational::make(std::move(num), BigInt::pow10(frac.size())));
    }

    if (text[pos] == '/') {
        std::string_view den = text.substr(pos + 1);
        auto n = BigInt::parse_decimal_digits(int_part);
        auto d = BigInt::parse_decimal_digits(den);
        if (!n || !d || d->is_zero()) return std::nullopt;
        BigInt num = neg ? n->negated() : *n;
        return from_big(BigRational::make(std::move(num), std::move(*d)));
    }

    return std::nullopt;
}

} // namespace intsep
