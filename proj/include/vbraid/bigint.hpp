#ifndef VBRAID_BIGINT_HPP
#define VBRAID_BIGINT_HPP

// Arbitrary precision signed integer, base 2^32 limbs.
// Just enough for exact polynomial coefficients: add, sub, mul, compare,
// decimal in/out. No division beyond the small divisor used for printing.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbraid {

class bigint {
public:
    bigint() = default;

    bigint(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (m) {
            mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    static bigint from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("bigint: empty string");
        size_t pos = 0;
        int sign = 1;
        if (s[0] == '-' || s[0] == '+') {
            if (s[0] == '-') sign = -1;
            pos = 1;
        }
        if (pos == s.size()) throw std::invalid_argument("bigint: no digits");
        bigint r;
        for (; pos < s.size();) {
            size_t take = std::min<size_t>(9, s.size() - pos);
            uint32_t chunk = 0;
            uint32_t scale = 1;
            for (size_t k = 0; k < take; ++k, ++pos) {
                char c = s[pos];
                if (c < '0' || c > '9') throw std::invalid_argument("bigint: bad digit");
                chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
                scale *= 10;
            }
            r.mul_small(scale);
            r.add_small(chunk);
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    friend bigint operator-(const bigint& a) {
        bigint r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend bigint operator+(const bigint& a, const bigint& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        bigint r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return bigint();
            const bigint& big = c > 0 ? a : b;
            const bigint& small = c > 0 ? b : a;
            r.mag_ = sub_mag(big.mag_, small.mag_);
            r.sign_ = big.sign_;
        }
        return r;
    }

    friend bigint operator-(const bigint& a, const bigint& b) { return a + (-b); }

    friend bigint operator*(const bigint& a, const bigint& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return bigint();
        bigint r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                               r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    bigint& operator+=(const bigint& o) { return *this = *this + o; }
    bigint& operator-=(const bigint& o) { return *this = *this - o; }
    bigint& operator*=(const bigint& o) { return *this = *this * o; }

    friend bool operator==(const bigint& a, const bigint& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const bigint& a, const bigint& b) { return !(a == b); }

    friend bool operator<(const bigint& a, const bigint& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }

    // true when the value fits a two's complement int64
    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long v = abs_u64();
        if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
        return v <= 0x8000000000000000ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("bigint: does not fit int64");
        unsigned long long v = abs_u64();
        if (sign_ >= 0) return static_cast<long long>(v);
        return -static_cast<long long>(v - 1) - 1;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> groups;
        std::vector<uint32_t> work = mag_;
        while (!work.empty()) groups.push_back(divmod_small(work, 1000000000u));
        std::string out = sign_ < 0 ? "-" : "";
        out += std::to_string(groups.back());
        for (size_t i = groups.size() - 1; i-- > 0;) {
            std::string part = std::to_string(groups[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little endian, no leading zeros, empty iff zero

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    unsigned long long abs_u64() const {
        unsigned long long v = 0;
        if (!mag_.empty()) v = mag_[0];
        if (mag_.size() > 1) v |= static_cast<unsigned long long>(mag_[1]) << 32;
        return v;
    }

    void mul_small(uint32_t m) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            limb = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    void add_small(uint32_t a) {
        uint64_t carry = a;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry +
                           (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += int64_t(1) << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // divides work in place, returns remainder; d must be nonzero
    static uint32_t divmod_small(std::vector<uint32_t>& work, uint32_t d) {
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        return static_cast<uint32_t>(rem);
    }
};

}  // namespace vbraid

#endif
