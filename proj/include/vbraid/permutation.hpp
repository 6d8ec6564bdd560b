#ifndef VBRAID_PERMUTATION_HPP
#define VBRAID_PERMUTATION_HPP

// Permutations of {1..n}. Words act left to right: compose_then(p, q) is
// "apply p first, then q".

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbraid {

class permutation {
public:
    permutation() = default;

    static permutation identity(int n) {
        permutation p;
        p.img_.resize(static_cast<size_t>(check_n(n)));
        std::iota(p.img_.begin(), p.img_.end(), 1);
        return p;
    }

    // swaps a and b, everything else fixed
    static permutation transposition(int n, int a, int b) {
        permutation p = identity(n);
        p.check_point(a);
        p.check_point(b);
        std::swap(p.img_[static_cast<size_t>(a - 1)], p.img_[static_cast<size_t>(b - 1)]);
        return p;
    }

    // one-based images: v[i-1] is the image of i
    static permutation from_images(std::vector<int> v) {
        std::vector<bool> seen(v.size(), false);
        for (int x : v) {
            if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<size_t>(x - 1)])
                throw std::invalid_argument("permutation: images not a bijection");
            seen[static_cast<size_t>(x - 1)] = true;
        }
        permutation p;
        p.img_ = std::move(v);
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }

    int image(int i) const {
        check_point(i);
        return img_[static_cast<size_t>(i - 1)];
    }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    // apply a first, then b
    friend permutation compose_then(const permutation& a, const permutation& b) {
        if (a.n() != b.n()) throw std::invalid_argument("permutation: size mismatch");
        std::vector<int> v(a.img_.size());
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = b.img_[static_cast<size_t>(a.img_[i] - 1)];
        permutation p;
        p.img_ = std::move(v);
        return p;
    }

    permutation inverse() const {
        std::vector<int> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i)
            v[static_cast<size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
        permutation p;
        p.img_ = std::move(v);
        return p;
    }

    permutation pow(long long k) const {
        permutation base = k >= 0 ? *this : inverse();
        long long m = k >= 0 ? k : -k;
        permutation r = identity(n());
        for (; m > 0; --m) r = compose_then(r, base);
        return r;
    }

    // least m >= 1 with p^m = id (lcm of cycle lengths)
    long long order() const {
        std::vector<bool> seen(img_.size(), false);
        long long ord = 1;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            long long len = 0;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = static_cast<size_t>(img_[j] - 1);
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    std::vector<int> fixed_points() const {
        std::vector<int> out;
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] == static_cast<int>(i) + 1) out.push_back(static_cast<int>(i) + 1);
        return out;
    }

    // "(1 3 2)" style, identity prints "()"
    std::string cycle_text() const {
        std::vector<bool> seen(img_.size(), false);
        std::string out;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i) + 1) {
                seen[i] = true;
                continue;
            }
            out += "(";
            size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += " ";
                out += std::to_string(j + 1);
                first = false;
                j = static_cast<size_t>(img_[j] - 1);
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const permutation& a, const permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator!=(const permutation& a, const permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const permutation& a, const permutation& b) {
        return a.img_ < b.img_;
    }

private:
    std::vector<int> img_;

    static int check_n(int n) {
        if (n < 1) throw std::invalid_argument("permutation: n must be positive");
        return n;
    }
    void check_point(int i) const {
        if (i < 1 || i > n()) throw std::invalid_argument("permutation: point out of range");
    }
};

}  // namespace vbraid

#endif
