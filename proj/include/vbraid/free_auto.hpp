#ifndef VBRAID_FREE_AUTO_HPP
#define VBRAID_FREE_AUTO_HPP

// Free group automorphisms carried as generator images together with
// certified inverse images. Construction and every composition re-checks
// the certificate (both round trips reduce to the identity), so invalid
// endomorphisms cannot sneak through.
//
// Composition follows word order: compose(a, b) applies a first, then b.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vbraid/free_word.hpp"
#include "vbraid/permutation.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

class free_auto {
public:
    free_auto() = default;

    static free_auto identity(const free_ctx& ctx) {
        free_auto a;
        a.ctx_ = ctx;
        for (int k = 1; k <= static_cast<int>(ctx->size()); ++k) {
            a.images_.push_back(free_word::gen(ctx, k));
            a.inv_images_.push_back(free_word::gen(ctx, k));
        }
        return a;
    }

    static free_auto from_images(const free_ctx& ctx, std::vector<free_word> images,
                                 std::vector<free_word> inv_images) {
        if (images.size() != ctx->size() || inv_images.size() != ctx->size())
            throw std::invalid_argument("free auto: wrong number of images");
        free_auto a;
        a.ctx_ = ctx;
        a.images_ = std::move(images);
        a.inv_images_ = std::move(inv_images);
        a.certify();
        return a;
    }

    const free_ctx& ctx() const { return ctx_; }
    const std::vector<free_word>& images() const { return images_; }
    const std::vector<free_word>& inverse_images() const { return inv_images_; }

    free_word apply(const free_word& w) const { return substitute(images_, w); }
    free_word apply_inverse(const free_word& w) const {
        return substitute(inv_images_, w);
    }

    free_auto inverse() const {
        free_auto a;
        a.ctx_ = ctx_;
        a.images_ = inv_images_;
        a.inv_images_ = images_;
        return a;  // certificate is symmetric, no recheck needed
    }

    bool is_identity() const {
        for (size_t k = 0; k < images_.size(); ++k) {
            const auto& ls = images_[k].letters();
            if (ls.size() != 1 || ls[0] != static_cast<int>(k) + 1) return false;
        }
        return true;
    }

    // apply a first, then b
    friend free_auto compose(const free_auto& a, const free_auto& b) {
        if (!same_free_ctx(a.ctx_, b.ctx_))
            throw std::invalid_argument("free auto: basis mismatch");
        free_auto r;
        r.ctx_ = a.ctx_;
        for (size_t k = 0; k < a.images_.size(); ++k) {
            r.images_.push_back(b.apply(a.images_[k]));
            r.inv_images_.push_back(a.apply_inverse(b.inv_images_[k]));
        }
        r.certify();
        return r;
    }

    free_auto pow(long long k) const {
        free_auto base = k >= 0 ? *this : inverse();
        free_auto r = identity(ctx_);
        for (long long m = k >= 0 ? k : -k; m > 0; --m) r = compose(r, base);
        return r;
    }

    friend bool operator==(const free_auto& a, const free_auto& b) {
        return same_free_ctx(a.ctx_, b.ctx_) && a.images_ == b.images_;
    }
    friend bool operator!=(const free_auto& a, const free_auto& b) { return !(a == b); }

private:
    free_ctx ctx_;
    std::vector<free_word> images_;
    std::vector<free_word> inv_images_;

    static free_word substitute(const std::vector<free_word>& images,
                                const free_word& w) {
        free_word r(images.empty() ? w.ctx() : images[0].ctx());
        for (int l : w.letters()) {
            const free_word& im = images[static_cast<size_t>((l >= 0 ? l : -l) - 1)];
            if (l >= 0)
                r.push_word(im);
            else
                r.push_word_inverse(im);
        }
        return r;
    }

    void certify() const {
        for (size_t k = 0; k < images_.size(); ++k) {
            free_word x = free_word::gen(ctx_, static_cast<int>(k) + 1);
            if (substitute(inv_images_, images_[k]) != x ||
                substitute(images_, inv_images_[k]) != x)
                throw std::invalid_argument("free auto: inverse certificate failed");
        }
    }
};

// recognizes automorphisms sending every generator to a conjugate of a
// generator: x_i -> a_i^-1 x_perm(i) a_i with every image letter positive
// at the core; returns the permutation and the conjugators
inline std::optional<std::pair<permutation, std::vector<free_word>>> is_conjugating(
    const free_auto& a) {
    std::vector<int> images;
    std::vector<free_word> conj;
    for (const auto& w : a.images()) {
        const auto& ls = w.letters();
        if (ls.size() % 2 == 0) return std::nullopt;
        size_t m = ls.size() / 2;
        if (ls[m] < 0) return std::nullopt;
        for (size_t p = 0; p < m; ++p)
            if (ls[p] != -ls[ls.size() - 1 - p]) return std::nullopt;
        free_word tail(a.ctx());
        for (size_t p = m + 1; p < ls.size(); ++p) tail.push(ls[p]);
        images.push_back(ls[m]);
        conj.push_back(std::move(tail));
    }
    // images must be a bijection; from_images throws otherwise
    try {
        return std::make_pair(permutation::from_images(images), std::move(conj));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace vbraid

#endif
