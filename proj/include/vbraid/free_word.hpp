#ifndef VBRAID_FREE_WORD_HPP
#define VBRAID_FREE_WORD_HPP

// Freely reduced words over a named free basis. Letters are signed
// one-based generator indices; pushing a letter cancels against the tail.

#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbraid {

using free_ctx = std::shared_ptr<const std::vector<std::string>>;

inline free_ctx make_free_ctx(std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const auto& s : names) {
        if (s.empty() || !seen.insert(s).second)
            throw std::invalid_argument("free basis: bad or duplicate name");
    }
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// x1..xn
inline free_ctx rank_ctx(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make_free_ctx(std::move(names));
}

inline bool same_free_ctx(const free_ctx& a, const free_ctx& b) {
    return a == b || (a && b && *a == *b);
}

class free_word {
public:
    free_word() = default;
    explicit free_word(free_ctx ctx) : ctx_(std::move(ctx)) {}

    static free_word gen(const free_ctx& ctx, int k, long long e = 1) {
        free_word w(ctx);
        w.push_power(k, e);
        return w;
    }

    const free_ctx& ctx() const { return ctx_; }
    const std::vector<int>& letters() const { return ls_; }
    bool trivial() const { return ls_.empty(); }
    size_t length() const { return ls_.size(); }

    int rank() const { return static_cast<int>(ctx_->size()); }

    void push(int letter) {
        int k = letter >= 0 ? letter : -letter;
        if (k < 1 || k > rank()) throw std::invalid_argument("free word: letter out of range");
        if (!ls_.empty() && ls_.back() == -letter) {
            ls_.pop_back();
            return;
        }
        ls_.push_back(letter);
    }

    void push_power(int k, long long e) {
        int letter = e >= 0 ? k : -k;
        for (long long m = e >= 0 ? e : -e; m > 0; --m) push(letter);
    }

    void push_word(const free_word& w) {
        check_ctx(w);
        for (int l : w.ls_) push(l);
    }

    void push_word_inverse(const free_word& w) {
        check_ctx(w);
        for (size_t i = w.ls_.size(); i-- > 0;) push(-w.ls_[i]);
    }

    free_word inverse() const {
        free_word r(ctx_);
        r.push_word_inverse(*this);
        return r;
    }

    free_word pow(long long k) const {
        free_word r(ctx_);
        for (long long m = k >= 0 ? k : -k; m > 0; --m) {
            if (k >= 0)
                r.push_word(*this);
            else
                r.push_word_inverse(*this);
        }
        return r;
    }

    // a^-1 w a
    friend free_word conjugated(const free_word& w, const free_word& a) {
        free_word r = a.inverse();
        r.push_word(w);
        r.push_word(a);
        return r;
    }

    friend free_word fw_mul(const free_word& a, const free_word& b) {
        free_word r = a;
        r.push_word(b);
        return r;
    }

    friend bool operator==(const free_word& a, const free_word& b) {
        return same_free_ctx(a.ctx_, b.ctx_) && a.ls_ == b.ls_;
    }
    friend bool operator!=(const free_word& a, const free_word& b) { return !(a == b); }

    // rewrite into another basis; gen_map sends a generator index to a
    // target index, or 0 to delete that letter
    free_word map_letters(const free_ctx& target,
                          const std::function<int(int)>& gen_map) const {
        free_word r(target);
        for (int l : ls_) {
            int k = l >= 0 ? l : -l;
            int m = gen_map(k);
            if (m == 0) continue;
            r.push(l >= 0 ? m : -m);
        }
        return r;
    }

    // "1" for the trivial word, otherwise power-collected letters
    std::string text() const {
        if (ls_.empty()) return "1";
        std::string out;
        for (size_t i = 0; i < ls_.size();) {
            int l = ls_[i];
            size_t j = i;
            while (j < ls_.size() && ls_[j] == l) ++j;
            long long e = static_cast<long long>(j - i) * (l >= 0 ? 1 : -1);
            if (!out.empty()) out += " ";
            out += (*ctx_)[static_cast<size_t>((l >= 0 ? l : -l) - 1)];
            if (e != 1) out += "^" + std::to_string(e);
            i = j;
        }
        return out;
    }

private:
    free_ctx ctx_;
    std::vector<int> ls_;

    void check_ctx(const free_word& w) const {
        if (!same_free_ctx(ctx_, w.ctx_))
            throw std::invalid_argument("free word: basis mismatch");
    }
};

}  // namespace vbraid

#endif
