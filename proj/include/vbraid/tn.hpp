#ifndef VBRAID_TN_HPP
#define VBRAID_TN_HPP

// Word problem for the partially commutative group on tau generators where
// tau_i and tau_j commute exactly when |i-j| >= 2.
//
// Words are stacked into a pile with one column per generator index.  A
// pushed syllable merges with the top of its column unless some piece in an
// adjacent column was stacked later (those block the slide); merged
// exponents that reach zero pop.  The canonical word reads the pile back
// bottom-up, always emitting the lowest-index column whose front piece is
// not waiting on an adjacent column.

#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vbraid/words.hpp"

namespace vbraid {

class tn_pile {
public:
    explicit tn_pile(int n) : n_(n), cols_(static_cast<size_t>(n)) {
        if (n < 2) throw std::invalid_argument("pile: need n >= 2");
    }

    // stacks tau_s^exp, merging with the column top when nothing adjacent
    // sits above it
    void push(int s, long long exp) {
        if (s < 1 || s > n_ - 1)
            throw std::invalid_argument("pile: generator index out of range");
        if (exp == 0) return;
        auto& col = cols_[static_cast<size_t>(s)];
        if (!col.empty() && adjacent_top_seq(s) < col.back().seq) {
            col.back().exp += exp;
            if (col.back().exp == 0) col.pop_back();
            return;
        }
        col.push_back({exp, ++counter_});
    }

    bool empty() const {
        for (const auto& c : cols_)
            if (!c.empty()) return false;
        return true;
    }

    std::optional<int> min_index() const {
        for (int s = 1; s <= n_ - 1; ++s)
            if (!cols_[static_cast<size_t>(s)].empty()) return s;
        return std::nullopt;
    }

    // canonical linearization; front pieces are ready once every adjacent
    // front was stacked later
    group_word linearize() const {
        std::vector<size_t> at(cols_.size(), 0);
        auto front_seq = [&](int s) -> long long {
            const auto& c = cols_[static_cast<size_t>(s)];
            if (s < 1 || s > n_ - 1 || at[static_cast<size_t>(s)] >= c.size())
                return -1;  // exhausted columns never block
            return c[at[static_cast<size_t>(s)]].seq;
        };
        group_word out(group_tag::T, n_);
        for (;;) {
            int pick = 0;
            for (int s = 1; s <= n_ - 1 && !pick; ++s) {
                long long f = front_seq(s);
                if (f < 0) continue;
                long long l = front_seq(s - 1), r = front_seq(s + 1);
                if ((l < 0 || l > f) && (r < 0 || r > f)) pick = s;
            }
            if (!pick) break;
            const auto& p = cols_[static_cast<size_t>(pick)][at[static_cast<size_t>(pick)]];
            out.push({gen_family::tau, pick}, p.exp);
            ++at[static_cast<size_t>(pick)];
        }
        return out;
    }

private:
    struct piece {
        long long exp;
        long long seq;
    };

    // sequence number of the latest piece in a column next to s, or -1
    long long adjacent_top_seq(int s) const {
        long long m = -1;
        for (int d : {-1, 1}) {
            int c = s + d;
            if (c < 1 || c > n_ - 1) continue;
            const auto& col = cols_[static_cast<size_t>(c)];
            if (!col.empty() && col.back().seq > m) m = col.back().seq;
        }
        return m;
    }

    int n_;
    std::vector<std::deque<piece>> cols_;
    long long counter_ = 0;
};

inline tn_pile build_pile(const group_word& w, int n) {
    if (w.strands() != n) throw std::invalid_argument("pile: strand mismatch");
    const group_word v = w.tag() == group_tag::T ? w : w.retag(group_tag::T);
    tn_pile p(n);
    for (const auto& s : v.syllables()) p.push(s.g.index, s.exp);
    return p;
}

inline group_word tn_normal_form(const group_word& w, int n) {
    return build_pile(w, n).linearize();
}

inline bool tn_is_trivial(const group_word& w, int n) { return build_pile(w, n).empty(); }

inline std::optional<int> tn_min_support(const group_word& w, int n) {
    return build_pile(w, n).min_index();
}

}  // namespace vbraid

#endif
