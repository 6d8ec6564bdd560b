#ifndef VBRAID_WORDS_HPP
#define VBRAID_WORDS_HPP

// Words in the braid-like groups on n strands. Four generator families:
//   sigma (crossings), rho (virtual crossings), tau (extra band/singular
//   generators), alpha (symmetric letters in the welded presentation).
// A word stores syllables (generator, exponent); adjacent equal generators
// merge and zero exponents drop, nothing else is rewritten.

#include <stdexcept>
#include <string>
#include <vector>

namespace vbraid {

enum class gen_family { sigma, rho, tau, alpha };

inline std::string family_prefix(gen_family f) {
    switch (f) {
        case gen_family::sigma: return "s";
        case gen_family::rho: return "r";
        case gen_family::tau: return "t";
        case gen_family::alpha: return "al";
    }
    throw std::logic_error("unreachable");
}

struct gen_sym {
    gen_family fam;
    int index;  // one-based strand index, 1..n-1

    friend bool operator==(const gen_sym&, const gen_sym&) = default;
    friend auto operator<=>(const gen_sym&, const gen_sym&) = default;

    std::string text() const { return family_prefix(fam) + std::to_string(index); }
};

enum class group_tag { B, VB, WB, UB, T, S };

inline std::string tag_name(group_tag t) {
    switch (t) {
        case group_tag::B: return "B";
        case group_tag::VB: return "VB";
        case group_tag::WB: return "WB";
        case group_tag::UB: return "UB";
        case group_tag::T: return "T";
        case group_tag::S: return "S";
    }
    throw std::logic_error("unreachable");
}

inline group_tag tag_from_name(const std::string& s) {
    if (s == "B") return group_tag::B;
    if (s == "VB") return group_tag::VB;
    if (s == "WB") return group_tag::WB;
    if (s == "UB") return group_tag::UB;
    if (s == "T") return group_tag::T;
    if (s == "S") return group_tag::S;
    throw std::invalid_argument("unknown group tag " + s);
}

inline bool family_legal(group_tag tag, gen_family f) {
    switch (tag) {
        case group_tag::B: return f == gen_family::sigma;
        case group_tag::VB: return f == gen_family::sigma || f == gen_family::rho;
        case group_tag::WB:
            return f == gen_family::sigma || f == gen_family::rho || f == gen_family::alpha;
        case group_tag::UB: return f == gen_family::sigma || f == gen_family::tau;
        case group_tag::T: return f == gen_family::tau;
        case group_tag::S: return f == gen_family::sigma || f == gen_family::tau;
    }
    return false;
}

struct syllable {
    gen_sym g;
    long long exp;

    friend bool operator==(const syllable&, const syllable&) = default;
};

class group_word {
public:
    group_word() = default;

    group_word(group_tag tag, int n) : tag_(tag), n_(n) {
        if (n < 2) throw std::invalid_argument("word: need at least 2 strands");
    }

    group_word(group_tag tag, int n, const std::vector<syllable>& syls)
        : group_word(tag, n) {
        for (const auto& s : syls) push(s.g, s.exp);
    }

    group_tag tag() const { return tag_; }
    int strands() const { return n_; }
    const std::vector<syllable>& syllables() const { return syls_; }
    bool empty() const { return syls_.empty(); }

    // appends one syllable, merging with the tail when the generator repeats
    void push(gen_sym g, long long exp) {
        if (!family_legal(tag_, g.fam))
            throw std::invalid_argument(tag_name(tag_) + " word: illegal generator " +
                                        g.text());
        if (g.index < 1 || g.index > n_ - 1)
            throw std::invalid_argument("word: generator index out of range: " + g.text());
        if (exp == 0) return;
        if (!syls_.empty() && syls_.back().g == g) {
            syls_.back().exp += exp;
            if (syls_.back().exp == 0) syls_.pop_back();
            return;
        }
        syls_.push_back({g, exp});
    }

    void push_word(const group_word& w) {
        check_compatible(w);
        for (const auto& s : w.syls_) push(s.g, s.exp);
    }

    group_word inverse() const {
        group_word r(tag_, n_);
        for (size_t i = syls_.size(); i-- > 0;) r.push(syls_[i].g, -syls_[i].exp);
        return r;
    }

    group_word pow(long long k) const {
        const group_word base = k >= 0 ? *this : inverse();
        group_word r(tag_, n_);
        for (long long m = k >= 0 ? k : -k; m > 0; --m) r.push_word(base);
        return r;
    }

    // number of single letters, counting exponents
    long long length() const {
        long long len = 0;
        for (const auto& s : syls_) len += s.exp >= 0 ? s.exp : -s.exp;
        return len;
    }

    // empty word prints as "1"
    std::string text() const {
        if (syls_.empty()) return "1";
        std::string out;
        for (const auto& s : syls_) {
            if (!out.empty()) out += " ";
            out += s.g.text();
            if (s.exp != 1) out += "^" + std::to_string(s.exp);
        }
        return out;
    }

    friend bool operator==(const group_word& a, const group_word& b) {
        return a.tag_ == b.tag_ && a.n_ == b.n_ && a.syls_ == b.syls_;
    }
    friend bool operator!=(const group_word& a, const group_word& b) { return !(a == b); }

    // same underlying syllables reinterpreted in another group; the target
    // must admit every family used
    group_word retag(group_tag tag) const {
        group_word r(tag, n_);
        for (const auto& s : syls_) r.push(s.g, s.exp);
        return r;
    }

private:
    group_tag tag_ = group_tag::B;
    int n_ = 2;
    std::vector<syllable> syls_;

    void check_compatible(const group_word& w) const {
        if (w.tag_ != tag_ || w.n_ != n_)
            throw std::invalid_argument("word: mixing words from different groups");
    }
};

inline group_word word_mul(const group_word& a, const group_word& b) {
    group_word r = a;
    r.push_word(b);
    return r;
}

// convenience single-letter word
inline group_word letter(group_tag tag, int n, gen_family f, int index,
                         long long exp = 1) {
    group_word w(tag, n);
    w.push({f, index}, exp);
    return w;
}

}  // namespace vbraid

#endif
