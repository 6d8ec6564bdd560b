#ifndef VBRAID_VP3_HPP
#define VBRAID_VP3_HPP

// Exact model of the pure virtual twist group on three strands as a free
// product (F3 x| F2) * Z.  Elements of the semidirect factor are pairs
// (u, v) with u over {b21,b22,b23} and v over {b11,b12}, multiplied through
// the stored conjugation action; the Z factor is generated by the image of
// the twist l(1,3).  Free-product elements are alternating letter strings.
//
// lambda_embed carries the six twist generators into the model, and
// verify_vp3_relations machine-checks the six defining conjugation
// relations under that embedding.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vbraid/free_auto.hpp"
#include "vbraid/free_word.hpp"

namespace vbraid {

inline const free_ctx& vp3_fiber_ctx() {
    static const free_ctx c = make_free_ctx({"b21", "b22", "b23"});
    return c;
}

inline const free_ctx& vp3_base_ctx() {
    static const free_ctx c = make_free_ctx({"b11", "b12"});
    return c;
}

namespace detail {

inline free_word fiber(std::initializer_list<int> letters) {
    free_word w(vp3_fiber_ctx());
    for (int l : letters) w.push(l);
    return w;
}

inline free_word base(std::initializer_list<int> letters) {
    free_word w(vp3_base_ctx());
    for (int l : letters) w.push(l);
    return w;
}

// conjugation by b11 fixes b21, b22 and conjugates b23 by (b22 b21)
inline const free_auto& conj_by_b11() {
    static const free_auto a = free_auto::from_images(
        vp3_fiber_ctx(),
        {fiber({1}), fiber({2}), fiber({-1, -2, 3, 2, 1})},
        {fiber({1}), fiber({2}), fiber({2, 1, 3, -1, -2})});
    return a;
}

// conjugation by b12 fixes b21, b23 and conjugates b22 by (b23 b21^-1)
inline const free_auto& conj_by_b12() {
    static const free_auto a = free_auto::from_images(
        vp3_fiber_ctx(),
        {fiber({1}), fiber({1, -3, 2, 3, -1}), fiber({3})},
        {fiber({1}), fiber({3, -1, 2, 1, -3}), fiber({3})});
    return a;
}

}  // namespace detail

// action of the base word v on the fiber, v u v^-1, rightmost letter first
inline free_word sd_act(const free_word& v, const free_word& u) {
    if (!same_free_ctx(v.ctx(), vp3_base_ctx()) ||
        !same_free_ctx(u.ctx(), vp3_fiber_ctx()))
        throw std::invalid_argument("sd_act: wrong contexts");
    free_word r = u;
    const auto& ls = v.letters();
    for (size_t k = ls.size(); k-- > 0;) {
        const free_auto& c = (ls[k] == 1 || ls[k] == -1) ? detail::conj_by_b11()
                                                         : detail::conj_by_b12();
        r = ls[k] > 0 ? c.apply(r) : c.apply_inverse(r);
    }
    return r;
}

struct sd_element {
    free_word u = free_word(vp3_fiber_ctx());
    free_word v = free_word(vp3_base_ctx());

    bool is_identity() const { return u.trivial() && v.trivial(); }
    std::string text() const { return "(" + u.text() + "; " + v.text() + ")"; }
    friend bool operator==(const sd_element&, const sd_element&) = default;
};

inline sd_element sd_mul(const sd_element& a, const sd_element& b) {
    return {fw_mul(a.u, sd_act(a.v, b.u)), fw_mul(a.v, b.v)};
}

inline sd_element sd_inv(const sd_element& a) {
    free_word vi = a.v.inverse();
    return {sd_act(vi, a.u.inverse()), vi};
}

// free-product normal form: alternating semidirect letters and z powers
class fp_element {
public:
    fp_element() = default;

    static fp_element from_sd(sd_element a) {
        fp_element r;
        r.push_letter({std::move(a), 0, false});
        return r;
    }

    static fp_element z_power(long long k) {
        fp_element r;
        r.push_letter({sd_element{}, k, true});
        return r;
    }

    bool is_identity() const { return seq_.empty(); }
    size_t letter_count() const { return seq_.size(); }

    std::string text() const {
        if (seq_.empty()) return "1";
        std::string out;
        for (const auto& l : seq_) {
            if (!out.empty()) out += " * ";
            if (l.is_z)
                out += l.z == 1 ? "z" : "z^" + std::to_string(l.z);
            else
                out += l.a.text();
        }
        return out;
    }

    friend fp_element model_mul(const fp_element& x, const fp_element& y) {
        fp_element r = x;
        for (const auto& l : y.seq_) r.push_letter(l);
        return r;
    }

    friend fp_element model_inv(const fp_element& x) {
        fp_element r;
        for (size_t k = x.seq_.size(); k-- > 0;) {
            const auto& l = x.seq_[k];
            r.push_letter(l.is_z ? letter{sd_element{}, -l.z, true}
                                 : letter{sd_inv(l.a), 0, false});
        }
        return r;
    }

    friend bool operator==(const fp_element&, const fp_element&) = default;

private:
    struct letter {
        sd_element a;
        long long z = 0;
        bool is_z = false;
        friend bool operator==(const letter&, const letter&) = default;
    };

    void push_letter(letter l) {
        bool trivial = l.is_z ? l.z == 0 : l.a.is_identity();
        if (trivial) return;
        if (!seq_.empty() && seq_.back().is_z == l.is_z) {
            auto& b = seq_.back();
            if (l.is_z) {
                b.z += l.z;
                if (b.z == 0) seq_.pop_back();
            } else {
                b.a = sd_mul(b.a, l.a);
                if (b.a.is_identity()) seq_.pop_back();
            }
            return;
        }
        seq_.push_back(std::move(l));
    }

    std::vector<letter> seq_;
};

inline fp_element model_pow(const fp_element& x, long long k) {
    fp_element base = k >= 0 ? x : model_inv(x);
    fp_element r;
    for (long long m = k >= 0 ? k : -k; m > 0; --m) r = model_mul(r, base);
    return r;
}

// images of the six twist generators
inline fp_element lambda_embed(int i, int j) {
    using fe = fp_element;
    auto A = [](free_word u, free_word v) {
        return fe::from_sd({std::move(u), std::move(v)});
    };
    if (i == 1 && j == 3) return fe::z_power(1);
    if (i == 1 && j == 2)
        return model_mul(fe::z_power(-1), A(detail::fiber({}), detail::base({2})));
    if (i == 2 && j == 1)
        return model_mul(A(detail::fiber({}), detail::base({1, -2})), fe::z_power(1));
    if (i == 2 && j == 3)
        return model_mul(fe::z_power(-1), A(detail::fiber({1}), detail::base({})));
    if (i == 3 && j == 2)
        return model_mul(A(detail::fiber({3, -1}), detail::base({})), fe::z_power(1));
    if (i == 3 && j == 1)
        return model_mul(fe::z_power(-1), A(detail::fiber({1, -3, 2}), detail::base({})));
    throw std::invalid_argument("lambda_embed: bad index pair");
}

struct vp3_check {
    std::string label;
    bool ok = false;
};

// the six conjugation relations l(k,i) l(k,j) l(i,j) = l(i,j) l(k,j) l(k,i)
// over distinct indices, evaluated in the model
inline std::vector<vp3_check> verify_vp3_relations() {
    std::vector<vp3_check> out;
    for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= 3; ++i) {
            if (i == k) continue;
            for (int j = 1; j <= 3; ++j) {
                if (j == k || j == i) continue;
                fp_element lki = lambda_embed(k, i), lkj = lambda_embed(k, j),
                           lij = lambda_embed(i, j);
                fp_element lhs = model_mul(model_mul(lki, lkj), lij);
                fp_element rhs = model_mul(model_mul(lij, lkj), lki);
                out.push_back({"conj(" + std::to_string(k) + "," + std::to_string(i) +
                                   "," + std::to_string(j) + ")",
                               model_mul(lhs, model_inv(rhs)).is_identity()});
            }
        }
    return out;
}

struct lambda_letter {
    int i = 0;
    int j = 0;
    long long exp = 1;
};

// grammar: whitespace separated l(<i>,<j>) tokens, optional ^<int>
inline std::vector<lambda_letter> parse_lambda_word(const std::string& text) {
    std::vector<lambda_letter> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        lambda_letter l;
        std::string body = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            body = tok.substr(0, caret);
            try {
                size_t used = 0;
                l.exp = std::stoll(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("cannot parse exponent in token " + tok);
            }
        }
        if (body.size() != 6 || body.rfind("l(", 0) != 0 || body[3] != ',' ||
            body.back() != ')' || !std::isdigit(static_cast<unsigned char>(body[2])) ||
            !std::isdigit(static_cast<unsigned char>(body[4])))
            throw std::invalid_argument("expected l(i,j) token, got " + tok);
        l.i = body[2] - '0';
        l.j = body[4] - '0';
        out.push_back(l);
    }
    return out;
}

inline fp_element vp3_eval(const std::vector<lambda_letter>& word) {
    fp_element r;
    for (const auto& l : word)
        r = model_mul(r, model_pow(lambda_embed(l.i, l.j), l.exp));
    return r;
}

}  // namespace vbraid

#endif
