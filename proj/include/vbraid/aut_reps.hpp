#ifndef VBRAID_AUT_REPS_HPP
#define VBRAID_AUT_REPS_HPP

// Representations into free group automorphisms.
//   artin          crossings act by the standard conjugation rule on F_n
//   welded         crossings as above, virtual/welded letters permute the basis
//   eps(i,j)       the single automorphism x_i -> x_j^-1 x_i x_j
//   phi(k)         band generators act through eps(i,i+1)^k
//   psi(k,l)       band generators act through eps(i,i+1)^k eps(i+1,i)^l
//   xi             band generators append a dedicated tail letter, on
//                  F_{3n-2} with basis x1..xn, u1..u_{n-1}, v1..v_{n-1}
//   phi_tilde(k), psi_tilde(k,l)   sigma acts by artin, tau by phi/psi, on F_n
//   psi_big(k,l)   sigma by artin, tau by the y-conjugated psi rule, on
//                  F_{n+1} with basis x1..xn, y

#include <stdexcept>
#include <string>

#include "vbraid/free_auto.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

struct aut_rep_id {
    enum class kind { artin, welded, eps, phi, psi, xi, phi_tilde, psi_tilde, psi_big };
    kind k = kind::artin;
    long long p1 = 0;  // k parameter, or i for eps
    long long p2 = 0;  // l parameter, or j for eps

    static aut_rep_id artin() { return {kind::artin, 0, 0}; }
    static aut_rep_id welded() { return {kind::welded, 0, 0}; }
    static aut_rep_id eps(int i, int j) { return {kind::eps, i, j}; }
    static aut_rep_id phi(long long k) { return {kind::phi, k, 0}; }
    static aut_rep_id psi(long long k, long long l) { return {kind::psi, k, l}; }
    static aut_rep_id xi() { return {kind::xi, 0, 0}; }
    static aut_rep_id phi_tilde(long long k) { return {kind::phi_tilde, k, 0}; }
    static aut_rep_id psi_tilde(long long k, long long l) {
        return {kind::psi_tilde, k, l};
    }
    static aut_rep_id psi_big(long long k, long long l) { return {kind::psi_big, k, l}; }
};

// free basis the representation acts on
inline free_ctx aut_rep_ctx(const aut_rep_id& rep, int n) {
    switch (rep.k) {
        case aut_rep_id::kind::xi: {
            std::vector<std::string> names;
            for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
            for (int i = 1; i <= n - 1; ++i) names.push_back("u" + std::to_string(i));
            for (int i = 1; i <= n - 1; ++i) names.push_back("v" + std::to_string(i));
            return make_free_ctx(std::move(names));
        }
        case aut_rep_id::kind::psi_big: {
            std::vector<std::string> names;
            for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
            names.push_back("y");
            return make_free_ctx(std::move(names));
        }
        default: return rank_ctx(n);
    }
}

namespace detail {

inline free_auto artin_gen(const free_ctx& ctx, int n, int i, int sign) {
    auto x = [&](int k, long long e = 1) { return free_word::gen(ctx, k, e); };
    std::vector<free_word> plus, minus;
    for (int k = 1; k <= static_cast<int>(ctx->size()); ++k) {
        if (k == i) {
            free_word w = x(i);
            w.push_word(x(i + 1));
            w.push_word(x(i, -1));
            plus.push_back(w);       // x_i x_{i+1} x_i^-1
            minus.push_back(x(i + 1));
        } else if (k == i + 1 && i + 1 <= n) {
            plus.push_back(x(i));
            free_word w = x(i + 1, -1);
            w.push_word(x(i));
            w.push_word(x(i + 1));
            minus.push_back(w);      // x_{i+1}^-1 x_i x_{i+1}
        } else {
            plus.push_back(x(k));
            minus.push_back(x(k));
        }
    }
    if (sign >= 0) return free_auto::from_images(ctx, plus, minus);
    return free_auto::from_images(ctx, minus, plus);
}

inline free_auto swap_gen(const free_ctx& ctx, int i) {
    std::vector<free_word> im;
    for (int k = 1; k <= static_cast<int>(ctx->size()); ++k) {
        int t = k == i ? i + 1 : k == i + 1 ? i : k;
        im.push_back(free_word::gen(ctx, t));
    }
    return free_auto::from_images(ctx, im, im);  // involution
}

inline free_auto eps_gen(const free_ctx& ctx, int i, int j, long long e) {
    std::vector<free_word> plus, minus;
    for (int k = 1; k <= static_cast<int>(ctx->size()); ++k) {
        if (k == i) {
            free_word w = free_word::gen(ctx, j, -e);
            w.push_word(free_word::gen(ctx, i));
            w.push_word(free_word::gen(ctx, j, e));
            plus.push_back(w);
            free_word v = free_word::gen(ctx, j, e);
            v.push_word(free_word::gen(ctx, i));
            v.push_word(free_word::gen(ctx, j, -e));
            minus.push_back(v);
        } else {
            plus.push_back(free_word::gen(ctx, k));
            minus.push_back(free_word::gen(ctx, k));
        }
    }
    return free_auto::from_images(ctx, plus, minus);
}

// eps(i,i+1)^k then eps(i+1,i)^l, matching the displayed image formulas
inline free_auto band_gen(const free_ctx& ctx, int i, long long k, long long l,
                          int sign) {
    free_auto a = compose(eps_gen(ctx, i, i + 1, k), eps_gen(ctx, i + 1, i, l));
    return sign >= 0 ? a : a.inverse();
}

inline free_auto xi_gen(const free_ctx& ctx, int n, int i, int sign) {
    long long e = sign >= 0 ? 1 : -1;
    std::vector<free_word> plus, minus;
    for (int k = 1; k <= static_cast<int>(ctx->size()); ++k) {
        free_word p = free_word::gen(ctx, k);
        free_word m = free_word::gen(ctx, k);
        if (k == i) {
            p.push_word(free_word::gen(ctx, n + i, e));       // u_i
            m.push_word(free_word::gen(ctx, n + i, -e));
        } else if (k == i + 1) {
            p.push_word(free_word::gen(ctx, n + (n - 1) + i, e));  // v_i
            m.push_word(free_word::gen(ctx, n + (n - 1) + i, -e));
        }
        plus.push_back(p);
        minus.push_back(m);
    }
    return free_auto::from_images(ctx, plus, minus);
}

// x_i, x_{i+1} conjugated by the extra letter y, everything else fixed
inline free_auto y_conj_pair(const free_ctx& ctx, int n, int i) {
    int y = n + 1;
    std::vector<free_word> plus, minus;
    for (int k = 1; k <= static_cast<int>(ctx->size()); ++k) {
        if (k == i || k == i + 1) {
            free_word p = free_word::gen(ctx, y, -1);
            p.push_word(free_word::gen(ctx, k));
            p.push_word(free_word::gen(ctx, y));
            plus.push_back(p);
            free_word m = free_word::gen(ctx, y);
            m.push_word(free_word::gen(ctx, k));
            m.push_word(free_word::gen(ctx, y, -1));
            minus.push_back(m);
        } else {
            plus.push_back(free_word::gen(ctx, k));
            minus.push_back(free_word::gen(ctx, k));
        }
    }
    return free_auto::from_images(ctx, plus, minus);
}

inline free_auto generator_auto(const aut_rep_id& rep, const free_ctx& ctx, int n,
                                const gen_sym& g, int sign) {
    using kind = aut_rep_id::kind;
    switch (rep.k) {
        case kind::artin:
            if (g.fam != gen_family::sigma) break;
            return artin_gen(ctx, n, g.index, sign);
        case kind::welded:
            if (g.fam == gen_family::sigma) return artin_gen(ctx, n, g.index, sign);
            if (g.fam == gen_family::rho || g.fam == gen_family::alpha)
                return swap_gen(ctx, g.index);
            break;
        case kind::phi:
            if (g.fam != gen_family::tau) break;
            return eps_gen(ctx, g.index, g.index + 1, sign >= 0 ? rep.p1 : -rep.p1);
        case kind::psi:
            if (g.fam != gen_family::tau) break;
            return band_gen(ctx, g.index, rep.p1, rep.p2, sign);
        case kind::xi:
            if (g.fam != gen_family::tau) break;
            return xi_gen(ctx, n, g.index, sign);
        case kind::phi_tilde:
            if (g.fam == gen_family::sigma) return artin_gen(ctx, n, g.index, sign);
            if (g.fam == gen_family::tau)
                return eps_gen(ctx, g.index, g.index + 1, sign >= 0 ? rep.p1 : -rep.p1);
            break;
        case kind::psi_tilde:
            if (g.fam == gen_family::sigma) return artin_gen(ctx, n, g.index, sign);
            if (g.fam == gen_family::tau)
                return band_gen(ctx, g.index, rep.p1, rep.p2, sign);
            break;
        case kind::psi_big: {
            if (g.fam == gen_family::sigma) return artin_gen(ctx, n, g.index, sign);
            if (g.fam != gen_family::tau) break;
            free_auto lifted = band_gen(ctx, g.index, rep.p1, rep.p2, 1);
            free_auto a = compose(lifted, y_conj_pair(ctx, n, g.index));
            return sign >= 0 ? a : a.inverse();
        }
        case kind::eps: break;  // not word driven
    }
    throw std::invalid_argument("representation does not accept letter " + g.text());
}

}  // namespace detail

// the single basis conjugation automorphism
inline free_auto eps_auto(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("eps: bad index pair");
    return detail::eps_gen(rank_ctx(n), i, j, 1);
}

inline free_auto rep_auto(const aut_rep_id& rep, int n, const group_word& w) {
    if (w.strands() != n) throw std::invalid_argument("rep_auto: strand mismatch");
    if (rep.k == aut_rep_id::kind::eps) {
        if (!w.empty())
            throw std::invalid_argument("eps names a fixed automorphism, not a representation; it takes no word");
        return eps_auto(n, static_cast<int>(rep.p1), static_cast<int>(rep.p2));
    }
    free_ctx ctx = aut_rep_ctx(rep, n);
    free_auto acc = free_auto::identity(ctx);
    for (const auto& s : w.syllables()) {
        free_auto g = detail::generator_auto(rep, ctx, n, s.g, s.exp >= 0 ? 1 : -1);
        for (long long m = s.exp >= 0 ? s.exp : -s.exp; m > 0; --m) acc = compose(acc, g);
    }
    return acc;
}

inline bool auto_is_identity(const free_auto& a) { return a.is_identity(); }

}  // namespace vbraid

#endif
