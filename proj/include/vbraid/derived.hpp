#ifndef VBRAID_DERIVED_HPP
#define VBRAID_DERIVED_HPP

// Dictionaries of derived elements, each expanded to a word in the base
// generators:
//   a(i,j)    band generators of the pure braid group (i < j)
//   l(i,j)    virtual band generators, defined for all i != j
//   x(i,j)    crossing conjugates generating the sigma-normal closure
//   b(r,c)    the five products of l-generators used by the 3 strand model
//   eps(i,j)  welded letters realizing the basis conjugation automorphisms

#include <stdexcept>
#include <string>

#include "vbraid/words.hpp"

namespace vbraid {

namespace detail {

inline void check_pair(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("derived word: index out of range");
    if (i == j) throw std::invalid_argument("derived word: indices must differ");
}

// r_{j-1} r_{j-2} ... r_{lo+1}  (descending; empty when lo+1 > j-1)
inline group_word rho_chain_desc(group_tag tag, int n, int lo, int j) {
    group_word w(tag, n);
    for (int k = j - 1; k > lo; --k) w.push({gen_family::rho, k}, 1);
    return w;
}

}  // namespace detail

// a(i,i+1) = s_i^2, a(i,j) = s_{j-1}..s_{i+1} s_i^2 s_{i+1}^-1..s_{j-1}^-1
inline group_word a_word(int n, int i, int j, group_tag tag = group_tag::B) {
    detail::check_pair(n, i, j);
    if (i > j) std::swap(i, j);
    group_word w(tag, n);
    for (int k = j - 1; k > i; --k) w.push({gen_family::sigma, k}, 1);
    w.push({gen_family::sigma, i}, 2);
    for (int k = i + 1; k <= j - 1; ++k) w.push({gen_family::sigma, k}, -1);
    return w;
}

// l(i,i+1) = r_i s_i^-1, l(i+1,i) = s_i^-1 r_i, both conjugated up by
// r-chains for distant pairs
inline group_word lambda_word(int n, int i, int j, group_tag tag = group_tag::VB) {
    detail::check_pair(n, i, j);
    int lo = std::min(i, j), hi = std::max(i, j);
    group_word core(tag, n);
    if (i < j) {
        core.push({gen_family::rho, lo}, 1);
        core.push({gen_family::sigma, lo}, -1);
    } else {
        core.push({gen_family::sigma, lo}, -1);
        core.push({gen_family::rho, lo}, 1);
    }
    group_word w = detail::rho_chain_desc(tag, n, lo, hi);
    w.push_word(core);
    for (int k = lo + 1; k <= hi - 1; ++k) w.push({gen_family::rho, k}, 1);
    return w;
}

// x(i,i+1) = s_i, x(i+1,i) = r_i s_i r_i, conjugated up by r-chains
inline group_word x_word(int n, int i, int j, group_tag tag = group_tag::VB) {
    detail::check_pair(n, i, j);
    int lo = std::min(i, j), hi = std::max(i, j);
    group_word core(tag, n);
    if (i < j) {
        core.push({gen_family::sigma, lo}, 1);
    } else {
        core.push({gen_family::rho, lo}, 1);
        core.push({gen_family::sigma, lo}, 1);
        core.push({gen_family::rho, lo}, 1);
    }
    group_word w = detail::rho_chain_desc(tag, n, lo, hi);
    w.push_word(core);
    for (int k = lo + 1; k <= hi - 1; ++k) w.push({gen_family::rho, k}, 1);
    return w;
}

// the five products used by the 3 strand semidirect model, rows index the
// generating pairs: b(1,1)=l(2,1)l(1,2), b(1,2)=l(1,3)l(1,2),
// b(2,1)=l(1,3)l(2,3), b(2,2)=l(3,2)l(3,1), b(2,3)=l(3,2)l(2,3)
inline group_word b_word(int r, int c, group_tag tag = group_tag::VB) {
    const int n = 3;
    if (r == 1 && c == 1) return word_mul(lambda_word(n, 2, 1, tag), lambda_word(n, 1, 2, tag));
    if (r == 1 && c == 2) return word_mul(lambda_word(n, 1, 3, tag), lambda_word(n, 1, 2, tag));
    if (r == 2 && c == 1) return word_mul(lambda_word(n, 1, 3, tag), lambda_word(n, 2, 3, tag));
    if (r == 2 && c == 2) return word_mul(lambda_word(n, 3, 2, tag), lambda_word(n, 3, 1, tag));
    if (r == 2 && c == 3) return word_mul(lambda_word(n, 3, 2, tag), lambda_word(n, 2, 3, tag));
    throw std::invalid_argument("b word: unknown index pair");
}

// eps(i,i+1) = al_i s_i^-1, eps(i+1,i) = s_i^-1 al_i, conjugated up by
// al-chains; the descending route uses an extra al_lo on both sides
inline group_word eps_word(int n, int i, int j, group_tag tag = group_tag::WB) {
    detail::check_pair(n, i, j);
    int lo = std::min(i, j), hi = std::max(i, j);
    group_word core(tag, n);
    if (hi == lo + 1 && i > j) {
        core.push({gen_family::sigma, lo}, -1);
        core.push({gen_family::alpha, lo}, 1);
    } else {
        if (i > j) core.push({gen_family::alpha, lo}, 1);
        core.push({gen_family::alpha, lo}, 1);
        core.push({gen_family::sigma, lo}, -1);
        if (i > j) core.push({gen_family::alpha, lo}, 1);
    }
    group_word w(tag, n);
    for (int k = hi - 1; k > lo; --k) w.push({gen_family::alpha, k}, 1);
    w.push_word(core);
    for (int k = lo + 1; k <= hi - 1; ++k) w.push({gen_family::alpha, k}, 1);
    return w;
}

}  // namespace vbraid

#endif
