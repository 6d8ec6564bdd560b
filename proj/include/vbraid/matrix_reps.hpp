#ifndef VBRAID_MATRIX_REPS_HPP
#define VBRAID_MATRIX_REPS_HPP

// Linear representations on free modules over Laurent polynomial rings.
//   lbk    crossings over {q,t} on the basis e_{i,j}, i<j (dense matrices)
//   psi1t  crossings over {t} on the same basis (monomial matrices)
//   PsiV   crossings and virtual letters over {t, t1..t_{n-1}}
//   theta  band generators over {t1..tn} on the short basis e_1..e_{n-1}
//
// Also: the word problem and order oracles for the two quotients whose
// elements these monomial images classify, plus relation verification
// reports with optional variable specialization.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/laurent.hpp"
#include "vbraid/poly_matrix.hpp"
#include "vbraid/presentations.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

enum class matrix_rep { lbk, psi1t, psiv, theta };

inline std::string rep_name(matrix_rep r) {
    switch (r) {
        case matrix_rep::lbk: return "lbk";
        case matrix_rep::psi1t: return "psi1t";
        case matrix_rep::psiv: return "PsiV";
        case matrix_rep::theta: return "theta";
    }
    throw std::logic_error("rep_name");
}

inline matrix_rep rep_from_name(const std::string& s) {
    if (s == "lbk") return matrix_rep::lbk;
    if (s == "psi1t") return matrix_rep::psi1t;
    if (s == "PsiV" || s == "psiv") return matrix_rep::psiv;
    if (s == "theta") return matrix_rep::theta;
    throw std::invalid_argument("unknown matrix rep: " + s);
}

inline ring_ctx rep_ring(matrix_rep r, int n) {
    switch (r) {
        case matrix_rep::lbk: return make_ring({"q", "t"});
        case matrix_rep::psi1t: return make_ring({"t"});
        case matrix_rep::psiv: {
            std::vector<std::string> v{"t"};
            for (int i = 1; i <= n - 1; ++i) v.push_back("t" + std::to_string(i));
            return make_ring(std::move(v));
        }
        case matrix_rep::theta: {
            std::vector<std::string> v;
            for (int i = 1; i <= n; ++i) v.push_back("t" + std::to_string(i));
            return make_ring(std::move(v));
        }
    }
    throw std::logic_error("rep_ring");
}

inline bool rep_letter_legal(matrix_rep r, gen_family f) {
    switch (r) {
        case matrix_rep::lbk:
        case matrix_rep::psi1t: return f == gen_family::sigma;
        case matrix_rep::psiv: return f == gen_family::sigma || f == gen_family::rho;
        case matrix_rep::theta: return f == gen_family::tau;
    }
    return false;
}

namespace detail {

// basis e_{i,j} for 1 <= i < j <= n in lexicographic order; reversed pairs
// are silently normalized since e_{j,i} and e_{i,j} name the same vector
struct pair_space {
    int n = 0;
    explicit pair_space(int n_) : n(n_) {}
    int dim() const { return n * (n - 1) / 2; }
    int index(int i, int j) const {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n || i == j) throw std::invalid_argument("bad basis pair");
        return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
    }
    std::pair<int, int> pair_at(int idx) const {
        for (int i = 1; i < n; ++i) {
            int block = n - i;
            if (idx < block) return {i, i + 1 + idx};
            idx -= block;
        }
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back("e(" + std::to_string(i) + "," + std::to_string(j) + ")");
        return out;
    }
};

inline std::vector<std::string> theta_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n - 1; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

// image of e_{i,j} under the crossing sigma_k or its inverse, written into
// a coefficient row over the pair basis
inline std::vector<laurent_poly> lbk_row(const pair_space& ps, const ring_ctx& R,
                                         int k, int sign, int i, int j) {
    std::vector<laurent_poly> row(static_cast<size_t>(ps.dim()),
                                  laurent_poly::zero(R));
    auto add = [&](int a, int b, const laurent_poly& c) {
        row[static_cast<size_t>(ps.index(a, b))] += c;
    };
    auto q = [&](int e) { return laurent_poly::var(R, "q", e); };
    auto t = [&](int e) { return laurent_poly::var(R, "t", e); };
    laurent_poly one = laurent_poly::one(R);
    laurent_poly qm1 = q(1) - one;

    if (sign >= 0) {
        if (k < i - 1 || k > j) {
            add(i, j, one);
        } else if (k == i - 1) {
            add(i - 1, j, one);
            add(i, j, one - q(1));
        } else if (k == i) {
            if (j == i + 1)
                add(i, j, t(1) * q(2));
            else {
                add(i, i + 1, t(1) * q(1) * qm1);
                add(i + 1, j, q(1));
            }
        } else if (k == j) {
            add(i, j, one - q(1));
            add(i, j + 1, q(1));
        } else if (k == j - 1) {
            add(i, j - 1, one);
            add(j - 1, j, t(1) * q(j - i) * qm1);
        } else {  // i < k < j-1
            add(i, j, one);
            add(k, k + 1, t(1) * q(k - i) * qm1 * qm1);
        }
        return row;
    }

    if (k < i - 1 || k > j) {
        add(i, j, one);
    } else if (k == i - 1) {
        add(k, j, q(-1));
        add(k, k + 1, q(-2) - q(-1));
    } else if (k == i) {
        if (j == i + 1)
            add(k, k + 1, t(-1) * q(-2));
        else {
            add(k, j, one - q(-1));
            add(k + 1, j, one);
            add(k, k + 1, q(-1) + q(-1) - one - q(-2));
        }
    } else if (k == j) {
        add(i, j + 1, one);
        add(j, j + 1, (one - q(1)) * q(j - 1 - i));
    } else if (k == j - 1) {
        add(i, j - 1, q(-1));
        add(i, j, one - q(-1));
        add(j - 1, j, -(qm1 * qm1 * q(j - 3 - i)));
    } else {  // i < k < j-1
        add(i, j, one);
        add(k, k + 1, -(q(k - i - 2) * qm1 * qm1));
    }
    return row;
}

// q = 1 member of the same family: the slot permutes along the strand
// transposition, picking up t on the slot (k,k+1) itself
inline std::vector<laurent_poly> perm_t_row(const pair_space& ps, const ring_ctx& R,
                                            int k, int sign, int i, int j) {
    std::vector<laurent_poly> row(static_cast<size_t>(ps.dim()),
                                  laurent_poly::zero(R));
    if (i == k && j == k + 1) {
        row[static_cast<size_t>(ps.index(i, j))] =
            laurent_poly::var(R, "t", sign >= 0 ? 1 : -1);
        return row;
    }
    auto s = [&](int a) { return a == k ? k + 1 : a == k + 1 ? k : a; };
    row[static_cast<size_t>(ps.index(s(i), s(j)))] = laurent_poly::one(R);
    return row;
}

// virtual letter: an involution permuting the slots touching k and k+1,
// twisting by the dedicated unit t_k
inline std::vector<laurent_poly> virt_row(const pair_space& ps, const ring_ctx& R,
                                          int k, int i, int j) {
    std::vector<laurent_poly> row(static_cast<size_t>(ps.dim()),
                                  laurent_poly::zero(R));
    std::string tk = "t" + std::to_string(k);
    auto put = [&](int a, int b, int e) {
        row[static_cast<size_t>(ps.index(a, b))] = laurent_poly::var(R, tk, e);
    };
    if (i == k && j == k + 1)
        put(i, j, 0);
    else if (i == k)
        put(k + 1, j, 1);
    else if (i == k + 1)
        put(k, j, -1);
    else if (j == k)
        put(i, k + 1, 1);
    else if (j == k + 1)
        put(i, k, -1);
    else
        put(i, j, 0);
    return row;
}

inline std::vector<laurent_poly> theta_row(int n, const ring_ctx& R, int k, int sign,
                                           int i) {
    std::vector<laurent_poly> row(static_cast<size_t>(n - 1),
                                  laurent_poly::zero(R));
    auto tv = [&](int m, int e) {
        return laurent_poly::var(R, "t" + std::to_string(m), e);
    };
    if (i != k) {
        row[static_cast<size_t>(i - 1)] = laurent_poly::one(R);
        return row;
    }
    if (k == n - 1) {
        row[static_cast<size_t>(i - 1)] = tv(n, sign >= 0 ? -1 : 1);
        return row;
    }
    if (sign >= 0) {
        row[static_cast<size_t>(i - 1)] = tv(k + 1, -1);
        row[static_cast<size_t>(i)] = tv(k + 1, -1) * (tv(k, 1) - laurent_poly::one(R));
    } else {
        row[static_cast<size_t>(i - 1)] = tv(k + 1, 1);
        row[static_cast<size_t>(i)] = laurent_poly::one(R) - tv(k, 1);
    }
    return row;
}

inline std::vector<laurent_poly> gen_row(matrix_rep rep, int n, const ring_ctx& R,
                                         const gen_sym& g, int sign, int idx) {
    if (!rep_letter_legal(rep, g.fam))
        throw std::invalid_argument("representation " + rep_name(rep) +
                                    " does not accept letter " + g.text());
    if (rep == matrix_rep::theta) return theta_row(n, R, g.index, sign, idx + 1);
    pair_space ps(n);
    auto [i, j] = ps.pair_at(idx);
    switch (rep) {
        case matrix_rep::lbk: return lbk_row(ps, R, g.index, sign, i, j);
        case matrix_rep::psi1t: return perm_t_row(ps, R, g.index, sign, i, j);
        case matrix_rep::psiv:
            if (g.fam == gen_family::sigma) return perm_t_row(ps, R, g.index, sign, i, j);
            return virt_row(ps, R, g.index, i, j);
        default: throw std::logic_error("gen_row");
    }
}

}  // namespace detail

inline std::vector<std::string> rep_basis_labels(matrix_rep rep, int n) {
    if (rep == matrix_rep::theta) return detail::theta_labels(n);
    return detail::pair_space(n).labels();
}

inline int rep_dim(matrix_rep rep, int n) {
    return rep == matrix_rep::theta ? n - 1 : n * (n - 1) / 2;
}

inline poly_matrix gen_matrix(matrix_rep rep, int n, const gen_sym& g, int sign) {
    ring_ctx R = rep_ring(rep, n);
    poly_matrix m = poly_matrix::zero(R, rep_basis_labels(rep, n));
    for (int r = 0; r < m.dim(); ++r) {
        auto row = detail::gen_row(rep, n, R, g, sign, r);
        for (int c = 0; c < m.dim(); ++c) m.at(r, c) = row[static_cast<size_t>(c)];
    }
    return m;
}

// product of generator matrices in word order (leftmost first)
inline poly_matrix rep_matrix(matrix_rep rep, int n, const group_word& w) {
    if (w.strands() != n) throw std::invalid_argument("rep_matrix: strand mismatch");
    ring_ctx R = rep_ring(rep, n);
    poly_matrix m = poly_matrix::identity(R, rep_basis_labels(rep, n));
    for (const auto& s : w.syllables()) {
        poly_matrix g = gen_matrix(rep, n, s.g, s.exp >= 0 ? 1 : -1);
        for (long long e = s.exp >= 0 ? s.exp : -s.exp; e > 0; --e)
            m = matrix_mul(m, g);
    }
    return m;
}

// same map computed without materializing generator matrices: each basis
// image row is pushed through the per-generator row formulas directly
inline poly_matrix rep_matrix_action(matrix_rep rep, int n, const group_word& w) {
    if (w.strands() != n) throw std::invalid_argument("rep_matrix: strand mismatch");
    ring_ctx R = rep_ring(rep, n);
    int d = rep_dim(rep, n);
    std::vector<std::vector<laurent_poly>> rows;
    for (int r = 0; r < d; ++r) {
        std::vector<laurent_poly> e(static_cast<size_t>(d), laurent_poly::zero(R));
        e[static_cast<size_t>(r)] = laurent_poly::one(R);
        rows.push_back(std::move(e));
    }
    for (const auto& s : w.syllables())
        for (long long e = s.exp >= 0 ? s.exp : -s.exp; e > 0; --e)
            for (auto& row : rows) {
                std::vector<laurent_poly> next(static_cast<size_t>(d),
                                               laurent_poly::zero(R));
                for (int c = 0; c < d; ++c) {
                    if (row[static_cast<size_t>(c)].is_zero()) continue;
                    auto img = detail::gen_row(rep, n, R, s.g, s.exp >= 0 ? 1 : -1, c);
                    for (int m = 0; m < d; ++m) {
                        if (img[static_cast<size_t>(m)].is_zero()) continue;
                        next[static_cast<size_t>(m)] +=
                            row[static_cast<size_t>(c)] * img[static_cast<size_t>(m)];
                    }
                }
                row = std::move(next);
            }
    poly_matrix m = poly_matrix::zero(R, rep_basis_labels(rep, n));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    return m;
}

struct order_result {
    bool finite = false;
    long long order = 0;  // meaningful only when finite
    std::string text() const {
        return finite ? "finite(" + std::to_string(order) + ")" : "infinite";
    }
    friend bool operator==(const order_result&, const order_result&) = default;
};

namespace detail {
inline void require_monomial_rep(matrix_rep rep, const char* op) {
    if (rep != matrix_rep::psi1t && rep != matrix_rep::psiv)
        throw std::invalid_argument(std::string(op) +
                                    ": needs a monomial representation (psi1t or PsiV)");
}
}  // namespace detail

// order of the image: the permutation pattern bounds it from below, and its
// power is diagonal, so the dichotomy is exact
inline order_result element_order(matrix_rep rep, int n, const group_word& w) {
    detail::require_monomial_rep(rep, "element_order");
    poly_matrix m = rep_matrix(rep, n, w);
    monomial_decomposition md = monomial_decompose(m);
    long long k = md.perm.order();
    if (matrix_pow(m, k).is_identity()) return {true, k};
    return {false, 0};
}

// decides equality in the quotient group the representation classifies
inline bool quotient_equal(matrix_rep rep, int n, const group_word& a,
                           const group_word& b) {
    detail::require_monomial_rep(rep, "quotient_equal");
    return rep_matrix(rep, n, a) == rep_matrix(rep, n, b);
}

// permutation pattern plus the unit-monomial scalar in each basis slot: a
// complete invariant of the image
inline monomial_decomposition crystal_profile(matrix_rep rep, int n,
                                              const group_word& w) {
    detail::require_monomial_rep(rep, "crystal_profile");
    return monomial_decompose(rep_matrix(rep, n, w));
}

// extends a partial variable assignment by identity substitutions so a
// matrix over `ring` can be specialized without naming every variable
inline std::map<std::string, laurent_poly> completed_substitution(
    const ring_ctx& ring, const std::map<std::string, laurent_poly>& partial) {
    std::map<std::string, laurent_poly> full = partial;
    for (const auto& v : *ring)
        if (!full.count(v)) full.emplace(v, laurent_poly::var(ring, v));
    return full;
}

struct relation_outcome {
    std::string label;
    bool asserted_equal = true;
    bool images_equal = false;
    bool holds = false;
    std::string witness;  // first differing basis row when a held assertion fails
};

inline std::vector<relation_outcome> relation_report(
    const std::string& pres, matrix_rep rep, int n,
    const std::map<std::string, laurent_poly>& specialization = {}) {
    std::vector<relation_outcome> out;
    ring_ctx R = rep_ring(rep, n);
    std::map<std::string, laurent_poly> full =
        specialization.empty() ? std::map<std::string, laurent_poly>{}
                               : completed_substitution(R, specialization);
    for (const auto& rel : relation_instances(pres, n)) {
        poly_matrix lhs = rep_matrix(rep, n, rel.lhs);
        poly_matrix rhs = rep_matrix(rep, n, rel.rhs);
        if (!full.empty()) {
            lhs = lhs.substitute(full);
            rhs = rhs.substitute(full);
        }
        relation_outcome o;
        o.label = rel.label;
        o.asserted_equal = rel.asserted_equal;
        o.images_equal = lhs == rhs;
        o.holds = o.images_equal == rel.asserted_equal;
        if (!o.holds && !o.asserted_equal) {
            o.witness = "images coincide although the relation is forbidden";
        } else if (!o.holds) {
            for (int r = 0; r < lhs.dim() && o.witness.empty(); ++r) {
                bool differ = false;
                for (int c = 0; c < lhs.dim(); ++c)
                    if (lhs.at(r, c) != rhs.at(r, c)) differ = true;
                if (!differ) continue;
                std::string l, rr;
                for (int c = 0; c < lhs.dim(); ++c) {
                    if (c) {
                        l += ", ";
                        rr += ", ";
                    }
                    l += lhs.at(r, c).text();
                    rr += rhs.at(r, c).text();
                }
                o.witness = lhs.basis[static_cast<size_t>(r)] + ": lhs (" + l +
                            ") vs rhs (" + rr + ")";
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

// nonzero entries only on or above the diagonal in the stored row
// convention, i.e. the flag of spans <e_r, e_{r+1}, ...> is preserved
inline bool flag_triangular(const poly_matrix& m) {
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < r; ++c)
            if (!m.at(r, c).is_zero()) return false;
    return true;
}

}  // namespace vbraid

#endif
