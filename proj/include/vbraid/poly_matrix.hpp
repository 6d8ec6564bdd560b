#ifndef VBRAID_POLY_MATRIX_HPP
#define VBRAID_POLY_MATRIX_HPP

// Square matrices over a Laurent polynomial ring, row convention: row r is
// the image of basis vector r, so the matrix of "f then g" is M(f) * M(g)
// with ordinary row-by-column multiplication.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/laurent.hpp"
#include "vbraid/permutation.hpp"

namespace vbraid {

struct poly_matrix {
    ring_ctx ring;
    std::vector<std::string> basis;           // length dim, display labels
    std::vector<std::vector<laurent_poly>> rows;

    int dim() const { return static_cast<int>(basis.size()); }

    static poly_matrix zero(const ring_ctx& ring, std::vector<std::string> basis) {
        poly_matrix m;
        m.ring = ring;
        m.basis = std::move(basis);
        m.rows.assign(m.basis.size(),
                      std::vector<laurent_poly>(m.basis.size(), laurent_poly::zero(ring)));
        return m;
    }

    static poly_matrix identity(const ring_ctx& ring, std::vector<std::string> basis) {
        poly_matrix m = zero(ring, std::move(basis));
        for (int i = 0; i < m.dim(); ++i)
            m.rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = laurent_poly::one(ring);
        return m;
    }

    laurent_poly& at(int r, int c) {
        return rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    const laurent_poly& at(int r, int c) const {
        return rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }

    bool is_identity() const {
        for (int r = 0; r < dim(); ++r)
            for (int c = 0; c < dim(); ++c) {
                if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
            }
        return true;
    }

    bool is_diagonal() const {
        for (int r = 0; r < dim(); ++r)
            for (int c = 0; c < dim(); ++c)
                if (r != c && !at(r, c).is_zero()) return false;
        return true;
    }

    friend bool operator==(const poly_matrix& a, const poly_matrix& b) {
        if (a.dim() != b.dim() || !same_ring(a.ring, b.ring)) return false;
        return a.rows == b.rows;
    }
    friend bool operator!=(const poly_matrix& a, const poly_matrix& b) { return !(a == b); }

    poly_matrix substitute(const std::map<std::string, laurent_poly>& assign) const {
        poly_matrix r;
        r.basis = basis;
        r.rows.reserve(rows.size());
        for (const auto& row : rows) {
            std::vector<laurent_poly> nr;
            nr.reserve(row.size());
            for (const auto& p : row) nr.push_back(p.substitute(assign));
            r.rows.push_back(std::move(nr));
        }
        r.ring = r.rows.empty() || r.rows[0].empty() ? ring : r.rows[0][0].ring();
        return r;
    }

    std::string text() const {
        std::string out;
        for (int r = 0; r < dim(); ++r) {
            out += "[";
            for (int c = 0; c < dim(); ++c) {
                if (c) out += ", ";
                out += at(r, c).text();
            }
            out += "]\n";
        }
        return out;
    }

    // "diag(a, b, c)" when diagonal, otherwise the full grid
    std::string diag_text() const {
        if (!is_diagonal()) return text();
        std::string out = "diag(";
        for (int i = 0; i < dim(); ++i) {
            if (i) out += ", ";
            out += at(i, i).text();
        }
        return out + ")";
    }
};

inline poly_matrix matrix_mul(const poly_matrix& a, const poly_matrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix: dimension mismatch");
    if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("matrix: ring mismatch");
    poly_matrix r = poly_matrix::zero(a.ring, a.basis);
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a.dim(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.dim(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

// k must be >= 0; m^0 is the identity
inline poly_matrix matrix_pow(const poly_matrix& m, long long k) {
    if (k < 0) throw std::invalid_argument("matrix: negative power");
    poly_matrix r = poly_matrix::identity(m.ring, m.basis);
    for (; k > 0; --k) r = matrix_mul(r, m);
    return r;
}

// permutation pattern plus one monomial scalar per row: row r has its single
// nonzero entry, a one-term monomial, in column perm(r)
struct monomial_decomposition {
    permutation perm;                   // one-based on basis slots
    std::vector<laurent_poly> scalars;  // scalars[r-1] is the entry in row r
};

inline monomial_decomposition monomial_decompose(const poly_matrix& m) {
    std::vector<int> images;
    std::vector<laurent_poly> scalars;
    std::vector<bool> col_used(static_cast<size_t>(m.dim()), false);
    for (int r = 0; r < m.dim(); ++r) {
        int hit = -1;
        for (int c = 0; c < m.dim(); ++c) {
            if (m.at(r, c).is_zero()) continue;
            if (hit >= 0) throw std::domain_error("not monomial");
            hit = c;
        }
        if (hit < 0 || !m.at(r, hit).single_term())
            throw std::domain_error("not monomial");
        if (col_used[static_cast<size_t>(hit)]) throw std::domain_error("not monomial");
        col_used[static_cast<size_t>(hit)] = true;
        images.push_back(hit + 1);
        scalars.push_back(m.at(r, hit));
    }
    return {permutation::from_images(std::move(images)), std::move(scalars)};
}

inline poly_matrix monomial_reconstruct(const ring_ctx& ring,
                                        std::vector<std::string> basis,
                                        const monomial_decomposition& md) {
    poly_matrix m = poly_matrix::zero(ring, std::move(basis));
    for (int r = 1; r <= m.dim(); ++r)
        m.at(r - 1, md.perm.image(r) - 1) = md.scalars[static_cast<size_t>(r - 1)];
    return m;
}

}  // namespace vbraid

#endif
