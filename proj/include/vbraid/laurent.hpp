#ifndef VBRAID_LAURENT_HPP
#define VBRAID_LAURENT_HPP

// Laurent polynomials with arbitrary precision integer coefficients over a
// fixed ordered variable list. Canonical form: map from exponent vector to
// nonzero coefficient, so equality is structural equality.

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/bigint.hpp"

namespace vbraid {

using var_set = std::vector<std::string>;
using ring_ctx = std::shared_ptr<const var_set>;

inline ring_ctx make_ring(std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("ring: empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("ring: duplicate variable " + n);
    }
    return std::make_shared<const var_set>(std::move(names));
}

inline ring_ctx make_ring(std::initializer_list<std::string> names) {
    return make_ring(std::vector<std::string>(names));
}

inline bool same_ring(const ring_ctx& a, const ring_ctx& b) {
    return a == b || (a && b && *a == *b);
}

inline int var_index(const ring_ctx& ring, const std::string& name) {
    for (size_t i = 0; i < ring->size(); ++i)
        if ((*ring)[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("ring: unknown variable " + name);
}

class laurent_poly {
public:
    using exponents = std::vector<int>;

    laurent_poly() = default;
    explicit laurent_poly(ring_ctx ring) : ring_(std::move(ring)) {}

    static laurent_poly zero(const ring_ctx& ring) { return laurent_poly(ring); }

    static laurent_poly constant(const ring_ctx& ring, bigint c) {
        laurent_poly p(ring);
        if (!c.is_zero()) p.terms_.emplace(exponents(ring->size(), 0), std::move(c));
        return p;
    }

    static laurent_poly one(const ring_ctx& ring) { return constant(ring, 1); }

    static laurent_poly monomial(const ring_ctx& ring, exponents e, bigint c) {
        if (e.size() != ring->size())
            throw std::invalid_argument("poly: exponent vector has wrong length");
        laurent_poly p(ring);
        if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    // c * name^e
    static laurent_poly var(const ring_ctx& ring, const std::string& name, int e = 1,
                            bigint c = bigint(1)) {
        exponents ev(ring->size(), 0);
        ev[static_cast<size_t>(var_index(ring, name))] = e;
        return monomial(ring, std::move(ev), std::move(c));
    }

    const ring_ctx& ring() const { return ring_; }
    const std::map<exponents, bigint>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        if (terms_.size() != 1) return false;
        const auto& [e, c] = *terms_.begin();
        if (c != bigint(1)) return false;
        for (int x : e)
            if (x != 0) return false;
        return true;
    }

    std::optional<std::pair<exponents, bigint>> single_term() const {
        if (terms_.size() != 1) return std::nullopt;
        return *terms_.begin();
    }

    // single term with coefficient +1 or -1
    bool is_unit_monomial() const {
        if (terms_.size() != 1) return false;
        const bigint& c = terms_.begin()->second;
        return c == bigint(1) || c == bigint(-1);
    }

    friend laurent_poly operator+(const laurent_poly& a, const laurent_poly& b) {
        check_rings(a, b);
        laurent_poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend laurent_poly operator-(const laurent_poly& a) {
        laurent_poly r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend laurent_poly operator-(const laurent_poly& a, const laurent_poly& b) {
        check_rings(a, b);
        laurent_poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
        check_rings(a, b);
        laurent_poly r(a.ring_ ? a.ring_ : b.ring_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                exponents e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    laurent_poly& operator+=(const laurent_poly& o) { return *this = *this + o; }
    laurent_poly& operator-=(const laurent_poly& o) { return *this = *this - o; }
    laurent_poly& operator*=(const laurent_poly& o) { return *this = *this * o; }

    friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const laurent_poly& a, const laurent_poly& b) {
        return !(a == b);
    }

    // substitute every variable by a unit monomial in the target ring;
    // the assignment must cover every variable of this poly's ring
    laurent_poly substitute(const std::map<std::string, laurent_poly>& assign) const {
        if (!ring_) throw std::invalid_argument("poly: substitute on null ring");
        ring_ctx target;
        std::vector<const laurent_poly*> images(ring_->size(), nullptr);
        for (size_t i = 0; i < ring_->size(); ++i) {
            auto it = assign.find((*ring_)[i]);
            if (it == assign.end())
                throw std::invalid_argument("substitution misses variable " + (*ring_)[i]);
            if (!it->second.is_unit_monomial())
                throw std::domain_error("substitution target not a unit monomial");
            if (!target)
                target = it->second.ring_;
            else if (!same_ring(target, it->second.ring_))
                throw std::invalid_argument("substitution targets in mixed rings");
            images[i] = &it->second;
        }
        laurent_poly r(target);
        for (const auto& [e, c] : terms_) {
            exponents ev(target->size(), 0);
            bigint coeff = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                const auto& [me, mc] = *images[i]->terms_.begin();
                for (size_t j = 0; j < ev.size(); ++j) ev[j] += e[i] * me[j];
                if (mc == bigint(-1) && (e[i] % 2 != 0)) coeff = -coeff;
            }
            r.add_term(ev, coeff);
        }
        return r;
    }

    // terms ascending by exponent vector; unit coefficients and zero
    // exponents are omitted, e.g. "1-q+t*q^2"
    std::string text() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string t = term_text(e, c);
            if (!out.empty() && t[0] != '-') out += "+";
            out += t;
        }
        return out;
    }

private:
    ring_ctx ring_;
    std::map<exponents, bigint> terms_;

    static void check_rings(const laurent_poly& a, const laurent_poly& b) {
        if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_))
            throw std::invalid_argument("poly: ring mismatch");
    }

    void add_term(const exponents& e, const bigint& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string term_text(const exponents& e, const bigint& c) const {
        std::string vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += (*ring_)[i];
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) return c.to_string();
        if (c == bigint(1)) return vars;
        if (c == bigint(-1)) return "-" + vars;
        return c.to_string() + "*" + vars;
    }
};

}  // namespace vbraid

#endif
