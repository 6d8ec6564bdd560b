#ifndef VBRAID_RS_HPP
#define VBRAID_RS_HPP

// Reidemeister-Schreier rewriting for the kernel of a permutation
// homomorphism.  Cosets are identified by their permutation image, the
// transversal is an explicit list of representative words (one per coset,
// identity coset represented by the empty word).

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "vbraid/homs.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

// One step of the rewriting: the Schreier generator S_{u,g}^{sign}, where u
// is transversal[coset].
struct rs_step {
    int coset;
    gen_sym g;
    int sign;  // +1 or -1

    friend bool operator==(const rs_step&, const rs_step&) = default;

    std::string text() const {
        std::string s = "S[" + std::to_string(coset) + "," + g.text() + "]";
        if (sign < 0) s += "^-1";
        return s;
    }
};

struct schreier_gen {
    std::string label;  // "S(s2 s1, t2)"
    group_word word;    // u g (bar(u g))^-1, freely reduced
};

namespace detail {

inline std::string perm_text(const permutation& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.images().size(); ++i) {
        if (i) s += " ";
        s += std::to_string(p.images()[i]);
    }
    return s + "]";
}

// the image of one unit letter; letters the hom kills map to the identity
inline permutation letter_image(perm_hom h, int n, gen_sym g) {
    if (!hom_letter_acts(h, g.fam)) return permutation::identity(n);
    return permutation::transposition(n, g.index, g.index + 1);
}

// Validated coset table: transversal words keyed by permutation image.
class coset_table {
  public:
    coset_table(perm_hom h, const std::vector<group_word>& transversal)
        : hom_(h), reps_(transversal) {
        if (reps_.empty())
            throw std::invalid_argument("bad transversal: empty list");
        tag_ = reps_.front().tag();
        n_ = reps_.front().strands();
        if (!hom_applies(hom_, tag_))
            throw std::invalid_argument(hom_name(hom_) + " does not apply to " +
                                        tag_name(tag_) + " words");
        for (std::size_t i = 0; i < reps_.size(); ++i) {
            const group_word& u = reps_[i];
            if (u.tag() != tag_ || u.strands() != n_)
                throw std::invalid_argument(
                    "bad transversal: representatives disagree on group or "
                    "strand count");
            permutation p = permutation_image(u, hom_);
            auto [it, fresh] = index_.emplace(p.images(), static_cast<int>(i));
            if (!fresh)
                throw std::invalid_argument(
                    "bad transversal: " + reps_[it->second].text() + " and " +
                    u.text() + " represent the same coset");
            if (p.is_identity() && !u.empty())
                throw std::invalid_argument(
                    "bad transversal: identity coset must be represented by "
                    "the empty word");
        }
        if (index_.find(permutation::identity(n_).images()) == index_.end())
            throw std::invalid_argument(
                "bad transversal: missing the empty word");
        // closure: right-multiplying any coset by an adjacent transposition
        // must land in the table, otherwise some coset is missed
        for (const auto& [img, idx] : index_) {
            permutation p = permutation::from_images(img);
            for (int i = 1; i < n_; ++i) {
                permutation q =
                    compose_then(p, permutation::transposition(n_, i, i + 1));
                if (index_.find(q.images()) == index_.end())
                    throw std::invalid_argument(
                        "bad transversal: coset " + perm_text(q) +
                        " is missed");
            }
        }
    }

    perm_hom hom() const { return hom_; }
    group_tag tag() const { return tag_; }
    int strands() const { return n_; }
    int size() const { return static_cast<int>(reps_.size()); }

    int index_of(const permutation& p) const {
        auto it = index_.find(p.images());
        if (it == index_.end())
            throw std::invalid_argument("bad transversal: coset " +
                                        perm_text(p) + " is missed");
        return it->second;
    }

    const group_word& rep(int i) const { return reps_[static_cast<std::size_t>(i)]; }

    // S_{u,g} = u g (bar(u g))^-1, freely reduced
    group_word schreier_word(int coset, gen_sym g) const {
        const group_word& u = rep(coset);
        permutation target = compose_then(permutation_image(u, hom_),
                                          letter_image(hom_, n_, g));
        const group_word& v = rep(index_of(target));
        group_word s = u;
        s.push(g, 1);
        s.push_word(v.inverse());
        return s;
    }

  private:
    perm_hom hom_;
    group_tag tag_;
    int n_ = 0;
    std::vector<group_word> reps_;
    std::map<std::vector<int>, int> index_;
};

}  // namespace detail

// Breadth-first coset enumeration from the empty word, trying sigma letters
// first, then the other families legal for the group, indices ascending.
// For UB_3 this reproduces {1, s1, s2, s1 s2, s2 s1, s1 s2 s1}.
inline std::vector<group_word> standard_transversal(group_tag tag, int n,
                                                    perm_hom h) {
    if (!hom_applies(h, tag))
        throw std::invalid_argument(hom_name(h) + " does not apply to " +
                                    tag_name(tag) + " words");
    if (n < 2) throw std::invalid_argument("need at least 2 strands");
    std::vector<gen_sym> letters;
    for (gen_family f : {gen_family::sigma, gen_family::rho, gen_family::tau,
                         gen_family::alpha})
        if (family_legal(tag, f))
            for (int i = 1; i < n; ++i) letters.push_back({f, i});

    std::vector<group_word> reps;
    std::map<std::vector<int>, int> seen;
    std::deque<std::pair<group_word, permutation>> queue;
    group_word one(tag, n);
    permutation id = permutation::identity(n);
    seen.emplace(id.images(), 0);
    reps.push_back(one);
    queue.emplace_back(one, id);
    while (!queue.empty()) {
        auto [u, p] = queue.front();
        queue.pop_front();
        for (gen_sym g : letters) {
            permutation q = compose_then(p, detail::letter_image(h, n, g));
            if (seen.count(q.images())) continue;
            group_word v = u;
            v.push(g, 1);
            seen.emplace(q.images(), static_cast<int>(reps.size()));
            reps.push_back(v);
            queue.emplace_back(v, q);
        }
    }
    return reps;
}

// Schreier rewriting of a kernel word.  Each positive letter g read at
// prefix-coset u contributes S_{u,g}; a negative letter g^-1 read at u
// contributes S_{u',g}^-1 with u' = bar(u g^-1).  Steps whose Schreier word
// freely reduces to the empty word are dropped.
inline std::vector<rs_step> rs_rewrite(const group_word& w, perm_hom h,
                                       const std::vector<group_word>& transversal) {
    detail::coset_table table(h, transversal);
    if (w.tag() != table.tag() || w.strands() != table.strands())
        throw std::invalid_argument(
            "word and transversal disagree on group or strand count");
    permutation total = permutation_image(w, h);
    if (!total.is_identity())
        throw std::invalid_argument("not in kernel: image is " +
                                    detail::perm_text(total));

    std::vector<rs_step> steps;
    permutation p = permutation::identity(w.strands());
    for (const auto& syl : w.syllables()) {
        int sign = syl.exp > 0 ? 1 : -1;
        long long count = syl.exp > 0 ? syl.exp : -syl.exp;
        permutation t = detail::letter_image(h, w.strands(), syl.g);
        for (long long k = 0; k < count; ++k) {
            permutation next = compose_then(p, t);  // t is an involution
            int at = table.index_of(sign > 0 ? p : next);
            if (!table.schreier_word(at, syl.g).empty())
                steps.push_back({at, syl.g, sign});
            p = next;
        }
    }
    return steps;
}

inline std::vector<rs_step> rs_rewrite(const group_word& w, perm_hom h) {
    return rs_rewrite(w, h, standard_transversal(w.tag(), w.strands(), h));
}

// Expand a rewriting back over the base alphabet and freely reduce.  For a
// valid rewriting of w this returns exactly w: the Schreier words telescope.
inline group_word rs_expand(const std::vector<rs_step>& steps, perm_hom h,
                            const std::vector<group_word>& transversal) {
    detail::coset_table table(h, transversal);
    group_word out(table.tag(), table.strands());
    for (const rs_step& s : steps) {
        group_word piece = table.schreier_word(s.coset, s.g);
        out.push_word(s.sign > 0 ? piece : piece.inverse());
    }
    return out;
}

// All nontrivial S_{u,g} for u in the transversal and g ranging over the
// given letter families with indices 1..n-1, in transversal-major order.
inline std::vector<schreier_gen> schreier_generators(
    perm_hom h, int n, const std::vector<group_word>& transversal,
    const std::vector<gen_family>& letters) {
    detail::coset_table table(h, transversal);
    if (table.strands() != n)
        throw std::invalid_argument("transversal strand count mismatch");
    for (gen_family f : letters)
        if (!family_legal(table.tag(), f))
            throw std::invalid_argument(tag_name(table.tag()) +
                                        " word: illegal generator family");
    std::vector<schreier_gen> out;
    for (int u = 0; u < table.size(); ++u)
        for (gen_family f : letters)
            for (int i = 1; i < n; ++i) {
                gen_sym g{f, i};
                group_word s = table.schreier_word(u, g);
                if (s.empty()) continue;
                out.push_back({"S(" + table.rep(u).text() + ", " + g.text() + ")",
                               s});
            }
    return out;
}

}  // namespace vbraid

#endif
