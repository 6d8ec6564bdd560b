#ifndef VBRAID_PRESENTATIONS_HPP
#define VBRAID_PRESENTATIONS_HPP

// Relation catalog. Each presentation id names a family of relation
// instances; relation_instances enumerates every instance for a given
// strand count. Most families assert equality, the "forbidden" ones assert
// the two sides differ.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vbraid/derived.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

struct relation_instance {
    std::string label;
    group_word lhs;
    group_word rhs;
    bool asserted_equal = true;

    friend bool operator==(const relation_instance&, const relation_instance&) = default;
};

namespace detail {

using sink = std::function<void(relation_instance)>;

inline group_word gw(group_tag tag, int n, std::initializer_list<syllable> syls) {
    return group_word(tag, n, std::vector<syllable>(syls));
}

constexpr gen_family SG = gen_family::sigma;
constexpr gen_family RH = gen_family::rho;
constexpr gen_family TA = gen_family::tau;
constexpr gen_family AL = gen_family::alpha;

// yb(i): g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}
inline void emit_yang_baxter(group_tag tag, gen_family f, int n, const sink& out) {
    for (int i = 1; i + 1 <= n - 1; ++i)
        out({"yb(" + std::to_string(i) + ")",
             gw(tag, n, {{{f, i}, 1}, {{f, i + 1}, 1}, {{f, i}, 1}}),
             gw(tag, n, {{{f, i + 1}, 1}, {{f, i}, 1}, {{f, i + 1}, 1}})});
}

// comm(i,j): g_i h_j = h_j g_i for |i-j| >= 2 (ordered when f != h)
inline void emit_far_comm(group_tag tag, gen_family f, gen_family h, int n,
                          const sink& out) {
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            if (f == h && j <= i) continue;  // unordered for a single family
            if (std::abs(i - j) < 2) continue;
            out({"comm(" + std::to_string(i) + "," + std::to_string(j) + ")",
                 gw(tag, n, {{{f, i}, 1}, {{h, j}, 1}}),
                 gw(tag, n, {{{h, j}, 1}, {{f, i}, 1}})});
        }
}

inline void emit_involutions(group_tag tag, gen_family f, int n, const sink& out) {
    for (int i = 1; i <= n - 1; ++i)
        out({"invol(" + std::to_string(i) + ")", gw(tag, n, {{{f, i}, 2}}),
             group_word(tag, n)});
}

}  // namespace detail

inline std::vector<std::string> presentation_ids() {
    return {"braid",        "rho-symmetric",  "alpha-symmetric", "wb-mixed",
            "wb-mixed-mirror", "welded-forbidden", "mccool",     "singular",
            "vb-mixed",     "vb-forbidden",   "vp",              "vp3",
            "hn",           "ub-mixed",       "tn-comm"};
}

inline std::vector<relation_instance> relation_instances(const std::string& pres,
                                                         int n) {
    using namespace detail;
    if (n < 2) throw std::invalid_argument("relation_instances: need n >= 2");
    std::vector<relation_instance> out;
    sink add = [&](relation_instance r) { out.push_back(std::move(r)); };
    const std::string id = pres == "cn-mixed" ? "wb-mixed" : pres;

    if (id == "braid") {
        emit_yang_baxter(group_tag::B, SG, n, add);
        emit_far_comm(group_tag::B, SG, SG, n, add);
    } else if (id == "rho-symmetric") {
        emit_yang_baxter(group_tag::VB, RH, n, add);
        emit_far_comm(group_tag::VB, RH, RH, n, add);
        emit_involutions(group_tag::VB, RH, n, add);
    } else if (id == "alpha-symmetric") {
        emit_yang_baxter(group_tag::WB, AL, n, add);
        emit_far_comm(group_tag::WB, AL, AL, n, add);
        emit_involutions(group_tag::WB, AL, n, add);
    } else if (id == "wb-mixed") {
        // al_i s_j = s_j al_i for |i-j| >= 2, and the two slide relations
        emit_far_comm(group_tag::WB, AL, SG, n, add);
        for (int i = 1; i + 1 <= n - 1; ++i) {
            add({"slide(" + std::to_string(i) + ")",
                 gw(group_tag::WB, n, {{{SG, i}, 1}, {{AL, i + 1}, 1}, {{AL, i}, 1}}),
                 gw(group_tag::WB, n, {{{AL, i + 1}, 1}, {{AL, i}, 1}, {{SG, i + 1}, 1}})});
            add({"slide2(" + std::to_string(i) + ")",
                 gw(group_tag::WB, n, {{{SG, i + 1}, 1}, {{SG, i}, 1}, {{AL, i + 1}, 1}}),
                 gw(group_tag::WB, n, {{{AL, i}, 1}, {{SG, i + 1}, 1}, {{SG, i}, 1}})});
        }
    } else if (id == "wb-mixed-mirror") {
        // consequence of the welded relations, kept as its own family
        for (int i = 1; i + 1 <= n - 1; ++i)
            add({"slide-rev(" + std::to_string(i) + ")",
                 gw(group_tag::WB, n, {{{SG, i + 1}, 1}, {{AL, i}, 1}, {{AL, i + 1}, 1}}),
                 gw(group_tag::WB, n, {{{AL, i}, 1}, {{AL, i + 1}, 1}, {{SG, i}, 1}})});
    } else if (id == "welded-forbidden") {
        for (int i = 1; i + 1 <= n - 1; ++i)
            add({"fw(" + std::to_string(i) + ")",
                 gw(group_tag::WB, n, {{{AL, i + 1}, 1}, {{SG, i}, 1}, {{SG, i + 1}, 1}}),
                 gw(group_tag::WB, n, {{{SG, i}, 1}, {{SG, i + 1}, 1}, {{AL, i}, 1}}),
                 false});
    } else if (id == "mccool") {
        // basis conjugation relations, every index distinct
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        if (l == k || l == i || l == j || k == j) continue;
                        add({"comm(" + std::to_string(i) + "," + std::to_string(j) +
                                 ";" + std::to_string(k) + "," + std::to_string(l) + ")",
                             word_mul(eps_word(n, i, j), eps_word(n, k, l)),
                             word_mul(eps_word(n, k, l), eps_word(n, i, j))});
                    }
            }
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n; ++i) {
                if (i == j) continue;
                for (int k = i + 1; k <= n; ++k) {
                    if (k == j) continue;
                    add({"same-target(" + std::to_string(i) + "," + std::to_string(k) +
                             "->" + std::to_string(j) + ")",
                         word_mul(eps_word(n, i, j), eps_word(n, k, j)),
                         word_mul(eps_word(n, k, j), eps_word(n, i, j))});
                }
            }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j) continue;
                    auto pair = word_mul(eps_word(n, i, j), eps_word(n, k, j));
                    add({"chain(" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")",
                         word_mul(pair, eps_word(n, i, k)),
                         word_mul(eps_word(n, i, k), pair)});
                }
            }
    } else if (id == "singular") {
        for (int i = 1; i <= n - 1; ++i) {
            add({"cancel(" + std::to_string(i) + ",+)",
                 gw(group_tag::S, n, {{{SG, i}, 1}, {{SG, i}, -1}}), group_word(group_tag::S, n)});
            add({"cancel(" + std::to_string(i) + ",-)",
                 gw(group_tag::S, n, {{{SG, i}, -1}, {{SG, i}, 1}}), group_word(group_tag::S, n)});
        }
        emit_far_comm(group_tag::S, TA, TA, n, add);
        emit_far_comm(group_tag::S, TA, SG, n, add);
        for (int i = 1; i <= n - 1; ++i)
            add({"band-comm(" + std::to_string(i) + ")",
                 gw(group_tag::S, n, {{{TA, i}, 1}, {{SG, i}, 1}}),
                 gw(group_tag::S, n, {{{SG, i}, 1}, {{TA, i}, 1}})});
        for (int i = 1; i + 1 <= n - 1; ++i) {
            add({"slide-up(" + std::to_string(i) + ")",
                 gw(group_tag::S, n, {{{SG, i}, 1}, {{SG, i + 1}, 1}, {{TA, i}, 1}}),
                 gw(group_tag::S, n, {{{TA, i + 1}, 1}, {{SG, i}, 1}, {{SG, i + 1}, 1}})});
            add({"slide-down(" + std::to_string(i) + ")",
                 gw(group_tag::S, n, {{{SG, i + 1}, 1}, {{SG, i}, 1}, {{TA, i + 1}, 1}}),
                 gw(group_tag::S, n, {{{TA, i}, 1}, {{SG, i + 1}, 1}, {{SG, i}, 1}})});
        }
    } else if (id == "vb-mixed") {
        emit_far_comm(group_tag::VB, SG, RH, n, add);
        for (int i = 1; i + 1 <= n - 1; ++i) {
            add({"slide(" + std::to_string(i) + ")",
                 gw(group_tag::VB, n, {{{RH, i}, 1}, {{RH, i + 1}, 1}, {{SG, i}, 1}}),
                 gw(group_tag::VB, n, {{{SG, i + 1}, 1}, {{RH, i}, 1}, {{RH, i + 1}, 1}})});
            add({"slide-mirror(" + std::to_string(i) + ")",
                 gw(group_tag::VB, n, {{{RH, i + 1}, 1}, {{RH, i}, 1}, {{SG, i + 1}, 1}}),
                 gw(group_tag::VB, n, {{{SG, i}, 1}, {{RH, i + 1}, 1}, {{RH, i}, 1}})});
        }
    } else if (id == "vb-forbidden") {
        for (int i = 1; i + 1 <= n - 1; ++i) {
            add({"fs1(" + std::to_string(i) + ")",
                 gw(group_tag::VB, n, {{{RH, i}, 1}, {{SG, i + 1}, 1}, {{SG, i}, 1}}),
                 gw(group_tag::VB, n, {{{SG, i + 1}, 1}, {{SG, i}, 1}, {{RH, i + 1}, 1}}),
                 false});
            add({"fs2(" + std::to_string(i) + ")",
                 gw(group_tag::VB, n, {{{RH, i + 1}, 1}, {{SG, i}, 1}, {{SG, i + 1}, 1}}),
                 gw(group_tag::VB, n, {{{RH, i}, 1}, {{SG, i + 1}, 1}, {{SG, i}, 1}}),
                 false});
        }
    } else if (id == "vp" || id == "vp3") {
        if (id == "vp3" && n != 3)
            throw std::invalid_argument("vp3 is the 3 strand catalog");
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        if (l == k || l == i || l == j || k == j) continue;
                        add({"comm(" + std::to_string(i) + "," + std::to_string(j) +
                                 ";" + std::to_string(k) + "," + std::to_string(l) + ")",
                             word_mul(lambda_word(n, i, j), lambda_word(n, k, l)),
                             word_mul(lambda_word(n, k, l), lambda_word(n, i, j))});
                    }
            }
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= n; ++i) {
                if (i == k) continue;
                for (int j = 1; j <= n; ++j) {
                    if (j == k || j == i) continue;
                    auto lki = lambda_word(n, k, i);
                    auto lkj = lambda_word(n, k, j);
                    auto lij = lambda_word(n, i, j);
                    add({"conj(" + std::to_string(k) + "," + std::to_string(i) + "," +
                             std::to_string(j) + ")",
                         word_mul(word_mul(lki, lkj), lij),
                         word_mul(word_mul(lij, lkj), lki)});
                }
            }
    } else if (id == "hn") {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        if (l == k || l == i || l == j || k == j) continue;
                        add({"comm(" + std::to_string(i) + "," + std::to_string(j) +
                                 ";" + std::to_string(k) + "," + std::to_string(l) + ")",
                             word_mul(x_word(n, i, j), x_word(n, k, l)),
                             word_mul(x_word(n, k, l), x_word(n, i, j))});
                    }
            }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                for (int k = 1; k <= n; ++k) {
                    if (k == i || k == j) continue;
                    auto xik = x_word(n, i, k);
                    auto xkj = x_word(n, k, j);
                    add({"braid3(" + std::to_string(i) + "," + std::to_string(k) + "," +
                             std::to_string(j) + ")",
                         word_mul(word_mul(xik, xkj), xik),
                         word_mul(word_mul(xkj, xik), xkj)});
                }
            }
    } else if (id == "ub-mixed") {
        emit_far_comm(group_tag::UB, TA, TA, n, add);
        emit_far_comm(group_tag::UB, TA, SG, n, add);
    } else if (id == "tn-comm") {
        emit_far_comm(group_tag::T, TA, TA, n, add);
    } else {
        throw std::invalid_argument("unknown presentation id " + pres);
    }
    return out;
}

}  // namespace vbraid

#endif
