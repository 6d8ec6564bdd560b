#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vbraid/aut_reps.hpp"
#include "vbraid/parse.hpp"
#include "vbraid/tn.hpp"

using namespace vbraid;

namespace {

group_word tword(const std::string& s, int n) { return parse_word(s, group_tag::T, n); }

group_word random_tau_word(std::mt19937_64& rng, int n, int len) {
    std::uniform_int_distribution<int> gi(1, n - 1);
    std::uniform_int_distribution<int> ei(0, 3);
    static const long long exps[4] = {-2, -1, 1, 2};
    group_word w(group_tag::T, n);
    for (int k = 0; k < len; ++k)
        w.push({gen_family::tau, gi(rng)}, exps[static_cast<size_t>(ei(rng))]);
    return w;
}

// staircase shape of a canonical word: adjacent syllable indices either
// strictly rise or drop by exactly one
bool canonical_shape(const group_word& w) {
    const auto& s = w.syllables();
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k].exp == 0) return false;
        if (k + 1 < s.size()) {
            int a = s[k].g.index, b = s[k + 1].g.index;
            if (!(a < b || a == b + 1)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("pile normal form frozen examples", "[tn]") {
    REQUIRE(tn_normal_form(tword("t3 t1", 4), 4).text() == "t1 t3");
    REQUIRE(tn_normal_form(tword("t1 t2 t1^-1 t2^-1", 3), 3).text() ==
            "t1 t2 t1^-1 t2^-1");
    REQUIRE(tn_normal_form(tword("t2 t4 t2^-1", 5), 5).text() == "t4");

    group_word witness = tword("t1 t2 t3 t2^-1 t1^-1 t2 t3^-1 t2^-1", 4);
    REQUIRE(tn_normal_form(witness, 4) == witness);
    REQUIRE_FALSE(tn_is_trivial(witness, 4));
    REQUIRE(tn_min_support(witness, 4) == 1);

    REQUIRE(tn_is_trivial(group_word(group_tag::T, 4), 4));
    REQUIRE_FALSE(tn_min_support(group_word(group_tag::T, 4), 4).has_value());
    REQUIRE(tn_min_support(tword("t2 t4 t2^-1", 5), 5) == 4);

    // commuting past a distant column enables a merge on return
    REQUIRE(tn_normal_form(tword("t1 t3 t1", 4), 4).text() == "t1^2 t3");
    REQUIRE(tn_normal_form(tword("t1 t3 t1^-1", 4), 4).text() == "t3");
    // an adjacent column blocks the same merge
    REQUIRE(tn_normal_form(tword("t1 t2 t1", 3), 3).text() == "t1 t2 t1");
    REQUIRE(tn_is_trivial(tword("t1 t3 t1^-1 t3^-1", 4), 4));
}

TEST_CASE("pile normal form properties", "[tn]") {
    std::mt19937_64 rng(501);
    for (int it = 0; it < 200; ++it) {
        int n = 3 + it % 3;
        group_word w = random_tau_word(rng, n, 12);
        group_word nf = tn_normal_form(w, n);
        REQUIRE(canonical_shape(nf));
        REQUIRE(tn_normal_form(nf, n) == nf);
        REQUIRE(tn_is_trivial(word_mul(w, w.inverse()), n));

        group_word u = random_tau_word(rng, n, 8);
        REQUIRE(tn_normal_form(word_mul(w, u), n) ==
                tn_normal_form(word_mul(nf, tn_normal_form(u, n)), n));

        if (auto s = tn_min_support(w, n)) {
            bool seen = false;
            for (const auto& syl : nf.syllables()) {
                REQUIRE(syl.g.index >= *s);
                seen |= syl.g.index == *s;
            }
            REQUIRE(seen);
        } else {
            REQUIRE(nf.empty());
        }
    }
}

TEST_CASE("normal form is invariant under far commutations", "[tn]") {
    std::mt19937_64 rng(502);
    for (int it = 0; it < 100; ++it) {
        int n = 4 + it % 2;
        // build as unit letters so single swaps stay legal rewrites
        std::vector<std::pair<int, long long>> letters;
        std::uniform_int_distribution<int> gi(1, n - 1);
        std::uniform_int_distribution<int> si(0, 1);
        for (int k = 0; k < 14; ++k)
            letters.push_back({gi(rng), si(rng) ? 1 : -1});

        group_word before(group_tag::T, n);
        for (auto [g, e] : letters) before.push({gen_family::tau, g}, e);

        for (int swaps = 0; swaps < 6; ++swaps) {
            std::uniform_int_distribution<size_t> pi(0, letters.size() - 2);
            size_t p = pi(rng);
            if (std::abs(letters[p].first - letters[p + 1].first) >= 2)
                std::swap(letters[p], letters[p + 1]);
        }
        group_word after(group_tag::T, n);
        for (auto [g, e] : letters) after.push({gen_family::tau, g}, e);

        REQUIRE(tn_normal_form(before, n) == tn_normal_form(after, n));
    }
}

TEST_CASE("pile agrees with the conjugation representation", "[tn]") {
    std::mt19937_64 rng(503);
    for (int it = 0; it < 60; ++it) {
        int n = 3 + it % 3;
        group_word w = random_tau_word(rng, n, 8);
        group_word nf = tn_normal_form(w, n);
        // the linearization names the same group element as the input
        REQUIRE(rep_auto(aut_rep_id::phi(1), n, w) == rep_auto(aut_rep_id::phi(1), n, nf));
        REQUIRE(tn_is_trivial(w, n) ==
                auto_is_identity(rep_auto(aut_rep_id::phi(1), n, w)));
        if (n == 3)
            REQUIRE(tn_is_trivial(w, n) ==
                    auto_is_identity(rep_auto(aut_rep_id::xi(), 3, w)));
    }
}

TEST_CASE("minimal support letter moves under conjugation reps", "[tn]") {
    std::mt19937_64 rng(504);
    int found = 0;
    for (int it = 0; it < 80; ++it) {
        int n = 3 + it % 3;
        group_word w = random_tau_word(rng, n, 10);
        auto s = tn_min_support(w, n);
        if (!s) continue;
        ++found;
        for (long long k : {1, 2}) {
            free_auto a = rep_auto(aut_rep_id::phi(k), n, w);
            free_word xs = free_word::gen(a.ctx(), *s);
            REQUIRE(a.apply(xs) != xs);
        }
    }
    REQUIRE(found > 40);
}
