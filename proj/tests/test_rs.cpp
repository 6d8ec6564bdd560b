#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <random>
#include <set>

#include "vbraid/aut_reps.hpp"
#include "vbraid/derived.hpp"
#include "vbraid/parse.hpp"
#include "vbraid/presentations.hpp"
#include "vbraid/rs.hpp"

using namespace vbraid;
using Catch::Matchers::ContainsSubstring;

namespace {

group_word uw(const std::string& s, int n = 3) {
    return parse_word(s, group_tag::UB, n);
}
group_word bw(const std::string& s, int n = 3) {
    return parse_word(s, group_tag::B, n);
}

// sum of sigma exponents; invariant under every defining relation of UB
long long sigma_exp(const group_word& w) {
    long long e = 0;
    for (const auto& s : w.syllables())
        if (s.g.fam == gen_family::sigma) e += s.exp;
    return e;
}

std::vector<std::string> texts(const std::vector<group_word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.text());
    return out;
}

group_word random_word(std::mt19937& rng, group_tag tag, int n, int len) {
    std::vector<gen_family> fams;
    for (gen_family f : {gen_family::sigma, gen_family::rho, gen_family::tau,
                         gen_family::alpha})
        if (family_legal(tag, f)) fams.push_back(f);
    std::uniform_int_distribution<int> pick_fam(0, (int)fams.size() - 1);
    std::uniform_int_distribution<int> pick_idx(1, n - 1);
    std::uniform_int_distribution<int> pick_exp(0, 3);
    const long long exps[4] = {-2, -1, 1, 2};
    group_word w(tag, n);
    for (int i = 0; i < len; ++i)
        w.push({fams[pick_fam(rng)], pick_idx(rng)}, exps[pick_exp(rng)]);
    return w;
}

}  // namespace

TEST_CASE("standard transversals") {
    auto ub3 = standard_transversal(group_tag::UB, 3, perm_hom::band_to_sym);
    REQUIRE(texts(ub3) == std::vector<std::string>{"1", "s1", "s2", "s1 s2",
                                                   "s2 s1", "s1 s2 s1"});

    auto b3 = standard_transversal(group_tag::B, 3, perm_hom::strand_perm);
    REQUIRE(texts(b3) == texts(ub3));

    // sigma letters die under virt_only, so the representatives switch to rho
    auto vb3 = standard_transversal(group_tag::VB, 3, perm_hom::virt_only);
    REQUIRE(texts(vb3) == std::vector<std::string>{"1", "r1", "r2", "r1 r2",
                                                   "r2 r1", "r1 r2 r1"});

    auto b4 = standard_transversal(group_tag::B, 4, perm_hom::strand_perm);
    REQUIRE(b4.size() == 24);
    std::set<std::vector<int>> images;
    for (const auto& u : b4)
        images.insert(permutation_image(u, perm_hom::strand_perm).images());
    REQUIRE(images.size() == 24);
    REQUIRE(b4.front().empty());
    for (const auto& u : b4) REQUIRE(u.length() <= 6);
}

TEST_CASE("schreier generators for the band kernel, three strands") {
    auto trans = standard_transversal(group_tag::UB, 3, perm_hom::band_to_sym);
    auto gens = schreier_generators(perm_hom::band_to_sym, 3, trans,
                                    {gen_family::tau});
    REQUIRE(gens.size() == 12);

    std::map<std::string, std::string> by_label;
    for (const auto& g : gens) by_label[g.label] = g.word.text();

    // the ten straightforward ones
    REQUIRE(by_label["S(1, t1)"] == "t1 s1^-1");
    REQUIRE(by_label["S(1, t2)"] == "t2 s2^-1");
    REQUIRE(by_label["S(s1, t1)"] == "s1 t1");
    REQUIRE(by_label["S(s1, t2)"] == "s1 t2 s2^-1 s1^-1");
    REQUIRE(by_label["S(s2, t1)"] == "s2 t1 s1^-1 s2^-1");
    REQUIRE(by_label["S(s2, t2)"] == "s2 t2");
    REQUIRE(by_label["S(s1 s2, t1)"] == "s1 s2 t1 s1^-1 s2^-1 s1^-1");
    REQUIRE(by_label["S(s1 s2, t2)"] == "s1 s2 t2 s1^-1");
    REQUIRE(by_label["S(s2 s1, t1)"] == "s2 s1 t1 s2^-1");
    REQUIRE(by_label["S(s1 s2 s1, t1)"] == "s1 s2 s1 t1 s2^-1 s1^-1");

    // the remaining two sometimes circulate in a different spelling; freeze
    // what the overline rule produces
    REQUIRE(by_label["S(s2 s1, t2)"] == "s2 s1 t2 s1^-1 s2^-1 s1^-1");
    REQUIRE(by_label["S(s1 s2 s1, t2)"] == "s1 s2 s1 t2 s1^-1 s2^-1");

    // every generator lies in the kernel
    for (const auto& g : gens)
        REQUIRE(permutation_image(g.word, perm_hom::band_to_sym).is_identity());
}

TEST_CASE("alternative spellings of the two contested generators") {
    auto trans = standard_transversal(group_tag::UB, 3, perm_hom::band_to_sym);
    detail::coset_table table(perm_hom::band_to_sym, trans);

    // S(s2 s1, t2): the circulated spelling differs from ours exactly by
    // substituting one side of the braid relation for the other, so the two
    // words are equal in the group
    group_word strict = table.schreier_word(4, {gen_family::tau, 2});
    group_word printed = uw("s2 s1 t2 s2^-1 s1^-1 s2^-1");
    REQUIRE(strict.text() == "s2 s1 t2 s1^-1 s2^-1 s1^-1");
    REQUIRE(!(strict == printed));

    auto braid = relation_instances("braid", 3);
    REQUIRE(braid.size() == 1);
    group_word head = uw("s2 s1 t2");
    group_word lhs3 = braid[0].lhs.retag(group_tag::UB);
    group_word rhs3 = braid[0].rhs.retag(group_tag::UB);
    REQUIRE(word_mul(head, lhs3.inverse()) == strict);
    REQUIRE(word_mul(head, rhs3.inverse()) == printed);
    REQUIRE(rep_auto(aut_rep_id::phi_tilde(2), 3, strict) ==
            rep_auto(aut_rep_id::phi_tilde(2), 3, printed));
    REQUIRE(sigma_exp(strict) == sigma_exp(printed));

    // S(s1 s2 s1, t2): here the circulated spelling is not even equal in the
    // group; the sigma exponent sums differ, and sigma exponent sum is
    // invariant under all defining relations
    group_word strict2 = table.schreier_word(5, {gen_family::tau, 2});
    group_word printed2 = uw("s1 s2 s1 t2 s2^-1 s1^-1 s2^-1 s1^-1");
    REQUIRE(strict2.text() == "s1 s2 s1 t2 s1^-1 s2^-1");
    REQUIRE(sigma_exp(strict2) == 1);
    REQUIRE(sigma_exp(printed2) == -1);
    REQUIRE(!(rep_auto(aut_rep_id::phi_tilde(2), 3, strict2) ==
              rep_auto(aut_rep_id::phi_tilde(2), 3, printed2)));
    // the printed spelling is not a Schreier word for this transversal at all
    REQUIRE(permutation_image(printed2, perm_hom::band_to_sym).is_identity());
}

TEST_CASE("small generator sets") {
    // UB_2, both letters: free of rank 3
    auto t2 = standard_transversal(group_tag::UB, 2, perm_hom::band_to_sym);
    REQUIRE(texts(t2) == std::vector<std::string>{"1", "s1"});
    auto g2 = schreier_generators(perm_hom::band_to_sym, 2, t2,
                                  {gen_family::sigma, gen_family::tau});
    REQUIRE(g2.size() == 3);
    std::set<std::string> words2;
    for (const auto& g : g2) words2.insert(g.word.text());
    REQUIRE(words2 == std::set<std::string>{"t1 s1^-1", "s1^2", "s1 t1"});

    // B_2, sigma letters: the single generator s1^2
    auto tb2 = standard_transversal(group_tag::B, 2, perm_hom::strand_perm);
    auto gb2 = schreier_generators(perm_hom::strand_perm, 2, tb2,
                                   {gen_family::sigma});
    REQUIRE(gb2.size() == 1);
    REQUIRE(gb2[0].label == "S(s1, s1)");
    REQUIRE(gb2[0].word.text() == "s1^2");

    // B_3, sigma letters: seven pure generators (index 6, two letters)
    auto tb3 = standard_transversal(group_tag::B, 3, perm_hom::strand_perm);
    auto gb3 = schreier_generators(perm_hom::strand_perm, 3, tb3,
                                   {gen_family::sigma});
    REQUIRE(gb3.size() == 7);
    for (const auto& g : gb3)
        REQUIRE(permutation_image(g.word, perm_hom::strand_perm).is_identity());
}

TEST_CASE("generator counts match the Schreier index formula") {
    // for a prefix-closed transversal of all n! cosets over L letter families,
    // the nontrivial S-words number n!.L.(n-1) - (n! - 1)
    struct probe {
        group_tag tag;
        perm_hom hom;
        int n;
        std::vector<gen_family> letters;
    };
    std::vector<probe> probes = {
        {group_tag::UB, perm_hom::band_to_sym, 3,
         {gen_family::sigma, gen_family::tau}},
        {group_tag::UB, perm_hom::band_to_sym, 4,
         {gen_family::sigma, gen_family::tau}},
        {group_tag::VB, perm_hom::all_to_sym, 3,
         {gen_family::sigma, gen_family::rho}},
        {group_tag::B, perm_hom::strand_perm, 4, {gen_family::sigma}},
        {group_tag::T, perm_hom::band_to_sym, 4, {gen_family::tau}},
    };
    for (const auto& pr : probes) {
        auto trans = standard_transversal(pr.tag, pr.n, pr.hom);
        long long fact = 1;
        for (int i = 2; i <= pr.n; ++i) fact *= i;
        REQUIRE((long long)trans.size() == fact);
        auto gens = schreier_generators(pr.hom, pr.n, trans, pr.letters);
        long long expected =
            fact * (long long)pr.letters.size() * (pr.n - 1) - (fact - 1);
        REQUIRE((long long)gens.size() == expected);
        for (const auto& g : gens)
            REQUIRE(permutation_image(g.word, pr.hom).is_identity());
    }
}

TEST_CASE("rewriting single words") {
    auto trans = standard_transversal(group_tag::UB, 3, perm_hom::band_to_sym);

    // t1 s1^-1: one nontrivial step; the sigma letter rewrites trivially
    auto steps = rs_rewrite(uw("t1 s1^-1"), perm_hom::band_to_sym, trans);
    REQUIRE(steps.size() == 1);
    REQUIRE(steps[0] == rs_step{0, {gen_family::tau, 1}, 1});
    REQUIRE(steps[0].text() == "S[0,t1]");
    REQUIRE(rs_expand(steps, perm_hom::band_to_sym, trans).text() ==
            "t1 s1^-1");

    // empty word
    REQUIRE(rs_rewrite(uw(""), perm_hom::band_to_sym, trans).empty());

    // s1^2 in B_3: the single pure generator a(1,2)
    auto tb3 = standard_transversal(group_tag::B, 3, perm_hom::strand_perm);
    auto psteps = rs_rewrite(bw("s1^2"), perm_hom::strand_perm, tb3);
    REQUIRE(psteps.size() == 1);
    REQUIRE(psteps[0] == rs_step{1, {gen_family::sigma, 1}, 1});
    REQUIRE(rs_expand(psteps, perm_hom::strand_perm, tb3) == a_word(3, 1, 2));

    // a(1,3) in B_3 is already a kernel word; expansion telescopes back
    group_word a13 = a_word(3, 1, 3);
    auto asteps = rs_rewrite(a13, perm_hom::strand_perm, tb3);
    REQUIRE(rs_expand(asteps, perm_hom::strand_perm, tb3) == a13);

    // an inverse letter g^-1 read at u rewrites as S with the coset of u g^-1
    auto isteps = rs_rewrite(uw("s1 t1^-1"), perm_hom::band_to_sym, trans);
    REQUIRE(isteps.size() == 1);
    REQUIRE(isteps[0] == rs_step{0, {gen_family::tau, 1}, -1});
    REQUIRE(isteps[0].text() == "S[0,t1]^-1");
    REQUIRE(rs_expand(isteps, perm_hom::band_to_sym, trans).text() ==
            "s1 t1^-1");
}

TEST_CASE("rewriting round-trips on random kernel words") {
    std::mt19937 rng(77907);
    struct probe {
        group_tag tag;
        perm_hom hom;
        int n;
    };
    std::vector<probe> probes = {
        {group_tag::UB, perm_hom::band_to_sym, 3},
        {group_tag::UB, perm_hom::band_to_sym, 4},
        {group_tag::B, perm_hom::strand_perm, 3},
        {group_tag::B, perm_hom::strand_perm, 4},
        {group_tag::VB, perm_hom::all_to_sym, 3},
        {group_tag::VB, perm_hom::virt_only, 3},
        {group_tag::T, perm_hom::band_to_sym, 3},
    };
    for (const auto& pr : probes) {
        auto trans = standard_transversal(pr.tag, pr.n, pr.hom);
        for (int trial = 0; trial < 12; ++trial) {
            group_word w = random_word(rng, pr.tag, pr.n, 8);
            // close up into the kernel with the coset representative
            int coset = 0;
            {
                permutation p = permutation_image(w, pr.hom);
                detail::coset_table table(pr.hom, trans);
                coset = table.index_of(p);
            }
            group_word k = word_mul(w, trans[coset].inverse());
            auto steps = rs_rewrite(k, pr.hom, trans);
            REQUIRE(rs_expand(steps, pr.hom, trans) == k);
        }
    }
}

TEST_CASE("hand-built transversals") {
    // a valid non-standard transversal for the band kernel: tau spellings
    std::vector<group_word> alt = {uw(""),     uw("t1"),    uw("s2"),
                                   uw("t1 s2"), uw("s2 t1"), uw("t1 s2 t1")};
    auto gens = schreier_generators(perm_hom::band_to_sym, 3, alt,
                                    {gen_family::tau});
    REQUIRE(gens.size() == 9);  // 12 candidates minus the three tau tree edges
    group_word w = uw("t2 s1 t2^-1 s2 s1^-1 s2^-1");
    REQUIRE(permutation_image(w, perm_hom::band_to_sym).is_identity());
    auto steps = rs_rewrite(w, perm_hom::band_to_sym, alt);
    REQUIRE(rs_expand(steps, perm_hom::band_to_sym, alt) == w);

    // duplicate coset
    std::vector<group_word> dup = {uw(""),     uw("s1"),    uw("s2"),
                                   uw("s1 s2"), uw("s2 s1"), uw("t1 s2 t1")};
    dup.push_back(uw("t1"));
    REQUIRE_THROWS_WITH(rs_rewrite(uw(""), perm_hom::band_to_sym, dup),
                        ContainsSubstring("bad transversal"));

    // missing coset
    std::vector<group_word> missing = {uw(""), uw("s1"), uw("s2"),
                                       uw("s1 s2"), uw("s2 s1")};
    REQUIRE_THROWS_WITH(rs_rewrite(uw(""), perm_hom::band_to_sym, missing),
                        ContainsSubstring("bad transversal"));

    // identity coset must use the empty word
    std::vector<group_word> heavy = {uw("s1^2"),  uw("s1"),    uw("s2"),
                                     uw("s1 s2"), uw("s2 s1"), uw("s1 s2 s1")};
    REQUIRE_THROWS_WITH(rs_rewrite(uw(""), perm_hom::band_to_sym, heavy),
                        ContainsSubstring("bad transversal"));

    // non-kernel input
    auto trans = standard_transversal(group_tag::UB, 3, perm_hom::band_to_sym);
    REQUIRE_THROWS_WITH(rs_rewrite(uw("s1"), perm_hom::band_to_sym, trans),
                        ContainsSubstring("not in kernel"));
    REQUIRE_THROWS_WITH(rs_rewrite(uw("t2"), perm_hom::band_to_sym, trans),
                        ContainsSubstring("not in kernel"));

    // tag and strand mismatches
    REQUIRE_THROWS_AS(rs_rewrite(bw("s1^2"), perm_hom::band_to_sym, trans),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(rs_rewrite(uw("t1 s1^-1", 4), perm_hom::band_to_sym, trans),
                      std::invalid_argument);
}
