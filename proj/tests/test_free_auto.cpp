#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vbraid/aut_reps.hpp"
#include "vbraid/derived.hpp"
#include "vbraid/free_auto.hpp"
#include "vbraid/free_word.hpp"
#include "vbraid/homs.hpp"
#include "vbraid/parse.hpp"
#include "vbraid/presentations.hpp"

using namespace vbraid;

namespace {

free_word fw(const free_ctx& ctx, std::initializer_list<int> letters) {
    free_word w(ctx);
    for (int l : letters) w.push(l);
    return w;
}

group_word random_word(std::mt19937_64& rng, group_tag tag, int n,
                       const std::vector<gen_family>& fams, int len) {
    group_word w(tag, n);
    std::uniform_int_distribution<int> fam_pick(0, static_cast<int>(fams.size()) - 1);
    std::uniform_int_distribution<int> idx(1, n - 1);
    std::uniform_int_distribution<int> exp(0, 1);
    for (int i = 0; i < len; ++i)
        w.push({fams[static_cast<size_t>(fam_pick(rng))], idx(rng)},
               exp(rng) == 0 ? 1 : -1);
    return w;
}

// composition of +/-1 powers of basis conjugations, leftmost applied first
free_auto eps_chain(int n, const std::vector<std::array<int, 3>>& steps) {
    free_auto acc = free_auto::identity(rank_ctx(n));
    for (const auto& s : steps) {
        free_auto e = eps_auto(n, s[0], s[1]);
        acc = compose(acc, s[2] >= 0 ? e : e.inverse());
    }
    return acc;
}

}  // namespace

TEST_CASE("free words reduce as they grow") {
    auto ctx = rank_ctx(3);

    free_word w(ctx);
    CHECK(w.text() == "1");
    w.push(1);
    w.push(2);
    w.push(-2);
    w.push(-1);
    CHECK(w.text() == "1");

    free_word v = fw(ctx, {1, 2, 2, -1});
    CHECK(v.text() == "x1 x2^2 x1^-1");
    CHECK(v.inverse().text() == "x1 x2^-2 x1^-1");
    CHECK(fw_mul(v, v.inverse()).text() == "1");
    CHECK(v.pow(0).text() == "1");
    CHECK(v.pow(2).text() == "x1 x2^4 x1^-1");
    CHECK(v.pow(-1) == v.inverse());

    CHECK(conjugated(free_word::gen(ctx, 2), free_word::gen(ctx, 1)).text() ==
          "x1^-1 x2 x1");

    // deleting x2 collapses the sandwich
    auto ctx2 = rank_ctx(2);
    free_word m = fw(ctx, {1, 2, -1, -2, 1});
    CHECK(m.map_letters(ctx2, [](int k) { return k == 2 ? 0 : k; }).text() == "x1");

    CHECK_THROWS_AS(free_word::gen(ctx, 4), std::invalid_argument);
    CHECK_THROWS_AS(free_word::gen(ctx, 0), std::invalid_argument);
}

TEST_CASE("automorphism certificates are enforced") {
    auto ctx = rank_ctx(2);
    auto x = [&](std::initializer_list<int> ls) { return fw(ctx, ls); };

    // x1 -> x1 x2, x2 -> x2 with the true inverse
    free_auto a = free_auto::from_images(ctx, {x({1, 2}), x({2})}, {x({1, -2}), x({2})});
    CHECK(a.apply(x({1})).text() == "x1 x2");
    CHECK(a.apply_inverse(x({1})).text() == "x1 x2^-1");
    CHECK(compose(a, a.inverse()).is_identity());
    CHECK(a.pow(3).apply(x({1})).text() == "x1 x2^3");
    CHECK(a.pow(-2).apply(x({1})).text() == "x1 x2^-2");

    // wrong inverse images are rejected outright
    CHECK_THROWS_AS(
        free_auto::from_images(ctx, {x({1, 2}), x({2})}, {x({1, 2}), x({2})}),
        std::invalid_argument);
    // endomorphism that is not onto: x1 -> x1 x2^... cannot fake a certificate
    CHECK_THROWS_AS(free_auto::from_images(ctx, {x({1}), x({1})}, {x({1}), x({1})}),
                    std::invalid_argument);

    // composition applies left argument first
    free_auto b = free_auto::from_images(ctx, {x({2}), x({1})}, {x({2}), x({1})});
    CHECK(compose(a, b).apply(x({1})).text() == "x2 x1");
    CHECK(compose(b, a).apply(x({1})).text() == "x2");
}

TEST_CASE("conjugating automorphisms are recognized") {
    auto ctx = rank_ctx(3);
    auto x = [&](std::initializer_list<int> ls) { return fw(ctx, ls); };

    free_auto a = free_auto::from_images(
        ctx, {x({1, 2, -1}), x({1}), x({3})}, {x({2}), x({-2, 1, 2}), x({3})});
    auto rec = is_conjugating(a);
    REQUIRE(rec.has_value());
    CHECK(rec->first == permutation::transposition(3, 1, 2));
    CHECK(rec->second[0].text() == "x1^-1");
    CHECK(rec->second[1].text() == "1");

    // x1 -> x1 x2 is not a conjugate of a generator
    free_auto b = free_auto::from_images(
        ctx, {x({1, 2}), x({2}), x({3})}, {x({1, -2}), x({2}), x({3})});
    CHECK_FALSE(is_conjugating(b).has_value());
}

TEST_CASE("crossing action on the free group") {
    auto s1 = letter(group_tag::B, 3, gen_family::sigma, 1);

    free_auto a = rep_auto(aut_rep_id::artin(), 3, s1);
    CHECK(a.apply(free_word::gen(a.ctx(), 1)).text() == "x1 x2 x1^-1");
    CHECK(a.apply(free_word::gen(a.ctx(), 2)).text() == "x1");
    CHECK(a.apply(free_word::gen(a.ctx(), 3)).text() == "x3");

    // the square sends the second letter into a conjugate
    free_auto sq = rep_auto(aut_rep_id::artin(), 3, word_mul(s1, s1));
    CHECK(sq.apply(free_word::gen(sq.ctx(), 2)).text() == "x1 x2 x1^-1");
    CHECK(sq.apply(free_word::gen(sq.ctx(), 1)).text() == "x1 x2 x1 x2^-1 x1^-1");

    CHECK(rep_auto(aut_rep_id::artin(), 3, word_mul(s1, s1.inverse())).is_identity());

    for (int n = 3; n <= 5; ++n)
        for (const auto& rel : relation_instances("braid", n)) {
            INFO(rel.label);
            CHECK(rep_auto(aut_rep_id::artin(), n, rel.lhs) ==
                  rep_auto(aut_rep_id::artin(), n, rel.rhs));
        }
}

TEST_CASE("crossing images are conjugating with the strand permutation") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        group_word w = random_word(rng, group_tag::B, n, {gen_family::sigma}, 12);
        auto rec = is_conjugating(rep_auto(aut_rep_id::artin(), n, w));
        REQUIRE(rec.has_value());
        CHECK(rec->first == permutation_image(w, perm_hom::strand_perm));
    }
}

TEST_CASE("basis conjugation automorphisms") {
    free_auto e12 = eps_auto(3, 1, 2);
    CHECK(e12.apply(free_word::gen(e12.ctx(), 1)).text() == "x2^-1 x1 x2");
    CHECK(e12.apply(free_word::gen(e12.ctx(), 2)).text() == "x2");
    CHECK(e12.inverse().apply(free_word::gen(e12.ctx(), 1)).text() == "x2 x1 x2^-1");

    // disjoint pairs commute, overlapping ones need not
    CHECK(compose(eps_auto(4, 1, 2), eps_auto(4, 3, 4)) ==
          compose(eps_auto(4, 3, 4), eps_auto(4, 1, 2)));
    CHECK(compose(eps_auto(3, 1, 2), eps_auto(3, 2, 3)) !=
          compose(eps_auto(3, 2, 3), eps_auto(3, 1, 2)));

    CHECK_THROWS_AS(eps_auto(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(eps_auto(3, 1, 4), std::invalid_argument);

    // the crossing-and-swap words written for eps reproduce exactly these
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                INFO("n=" << n << " i=" << i << " j=" << j);
                CHECK(rep_auto(aut_rep_id::welded(), n, eps_word(n, i, j)) ==
                      eps_auto(n, i, j));
            }
}

TEST_CASE("band generators acting through basis conjugations") {
    // phi_1 on t1 t2 drags x1 through both conjugations
    group_word t1t2 = parse_word("t1 t2", group_tag::T, 3);
    free_auto p = rep_auto(aut_rep_id::phi(1), 3, t1t2);
    CHECK(p.apply(free_word::gen(p.ctx(), 1)).text() == "x3^-1 x2^-1 x3 x1 x3^-1 x2 x3");

    // psi_{k,l} image formulas on two strands
    auto ctx2 = rank_ctx(2);
    for (long long k = -2; k <= 2; ++k)
        for (long long l = -2; l <= 2; ++l) {
            free_auto b = rep_auto(aut_rep_id::psi(k, l), 2,
                                   letter(group_tag::T, 2, gen_family::tau, 1));
            free_word ex1(ctx2);  // x1^-l x2^-k x1 x2^k x1^l
            ex1.push_power(1, -l);
            ex1.push_power(2, -k);
            ex1.push_power(1, 1);
            ex1.push_power(2, k);
            ex1.push_power(1, l);
            free_word ex2(ctx2);  // x1^-l x2 x1^l
            ex2.push_power(1, -l);
            ex2.push_power(2, 1);
            ex2.push_power(1, l);
            CHECK(b.apply(free_word::gen(ctx2, 1)) == ex1);
            CHECK(b.apply(free_word::gen(ctx2, 2)) == ex2);
        }

    // psi_{k,0} collapses to phi_k
    std::mt19937_64 rng(77);
    for (long long k = -2; k <= 2; ++k)
        for (int trial = 0; trial < 5; ++trial) {
            int n = 3 + static_cast<int>(rng() % 2);
            group_word w = random_word(rng, group_tag::T, n, {gen_family::tau}, 10);
            CHECK(rep_auto(aut_rep_id::psi(k, 0), n, w) ==
                  rep_auto(aut_rep_id::phi(k), n, w));
        }

    // distant band generators commute under both actions
    for (int n = 4; n <= 5; ++n)
        for (const auto& rel : relation_instances("tn-comm", n)) {
            INFO(rel.label);
            CHECK(rep_auto(aut_rep_id::phi(2), n, rel.lhs) ==
                  rep_auto(aut_rep_id::phi(2), n, rel.rhs));
            CHECK(rep_auto(aut_rep_id::psi(1, -2), n, rel.lhs) ==
                  rep_auto(aut_rep_id::psi(1, -2), n, rel.rhs));
        }
}

TEST_CASE("welded relations hold as automorphisms") {
    for (int n = 3; n <= 5; ++n) {
        for (const char* pres : {"braid", "rho-symmetric", "wb-mixed",
                                 "wb-mixed-mirror"})
            for (const auto& rel : relation_instances(pres, n)) {
                INFO(pres << " " << rel.label);
                REQUIRE(rel.asserted_equal);
                CHECK(rep_auto(aut_rep_id::welded(), n, rel.lhs) ==
                      rep_auto(aut_rep_id::welded(), n, rel.rhs));
            }
        for (const auto& rel : relation_instances("welded-forbidden", n)) {
            INFO(rel.label);
            REQUIRE_FALSE(rel.asserted_equal);
            CHECK(rep_auto(aut_rep_id::welded(), n, rel.lhs) !=
                  rep_auto(aut_rep_id::welded(), n, rel.rhs));
        }
    }
}

TEST_CASE("conjugation relations between the basis automorphisms") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& rel : relation_instances("mccool", n)) {
            INFO(rel.label);
            CHECK(rep_auto(aut_rep_id::welded(), n, rel.lhs) ==
                  rep_auto(aut_rep_id::welded(), n, rel.rhs));
        }
}

TEST_CASE("pure crossing squares through two conjugation routes") {
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                INFO("n=" << n << " i=" << i << " j=" << j);
                free_auto target = rep_auto(aut_rep_id::artin(), n, a_word(n, i, j));

                std::vector<std::array<int, 3>> r1;
                for (int m = j - 1; m >= i + 1; --m) r1.push_back({m, i, 1});
                r1.push_back({i, j, -1});
                r1.push_back({j, i, -1});
                for (int m = i + 1; m <= j - 1; ++m) r1.push_back({m, i, -1});
                CHECK(eps_chain(n, r1) == target);

                std::vector<std::array<int, 3>> r2;
                for (int m = j - 1; m >= i + 1; --m) r2.push_back({m, j, -1});
                r2.push_back({i, j, -1});
                r2.push_back({j, i, -1});
                for (int m = i + 1; m <= j - 1; ++m) r2.push_back({m, j, 1});
                CHECK(eps_chain(n, r2) == target);
            }
}

TEST_CASE("tail letter action and its kernel witness") {
    auto t1 = letter(group_tag::T, 4, gen_family::tau, 1);
    free_auto x1 = rep_auto(aut_rep_id::xi(), 4, t1);
    CHECK(x1.apply(free_word::gen(x1.ctx(), 1)).text() == "x1 u1");
    CHECK(x1.apply(free_word::gen(x1.ctx(), 2)).text() == "x2 v1");
    CHECK(x1.apply(free_word::gen(x1.ctx(), 3)).text() == "x3");
    CHECK(x1.inverse().apply(free_word::gen(x1.ctx(), 1)).text() == "x1 u1^-1");
    CHECK_FALSE(is_conjugating(x1).has_value());

    for (const auto& rel : relation_instances("tn-comm", 4)) {
        INFO(rel.label);
        CHECK(rep_auto(aut_rep_id::xi(), 4, rel.lhs) ==
              rep_auto(aut_rep_id::xi(), 4, rel.rhs));
    }

    // this word dies under the tail letter action but not under phi_1
    group_word w = parse_word("t1 t2 t3 t2^-1 t1^-1 t2 t3^-1 t2^-1", group_tag::T, 4);
    CHECK(rep_auto(aut_rep_id::xi(), 4, w).is_identity());
    CHECK_FALSE(rep_auto(aut_rep_id::phi(1), 4, w).is_identity());
}

TEST_CASE("mixed crossing band representations") {
    for (int n = 3; n <= 4; ++n)
        for (const char* pres : {"braid", "ub-mixed"})
            for (const auto& rel : relation_instances(pres, n)) {
                INFO(pres << " " << rel.label);
                CHECK(rep_auto(aut_rep_id::phi_tilde(2), n, rel.lhs) ==
                      rep_auto(aut_rep_id::phi_tilde(2), n, rel.rhs));
                CHECK(rep_auto(aut_rep_id::psi_tilde(1, -1), n, rel.lhs) ==
                      rep_auto(aut_rep_id::psi_tilde(1, -1), n, rel.rhs));
                CHECK(rep_auto(aut_rep_id::psi_big(1, 2), n, rel.lhs) ==
                      rep_auto(aut_rep_id::psi_big(1, 2), n, rel.rhs));
            }

    // kernel witness family for phi_tilde: the braid relator in the blocks
    // tau_i^k sigma_i dies for every k, because those blocks satisfy the
    // braid relation as automorphisms; with the letters of each block
    // reversed (sigma first) the relator survives for k != 0
    for (long long k = -2; k <= 2; ++k) {
        group_word tau_first(group_tag::UB, 3);
        group_word sigma_first(group_tag::UB, 3);
        auto block = [](group_word& w, int i, long long k2, bool tau_lead) {
            if (tau_lead) {
                w.push({gen_family::tau, i}, k2);
                w.push({gen_family::sigma, i}, 1);
            } else {
                w.push({gen_family::sigma, i}, 1);
                w.push({gen_family::tau, i}, k2);
            }
        };
        for (group_word* w : {&tau_first, &sigma_first}) {
            bool lead = w == &tau_first;
            block(*w, 1, k, lead);
            block(*w, 2, k, lead);
            block(*w, 1, k, lead);
            group_word tail(group_tag::UB, 3);
            block(tail, 2, k, lead);
            block(tail, 1, k, lead);
            block(tail, 2, k, lead);
            w->push_word(tail.inverse());
        }
        INFO("k=" << k);
        CHECK(rep_auto(aut_rep_id::phi_tilde(k), 3, tau_first).is_identity());
        CHECK(rep_auto(aut_rep_id::phi_tilde(k), 3, sigma_first).is_identity() ==
              (k == 0));
    }
}

TEST_CASE("extended representation projects onto the plain one") {
    std::mt19937_64 rng(4242);
    for (long long k = -2; k <= 2; ++k)
        for (long long l = -2; l <= 2; ++l) {
            int n = 3;
            aut_rep_id big = aut_rep_id::psi_big(k, l);
            aut_rep_id small = aut_rep_id::psi_tilde(k, l);
            auto ctxn = rank_ctx(n);
            auto drop_y = [n](int g) { return g == n + 1 ? 0 : g; };

            std::vector<group_word> probes;
            for (int i = 1; i < n; ++i) {
                probes.push_back(letter(group_tag::UB, n, gen_family::sigma, i));
                probes.push_back(letter(group_tag::UB, n, gen_family::tau, i));
            }
            probes.push_back(random_word(rng, group_tag::UB, n,
                                         {gen_family::sigma, gen_family::tau}, 8));
            for (const auto& w : probes) {
                free_auto bigim = rep_auto(big, n, w);
                free_auto smallim = rep_auto(small, n, w);
                for (int g = 1; g <= n; ++g) {
                    INFO("k=" << k << " l=" << l << " word=" << w.text()
                              << " generator=" << g);
                    CHECK(bigim.apply(free_word::gen(bigim.ctx(), g))
                              .map_letters(ctxn, drop_y) ==
                          smallim.apply(free_word::gen(ctxn, g)));
                }
            }
        }
}

TEST_CASE("representation legality") {
    auto r1 = letter(group_tag::VB, 3, gen_family::rho, 1);
    CHECK_THROWS_AS(rep_auto(aut_rep_id::artin(), 3, r1), std::invalid_argument);
    auto t1 = letter(group_tag::UB, 3, gen_family::tau, 1);
    CHECK_THROWS_AS(rep_auto(aut_rep_id::welded(), 3, t1), std::invalid_argument);
    CHECK_THROWS_AS(rep_auto(aut_rep_id::phi(1), 3,
                             letter(group_tag::UB, 3, gen_family::sigma, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(rep_auto(aut_rep_id::artin(), 4,
                             letter(group_tag::B, 3, gen_family::sigma, 1)),
                    std::invalid_argument);
    // eps names one automorphism; feeding it a word is an error
    CHECK_THROWS_AS(rep_auto(aut_rep_id::eps(1, 2), 3,
                             letter(group_tag::B, 3, gen_family::sigma, 1)),
                    std::invalid_argument);
    CHECK(rep_auto(aut_rep_id::eps(1, 2), 3, group_word(group_tag::B, 3)) ==
          eps_auto(3, 1, 2));
}
