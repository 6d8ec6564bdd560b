// Command-line front end: evaluate representations on words, query orders,
// run the claim suite, and emit text or JSON reports.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vbraid/json_io.hpp"
#include "vbraid/suite.hpp"

namespace {

using namespace vbraid;

gen_family family_from_name(const std::string& s) {
    if (s == "sigma") return gen_family::sigma;
    if (s == "rho") return gen_family::rho;
    if (s == "tau") return gen_family::tau;
    if (s == "alpha") return gen_family::alpha;
    throw std::invalid_argument("unknown letter family: " + s);
}

group_tag default_group(matrix_rep rep) {
    switch (rep) {
        case matrix_rep::lbk:
        case matrix_rep::psi1t: return group_tag::B;
        case matrix_rep::psiv: return group_tag::VB;
        case matrix_rep::theta: return group_tag::T;
    }
    throw std::logic_error("default_group");
}

perm_hom default_hom(group_tag tag) {
    switch (tag) {
        case group_tag::B: return perm_hom::strand_perm;
        case group_tag::VB:
        case group_tag::WB: return perm_hom::all_to_sym;
        case group_tag::UB:
        case group_tag::T: return perm_hom::band_to_sym;
        default:
            throw std::invalid_argument("no canonical permutation map for " +
                                        tag_name(tag));
    }
}

// value grammar for --specialize rhs: 1, -1, a variable, or variable^int
laurent_poly parse_value(const ring_ctx& R, const std::string& s) {
    if (s == "1") return laurent_poly::one(R);
    if (s == "-1") return laurent_poly::constant(R, -1);
    auto caret = s.find('^');
    if (caret == std::string::npos) return laurent_poly::var(R, s);
    return laurent_poly::var(R, s.substr(0, caret),
                             std::stoi(s.substr(caret + 1)));
}

std::map<std::string, laurent_poly> parse_specialize(
    const ring_ctx& R, const std::vector<std::string>& entries) {
    std::map<std::string, laurent_poly> out;
    for (const auto& e : entries) {
        auto eq = e.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--specialize expects var=value, got " +
                                        e);
        out.insert_or_assign(e.substr(0, eq),
                             parse_value(R, e.substr(eq + 1)));
    }
    return out;
}

struct cli_state {
    int strands = 3;
    std::string group;
    bool json = false;
    unsigned seed = 7;

    group_tag tag_or(group_tag fallback) const {
        return group.empty() ? fallback : tag_from_name(group);
    }
};

void print_auto(const free_auto& a, bool json) {
    if (json) {
        std::cout << json_auto(a).dump(2) << "\n";
        return;
    }
    const auto& names = *a.ctx();
    for (std::size_t i = 0; i < names.size(); ++i)
        std::cout << names[i] << " -> " << a.images()[i].text() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"braid, virtual braid, and crystallographic quotient tool"};
    app.require_subcommand(1);
    cli_state st;
    app.add_option("--strands", st.strands, "number of strands")
        ->capture_default_str();
    app.add_option("--group", st.group, "word group: B, VB, WB, UB, T, S");
    app.add_flag("--json", st.json, "emit JSON instead of text");
    app.add_option("--seed", st.seed, "seed for randomized checks")
        ->capture_default_str();

    // matrix --rep lbk "s1 s2^-1" [--specialize q=1 ...]
    auto* matrix = app.add_subcommand("matrix", "matrix image of a word");
    std::string matrix_rep_name, matrix_word;
    std::vector<std::string> matrix_subs;
    matrix->add_option("--rep", matrix_rep_name, "lbk, psi1t, PsiV, or theta")
        ->required();
    matrix->add_option("word", matrix_word, "word to evaluate")->required();
    matrix->add_option("--specialize", matrix_subs,
                       "substitution var=value, repeatable");
    matrix->callback([&] {
        matrix_rep rep = rep_from_name(matrix_rep_name);
        group_word w = parse_word(matrix_word, st.tag_or(default_group(rep)),
                                  st.strands);
        poly_matrix m = rep_matrix(rep, st.strands, w);
        if (!matrix_subs.empty())
            m = m.substitute(completed_substitution(
                m.ring, parse_specialize(m.ring, matrix_subs)));
        if (st.json)
            std::cout << json_matrix(m).dump(2) << "\n";
        else
            std::cout << m.diag_text() << "\n";
    });

    // order --rep psi1t "a(1,2) s1 s2"
    auto* order = app.add_subcommand("order", "order of a word's matrix image");
    std::string order_rep_name = "psi1t", order_word;
    order->add_option("--rep", order_rep_name, "psi1t or PsiV")
        ->capture_default_str();
    order->add_option("word", order_word, "word to evaluate")->required();
    order->callback([&] {
        matrix_rep rep = rep_from_name(order_rep_name);
        group_word w = parse_word(order_word, st.tag_or(default_group(rep)),
                                  st.strands);
        order_result o = element_order(rep, st.strands, w);
        if (st.json)
            std::cout << json_order(o).dump(2) << "\n";
        else
            std::cout << o.text() << "\n";
    });

    // equal --rep psi1t "s1 s2 s1" "s2 s1 s2"
    auto* equal = app.add_subcommand(
        "equal", "compare two words in the crystallographic quotient");
    std::string equal_rep_name = "psi1t", equal_lhs, equal_rhs;
    equal->add_option("--rep", equal_rep_name, "psi1t or PsiV")
        ->capture_default_str();
    equal->add_option("lhs", equal_lhs, "first word")->required();
    equal->add_option("rhs", equal_rhs, "second word")->required();
    equal->callback([&] {
        matrix_rep rep = rep_from_name(equal_rep_name);
        group_tag tag = st.tag_or(default_group(rep));
        bool same = quotient_equal(rep, st.strands,
                                   parse_word(equal_lhs, tag, st.strands),
                                   parse_word(equal_rhs, tag, st.strands));
        if (st.json)
            std::cout << nlohmann::json{{"equal", same}}.dump(2) << "\n";
        else
            std::cout << (same ? "equal" : "different") << "\n";
    });

    // verify --pres braid --rep psi1t [--specialize t2=t1 ...]
    auto* verify =
        app.add_subcommand("verify", "check a relation family under a matrix "
                                     "representation");
    std::string verify_pres, verify_rep_name;
    std::vector<std::string> verify_subs;
    verify->add_option("--pres", verify_pres, "relation family name")
        ->required();
    verify->add_option("--rep", verify_rep_name, "matrix representation")
        ->required();
    verify->add_option("--specialize", verify_subs,
                       "substitution var=value, repeatable");
    verify->callback([&] {
        matrix_rep rep = rep_from_name(verify_rep_name);
        ring_ctx R = rep_ring(rep, st.strands);
        auto report = relation_report(verify_pres, rep, st.strands,
                                      parse_specialize(R, verify_subs));
        if (st.json) {
            std::cout << json_relation_report(report).dump(2) << "\n";
        } else {
            for (const auto& o : report) {
                std::cout << o.label << ": " << (o.holds ? "holds" : "FAILS");
                if (!o.holds && !o.witness.empty())
                    std::cout << " (" << o.witness << ")";
                std::cout << "\n";
            }
        }
        for (const auto& o : report)
            if (!o.holds) throw CLI::RuntimeError(1);
    });

    // auto phi --k 1 "t1 t2"   /   auto eps --i 1 --j 2
    auto* aut = app.add_subcommand(
        "auto", "free-group automorphism image of a word");
    std::string aut_name, aut_word;
    long long aut_k = 1, aut_l = 1;
    int aut_i = 1, aut_j = 2;
    aut->add_option("rep", aut_name,
                    "artin, welded, eps, phi, psi, xi, phi_tilde, psi_tilde, "
                    "or psi_big")
        ->required();
    aut->add_option("word", aut_word, "word to evaluate (eps takes none)");
    aut->add_option("--k", aut_k, "first twist parameter")
        ->capture_default_str();
    aut->add_option("--l", aut_l, "second twist parameter")
        ->capture_default_str();
    aut->add_option("--i", aut_i, "eps source index")->capture_default_str();
    aut->add_option("--j", aut_j, "eps target index")->capture_default_str();
    aut->callback([&] {
        int n = st.strands;
        if (aut_name == "eps") {
            if (!aut_word.empty())
                throw std::invalid_argument(
                    "eps is a single automorphism and takes no word");
            print_auto(eps_auto(n, aut_i, aut_j), st.json);
            return;
        }
        aut_rep_id rep = [&] {
            if (aut_name == "artin") return aut_rep_id::artin();
            if (aut_name == "welded") return aut_rep_id::welded();
            if (aut_name == "phi") return aut_rep_id::phi(aut_k);
            if (aut_name == "psi") return aut_rep_id::psi(aut_k, aut_l);
            if (aut_name == "xi") return aut_rep_id::xi();
            if (aut_name == "phi_tilde") return aut_rep_id::phi_tilde(aut_k);
            if (aut_name == "psi_tilde")
                return aut_rep_id::psi_tilde(aut_k, aut_l);
            if (aut_name == "psi_big") return aut_rep_id::psi_big(aut_k, aut_l);
            throw std::invalid_argument("unknown automorphism family: " +
                                        aut_name);
        }();
        group_tag fallback = group_tag::T;
        if (aut_name == "artin") fallback = group_tag::B;
        if (aut_name == "welded") fallback = group_tag::WB;
        if (aut_name.rfind("phi_t", 0) == 0 || aut_name.rfind("psi_t", 0) == 0 ||
            aut_name == "psi_big")
            fallback = group_tag::UB;
        group_word w = parse_word(aut_word, st.tag_or(fallback), n);
        print_auto(rep_auto(rep, n, w), st.json);
    });

    // tnf "t1 t2 t1^-1"
    auto* tnf = app.add_subcommand(
        "tnf", "normal form in the band commutation quotient");
    std::string tnf_word;
    tnf->add_option("word", tnf_word, "word over tau letters")->required();
    tnf->callback([&] {
        group_word w = parse_word(tnf_word, st.tag_or(group_tag::T),
                                  st.strands);
        group_word nf = tn_normal_form(w, st.strands);
        auto support = tn_min_support(w, st.strands);
        if (st.json) {
            nlohmann::json row = {{"normal-form", nf.text()},
                                  {"trivial", nf.empty()}};
            if (support) row["min-support"] = *support;
            std::cout << row.dump(2) << "\n";
        } else {
            std::cout << (nf.empty() ? "1" : nf.text()) << "\n";
            if (support)
                std::cout << "min support: x" << *support << "\n";
        }
    });

    // vp3 --check   /   vp3 --word "l(1,2) l(2,1)^-1"
    auto* vp3 = app.add_subcommand(
        "vp3", "rank-3 virtual pure braid model");
    bool vp3_do_check = false;
    std::string vp3_word;
    vp3->add_flag("--check", vp3_do_check, "verify the defining relations");
    vp3->add_option("--word", vp3_word, "product of l(i,j) letters");
    vp3->callback([&] {
        if (vp3_do_check != vp3_word.empty())
            throw std::invalid_argument("pass exactly one of --check or --word");
        if (vp3_do_check) {
            auto results = verify_vp3_relations();
            bool all = true;
            if (st.json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& c : results) {
                    arr.push_back({{"label", c.label}, {"ok", c.ok}});
                    all = all && c.ok;
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& c : results) {
                    std::cout << c.label << ": " << (c.ok ? "ok" : "FAILS")
                              << "\n";
                    all = all && c.ok;
                }
            }
            if (!all) throw CLI::RuntimeError(1);
            return;
        }
        fp_element e = vp3_eval(parse_lambda_word(vp3_word));
        if (st.json)
            std::cout << nlohmann::json{{"element", e.text()},
                                        {"trivial", e.is_identity()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << e.text() << "\n";
    });

    // rs [--hom band_to_sym] [--letters tau] [--word "t1 s1^-1"]
    auto* rs = app.add_subcommand(
        "rs", "coset transversal, subgroup generators, and rewriting");
    std::string rs_hom_name, rs_word;
    std::vector<std::string> rs_letters;
    rs->add_option("--hom", rs_hom_name,
                   "permutation map (defaults to the group's canonical one)");
    rs->add_option("--letters", rs_letters,
                   "letter families for generator listing, repeatable");
    rs->add_option("--word", rs_word, "kernel word to rewrite");
    rs->callback([&] {
        group_tag tag = st.tag_or(group_tag::B);
        perm_hom h = rs_hom_name.empty() ? default_hom(tag)
                                         : hom_from_name(rs_hom_name);
        auto transversal = standard_transversal(tag, st.strands, h);
        if (!rs_word.empty()) {
            group_word w = parse_word(rs_word, tag, st.strands);
            auto steps = rs_rewrite(w, h, transversal);
            group_word expansion = rs_expand(steps, h, transversal);
            if (st.json) {
                nlohmann::json row = {{"steps", json_rs_steps(steps)},
                                      {"expansion", expansion.text()}};
                std::cout << row.dump(2) << "\n";
            } else {
                for (const auto& s : steps) std::cout << s.text() << "\n";
                std::cout << "expansion: "
                          << (expansion.empty() ? "1" : expansion.text())
                          << "\n";
            }
            return;
        }
        std::vector<gen_family> fams;
        for (const auto& s : rs_letters) fams.push_back(family_from_name(s));
        if (fams.empty())
            for (gen_family f : {gen_family::sigma, gen_family::rho,
                                 gen_family::tau, gen_family::alpha})
                if (family_legal(tag, f)) fams.push_back(f);
        auto gens = schreier_generators(h, st.strands, transversal, fams);
        if (st.json) {
            std::cout << json_schreier(gens).dump(2) << "\n";
        } else {
            for (const auto& g : gens)
                std::cout << g.label << " = " << g.word.text() << "\n";
        }
    });

    // suite [--filter rs] [--timings]
    auto* suite = app.add_subcommand("suite", "run the verification claims");
    std::string suite_filter;
    bool suite_timings = false;
    suite->add_option("--filter", suite_filter, "claim-id prefix");
    suite->add_flag("--timings", suite_timings,
                    "include per-claim runtimes (non-deterministic output)");
    suite->callback([&] {
        suite_report report = run_suite(suite_filter, st.seed);
        if (st.json) {
            std::cout << json_suite(report, suite_timings).dump(2) << "\n";
        } else {
            for (const auto& e : report.entries) {
                std::cout << e.claim << ": " << status_name(e.status) << " - "
                          << e.details;
                if (suite_timings)
                    std::cout << " [" << e.ms << "ms]";
                std::cout << "\n";
            }
        }
        if (report.required_failure()) throw CLI::RuntimeError(1);
    });

    for (CLI::App* sub :
         {matrix, order, equal, verify, aut, tnf, vp3, rs, suite})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
