#ifndef VBRAID_SUITE_HPP
#define VBRAID_SUITE_HPP

// Claim registry for the verification suite.  Required claims must pass;
// recorded-discrepancy claims validate behavior that deliberately differs
// from a circulated description, and fail if that behavior ever changes.

#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vbraid/checks.hpp"

namespace vbraid {

enum class claim_status { pass, fail, recorded_discrepancy };

inline std::string status_name(claim_status s) {
    switch (s) {
        case claim_status::pass: return "pass";
        case claim_status::fail: return "fail";
        default: return "recorded-discrepancy";
    }
}

struct suite_entry {
    std::string claim;
    claim_status status;
    std::string details;
    double ms = 0.0;
};

struct suite_report {
    std::vector<suite_entry> entries;

    bool required_failure() const {
        for (const auto& e : entries)
            if (e.status == claim_status::fail) return true;
        return false;
    }
};

namespace detail {

struct claim_def {
    std::string id;
    bool discrepancy;
    std::function<check_result(unsigned)> run;
};

inline const std::vector<claim_def>& claim_registry() {
    using namespace checks;
    auto fixed = [](check_result (*f)()) {
        return [f](unsigned) { return f(); };
    };
    static const std::vector<claim_def> reg = {
        {"lbk-fixtures", false, fixed(&lbk_fixtures)},
        {"braid-rep-soundness", false, fixed(&braid_rep_soundness)},
        {"torsion-sweep", false, fixed(&torsion_sweep)},
        {"vb-rep-relations", false, fixed(&vb_rep_relations)},
        {"vp3-model", false, fixed(&vp3_model)},
        {"tn-oracle", false, &tn_oracle},
        {"band-kernel-witnesses", false, fixed(&band_kernel_witnesses)},
        {"theta-triangular", false, fixed(&theta_props)},
        {"rs-generators", false, fixed(&rs_schreier_list)},
        {"rs-rewriting", false, &rs_rewriting},
        {"aut-catalog", false, fixed(&aut_catalog)},
        {"fixed-point-infinite-order", false, &fixed_point_orders},
        {"mixed-slide", true, fixed(&mixed_slide_discrepancy)},
        {"forbidden-under-rep", true, fixed(&forbidden_discrepancy)},
        {"lambda-13-diagonal", true, fixed(&lambda13_discrepancy)},
        {"order-two-family", true, fixed(&order_family_survey)},
        {"phi-tilde-witness-order", true, fixed(&phi_tilde_discrepancy)},
        {"rs-schreier-list", true, fixed(&rs_discrepancy)},
        {"fixed-point-order-scope", true, fixed(&fixed_point_scope_discrepancy)},
    };
    return reg;
}

}  // namespace detail

inline std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : detail::claim_registry()) ids.push_back(c.id);
    return ids;
}

inline suite_report run_suite(const std::string& filter, unsigned seed) {
    suite_report report;
    for (const auto& c : detail::claim_registry()) {
        if (!filter.empty() && c.id.rfind(filter, 0) != 0) continue;
        auto start = std::chrono::steady_clock::now();
        check_result r = c.run(seed);
        auto stop = std::chrono::steady_clock::now();
        claim_status status =
            r.ok ? (c.discrepancy ? claim_status::recorded_discrepancy
                                  : claim_status::pass)
                 : claim_status::fail;
        report.entries.push_back(
            {c.id, status, r.details,
             std::chrono::duration<double, std::milli>(stop - start).count()});
    }
    if (report.entries.empty())
        throw std::invalid_argument("unknown claim " + filter);
    return report;
}

inline nlohmann::json json_suite(const suite_report& report, bool timings) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json row = {{"claim", e.claim},
                              {"status", status_name(e.status)},
                              {"details", e.details}};
        if (timings) row["ms"] = e.ms;
        arr.push_back(row);
    }
    return arr;
}

}  // namespace vbraid

#endif
