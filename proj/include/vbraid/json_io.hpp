#ifndef VBRAID_JSON_IO_HPP
#define VBRAID_JSON_IO_HPP

// JSON encodings for the value types.  A polynomial is a term list; each
// term carries its coefficient under "c" (a number when it fits 64 bits,
// otherwise a decimal string) and its nonzero exponents under "e".  Object
// keys serialize sorted, so output is deterministic.

#include <json.hpp>

#include "vbraid/free_auto.hpp"
#include "vbraid/matrix_reps.hpp"
#include "vbraid/rs.hpp"

namespace vbraid {

inline nlohmann::json json_poly(const laurent_poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    const auto& names = *p.ring();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        if (c.fits_int64())
            t["c"] = c.to_int64();
        else
            t["c"] = c.to_string();
        nlohmann::json ex = nlohmann::json::object();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (e[i] != 0) ex[names[i]] = e[i];
        t["e"] = ex;
        terms.push_back(std::move(t));
    }
    return terms;
}

inline nlohmann::json json_matrix(const poly_matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(json_poly(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"dim", m.dim()}, {"basis", m.basis}, {"rows", std::move(rows)}};
}

inline nlohmann::json json_order(const order_result& o) {
    nlohmann::json j{{"finite", o.finite}};
    if (o.finite) j["order"] = o.order;
    return j;
}

inline nlohmann::json json_word(const group_word& w) {
    return {{"group", tag_name(w.tag())},
            {"strands", w.strands()},
            {"word", w.text()}};
}

inline nlohmann::json json_auto(const free_auto& a) {
    nlohmann::json images = nlohmann::json::array();
    const auto& names = *a.ctx();
    for (std::size_t k = 0; k < names.size(); ++k)
        images.push_back({{"gen", names[k]}, {"to", a.images()[k].text()}});
    return {{"rank", names.size()}, {"images", std::move(images)}};
}

inline nlohmann::json json_relation_report(
    const std::vector<relation_outcome>& rep) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& o : rep) {
        nlohmann::json e{{"label", o.label},
                         {"asserted-equal", o.asserted_equal},
                         {"images-equal", o.images_equal},
                         {"holds", o.holds}};
        if (!o.witness.empty()) e["witness"] = o.witness;
        j.push_back(std::move(e));
    }
    return j;
}

inline nlohmann::json json_rs_steps(const std::vector<rs_step>& steps) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : steps)
        j.push_back({{"coset", s.coset}, {"letter", s.g.text()}, {"sign", s.sign}});
    return j;
}

inline nlohmann::json json_schreier(const std::vector<schreier_gen>& gens) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& g : gens)
        j.push_back({{"label", g.label}, {"word", g.word.text()}});
    return j;
}

}  // namespace vbraid

#endif
