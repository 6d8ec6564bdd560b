#ifndef VBRAID_HOMS_HPP
#define VBRAID_HOMS_HPP

// Homomorphisms onto the symmetric group.
//   strand_perm  : braids, every crossing acts as its transposition
//   all_to_sym   : virtual/welded letters all act as transpositions
//   virt_only    : crossings die, only virtual/welded letters act
//   band_to_sym  : sigma and tau letters both act as transpositions

#include <stdexcept>
#include <string>

#include "vbraid/permutation.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

enum class perm_hom { strand_perm, all_to_sym, virt_only, band_to_sym };

inline std::string hom_name(perm_hom h) {
    switch (h) {
        case perm_hom::strand_perm: return "strand_perm";
        case perm_hom::all_to_sym: return "all_to_sym";
        case perm_hom::virt_only: return "virt_only";
        case perm_hom::band_to_sym: return "band_to_sym";
    }
    throw std::logic_error("unreachable");
}

inline perm_hom hom_from_name(const std::string& s) {
    if (s == "strand_perm" || s == "phiB") return perm_hom::strand_perm;
    if (s == "all_to_sym" || s == "nu") return perm_hom::all_to_sym;
    if (s == "virt_only" || s == "mu") return perm_hom::virt_only;
    if (s == "band_to_sym" || s == "piU") return perm_hom::band_to_sym;
    throw std::invalid_argument("unknown homomorphism " + s);
}

inline bool hom_applies(perm_hom h, group_tag tag) {
    switch (h) {
        case perm_hom::strand_perm: return tag == group_tag::B;
        case perm_hom::all_to_sym:
        case perm_hom::virt_only:
            return tag == group_tag::VB || tag == group_tag::WB;
        case perm_hom::band_to_sym: return tag == group_tag::UB || tag == group_tag::T;
    }
    return false;
}

// true when the letter maps to its transposition, false when it dies
inline bool hom_letter_acts(perm_hom h, gen_family f) {
    switch (h) {
        case perm_hom::strand_perm: return f == gen_family::sigma;
        case perm_hom::all_to_sym: return true;
        case perm_hom::virt_only: return f != gen_family::sigma;
        case perm_hom::band_to_sym: return true;
    }
    return false;
}

inline permutation permutation_image(const group_word& w, perm_hom h) {
    if (!hom_applies(h, w.tag()))
        throw std::invalid_argument(hom_name(h) + " does not apply to " +
                                    tag_name(w.tag()) + " words");
    permutation p = permutation::identity(w.strands());
    for (const auto& s : w.syllables()) {
        if (!hom_letter_acts(h, s.g.fam)) continue;
        if (s.exp % 2 == 0) continue;
        p = compose_then(p, permutation::transposition(w.strands(), s.g.index,
                                                       s.g.index + 1));
    }
    return p;
}

}  // namespace vbraid

#endif
