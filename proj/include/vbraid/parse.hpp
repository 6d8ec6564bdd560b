#ifndef VBRAID_PARSE_HPP
#define VBRAID_PARSE_HPP

// Word grammar: whitespace separated tokens
//   s<i>  r<i>  t<i>  al<i>        single generators
//   a(<i>,<j>)  l(<i>,<j>)  x(<i>,<j>)   derived elements, expanded in place
// each optionally followed by ^<int>. The empty string is the empty word.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vbraid/derived.hpp"
#include "vbraid/words.hpp"

namespace vbraid {

namespace detail {

inline long long parse_int(const std::string& s, const std::string& tok) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("cannot parse number in token " + tok);
    }
}

}  // namespace detail

inline group_word parse_word(const std::string& text, group_tag tag, int n) {
    group_word w(tag, n);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        long long exp = 1;
        std::string body = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            body = tok.substr(0, caret);
            exp = detail::parse_int(tok.substr(caret + 1), tok);
        }
        if (body.size() > 2 && body[1] == '(' && body.back() == ')') {
            auto comma = body.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("bad derived token " + tok);
            int i = static_cast<int>(
                detail::parse_int(body.substr(2, comma - 2), tok));
            int j = static_cast<int>(
                detail::parse_int(body.substr(comma + 1, body.size() - comma - 2), tok));
            group_word d(tag, n);
            switch (body[0]) {
                case 'a': d = a_word(n, i, j, tag); break;
                case 'l': d = lambda_word(n, i, j, tag); break;
                case 'x': d = x_word(n, i, j, tag); break;
                default: throw std::invalid_argument("unknown derived token " + tok);
            }
            w.push_word(d.pow(exp));
            continue;
        }
        gen_family fam;
        size_t digits = 0;
        if (body.rfind("al", 0) == 0) {
            fam = gen_family::alpha;
            digits = 2;
        } else if (!body.empty() && (body[0] == 's' || body[0] == 'r' || body[0] == 't')) {
            fam = body[0] == 's'   ? gen_family::sigma
                  : body[0] == 'r' ? gen_family::rho
                                   : gen_family::tau;
            digits = 1;
        } else {
            throw std::invalid_argument("unknown token " + tok);
        }
        std::string idx = body.substr(digits);
        if (idx.empty() || !std::isdigit(static_cast<unsigned char>(idx[0])))
            throw std::invalid_argument("bad generator index in token " + tok);
        w.push({fam, static_cast<int>(detail::parse_int(idx, tok))}, exp);
    }
    return w;
}

}  // namespace vbraid

#endif
