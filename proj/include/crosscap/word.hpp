#pragma once

// Words in the mapping class group generators: Dehn twists t_c about
// two-sided curves and crosscap pushing maps Y_{mu,alpha} (mu one-sided,
// alpha two-sided, meeting once).  Words are sequences of generator powers;
// reduction is free reduction (no group relations applied).

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "crosscap/errors.hpp"
#include "crosscap/surface.hpp"

namespace crosscap {

struct GeneratorSymbol {
    enum class Kind { twist, push };

    Kind kind = Kind::twist;
    CurveSymbol curve;   // twist curve, or the alpha of a pushing map
    CurveSymbol mu;      // push only

    static GeneratorSymbol twist(const SurfaceSpec& spec, CurveSymbol c) {
        validate_curve(spec, c);
        if (curve_sidedness(spec, c) != Sidedness::two_sided)
            throw validation_error("twist curve must be two-sided: " + format_curve(c));
        GeneratorSymbol g;
        g.kind = Kind::twist;
        g.curve = std::move(c);
        return g;
    }

    // alpha may be one- or two-sided; |mu ∩ alpha| = 1 is enforced at the
    // class level via the mod-2 pairing
    static GeneratorSymbol push(const SurfaceSpec& spec, CurveSymbol mu, CurveSymbol alpha) {
        validate_curve(spec, mu);
        validate_curve(spec, alpha);
        if (curve_sidedness(spec, mu) != Sidedness::one_sided)
            throw validation_error("pushing map needs a one-sided mu: " + format_curve(mu));
        if (dot(curve_class(spec, mu), curve_class(spec, alpha)) != 1)
            throw validation_error("pushing map needs |mu ∩ alpha| odd: " + format_curve(mu) +
                                   " vs " + format_curve(alpha));
        GeneratorSymbol g;
        g.kind = Kind::push;
        g.curve = std::move(alpha);
        g.mu = std::move(mu);
        return g;
    }

    // standard generators a_i = t_{alpha_i}, b = t_beta, y = Y_{mu_1,alpha_1}
    static GeneratorSymbol a(const SurfaceSpec& spec, int i) {
        return twist(spec, CurveSymbol::alpha(i));
    }
    static GeneratorSymbol b(const SurfaceSpec& spec) {
        return twist(spec, CurveSymbol::beta());
    }
    static GeneratorSymbol y(const SurfaceSpec& spec) {
        return push(spec, CurveSymbol::mu(1), CurveSymbol::alpha(1));
    }

    bool operator==(const GeneratorSymbol&) const = default;
};

struct Term {
    GeneratorSymbol gen;
    int exp = 1;

    bool operator==(const Term&) const = default;
};

struct Letter {
    GeneratorSymbol gen;
    int sign = 1;   // +1 or -1

    bool operator==(const Letter&) const = default;
};

struct Word {
    std::vector<Term> terms;

    bool operator==(const Word&) const = default;

    bool empty() const { return terms.empty(); }
};

inline Word word_of(std::vector<Term> terms) { return Word{std::move(terms)}; }

inline std::vector<Letter> letters(const Word& w) {
    std::vector<Letter> out;
    for (const Term& t : w.terms) {
        int sign = t.exp < 0 ? -1 : 1;
        int count = t.exp < 0 ? -t.exp : t.exp;
        for (int i = 0; i < count; ++i) out.push_back(Letter{t.gen, sign});
    }
    return out;
}

inline Word from_letters(const std::vector<Letter>& ls) {
    Word w;
    for (const Letter& l : ls) {
        if (!w.terms.empty() && w.terms.back().gen == l.gen &&
            ((w.terms.back().exp > 0) == (l.sign > 0))) {
            w.terms.back().exp += l.sign;
        } else {
            w.terms.push_back(Term{l.gen, l.sign});
        }
    }
    return w;
}

inline std::size_t letter_length(const Word& w) {
    std::size_t n = 0;
    for (const Term& t : w.terms) n += static_cast<std::size_t>(t.exp < 0 ? -t.exp : t.exp);
    return n;
}

// full free reduction: cancel adjacent inverse letters until stable,
// then compress runs
inline Word reduce(const Word& w) {
    std::vector<Letter> stack;
    for (const Letter& l : letters(w)) {
        if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return from_letters(stack);
}

inline Word inverse(const Word& w) {
    Word out;
    for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it)
        out.terms.push_back(Term{it->gen, -it->exp});
    return out;
}

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

inline Word power(const Word& w, int n) {
    if (n == 0) return Word{};
    Word base = n < 0 ? inverse(w) : w;
    int count = n < 0 ? -n : n;
    Word out;
    for (int i = 0; i < count; ++i) out = concat(out, base);
    return out;
}

// f w f^-1
inline Word conjugate(const Word& f, const Word& w) {
    return concat(concat(f, w), inverse(f));
}

inline std::string format_generator(const GeneratorSymbol& g) {
    if (g.kind == GeneratorSymbol::Kind::twist) {
        if (g.curve.kind == CurveSymbol::Kind::gamma) {
            const auto& idx = g.curve.indices;
            if (idx.size() == 2 && idx[1] == idx[0] + 1)
                return "a" + std::to_string(idx[0]);
            if (idx == std::vector<int>{1, 2, 3, 4}) return "b";
        }
        return "t[" + format_curve(g.curve) + "]";
    }
    if (g.mu == CurveSymbol::mu(1) && g.curve == CurveSymbol::alpha(1)) return "y";
    return "Y[" + format_curve(g.mu) + "; " + format_curve(g.curve) + "]";
}

inline std::string format_word(const Word& w) {
    if (w.terms.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.terms.size(); ++i) {
        if (i) out += ' ';
        out += format_generator(w.terms[i].gen);
        if (w.terms[i].exp != 1) out += "^" + std::to_string(w.terms[i].exp);
    }
    return out;
}

namespace detail {

struct WordToken {
    std::string text;
    std::size_t offset = 0;
};

// split on whitespace, but keep bracketed curve arguments intact
inline std::vector<WordToken> tokenize_word(const std::string& text) {
    std::vector<WordToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        int depth = 0;
        while (i < text.size()) {
            char ch = text[i];
            if (ch == '[') ++depth;
            else if (ch == ']') {
                if (depth == 0) throw parse_error("unbalanced ']'", i);
                --depth;
            } else if (std::isspace(static_cast<unsigned char>(ch)) && depth == 0) {
                break;
            }
            ++i;
        }
        if (depth != 0) throw parse_error("unterminated '['", start);
        out.push_back(WordToken{text.substr(start, i - start), start});
    }
    return out;
}

inline int parse_exponent(const std::string& tok, std::size_t caret, std::size_t offset) {
    std::string body = tok.substr(caret + 1);
    if (body.empty()) throw parse_error("empty exponent", offset + caret);
    std::size_t digits = body[0] == '-' ? 1 : 0;
    if (digits == body.size() ||
        body.find_first_not_of("0123456789", digits) != std::string::npos)
        throw parse_error("bad exponent '" + body + "'", offset + caret + 1);
    long v = std::stol(body);
    if (v == 0 || v > 1'000'000 || v < -1'000'000)
        throw parse_error("exponent out of range: " + body, offset + caret + 1);
    return static_cast<int>(v);
}

// strip trailing whitespace that the bracket tokenizer may keep
inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace detail

inline Word parse_word(const SurfaceSpec& spec, const std::string& text) {
    Word w;
    for (const auto& [tok, offset] : detail::tokenize_word(text)) {
        if (tok == "1") continue;   // identity
        // split generator body from an optional ^exp outside brackets
        std::size_t caret = std::string::npos;
        int depth = 0;
        for (std::size_t i = 0; i < tok.size(); ++i) {
            if (tok[i] == '[') ++depth;
            else if (tok[i] == ']') --depth;
            else if (tok[i] == '^' && depth == 0) {
                caret = i;
                break;
            }
        }
        std::string body = caret == std::string::npos ? tok : tok.substr(0, caret);
        int exp = caret == std::string::npos ? 1 : detail::parse_exponent(tok, caret, offset);

        GeneratorSymbol gen;
        try {
            if (body == "b") {
                gen = GeneratorSymbol::b(spec);
            } else if (body == "y") {
                gen = GeneratorSymbol::y(spec);
            } else if (body.size() >= 2 && body[0] == 'a' &&
                       body.find_first_not_of("0123456789", 1) == std::string::npos) {
                gen = GeneratorSymbol::a(spec, std::stoi(body.substr(1)));
            } else if (body.starts_with("t[") && body.ends_with("]")) {
                std::string arg = detail::trim(body.substr(2, body.size() - 3));
                gen = GeneratorSymbol::twist(spec, parse_curve(spec, arg, offset + 2));
            } else if (body.starts_with("Y[") && body.ends_with("]")) {
                std::string inner = body.substr(2, body.size() - 3);
                std::size_t semi = std::string::npos;
                int d = 0;
                for (std::size_t i = 0; i < inner.size(); ++i) {
                    if (inner[i] == '[') ++d;
                    else if (inner[i] == ']') --d;
                    else if (inner[i] == ';' && d == 0) {
                        semi = i;
                        break;
                    }
                }
                if (semi == std::string::npos)
                    throw parse_error("pushing map needs Y[mu; alpha]", offset);
                std::string mu_s = detail::trim(inner.substr(0, semi));
                std::string al_s = detail::trim(inner.substr(semi + 1));
                gen = GeneratorSymbol::push(spec, parse_curve(spec, mu_s, offset + 2),
                                            parse_curve(spec, al_s, offset + 2));
            } else {
                throw parse_error("unknown generator '" + body + "'", offset);
            }
        } catch (const parse_error&) {
            throw;
        } catch (const validation_error& e) {
            throw parse_error(std::string(e.what()), offset);
        }
        w.terms.push_back(Term{gen, exp});
    }
    return w;
}

} // namespace crosscap
