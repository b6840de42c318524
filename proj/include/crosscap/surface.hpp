#pragma once

// Symbolic curves on a nonorientable surface N_{g,n} (g crosscaps, n <= 1
// boundary components).  Curves are names plus a Z_2 homology class; no
// isotopy-level geometry is modeled.  A curve gamma_{i_1,...,i_k} passes
// once through each listed crosscap, so its class is the sum of the basis
// vectors e_{i_j}, and it is one-sided exactly when k is odd.

#include <algorithm>
#include <string>
#include <vector>

#include "crosscap/errors.hpp"
#include "crosscap/gf2.hpp"

namespace crosscap {

struct SurfaceSpec {
    int genus = 0;
    int boundary = 0;

    static SurfaceSpec make(int genus, int boundary) {
        if (genus < 1 || genus > 64)
            throw validation_error("genus must be in [1,64], got " + std::to_string(genus));
        if (boundary != 0 && boundary != 1)
            throw validation_error("boundary count must be 0 or 1, got " + std::to_string(boundary));
        return SurfaceSpec{genus, boundary};
    }

    bool operator==(const SurfaceSpec&) const = default;
};

enum class Sidedness { one_sided, two_sided };

enum class ChainPart { whole, d1, d2 };

struct CurveSymbol {
    enum class Kind { gamma, gamma_prime, chain_boundary, declared };

    Kind kind = Kind::gamma;
    std::vector<int> indices;        // gamma, gamma_prime
    int lo = 0, hi = 0;              // chain_boundary
    ChainPart part = ChainPart::whole;
    std::string name;                // declared
    Z2Vector declared_class;         // declared
    Sidedness declared_sided = Sidedness::two_sided;

    static CurveSymbol gamma(std::vector<int> idx) {
        CurveSymbol c;
        c.kind = Kind::gamma;
        c.indices = std::move(idx);
        return c;
    }

    static CurveSymbol gamma_prime(std::vector<int> idx) {
        CurveSymbol c;
        c.kind = Kind::gamma_prime;
        c.indices = std::move(idx);
        return c;
    }

    static CurveSymbol chain_boundary_part(int lo, int hi, ChainPart part) {
        CurveSymbol c;
        c.kind = Kind::chain_boundary;
        c.lo = lo;
        c.hi = hi;
        c.part = part;
        return c;
    }

    static CurveSymbol declared(std::string name, Z2Vector cls, Sidedness sided) {
        CurveSymbol c;
        c.kind = Kind::declared;
        c.name = std::move(name);
        c.declared_class = cls;
        c.declared_sided = sided;
        return c;
    }

    // standard aliases
    static CurveSymbol mu(int i) { return gamma({i}); }
    static CurveSymbol alpha(int i) { return gamma({i, i + 1}); }
    static CurveSymbol beta() { return gamma({1, 2, 3, 4}); }

    bool operator==(const CurveSymbol&) const = default;
};

inline void validate_curve(const SurfaceSpec& spec, const CurveSymbol& c) {
    switch (c.kind) {
    case CurveSymbol::Kind::gamma:
    case CurveSymbol::Kind::gamma_prime: {
        if (c.indices.empty())
            throw validation_error("curve needs at least one crosscap index");
        int prev = 0;
        for (int i : c.indices) {
            if (i <= prev)
                throw validation_error("crosscap indices must be strictly increasing");
            if (i > spec.genus)
                throw validation_error("crosscap index " + std::to_string(i) +
                                       " exceeds genus " + std::to_string(spec.genus));
            prev = i;
        }
        break;
    }
    case CurveSymbol::Kind::chain_boundary:
        if (c.lo < 1 || c.lo > c.hi || c.hi > spec.genus - 1)
            throw validation_error("chain range [" + std::to_string(c.lo) + "," +
                                   std::to_string(c.hi) + "] invalid for genus " +
                                   std::to_string(spec.genus));
        break;
    case CurveSymbol::Kind::declared: {
        if (c.name.empty())
            throw validation_error("declared curve needs a name");
        for (char ch : c.name)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                throw validation_error("declared curve name must be alphanumeric/underscore: " + c.name);
        if (c.declared_class.size() != spec.genus)
            throw validation_error("declared class length " +
                                   std::to_string(c.declared_class.size()) +
                                   " does not match genus " + std::to_string(spec.genus));
        bool one = c.declared_class.self_pairing() == 1;
        if (one != (c.declared_sided == Sidedness::one_sided))
            throw validation_error("declared sidedness of '" + c.name +
                                   "' contradicts the self-pairing of its class");
        break;
    }
    }
}

inline Z2Vector curve_class(const SurfaceSpec& spec, const CurveSymbol& c) {
    validate_curve(spec, c);
    switch (c.kind) {
    case CurveSymbol::Kind::gamma:
    case CurveSymbol::Kind::gamma_prime: {
        Z2Vector v = Z2Vector::zero(spec.genus);
        for (int i : c.indices) v = v + Z2Vector::basis(spec.genus, i);
        return v;
    }
    case CurveSymbol::Kind::chain_boundary: {
        if (c.part == ChainPart::whole) return Z2Vector::zero(spec.genus);
        // either boundary component of an odd chain covers crosscaps lo..hi+1
        Z2Vector v = Z2Vector::zero(spec.genus);
        for (int i = c.lo; i <= c.hi + 1; ++i) v = v + Z2Vector::basis(spec.genus, i);
        return v;
    }
    case CurveSymbol::Kind::declared:
        return c.declared_class;
    }
    throw error("unreachable");
}

// one-sided iff the class pairs to 1 with itself
inline Sidedness curve_sidedness(const SurfaceSpec& spec, const CurveSymbol& c) {
    return curve_class(spec, c).self_pairing() == 1 ? Sidedness::one_sided
                                                    : Sidedness::two_sided;
}

// Boundary symbols of a regular neighborhood of the chain alpha_lo,...,alpha_hi:
// two components when the chain length is odd, one when it is even.
inline std::vector<CurveSymbol> chain_boundary(const SurfaceSpec& spec, int lo, int hi) {
    CurveSymbol probe = CurveSymbol::chain_boundary_part(lo, hi, ChainPart::whole);
    validate_curve(spec, probe);
    int k = hi - lo + 1;
    if (k % 2 == 1)
        return {CurveSymbol::chain_boundary_part(lo, hi, ChainPart::d1),
                CurveSymbol::chain_boundary_part(lo, hi, ChainPart::d2)};
    return {probe};
}

inline std::string format_curve(const CurveSymbol& c) {
    auto join = [](const std::vector<int>& idx) {
        std::string s;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(idx[i]);
        }
        return s;
    };
    switch (c.kind) {
    case CurveSymbol::Kind::gamma:
        if (c.indices.size() == 1) return "m:" + std::to_string(c.indices[0]);
        if (c.indices.size() == 2 && c.indices[1] == c.indices[0] + 1)
            return "al:" + std::to_string(c.indices[0]);
        if (c.indices == std::vector<int>{1, 2, 3, 4}) return "bt";
        return "g:" + join(c.indices);
    case CurveSymbol::Kind::gamma_prime:
        return "gp:" + join(c.indices);
    case CurveSymbol::Kind::chain_boundary: {
        std::string part = c.part == ChainPart::whole ? "whole"
                         : c.part == ChainPart::d1    ? "d1"
                                                      : "d2";
        return "cb:" + std::to_string(c.lo) + "-" + std::to_string(c.hi) + ":" + part;
    }
    case CurveSymbol::Kind::declared: {
        std::string sided = c.declared_sided == Sidedness::one_sided ? "one" : "two";
        return "decl:" + c.name + ":" + c.declared_class.to_string() + ":" + sided;
    }
    }
    throw error("unreachable");
}

namespace detail {

inline std::vector<int> parse_index_list(const std::string& text, std::size_t offset) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = i;
        while (j < text.size() && text[j] != ',') ++j;
        std::string tok = text.substr(i, j - i);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad crosscap index '" + tok + "'", offset + i);
        out.push_back(std::stoi(tok));
        i = j + (j < text.size() ? 1 : 0);
    }
    if (out.empty()) throw parse_error("empty index list", offset);
    return out;
}

} // namespace detail

inline CurveSymbol parse_curve(const SurfaceSpec& spec, const std::string& text,
                               std::size_t offset = 0) {
    auto fail = [&](const std::string& msg) -> CurveSymbol {
        throw parse_error(msg + ": '" + text + "'", offset);
    };
    CurveSymbol c;
    if (text == "bt") {
        c = CurveSymbol::beta();
    } else if (text.starts_with("g:")) {
        c = CurveSymbol::gamma(detail::parse_index_list(text.substr(2), offset + 2));
    } else if (text.starts_with("gp:")) {
        c = CurveSymbol::gamma_prime(detail::parse_index_list(text.substr(3), offset + 3));
    } else if (text.starts_with("m:")) {
        auto idx = detail::parse_index_list(text.substr(2), offset + 2);
        if (idx.size() != 1) return fail("mu takes one index");
        c = CurveSymbol::mu(idx[0]);
    } else if (text.starts_with("al:")) {
        auto idx = detail::parse_index_list(text.substr(3), offset + 3);
        if (idx.size() != 1) return fail("alpha takes one index");
        c = CurveSymbol::alpha(idx[0]);
    } else if (text.starts_with("cb:")) {
        std::size_t dash = text.find('-', 3);
        std::size_t colon = text.find(':', 3);
        if (dash == std::string::npos || colon == std::string::npos || dash > colon)
            return fail("chain boundary needs cb:lo-hi:part");
        std::string lo_s = text.substr(3, dash - 3);
        std::string hi_s = text.substr(dash + 1, colon - dash - 1);
        std::string part_s = text.substr(colon + 1);
        if (lo_s.empty() || hi_s.empty() ||
            lo_s.find_first_not_of("0123456789") != std::string::npos ||
            hi_s.find_first_not_of("0123456789") != std::string::npos)
            return fail("chain boundary needs numeric lo-hi");
        ChainPart part;
        if (part_s == "whole") part = ChainPart::whole;
        else if (part_s == "d1") part = ChainPart::d1;
        else if (part_s == "d2") part = ChainPart::d2;
        else return fail("chain boundary part must be whole|d1|d2");
        c = CurveSymbol::chain_boundary_part(std::stoi(lo_s), std::stoi(hi_s), part);
    } else if (text.starts_with("decl:")) {
        std::size_t p1 = text.find(':', 5);
        std::size_t p2 = p1 == std::string::npos ? std::string::npos : text.find(':', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos)
            return fail("declared curve needs decl:name:bits:sided");
        std::string name = text.substr(5, p1 - 5);
        std::string bits = text.substr(p1 + 1, p2 - p1 - 1);
        std::string sided_s = text.substr(p2 + 1);
        Sidedness sided;
        if (sided_s == "one") sided = Sidedness::one_sided;
        else if (sided_s == "two") sided = Sidedness::two_sided;
        else return fail("declared sidedness must be one|two");
        Z2Vector cls;
        try {
            cls = Z2Vector::from_string(bits);
        } catch (const validation_error& e) {
            return fail(e.what());
        }
        c = CurveSymbol::declared(name, cls, sided);
    } else {
        return fail("unknown curve token");
    }
    try {
        validate_curve(spec, c);
    } catch (const validation_error& e) {
        throw parse_error(std::string(e.what()), offset);
    }
    return c;
}

} // namespace crosscap
