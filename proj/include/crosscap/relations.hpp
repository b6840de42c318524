#pragma once

// Relation schemas of the infinite presentation: each builder checks the
// schema's side conditions at the Z_2-class level, assembles both sides of
// the relation, and certifies that the homology oracle cannot distinguish
// them.  Twist signs are recorded but carry no mod-2 content.

#include <string>
#include <utility>
#include <vector>

#include "crosscap/errors.hpp"
#include "crosscap/homology.hpp"
#include "crosscap/word.hpp"

namespace crosscap {

enum class RelationTag {
    trivial_twist,
    braid_twist,
    braid_push,
    chain,
    lantern,
    push_product,
    push_factor,
    y_square,
};

inline std::string tag_name(RelationTag t) {
    switch (t) {
    case RelationTag::trivial_twist: return "trivial_twist";
    case RelationTag::braid_twist: return "braid_twist";
    case RelationTag::braid_push: return "braid_push";
    case RelationTag::chain: return "chain";
    case RelationTag::lantern: return "lantern";
    case RelationTag::push_product: return "push_product";
    case RelationTag::push_factor: return "push_factor";
    case RelationTag::y_square: return "y_square";
    }
    throw error("unreachable");
}

inline RelationTag tag_from_name(const std::string& s) {
    if (s == "trivial_twist") return RelationTag::trivial_twist;
    if (s == "braid_twist") return RelationTag::braid_twist;
    if (s == "braid_push") return RelationTag::braid_push;
    if (s == "chain") return RelationTag::chain;
    if (s == "lantern") return RelationTag::lantern;
    if (s == "push_product") return RelationTag::push_product;
    if (s == "push_factor") return RelationTag::push_factor;
    if (s == "y_square") return RelationTag::y_square;
    throw validation_error("unknown relation tag '" + s + "'");
}

struct RelationInstance {
    RelationTag tag = RelationTag::trivial_twist;
    SurfaceSpec spec;
    std::vector<std::pair<std::string, CurveSymbol>> curves;
    Word f;                    // conjugator, braid tags only
    int power = 1;             // exponent on the conjugated generator, braid tags only
    std::vector<int> signs;
    int chain_length = 0;      // chain tag only
    std::string kind;          // trivial_twist tag only: disk | mobius
    Word lhs, rhs;

    bool operator==(const RelationInstance&) const = default;

    const CurveSymbol* find(const std::string& name) const {
        for (const auto& [n, c] : curves)
            if (n == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline void require_sign(int s, const std::string& what) {
    if (s != 1 && s != -1)
        throw validation_error(what + " must be +1 or -1, got " + std::to_string(s));
}

inline void require_power(int p) {
    if (p == 0) throw validation_error("generator power must be nonzero");
}

inline void certify_oracle(RelationInstance& inst) {
    inst.lhs = reduce(inst.lhs);
    inst.rhs = reduce(inst.rhs);
    if (!(word_matrix(inst.spec, inst.lhs) == word_matrix(inst.spec, inst.rhs)))
        throw validation_error("relation sides disagree on Z2 homology (" +
                               tag_name(inst.tag) + ")");
}

} // namespace detail

// t_c = 1 for c bounding a disk or a Möbius band; either way [c] = 0
inline RelationInstance trivial_twist(const SurfaceSpec& spec, const CurveSymbol& c,
                                      const std::string& kind) {
    if (kind != "disk" && kind != "mobius")
        throw validation_error("trivial twist kind must be disk|mobius, got '" + kind + "'");
    GeneratorSymbol t = GeneratorSymbol::twist(spec, c);
    if (!curve_class(spec, c).is_zero())
        throw validation_error("trivial twist needs a null mod-2 class: " + format_curve(c));
    RelationInstance inst;
    inst.tag = RelationTag::trivial_twist;
    inst.spec = spec;
    inst.curves = {{"c", c}};
    inst.kind = kind;
    inst.lhs = word_of({Term{t, 1}});
    inst.rhs = Word{};
    detail::certify_oracle(inst);
    return inst;
}

// f t_c^p f^{-1} = t_image^{eps*p}
inline RelationInstance braid_twist(const SurfaceSpec& spec, const Word& f,
                                    const CurveSymbol& c, const CurveSymbol& image,
                                    int eps, int power = 1) {
    detail::require_sign(eps, "braid sign");
    detail::require_power(power);
    GeneratorSymbol tc = GeneratorSymbol::twist(spec, c);
    GeneratorSymbol ti = GeneratorSymbol::twist(spec, image);
    if (!(word_matrix(spec, f).apply(curve_class(spec, c)) == curve_class(spec, image)))
        throw validation_error("declared image class is not the conjugator's image of [c]");
    RelationInstance inst;
    inst.tag = RelationTag::braid_twist;
    inst.spec = spec;
    inst.curves = {{"c", c}, {"image", image}};
    inst.f = f;
    inst.power = power;
    inst.signs = {eps};
    inst.lhs = conjugate(f, word_of({Term{tc, power}}));
    inst.rhs = word_of({Term{ti, eps * power}});
    detail::certify_oracle(inst);
    return inst;
}

// f Y_{mu,alpha}^p f^{-1} = Y_{image_mu,image_alpha}^{eps*p}
inline RelationInstance braid_push(const SurfaceSpec& spec, const Word& f,
                                   const CurveSymbol& mu, const CurveSymbol& alpha,
                                   const CurveSymbol& image_mu, const CurveSymbol& image_alpha,
                                   int eps, int power = 1) {
    detail::require_sign(eps, "braid sign");
    detail::require_power(power);
    GeneratorSymbol src = GeneratorSymbol::push(spec, mu, alpha);
    GeneratorSymbol dst = GeneratorSymbol::push(spec, image_mu, image_alpha);
    Z2Matrix m = word_matrix(spec, f);
    if (!(m.apply(curve_class(spec, mu)) == curve_class(spec, image_mu)))
        throw validation_error("declared image class is not the conjugator's image of [mu]");
    if (!(m.apply(curve_class(spec, alpha)) == curve_class(spec, image_alpha)))
        throw validation_error("declared image class is not the conjugator's image of [alpha]");
    RelationInstance inst;
    inst.tag = RelationTag::braid_push;
    inst.spec = spec;
    inst.curves = {{"mu", mu}, {"alpha", alpha}, {"image_mu", image_mu}, {"image_alpha", image_alpha}};
    inst.f = f;
    inst.power = power;
    inst.signs = {eps};
    inst.lhs = conjugate(f, word_of({Term{src, power}}));
    inst.rhs = word_of({Term{dst, eps * power}});
    detail::certify_oracle(inst);
    return inst;
}

// (t_c1 ... t_ck)^{k+1} = t_d1 t_d2 for odd k; (t_c1 ... t_ck)^{2k+2} = t_d for even k
inline RelationInstance chain_k(const SurfaceSpec& spec,
                                const std::vector<CurveSymbol>& chain,
                                const std::vector<CurveSymbol>& boundary,
                                const std::vector<int>& boundary_signs,
                                std::vector<int> chain_signs = {}) {
    const int k = static_cast<int>(chain.size());
    if (k < 2) throw validation_error("chain needs at least 2 curves");
    if (chain_signs.empty()) chain_signs.assign(chain.size(), 1);
    if (chain_signs.size() != chain.size())
        throw validation_error("need one sign per chain curve");
    for (int s : chain_signs) detail::require_sign(s, "chain twist sign");

    std::vector<GeneratorSymbol> gens;
    std::vector<Z2Vector> cls;
    for (const CurveSymbol& c : chain) {
        gens.push_back(GeneratorSymbol::twist(spec, c));
        cls.push_back(curve_class(spec, c));
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int want = (j - i == 1) ? 1 : 0;
            if (dot(cls[i], cls[j]) != want)
                throw validation_error("curves " + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + " break the chain intersection pattern");
        }

    const std::size_t expected = (k % 2 == 1) ? 2 : 1;
    if (boundary.size() != expected)
        throw validation_error("a " + std::to_string(k) + "-chain has " +
                               std::to_string(expected) + " boundary component(s), got " +
                               std::to_string(boundary.size()));
    if (boundary_signs.size() != expected)
        throw validation_error("need one sign per boundary curve");
    for (int s : boundary_signs) detail::require_sign(s, "boundary twist sign");

    Z2Vector want_bd = Z2Vector::zero(spec.genus);
    if (k % 2 == 1)
        for (int i = 0; i < k; i += 2) want_bd = want_bd + cls[i];
    std::vector<GeneratorSymbol> bd_gens;
    for (const CurveSymbol& d : boundary) {
        bd_gens.push_back(GeneratorSymbol::twist(spec, d));
        if (!(curve_class(spec, d) == want_bd))
            throw validation_error("boundary class of " + format_curve(d) +
                                   " does not match the chain neighborhood");
    }

    RelationInstance inst;
    inst.tag = RelationTag::chain;
    inst.spec = spec;
    for (int i = 0; i < k; ++i)
        inst.curves.emplace_back("c" + std::to_string(i + 1), chain[i]);
    for (std::size_t j = 0; j < boundary.size(); ++j)
        inst.curves.emplace_back("delta" + std::to_string(j + 1), boundary[j]);
    inst.chain_length = k;
    inst.signs = chain_signs;
    inst.signs.insert(inst.signs.end(), boundary_signs.begin(), boundary_signs.end());

    Word period;
    for (int i = 0; i < k; ++i) period.terms.push_back(Term{gens[i], chain_signs[i]});
    inst.lhs = power(period, k % 2 == 1 ? k + 1 : 2 * k + 2);
    for (std::size_t j = 0; j < boundary.size(); ++j)
        inst.rhs.terms.push_back(Term{bd_gens[j], boundary_signs[j]});
    detail::certify_oracle(inst);
    return inst;
}

// t_d12 t_d23 t_d13 = t_d1 t_d2 t_d3 t_d4 on a 4-holed sphere; signs in that order
inline RelationInstance lantern(const SurfaceSpec& spec, const CurveSymbol& d12,
                                const CurveSymbol& d23, const CurveSymbol& d13,
                                const CurveSymbol& d1, const CurveSymbol& d2,
                                const CurveSymbol& d3, const CurveSymbol& d4,
                                std::vector<int> signs = {}) {
    if (signs.empty()) signs.assign(7, 1);
    if (signs.size() != 7)
        throw validation_error("lantern takes 7 signs (d12,d23,d13,d1..d4)");
    for (int s : signs) detail::require_sign(s, "lantern sign");

    const CurveSymbol* all[7] = {&d12, &d23, &d13, &d1, &d2, &d3, &d4};
    std::vector<GeneratorSymbol> gens;
    for (const CurveSymbol* c : all) gens.push_back(GeneratorSymbol::twist(spec, *c));

    Z2Vector v1 = curve_class(spec, d1), v2 = curve_class(spec, d2),
             v3 = curve_class(spec, d3);
    if (dot(v1, v2) != 0 || dot(v1, v3) != 0 || dot(v2, v3) != 0)
        throw validation_error("lantern boundary curves must be disjoint (orthogonal classes)");
    if (!(curve_class(spec, d12) == v1 + v2))
        throw validation_error("[d12] must equal [d1]+[d2]");
    if (!(curve_class(spec, d23) == v2 + v3))
        throw validation_error("[d23] must equal [d2]+[d3]");
    if (!(curve_class(spec, d13) == v1 + v3))
        throw validation_error("[d13] must equal [d1]+[d3]");
    if (!(curve_class(spec, d4) == v1 + v2 + v3))
        throw validation_error("[d4] must equal [d1]+[d2]+[d3]");

    RelationInstance inst;
    inst.tag = RelationTag::lantern;
    inst.spec = spec;
    inst.curves = {{"d12", d12}, {"d23", d23}, {"d13", d13},
                   {"delta1", d1}, {"delta2", d2}, {"delta3", d3}, {"delta4", d4}};
    inst.signs = std::move(signs);
    for (int i = 0; i < 3; ++i) inst.lhs.terms.push_back(Term{gens[i], inst.signs[i]});
    for (int i = 3; i < 7; ++i) inst.rhs.terms.push_back(Term{gens[i], inst.signs[i]});
    detail::certify_oracle(inst);
    return inst;
}

// Y_{mu,product} = Y_{mu,alpha} Y_{mu,beta}, the product loop passing alpha then beta
inline RelationInstance push_product(const SurfaceSpec& spec, const CurveSymbol& mu,
                                     const CurveSymbol& alpha, const CurveSymbol& beta,
                                     const CurveSymbol& product) {
    GeneratorSymbol ya = GeneratorSymbol::push(spec, mu, alpha);
    GeneratorSymbol yb = GeneratorSymbol::push(spec, mu, beta);
    GeneratorSymbol yp = GeneratorSymbol::push(spec, mu, product);
    Z2Vector want = curve_class(spec, alpha) + curve_class(spec, beta) + curve_class(spec, mu);
    if (!(curve_class(spec, product) == want))
        throw validation_error("[product] must equal [alpha]+[beta]+[mu]");
    RelationInstance inst;
    inst.tag = RelationTag::push_product;
    inst.spec = spec;
    inst.curves = {{"mu", mu}, {"alpha", alpha}, {"beta", beta}, {"product", product}};
    inst.lhs = word_of({Term{yp, 1}});
    inst.rhs = word_of({Term{ya, 1}, Term{yb, 1}});
    detail::certify_oracle(inst);
    return inst;
}

// Y_{mu,alpha} = t_d1^{s1} t_d2^{s2} for one-sided alpha; the d's bound N(alpha)
// after blowing down mu, so [d1] = [d2] = [alpha]+[mu]
inline RelationInstance push_factor(const SurfaceSpec& spec, const CurveSymbol& mu,
                                    const CurveSymbol& alpha, const CurveSymbol& d1,
                                    const CurveSymbol& d2, const std::vector<int>& signs) {
    if (signs.size() != 2) throw validation_error("push factorization takes 2 signs");
    for (int s : signs) detail::require_sign(s, "boundary twist sign");
    GeneratorSymbol src = GeneratorSymbol::push(spec, mu, alpha);
    if (curve_sidedness(spec, alpha) != Sidedness::one_sided)
        throw validation_error("push factorization needs a one-sided alpha");
    GeneratorSymbol t1 = GeneratorSymbol::twist(spec, d1);
    GeneratorSymbol t2 = GeneratorSymbol::twist(spec, d2);
    Z2Vector want = curve_class(spec, alpha) + curve_class(spec, mu);
    if (!(curve_class(spec, d1) == want) || !(curve_class(spec, d2) == want))
        throw validation_error("factor boundary classes must equal [alpha]+[mu]");
    RelationInstance inst;
    inst.tag = RelationTag::push_factor;
    inst.spec = spec;
    inst.curves = {{"mu", mu}, {"alpha", alpha}, {"delta1", d1}, {"delta2", d2}};
    inst.signs = signs;
    inst.lhs = word_of({Term{src, 1}});
    inst.rhs = word_of({Term{t1, signs[0]}, Term{t2, signs[1]}});
    detail::certify_oracle(inst);
    return inst;
}

// Y_{mu,alpha}^2 = t_delta^{eps} for two-sided alpha; delta = ∂N(mu ∪ alpha) bounds
inline RelationInstance y_square(const SurfaceSpec& spec, const CurveSymbol& mu,
                                 const CurveSymbol& alpha, const CurveSymbol& delta,
                                 int eps) {
    detail::require_sign(eps, "twist sign");
    GeneratorSymbol src = GeneratorSymbol::push(spec, mu, alpha);
    if (curve_sidedness(spec, alpha) != Sidedness::two_sided)
        throw validation_error("the square relation needs a two-sided alpha");
    GeneratorSymbol td = GeneratorSymbol::twist(spec, delta);
    if (!curve_class(spec, delta).is_zero())
        throw validation_error("[delta] must vanish (delta bounds a subsurface)");
    RelationInstance inst;
    inst.tag = RelationTag::y_square;
    inst.spec = spec;
    inst.curves = {{"mu", mu}, {"alpha", alpha}, {"delta", delta}};
    inst.signs = {eps};
    inst.lhs = word_of({Term{src, 2}});
    inst.rhs = word_of({Term{td, eps}});
    detail::certify_oracle(inst);
    return inst;
}

struct InstanceCheck {
    bool ok = true;
    std::string reason;
};

// Rebuild the instance from its stored parameters and require an exact match;
// catches both side-condition violations and tampered lhs/rhs words.
inline InstanceCheck validate_instance(const RelationInstance& inst) {
    auto fail = [](std::string why) { return InstanceCheck{false, std::move(why)}; };
    auto need = [&](const std::string& name) -> const CurveSymbol& {
        const CurveSymbol* c = inst.find(name);
        if (!c) throw validation_error("missing curve parameter '" + name + "'");
        return *c;
    };
    try {
        RelationInstance rebuilt;
        switch (inst.tag) {
        case RelationTag::trivial_twist:
            rebuilt = trivial_twist(inst.spec, need("c"), inst.kind);
            break;
        case RelationTag::braid_twist:
            if (inst.signs.size() != 1) return fail("braid instance needs exactly one sign");
            rebuilt = braid_twist(inst.spec, inst.f, need("c"), need("image"),
                                  inst.signs[0], inst.power);
            break;
        case RelationTag::braid_push:
            if (inst.signs.size() != 1) return fail("braid instance needs exactly one sign");
            rebuilt = braid_push(inst.spec, inst.f, need("mu"), need("alpha"),
                                 need("image_mu"), need("image_alpha"), inst.signs[0],
                                 inst.power);
            break;
        case RelationTag::chain: {
            const int k = inst.chain_length;
            if (k < 2) return fail("chain length field out of range");
            std::vector<CurveSymbol> chain, boundary;
            for (int i = 1; i <= k; ++i) chain.push_back(need("c" + std::to_string(i)));
            boundary.push_back(need("delta1"));
            if (k % 2 == 1) boundary.push_back(need("delta2"));
            if (inst.signs.size() != chain.size() + boundary.size())
                return fail("sign count does not match chain plus boundary");
            std::vector<int> cs(inst.signs.begin(), inst.signs.begin() + k);
            std::vector<int> bs(inst.signs.begin() + k, inst.signs.end());
            rebuilt = chain_k(inst.spec, chain, boundary, bs, cs);
            break;
        }
        case RelationTag::lantern:
            rebuilt = lantern(inst.spec, need("d12"), need("d23"), need("d13"),
                              need("delta1"), need("delta2"), need("delta3"),
                              need("delta4"), inst.signs);
            break;
        case RelationTag::push_product:
            rebuilt = push_product(inst.spec, need("mu"), need("alpha"), need("beta"),
                                   need("product"));
            break;
        case RelationTag::push_factor:
            rebuilt = push_factor(inst.spec, need("mu"), need("alpha"), need("delta1"),
                                  need("delta2"), inst.signs);
            break;
        case RelationTag::y_square:
            if (inst.signs.size() != 1) return fail("square instance needs exactly one sign");
            rebuilt = y_square(inst.spec, need("mu"), need("alpha"), need("delta"),
                               inst.signs[0]);
            break;
        }
        if (!(rebuilt == inst))
            return fail("stored instance differs from rebuild (stale sides or metadata)");
    } catch (const error& e) {
        return fail(e.what());
    }
    return InstanceCheck{};
}

} // namespace crosscap
