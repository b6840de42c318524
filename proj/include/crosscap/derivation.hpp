#pragma once

// Machine-checked word-rewriting derivations.  A script claims lhs = rhs and
// proves it by a sequence of steps; each step may first insert a cancelling
// pair u u^{-1} (an "expansion"), must then match one side of a validated
// relation instance letter-for-letter at a stated position, and replaces it
// with the other side.  The working word is freely reduced after every step
// and its homology image must never drift.

#include <string>
#include <vector>

#include "crosscap/errors.hpp"
#include "crosscap/relations.hpp"

namespace crosscap {

enum class StepDirection { lhs_to_rhs, rhs_to_lhs };

struct DerivationStep {
    std::size_t position = 0;
    StepDirection direction = StepDirection::lhs_to_rhs;
    RelationInstance instance;
    Word expansion;                     // empty = no expansion
    std::size_t expansion_position = 0;

    bool operator==(const DerivationStep&) const = default;
};

struct DerivationScript {
    std::string name;
    SurfaceSpec spec;
    Word claim_lhs, claim_rhs;
    std::vector<DerivationStep> steps;
    std::string note;

    bool operator==(const DerivationScript&) const = default;
};

struct ApplyOutcome {
    bool ok = false;
    std::string reason;
    Word result;
};

inline ApplyOutcome apply_step(const Word& current, const DerivationStep& step) {
    auto fail = [](std::string why) { return ApplyOutcome{false, std::move(why), {}}; };
    std::vector<Letter> work = letters(current);
    if (!step.expansion.empty()) {
        if (step.expansion_position > work.size())
            return fail("expansion position " + std::to_string(step.expansion_position) +
                        " outside a word of length " + std::to_string(work.size()));
        std::vector<Letter> pair =
            letters(concat(step.expansion, inverse(step.expansion)));
        work.insert(work.begin() + static_cast<std::ptrdiff_t>(step.expansion_position),
                    pair.begin(), pair.end());
    }
    const Word& src_word =
        step.direction == StepDirection::lhs_to_rhs ? step.instance.lhs : step.instance.rhs;
    const Word& dst_word =
        step.direction == StepDirection::lhs_to_rhs ? step.instance.rhs : step.instance.lhs;
    std::vector<Letter> src = letters(src_word);
    std::vector<Letter> dst = letters(dst_word);
    if (step.position + src.size() > work.size())
        return fail("match position " + std::to_string(step.position) +
                    " + pattern length " + std::to_string(src.size()) +
                    " exceeds word length " + std::to_string(work.size()));
    for (std::size_t i = 0; i < src.size(); ++i)
        if (!(work[step.position + i] == src[i]))
            return fail("word does not match the relation side at letter " +
                        std::to_string(step.position + i));
    auto at = work.begin() + static_cast<std::ptrdiff_t>(step.position);
    at = work.erase(at, at + static_cast<std::ptrdiff_t>(src.size()));
    work.insert(at, dst.begin(), dst.end());
    ApplyOutcome out;
    out.ok = true;
    out.result = reduce(from_letters(work));
    return out;
}

struct StepReport {
    std::size_t index = 0;
    std::string tag;
    Word before, after;
    bool ok = false;
    std::string detail;
};

struct ReplayReport {
    bool pass = false;
    long fail_step = -1;   // failing step index, or -1 when only the final word differs
    std::vector<StepReport> steps;
    Word final_word;
    std::string failure;
};

inline ReplayReport replay(const DerivationScript& script) {
    ReplayReport report;
    Word cur = reduce(script.claim_lhs);
    const Z2Matrix invariant = word_matrix(script.spec, cur);
    for (std::size_t k = 0; k < script.steps.size(); ++k) {
        const DerivationStep& step = script.steps[k];
        StepReport sr;
        sr.index = k;
        sr.tag = tag_name(step.instance.tag);
        sr.before = cur;
        auto fail = [&](const std::string& why) {
            sr.ok = false;
            sr.detail = why;
            report.steps.push_back(sr);
            report.fail_step = static_cast<long>(k);
            report.failure = "step " + std::to_string(k) + ": " + why;
            report.final_word = cur;
            return report;
        };
        if (!(step.instance.spec == script.spec))
            return fail("instance built for a different surface");
        InstanceCheck chk = validate_instance(step.instance);
        if (!chk.ok) return fail("invalid relation instance: " + chk.reason);
        try {
            ApplyOutcome out = apply_step(cur, step);
            if (!out.ok) return fail(out.reason);
            cur = out.result;
            if (!(word_matrix(script.spec, cur) == invariant))
                return fail("homology image drifted after the rewrite");
        } catch (const error& e) {
            return fail(std::string("step raised: ") + e.what());
        }
        sr.after = cur;
        sr.ok = true;
        sr.detail = "ok";
        report.steps.push_back(sr);
    }
    report.final_word = cur;
    if (cur == reduce(script.claim_rhs)) {
        report.pass = true;
    } else {
        report.fail_step = -1;
        report.failure = "final word does not match the claim";
    }
    return report;
}

namespace detail {

// assembles a script while replaying it, so every emitted position is
// guaranteed to match
class ScriptBuilder {
public:
    ScriptBuilder(std::string name, const SurfaceSpec& spec, Word claim_lhs,
                  Word claim_rhs, std::string note) {
        script_.name = std::move(name);
        script_.spec = spec;
        script_.claim_lhs = std::move(claim_lhs);
        script_.claim_rhs = std::move(claim_rhs);
        script_.note = std::move(note);
        cur_ = reduce(script_.claim_lhs);
    }

    void step(std::size_t position, StepDirection dir, RelationInstance inst,
              Word expansion = {}, std::size_t expansion_position = 0) {
        DerivationStep st;
        st.position = position;
        st.direction = dir;
        st.instance = std::move(inst);
        st.expansion = std::move(expansion);
        st.expansion_position = expansion_position;
        ApplyOutcome out = apply_step(cur_, st);
        if (!out.ok)
            throw error("script assembly failed (" + script_.name + ", step " +
                        std::to_string(script_.steps.size()) + "): " + out.reason);
        cur_ = out.result;
        script_.steps.push_back(std::move(st));
    }

    DerivationScript finish() {
        if (!(cur_ == reduce(script_.claim_rhs)))
            throw error("script assembly failed (" + script_.name +
                        "): derivation does not reach the claimed word");
        return script_;
    }

    const Word& current() const { return cur_; }

private:
    DerivationScript script_;
    Word cur_;
};

inline Word a_run(const SurfaceSpec& spec, int lo, int hi) {
    Word w;
    for (int i = lo; i <= hi; ++i)
        w.terms.push_back(Term{GeneratorSymbol::a(spec, i), 1});
    return w;
}

inline CurveSymbol gamma_range(int lo, int hi, bool primed = false) {
    std::vector<int> idx;
    for (int i = lo; i <= hi; ++i) idx.push_back(i);
    return primed ? CurveSymbol::gamma_prime(std::move(idx))
                  : CurveSymbol::gamma(std::move(idx));
}

// class of the image of gamma_{1..m} under (a_2 ... a_{g-1})^2: crosscap
// indices 2..m shift up by two
inline CurveSymbol ladder_image(const SurfaceSpec& spec, int m) {
    Z2Vector cls = Z2Vector::basis(spec.genus, 1);
    for (int j = 2; j <= m; ++j) cls = cls + Z2Vector::basis(spec.genus, j + 2);
    return CurveSymbol::declared("ladder_img_" + std::to_string(m + 2), cls,
                                 Sidedness::one_sided);
}

} // namespace detail

// (a_1 ... a_{g-1})^g = 1 for even g: the odd-chain power equals two
// opposite twists about the same boundary curve
inline DerivationScript builtin_c1(const SurfaceSpec& spec) {
    const int g = spec.genus;
    if (spec.boundary != 0 || g < 4 || g % 2 != 0)
        throw validation_error("script c1 needs a closed surface of even genus >= 4");
    detail::ScriptBuilder sb("c1", spec, power(detail::a_run(spec, 1, g - 1), g), Word{},
                             "full-twist power of the alpha chain collapses through two "
                             "opposite boundary twists of the chain neighborhood");
    std::vector<CurveSymbol> chain;
    for (int i = 1; i <= g - 1; ++i) chain.push_back(CurveSymbol::alpha(i));
    CurveSymbol whole = detail::gamma_range(1, g);
    sb.step(0, StepDirection::lhs_to_rhs,
            chain_k(spec, chain, {whole, whole}, {1, -1}));
    return sb.finish();
}

// (a_1 ... a_{g-1})^{2g} = 1 for odd g: the even-chain power equals the twist
// about the boundary of a Möbius neighborhood, which is trivial
inline DerivationScript builtin_c3_odd(const SurfaceSpec& spec) {
    const int g = spec.genus;
    if (spec.boundary != 0 || g < 5 || g % 2 != 1)
        throw validation_error("script c3-odd needs a closed surface of odd genus >= 5");
    detail::ScriptBuilder sb("c3-odd", spec, power(detail::a_run(spec, 1, g - 1), 2 * g),
                             Word{},
                             "even-chain power equals the boundary twist of a Möbius "
                             "neighborhood, which bounds");
    std::vector<CurveSymbol> chain;
    for (int i = 1; i <= g - 1; ++i) chain.push_back(CurveSymbol::alpha(i));
    CurveSymbol whole = CurveSymbol::chain_boundary_part(1, g - 1, ChainPart::whole);
    sb.step(0, StepDirection::lhs_to_rhs, chain_k(spec, chain, {whole}, {1}));
    sb.step(0, StepDirection::lhs_to_rhs, trivial_twist(spec, whole, "mobius"));
    return sb.finish();
}

namespace detail {

// shared ladder machinery for the two rho-style scripts: turns the segment
// (y^{sign} A y^{-sign} A) starting at offset q into Y_{mu_1,*_{1,2,3}} A^2,
// then merges consecutive ladder letters right-to-left
struct RhoLadder {
    const SurfaceSpec& spec;
    ScriptBuilder& sb;
    int g;
    bool primed;       // ladder intermediates carry the primed decoration
    int ysign;         // sign of the first y in the raw period

    Word A() const { return a_run(spec, 2, g - 1); }

    // one raw period y^{s} A y^{-s} A at offset q -> Y_3 A^2
    void convert_period(std::size_t q) {
        Word yconj = word_of({Term{GeneratorSymbol::y(spec), -ysign}});
        for (int k = g - 1; k >= 3; --k)
            sb.step(q + static_cast<std::size_t>(k) - 1, StepDirection::rhs_to_lhs,
                    braid_twist(spec, yconj, CurveSymbol::alpha(k), CurveSymbol::alpha(k), 1));
        Word a2 = word_of({Term{GeneratorSymbol::a(spec, 2), 1}});
        CurveSymbol mid = CurveSymbol::gamma({1, 3});
        sb.step(q + 1, StepDirection::lhs_to_rhs,
                braid_push(spec, a2, CurveSymbol::mu(1), CurveSymbol::alpha(1),
                           CurveSymbol::mu(1), mid, -ysign, -ysign),
                inverse(a2), q + 3);
        if (ysign > 0) {
            // y sits in front: fuse y with the conjugated slide into Y_3
            sb.step(q, StepDirection::rhs_to_lhs,
                    push_product(spec, CurveSymbol::mu(1), CurveSymbol::alpha(1), mid,
                                 gamma_range(1, 3, primed)));
        } else {
            // y^{-1} sits in front: split the slide as y * Y'_3 and cancel
            sb.step(q + 1, StepDirection::lhs_to_rhs,
                    push_product(spec, CurveSymbol::mu(1), CurveSymbol::alpha(1),
                                 gamma_range(1, 3, primed), mid));
        }
    }

    // merge Y_3 A^2 Y_{2i-1} A^{2i-2} -> Y_{2i+1} A^{2i} at offset w;
    // the produced curve is `product`
    void merge(std::size_t w, int i, const CurveSymbol& product) {
        const std::size_t alen = static_cast<std::size_t>(g - 2);
        CurveSymbol img = ladder_image(spec, 2 * i - 1);
        std::size_t v = w + 1 + 2 * alen;   // offset of Y_{2i-1}
        sb.step(w + 1, StepDirection::lhs_to_rhs,
                braid_push(spec, power(A(), 2), CurveSymbol::mu(1),
                           gamma_range(1, 2 * i - 1, primed), CurveSymbol::mu(1), img, 1),
                power(A(), -2), v + 1);
        sb.step(w, StepDirection::rhs_to_lhs,
                push_product(spec, CurveSymbol::mu(1), gamma_range(1, 3, primed), img,
                             product));
    }
};

} // namespace detail

// rho^2 = 1 for even g, where rho = (y^{-1} A y A)^{(g-2)/2} y^{-1} A and
// A = a_2 ... a_{g-1}
inline DerivationScript builtin_c3_even(const SurfaceSpec& spec) {
    const int g = spec.genus;
    if (spec.boundary != 0 || g < 4 || g % 2 != 0)
        throw validation_error("script c3-even needs a closed surface of even genus >= 4");
    const int P = (g - 2) / 2;
    const std::size_t alen = static_cast<std::size_t>(g - 2);

    Word A = detail::a_run(spec, 2, g - 1);
    Word y_inv = word_of({Term{GeneratorSymbol::y(spec), -1}});
    Word rho = concat(power(concat(concat(y_inv, A), concat(inverse(y_inv), A)),
                            P),
                      concat(y_inv, A));
    detail::ScriptBuilder sb("c3-even", spec, reduce(concat(rho, rho)), Word{},
                             "pushes the first crosscap along longer and longer loops, "
                             "squeezes both copies together, and cancels the squared "
                             "pushing map against the chain boundary twist");
    detail::RhoLadder ladder{spec, sb, g, false, 1};

    CurveSymbol gamma_full = detail::gamma_range(1, g);
    Z2Vector top_cls = Z2Vector::basis(g, 1);
    for (int j = 3; j <= g; ++j) top_cls = top_cls + Z2Vector::basis(g, j);
    CurveSymbol top =
        CurveSymbol::declared("ladder_img_top", top_cls, Sidedness::one_sided);
    const std::size_t done_len = 1 + alen * static_cast<std::size_t>(g - 1);
    for (int copy = 0; copy < 2; ++copy) {
        const std::size_t s = copy == 0 ? 0 : done_len;
        // copy layout: y^{-1} A (y A y^{-1} A)^P
        for (int j = 0; j < P; ++j)
            ladder.convert_period(s + static_cast<std::size_t>(g - 1) +
                                  static_cast<std::size_t>(j) * (2 * alen + 1));
        for (int i = 2; i <= P; ++i)
            ladder.merge(s + static_cast<std::size_t>(g - 1) +
                             static_cast<std::size_t>(P - i) * (2 * alen + 1),
                         i, detail::gamma_range(1, 2 * i + 1));
        // y^{-1} A Y_{g-1} A^{g-2} -> Y_g A^{g-1}
        sb.step(s + 1, StepDirection::lhs_to_rhs,
                braid_push(spec, A, CurveSymbol::mu(1), detail::gamma_range(1, g - 1),
                           CurveSymbol::mu(1), top, 1),
                inverse(A), s + static_cast<std::size_t>(g));
        sb.step(s + 1, StepDirection::lhs_to_rhs,
                push_product(spec, CurveSymbol::mu(1), CurveSymbol::alpha(1), gamma_full,
                             top));
    }
    // Y_g A^{g-1} Y_g A^{g-1} -> Y_g^2 A^{2g-2} -> Y_g^2 t -> 1
    sb.step(1, StepDirection::lhs_to_rhs,
            braid_push(spec, power(A, g - 1), CurveSymbol::mu(1), gamma_full,
                       CurveSymbol::mu(1), gamma_full, 1),
            power(A, -(g - 1)), done_len + 1);
    std::vector<CurveSymbol> tail_chain;
    for (int i = 2; i <= g - 1; ++i) tail_chain.push_back(CurveSymbol::alpha(i));
    CurveSymbol tail_bd = CurveSymbol::chain_boundary_part(2, g - 1, ChainPart::whole);
    sb.step(2, StepDirection::lhs_to_rhs, chain_k(spec, tail_chain, {tail_bd}, {1}));
    sb.step(0, StepDirection::lhs_to_rhs,
            y_square(spec, CurveSymbol::mu(1), gamma_full, tail_bd, -1));
    return sb.finish();
}

// (y^{-1} A y A)^{(g-1)/2} = 1 for odd g
inline DerivationScript builtin_c4(const SurfaceSpec& spec) {
    const int g = spec.genus;
    if (spec.boundary != 0 || g < 5 || g % 2 != 1)
        throw validation_error("script c4 needs a closed surface of odd genus >= 5");
    const int P = (g - 1) / 2;
    const std::size_t alen = static_cast<std::size_t>(g - 2);

    Word A = detail::a_run(spec, 2, g - 1);
    Word y_inv = word_of({Term{GeneratorSymbol::y(spec), -1}});
    Word period = concat(concat(y_inv, A), concat(inverse(y_inv), A));
    detail::ScriptBuilder sb("c4", spec, power(period, P), Word{},
                             "climbs the primed pushing-map ladder, factors the full "
                             "pushing map through the two chain boundary twists, and "
                             "cancels the commuting twists");
    detail::RhoLadder ladder{spec, sb, g, true, -1};

    // claim layout: (y^{-1} A y A)^P; the conjugated slide is the inner y
    for (int j = 0; j < P; ++j)
        ladder.convert_period(static_cast<std::size_t>(j) * (2 * alen + 1));
    CurveSymbol gamma_full = detail::gamma_range(1, g);
    for (int i = 2; i <= P; ++i)
        ladder.merge(static_cast<std::size_t>(P - i) * (2 * alen + 1), i,
                     i < P ? detail::gamma_range(1, 2 * i + 1, true) : gamma_full);

    // Y_g A^{g-1} -> Y_g t_d1 t_d2 -> t_d1^{-1} t_d2^{-1} t_d1 t_d2 -> 1
    std::vector<CurveSymbol> tail_chain;
    for (int i = 2; i <= g - 1; ++i) tail_chain.push_back(CurveSymbol::alpha(i));
    CurveSymbol d1 = CurveSymbol::chain_boundary_part(2, g - 1, ChainPart::d1);
    CurveSymbol d2 = CurveSymbol::chain_boundary_part(2, g - 1, ChainPart::d2);
    sb.step(1, StepDirection::lhs_to_rhs, chain_k(spec, tail_chain, {d1, d2}, {1, 1}));
    sb.step(0, StepDirection::lhs_to_rhs,
            push_factor(spec, CurveSymbol::mu(1), gamma_full, d1, d2, {-1, -1}));
    Word t2_inv = word_of({Term{GeneratorSymbol::twist(spec, d2), -1}});
    sb.step(1, StepDirection::lhs_to_rhs, braid_twist(spec, t2_inv, d1, d1, 1));
    return sb.finish();
}

// y^2 = t_{boundary of N(mu_1 ∪ alpha_1)}
inline DerivationScript builtin_y_square(const SurfaceSpec& spec) {
    if (spec.genus < 2)
        throw validation_error("script y-square needs genus >= 2");
    CurveSymbol loop = CurveSymbol::declared(
        "alpha1_sq_loop", Z2Vector::basis(spec.genus, 1), Sidedness::one_sided);
    CurveSymbol inner = CurveSymbol::declared(
        "alpha1_sq_inner_bd", Z2Vector::zero(spec.genus), Sidedness::two_sided);
    CurveSymbol outer = CurveSymbol::declared(
        "bd_mu1_alpha1", Z2Vector::zero(spec.genus), Sidedness::two_sided);
    detail::ScriptBuilder sb(
        "y-square", spec, word_of({Term{GeneratorSymbol::y(spec), 2}}),
        word_of({Term{GeneratorSymbol::twist(spec, outer), 1}}),
        "factors the squared slide through the pushing map along the doubled "
        "loop, whose inner boundary twist dies on a Möbius band");
    sb.step(0, StepDirection::rhs_to_lhs,
            push_product(spec, CurveSymbol::mu(1), CurveSymbol::alpha(1),
                         CurveSymbol::alpha(1), loop));
    sb.step(0, StepDirection::lhs_to_rhs,
            push_factor(spec, CurveSymbol::mu(1), loop, inner, outer, {1, 1}));
    sb.step(0, StepDirection::lhs_to_rhs, trivial_twist(spec, inner, "mobius"));
    return sb.finish();
}

inline DerivationScript builtin_script(const SurfaceSpec& spec, const std::string& name) {
    if (name == "c1") return builtin_c1(spec);
    if (name == "c3-odd") return builtin_c3_odd(spec);
    if (name == "c3-even") return builtin_c3_even(spec);
    if (name == "c4") return builtin_c4(spec);
    if (name == "y-square") return builtin_y_square(spec);
    throw validation_error("unknown script '" + name +
                           "' (available: c1, c3-odd, c3-even, c4, y-square)");
}

inline std::vector<DerivationScript> builtin_scripts(const SurfaceSpec& spec) {
    std::vector<DerivationScript> out;
    if (spec.boundary == 0 && spec.genus >= 4 && spec.genus % 2 == 0)
        out.push_back(builtin_c1(spec));
    if (spec.boundary == 0 && spec.genus >= 5 && spec.genus % 2 == 1)
        out.push_back(builtin_c3_odd(spec));
    if (spec.boundary == 0 && spec.genus >= 4 && spec.genus % 2 == 0)
        out.push_back(builtin_c3_even(spec));
    if (spec.boundary == 0 && spec.genus >= 5 && spec.genus % 2 == 1)
        out.push_back(builtin_c4(spec));
    if (spec.genus >= 2) out.push_back(builtin_y_square(spec));
    return out;
}

} // namespace crosscap
