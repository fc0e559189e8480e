#include "tcurve/patch_poly.hpp"

#include <stdexcept>

namespace tcurve {

using Term = PatchPolynomial::Term;

Rat PatchPolynomial::coefficient(const Term& term) const {
    std::uint64_t e = static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(term.scaled_lift);
    return Rat(BigInt(term.sign), BigInt::pow2(e));
}

Rat PatchPolynomial::evaluate(const Rat& x, const Rat& y) const {
    Rat acc;
    for (const Term& term : terms) {
        Rat mono = coefficient(term);
        if (term.p.i) mono *= Rat(BigInt::pow(x.num(), term.p.i), BigInt::pow(x.den(), term.p.i));
        if (term.p.j) mono *= Rat(BigInt::pow(y.num(), term.p.j), BigInt::pow(y.den(), term.p.j));
        acc += mono;
    }
    return acc;
}

PatchPolynomial patch_polynomial(const SignDistribution& d, const Lift& lift, int s) {
    if (s < 1) throw std::invalid_argument("patch_polynomial: s must be at least 1");
    PatchPolynomial poly;
    poly.degree = d.degree;
    poly.s = s;

    BigInt lcm(1);
    for (const auto& [p, nu] : lift.values) {
        if (!in_standard_triangle(p, d.degree))
            throw std::invalid_argument("patch_polynomial: lift vertex outside T_m");
        if (nu.sign() < 0) throw std::invalid_argument("patch_polynomial: negative lift value");
        lcm = BigInt::divmod(lcm * nu.den(), BigInt::gcd(lcm, nu.den())).first;
    }
    poly.r = lcm.to_int64();

    for (const auto& [p, nu] : lift.values) {
        PatchPolynomial::Term term;
        term.p = p;
        term.sign = d.at(p);
        term.scaled_lift = (nu.num() * BigInt::divmod(lcm, nu.den()).first).to_int64();
        poly.terms.push_back(term);
    }
    poly.t = Rat(BigInt(1),
                 BigInt::pow2(static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(poly.r)));
    return poly;
}

int sign_at(const PatchPolynomial& p, const Rat& x, const Rat& y) {
    Rat sum;
    Rat largest, rest;
    for (const Term& term : p.terms) {
        Rat mono = p.coefficient(term);
        if (term.p.i) mono *= Rat(BigInt::pow(x.num(), term.p.i), BigInt::pow(x.den(), term.p.i));
        if (term.p.j) mono *= Rat(BigInt::pow(y.num(), term.p.j), BigInt::pow(y.den(), term.p.j));
        sum += mono;
        Rat mag = mono.sign() < 0 ? -mono : mono;
        if (mag > largest) {
            rest += largest;
            largest = mag;
        } else {
            rest += mag;
        }
    }
    int exact = sum.sign();
    if (largest > rest) {
        // a single monomial dominates; its sign must agree with the exact one
        int dominant = 0;
        for (const Term& term : p.terms) {
            Rat mono = p.coefficient(term);
            if (term.p.i)
                mono *= Rat(BigInt::pow(x.num(), term.p.i), BigInt::pow(x.den(), term.p.i));
            if (term.p.j)
                mono *= Rat(BigInt::pow(y.num(), term.p.j), BigInt::pow(y.den(), term.p.j));
            Rat mag = mono.sign() < 0 ? -mono : mono;
            if (mag == largest) dominant = mono.sign();
        }
        if (dominant != exact)
            throw std::logic_error("sign_at: dominant-term shortcut disagrees with exact sign");
    }
    return exact;
}

}  // namespace tcurve
