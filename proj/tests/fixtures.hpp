#pragma once

#include <random>
#include <string>
#include <vector>

#include "spray.hpp"

namespace spray::testing {

// S1 as first constructed: index rows (0,0,1) (0,0,2) (0,1,0) (1,1,3), values 1..4.
inline Spray s1_initial(Backend b = default_backend) {
    const std::vector<MultiIndex> rows{{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {1, 1, 3}};
    const std::vector<double> vals{1, 2, 3, 4};
    return Spray(rows, vals, 3, b);
}

// S1 after S1[diag(3)] <- -3.
inline Spray s1_after_set(Backend b = default_backend) {
    const std::vector<MultiIndex> diag{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    return s1_initial(b).set(diag, -3.0);
}

inline Spray s2(Backend b = default_backend) {
    const std::vector<MultiIndex> rows{{6, -7, 8}, {0, 0, 2}, {1, 1, 3}};
    const std::vector<double> vals{17, 11, -4};
    return Spray(rows, vals, 3, b);
}

// S1 <- S1 + S2; the S1 of every later printout.
inline Spray s1_final(Backend b = default_backend) { return add(s1_after_set(b), s2(b)); }

inline Spray s4(Backend b = default_backend) {
    const std::vector<MultiIndex> rows{{1, 3}, {2, 2}, {3, 1}};
    const std::vector<double> vals{1, 2, 3};
    return Spray(rows, vals, 2, b);
}

// Printed outputs, verbatim.
inline const std::string kS1Polyform = "-3*z -3*y +13*z^2 -3*x +17*x^6*y^-7*z^8";
inline const std::string kS1PlusS2 = "-3*z -3*y +24*z^2 -4*x*y*z^3 -3*x +34*x^6*y^-7*z^8";
inline const std::string kS1TimesS2 =
    "+12*x^2*y*z^3 -51*x^7*y^-7*z^8 +289*x^12*y^-14*z^16\n"
    "-68*x^7*y^-6*z^11 -33*y*z^2 -52*x*y*z^5 +143*z^4 +12*x*y*z^4\n"
    "+12*x*y^2*z^3 +408*x^6*y^-7*z^10 -51*x^6*y^-6*z^8 -33*x*z^2\n"
    "-33*z^3 -51*x^6*y^-7*z^9";
inline const std::string kS1Squared =
    "+442*x^6*y^-7*z^10 +9*y^2 +18*y*z +9*z^2 +18*x*y -78*z^3\n"
    "+18*x*z +169*z^4 +9*x^2 -102*x^6*y^-7*z^9 -78*y*z^2\n"
    "-102*x^6*y^-6*z^8 -78*x*z^2 -102*x^7*y^-7*z^8\n"
    "+289*x^12*y^-14*z^16";
inline const std::string kOnePlusXPlusYCubed =
    "1 +3*x^2 +3*y +x^3 +3*x +3*x^2*y +6*x*y +3*x*y^2 +3*y^2 +y^3";
inline const std::string kS4 = "+x*y^3 +2*x^2*y^2 +3*x^3*y";
inline const std::string kHomog33 =
    "+x^2*y +y^3 +x^2*z +x^3 +x*y^2 +x*y*z +y^2*z +x*z^2 +z^3\n+y*z^2";
inline const std::string kHomogSubs =
    "125 +5*x^2 +x^3 +y^3 +x^2*y +25*x +5*x*y +25*y +x*y^2 +5*y^2";
inline const std::string kAderiv = "+216*x +108*x^2*y";
inline const std::string kChessKnight =
    "+x*y^2 +x*y^-2 +x^-1*y^2 +x^-1*y^-2 +x^2*y +x^2*y^-1 +x^-2*y\n+x^-2*y^-1";
inline const std::string kCyclic =
    "+r*s^2 +c*d^2 +f*g^2 +e*f^2 +d*e^2 +g*h^2 +i*j^2 +h*i^2 +j*k^2\n"
    "+y*z^2 +k*l^2 +b*c^2 +s*t^2 +l*m^2 +m*n^2 +w*x^2 +n*o^2 +a*b^2\n"
    "+v*w^2 +p*q^2 +q*r^2 +t*u^2 +o*p^2 +u*v^2 +x*y^2 +a^2*z";

// The printed rspray() example.
inline Spray rspray_example(Backend b = default_backend) {
    const std::vector<MultiIndex> rows{{2, 1, 2}, {0, 2, 2}, {0, 0, 1}, {1, 2, 1},
                                       {2, 1, 0}, {1, 2, 2}, {0, 0, 2}};
    const std::vector<double> vals{8, 2, 8, 4, 6, 8, 9};
    return Spray(rows, vals, 3, b);
}

struct RandomSprayParams {
    std::size_t arity = 2;
    std::size_t max_terms = 6;
    Exponent min_exp = -3;
    Exponent max_exp = 3;
    int max_coeff = 9;  // integer coefficients in [-max_coeff, max_coeff] \ {0}
};

inline Spray random_spray(std::mt19937_64& rng, const RandomSprayParams& params,
                          Backend b = default_backend) {
    std::uniform_int_distribution<std::size_t> nterms(0, params.max_terms);
    std::uniform_int_distribution<Exponent> exps(params.min_exp, params.max_exp);
    std::uniform_int_distribution<int> coeff(1, params.max_coeff);
    std::bernoulli_distribution negative(0.5);
    Spray out(params.arity, b);
    const std::size_t n = nterms(rng);
    for (std::size_t t = 0; t < n; ++t) {
        MultiIndex idx(params.arity);
        for (auto& e : idx) e = exps(rng);
        const int c = coeff(rng);
        out.add_term(idx, negative(rng) ? -c : c);
    }
    return out;
}

// Scans every stored coefficient for an exact zero.
inline bool has_stored_zero(const Spray& p) {
    bool found = false;
    p.for_each([&](const MultiIndex&, double v) { found = found || v == 0.0; });
    return found;
}

}  // namespace spray::testing
