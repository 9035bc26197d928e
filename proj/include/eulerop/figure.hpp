#pragma once

// Real parts of the indicial roots α_j(c) and of the comparison roots β_j(c)
// along the compressed coordinate x = sgn(c)|c|^{1/(2n)}, i.e. c = sgn(x)|x|^{2n}.

#include "rootcount.hpp"

#include <vector>

namespace eulerop {

struct FigurePoint {
    Rational x;
    Rational c;
    std::vector<BigFloat> reAlpha;  // canonical order, repeated by multiplicity
    std::vector<BigFloat> reBeta;
};

inline Rational coupling_from_axis(int n, const Rational& x) {
    Rational c = pow(abs(x), static_cast<unsigned long>(2 * n));
    return x < 0 ? Rational(-c) : c;
}

inline FigurePoint figure_point(int n, const Rational& x, precision_t precision = kDefaultPrecision) {
    FigurePoint p;
    p.x = x;
    p.c = coupling_from_axis(n, x);
    NumericOptions opt;
    opt.precision = precision;
    for (const auto& a : numeric_roots(n, p.c, opt).labeled()) p.reAlpha.push_back(a.re.with_precision(precision));
    for (const auto& b : beta_roots(n, p.c, precision)) p.reBeta.push_back(b.re);
    return p;
}

inline std::vector<FigurePoint> figure1_data(int n, const std::vector<Rational>& xs,
                                             precision_t precision = kDefaultPrecision) {
    require_order(n);
    std::vector<FigurePoint> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(figure_point(n, x, precision));
    return out;
}

}  // namespace eulerop
