#pragma once

#include "heckeposet/composition.hpp"
#include "heckeposet/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace heckeposet {

// A finite linear combination of basis elements indexed by compositions,
// with exact rational coefficients. Which basis the indices refer to is up
// to the caller; conversions below are explicit.
class QsymElement {
public:
    QsymElement() = default;

    void add(const Composition& index, const Rational& coeff);
    Rational coeff(const Composition& index) const;
    const std::map<Composition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    QsymElement& operator+=(const QsymElement& o);
    QsymElement& operator-=(const QsymElement& o);
    QsymElement& operator*=(const Rational& r);
    friend QsymElement operator+(QsymElement a, const QsymElement& b) { return a += b; }
    friend QsymElement operator-(QsymElement a, const QsymElement& b) { return a -= b; }

    bool operator==(const QsymElement& o) const = default;

    // "M(2,3,1) + 3/5 M(5,1)" style, terms in canonical index order.
    std::string to_string(const std::string& basis) const;

private:
    std::map<Composition, Rational> terms_;
};

using QsymTensor = std::map<std::pair<Composition, Composition>, Rational>;

// Type 1 quasisymmetric power sum in the monomial basis:
// Psi_alpha = z_alpha * sum over coarsenings beta of M_beta / pi(alpha, beta).
QsymElement psi_in_monomial(const Composition& alpha);

// F_alpha = sum of M_beta over refinements beta of alpha, and its inverse
// M_alpha = sum of (-1)^(l(beta) - l(alpha)) F_beta.
QsymElement fundamental_to_monomial(const Composition& alpha);
QsymElement monomial_to_fundamental(const Composition& alpha);
QsymElement fundamental_to_monomial(const QsymElement& x);
QsymElement monomial_to_fundamental(const QsymElement& x);

// Rewrites a monomial-basis element over the Psi basis by exact triangular
// back-substitution (finest compositions first).
QsymElement expand_in_psi(const QsymElement& monomial);

// Product and deconcatenation coproduct in the monomial basis; the product
// is the quasi-shuffle of indices.
QsymElement product(const QsymElement& a, const QsymElement& b);
QsymTensor coproduct(const QsymElement& x);

// The two standard involutions on fundamental-basis elements:
// rho sends F_alpha to F_reverse(alpha), psi sends F_alpha to F_complement(alpha).
QsymElement invol_rho(const QsymElement& fundamental);
QsymElement invol_psi(const QsymElement& fundamental);

// Symmetric power sum p_lambda as a quasisymmetric function in the monomial
// basis, via the quasi-shuffle product of the M_(k).
QsymElement power_sum_in_monomial(const Partition& lambda);

std::string tensor_to_string(const QsymTensor& t, const std::string& basis);

}  // namespace heckeposet
