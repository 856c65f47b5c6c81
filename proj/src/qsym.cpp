#include "heckeposet/qsym.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heckeposet {

void QsymElement::add(const Composition& index, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational QsymElement::coeff(const Composition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

QsymElement& QsymElement::operator+=(const QsymElement& o) {
    for (const auto& [c, r] : o.terms_) add(c, r);
    return *this;
}

QsymElement& QsymElement::operator-=(const QsymElement& o) {
    for (const auto& [c, r] : o.terms_) add(c, -r);
    return *this;
}

QsymElement& QsymElement::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_) v *= r;
    return *this;
}

std::string QsymElement::to_string(const std::string& basis) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [c, r] : terms_) {
        Rational a = r;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) out << heckeposet::to_string(a) << " ";
        out << basis << c.to_string();
        first = false;
    }
    return out.str();
}

QsymElement psi_in_monomial(const Composition& alpha) {
    QsymElement out;
    Rational z(z_stat(alpha));
    for (const auto& beta : coarsenings_of(alpha))
        out.add(beta, z / pi_pair(alpha, beta));
    return out;
}

QsymElement fundamental_to_monomial(const Composition& alpha) {
    QsymElement out;
    for (const auto& beta : refinements_of(alpha)) out.add(beta, 1);
    return out;
}

QsymElement monomial_to_fundamental(const Composition& alpha) {
    QsymElement out;
    for (const auto& beta : refinements_of(alpha)) {
        int sign = (beta.length() - alpha.length()) % 2 ? -1 : 1;
        out.add(beta, sign);
    }
    return out;
}

QsymElement fundamental_to_monomial(const QsymElement& x) {
    QsymElement out;
    for (const auto& [c, r] : x.terms()) {
        QsymElement piece = fundamental_to_monomial(c);
        piece *= r;
        out += piece;
    }
    return out;
}

QsymElement monomial_to_fundamental(const QsymElement& x) {
    QsymElement out;
    for (const auto& [c, r] : x.terms()) {
        QsymElement piece = monomial_to_fundamental(c);
        piece *= r;
        out += piece;
    }
    return out;
}

QsymElement expand_in_psi(const QsymElement& monomial) {
    // The change of basis is triangular for refinement but not unitriangular:
    // the coefficient of M_beta in Psi_beta is the product of the part
    // multiplicity factorials. Solve finest-first with exact division.
    std::vector<int> sizes;
    for (const auto& [c, r] : monomial.terms()) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    QsymElement result;
    for (int n : sizes) {
        auto comps = compositions_of(n);
        std::sort(comps.begin(), comps.end(), [](const Composition& a, const Composition& b) {
            if (a.length() != b.length()) return a.length() > b.length();
            return a < b;
        });
        std::map<Composition, Rational> c;
        for (const auto& beta : comps) {
            Rational acc = monomial.coeff(beta);
            for (const auto& gamma : refinements_of(beta)) {
                if (gamma == beta) continue;
                auto it = c.find(gamma);
                if (it == c.end() || it->second == 0) continue;
                acc -= it->second * Rational(z_stat(gamma)) / pi_pair(gamma, beta);
            }
            acc *= Rational(pi_pair(beta, beta)) / z_stat(beta);
            c[beta] = acc;
            result.add(beta, acc);
        }
    }
    return result;
}

namespace {

void quasi_shuffles(const std::vector<int>& a, size_t i, const std::vector<int>& b, size_t j,
                    std::vector<int>& acc, QsymElement& out, const Rational& weight) {
    if (i == a.size() && j == b.size()) {
        out.add(Composition(acc), weight);
        return;
    }
    if (i < a.size()) {
        acc.push_back(a[i]);
        quasi_shuffles(a, i + 1, b, j, acc, out, weight);
        acc.pop_back();
    }
    if (j < b.size()) {
        acc.push_back(b[j]);
        quasi_shuffles(a, i, b, j + 1, acc, out, weight);
        acc.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        acc.push_back(a[i] + b[j]);
        quasi_shuffles(a, i + 1, b, j + 1, acc, out, weight);
        acc.pop_back();
    }
}

}  // namespace

QsymElement product(const QsymElement& a, const QsymElement& b) {
    QsymElement out;
    for (const auto& [ca, ra] : a.terms())
        for (const auto& [cb, rb] : b.terms()) {
            std::vector<int> acc;
            quasi_shuffles(ca.parts(), 0, cb.parts(), 0, acc, out, ra * rb);
        }
    return out;
}

QsymTensor coproduct(const QsymElement& x) {
    QsymTensor out;
    for (const auto& [c, r] : x.terms()) {
        const auto& parts = c.parts();
        for (size_t cut = 0; cut <= parts.size(); ++cut) {
            Composition left(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(cut)));
            Composition right(std::vector<int>(parts.begin() + static_cast<long>(cut), parts.end()));
            auto key = std::make_pair(left, right);
            auto [it, inserted] = out.emplace(key, r);
            if (!inserted) {
                it->second += r;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

QsymElement invol_rho(const QsymElement& fundamental) {
    QsymElement out;
    for (const auto& [c, r] : fundamental.terms()) out.add(c.reverse(), r);
    return out;
}

QsymElement invol_psi(const QsymElement& fundamental) {
    QsymElement out;
    for (const auto& [c, r] : fundamental.terms()) out.add(c.complement(), r);
    return out;
}

QsymElement power_sum_in_monomial(const Partition& lambda) {
    QsymElement out;
    out.add(Composition(std::vector<int>{}), 1);
    for (int part : lambda.parts()) {
        QsymElement factor;
        factor.add(Composition({part}), 1);
        out = product(out, factor);
    }
    return out;
}

std::string tensor_to_string(const QsymTensor& t, const std::string& basis) {
    if (t.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, r] : t) {
        Rational a = r;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) out << to_string(a) << " ";
        out << basis << key.first.to_string() << " (x) " << basis << key.second.to_string();
        first = false;
    }
    return out.str();
}

}  // namespace heckeposet
