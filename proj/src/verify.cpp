#include "heckeposet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "heckeposet/borderstrips.hpp"
#include "heckeposet/composition.hpp"
#include "heckeposet/hecke.hpp"
#include "heckeposet/permutation.hpp"
#include "heckeposet/poset.hpp"
#include "heckeposet/ppart.hpp"
#include "heckeposet/qsym.hpp"
#include "heckeposet/tableaux.hpp"

namespace heckeposet {
namespace {

constexpr size_t kMaxFailures = 20;

struct Harness {
    SuiteResult result;

    explicit Harness(std::string name, int n_max) {
        result.name = std::move(name);
        result.n_max = n_max;
    }
    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) {
            result.passed = false;
            if (result.failures.size() < kMaxFailures) result.failures.push_back(what);
        }
    }
};

using Matrix = std::vector<std::vector<long long>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Matrix transpose(const Matrix& a) {
    size_t n = a.size();
    Matrix out(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[j][i] = a[i][j];
    return out;
}

Matrix negate(Matrix a) {
    for (auto& row : a)
        for (auto& v : row) v = -v;
    return a;
}

Matrix bijection_matrix(const TwistData& t) {
    size_t n = t.source.basis.size();
    Matrix out(n, std::vector<long long>(n, 0));
    for (size_t b = 0; b < n; ++b)
        out[b][static_cast<size_t>(t.image[b])] = t.sign[b];
    return out;
}

Poset random_poset(std::mt19937& rng, int n) {
    while (true) {
        std::vector<std::pair<int, int>> relations;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                switch (rng() % 3) {
                    case 0: relations.emplace_back(i, j); break;
                    case 1: relations.emplace_back(j, i); break;
                    default: break;
                }
            }
        try {
            return Poset(n, relations);
        } catch (const std::invalid_argument&) {
        }
    }
}

QsymElement starred_as_qsym(const std::map<Composition, long long>& d) {
    QsymElement out;
    for (const auto& [beta, c] : d) out.add(beta, Rational(c, z_stat(beta)));
    return out;
}

QsymElement psi_coefficients(const Poset& p) {
    QsymElement psi = expand_in_psi(fundamental_to_monomial(kp_fundamental(p)));
    return psi;
}

SuiteResult suite_relations(int n_max) {
    Harness h("relations", n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (const Poset& p : all_posets_on(n)) {
            h.check(check_relations(poset_module(p)), "module relations fail: " + p.to_string());
            h.check(check_relations(poset_module_bar(p)),
                    "idempotent module relations fail: " + p.to_string());
        }
        for (Side side : {Side::Left, Side::Right}) {
            auto leq = side == Side::Left ? leq_left : leq_right;
            for (const Permutation& rho : all_permutations(n)) {
                for (const Permutation& sigma : all_permutations(n)) {
                    if (!leq(sigma, rho)) continue;
                    for (GenFamily family : {GenFamily::Pi, GenFamily::PiBar}) {
                        h.check(check_relations(interval_module(side, family, sigma, rho)),
                                "interval module relations fail: " + sigma.to_string() + ".." +
                                    rho.to_string());
                    }
                }
            }
        }
    }
    return h.result;
}

SuiteResult suite_interval(int n_max) {
    Harness h("interval", n_max);
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        for (const Poset& p : all_posets_on(n)) {
            auto ext = p.sigma_R();
            // Locate minimum and maximum length elements.
            const Permutation* bottom = nullptr;
            const Permutation* top = nullptr;
            for (const auto& g : ext) {
                if (!bottom || g.length() < bottom->length()) bottom = &g;
                if (!top || g.length() > top->length()) top = &g;
            }
            bool is_interval = false;
            if (bottom && top && leq_right(*bottom, *top)) {
                auto iv = interval(Side::Right, *bottom, *top);
                is_interval = iv.elements == ext;
            }
            h.check(p.is_regular() == is_interval,
                    "regularity and interval property disagree: " + p.to_string());
            if (p.is_regular() && is_interval) {
                h.check(poset_from_interval(*bottom, *top) == p,
                        "interval round trip misses the poset: " + p.to_string());
            }
        }
        for (const Permutation& rho : all_permutations(n)) {
            for (const Permutation& sigma : all_permutations(n)) {
                if (!leq_right(sigma, rho)) continue;
                Poset q = poset_from_interval(sigma, rho);
                h.check(q.is_regular(), "interval poset is irregular: " + sigma.to_string() +
                                            ".." + rho.to_string());
                h.check(q.sigma_R() == interval(Side::Right, sigma, rho).elements,
                        "interval poset has wrong extensions: " + sigma.to_string() + ".." +
                            rho.to_string());
            }
        }
    }
    return h.result;
}

SuiteResult suite_hopf(int n_max) {
    Harness h("hopf", n_max);
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 200; ++trial) {
        int a = 1 + static_cast<int>(rng() % 6);
        int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(7 - a));
        Poset p = random_poset(rng, a);
        Poset q = random_poset(rng, b);
        QsymElement lhs = fundamental_to_monomial(characteristic_of_poset_module(disjoint_union(p, q)));
        QsymElement rhs = product(fundamental_to_monomial(characteristic_of_poset_module(p)),
                                  fundamental_to_monomial(characteristic_of_poset_module(q)));
        h.check(lhs == rhs,
                "union characteristic is not the product: " + p.to_string() + " | " + q.to_string());
    }
    for (int n = 1; n <= n_max; ++n) {
        for (const Poset& p : all_posets_on(n)) {
            QsymTensor lhs = coproduct(fundamental_to_monomial(kp_fundamental(p)));
            QsymTensor rhs;
            for (int m = 0; m <= n; ++m) {
                for (const auto& [low, rest] : restrict(p, m)) {
                    QsymElement a = fundamental_to_monomial(kp_fundamental(low));
                    QsymElement b = fundamental_to_monomial(kp_fundamental(rest));
                    for (const auto& [ia, ca] : a.terms())
                        for (const auto& [ib, cb] : b.terms()) rhs[{ia, ib}] += ca * cb;
                }
            }
            auto trim = [](QsymTensor& t) {
                for (auto it = t.begin(); it != t.end();)
                    it = it->second == 0 ? t.erase(it) : std::next(it);
            };
            trim(lhs);
            trim(rhs);
            h.check(lhs == rhs, "coproduct misses the lower set sum: " + p.to_string());
        }
    }
    return h.result;
}

SuiteResult suite_twists(int n_max) {
    Harness h("twists", n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (const Poset& p : all_posets_on(n)) {
            QsymElement base = characteristic(poset_module(p));
            for (Twist which : {Twist::Phi, Twist::Theta, Twist::Chi}) {
                TwistData t = twist(p, which);
                Matrix pi = bijection_matrix(t);
                bool ok = true;
                for (int i = 1; i <= t.source.generator_count(); ++i) {
                    Matrix lhs, rhs;
                    switch (which) {
                        case Twist::Phi:
                            lhs = multiply(t.source.matrix(i), pi);
                            rhs = multiply(pi, t.target.matrix(n - i));
                            break;
                        case Twist::Theta:
                            lhs = multiply(t.source.matrix(i), pi);
                            rhs = negate(multiply(pi, t.target.matrix(i)));
                            break;
                        case Twist::Chi: {
                            // The dual basis carries the transposed idempotent
                            // action, whose matrix is the pibar matrix plus 1.
                            Matrix dual = t.source.matrix(i);
                            for (size_t d = 0; d < dual.size(); ++d) dual[d][d] += 1;
                            lhs = multiply(transpose(dual), pi);
                            rhs = multiply(pi, t.target.matrix(i));
                            break;
                        }
                    }
                    ok = ok && lhs == rhs;
                }
                h.check(ok, "twist intertwiner fails: " + p.to_string());
                QsymElement twisted = characteristic(t.target);
                QsymElement expected = which == Twist::Phi   ? invol_rho(base)
                                       : which == Twist::Theta ? invol_psi(base)
                                                               : base;
                h.check(twisted == expected, "twist characteristic fails: " + p.to_string());
            }
        }
    }
    return h.result;
}

SuiteResult suite_liu_weselcouch(int n_max) {
    Harness h("liu-weselcouch", n_max);
    for (int n = 1; n <= std::min(n_max, 5); ++n) {
        for (const Poset& p : all_posets_on(n)) {
            h.check(psi_coefficients(p) == starred_as_qsym(kp_in_psi_via_starred(p)),
                    "starred expansion disagrees: " + p.to_string());
        }
    }
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 100; ++trial) {
        Poset p = random_poset(rng, 5);
        h.check(psi_coefficients(p) == starred_as_qsym(kp_in_psi_via_starred(p)),
                "starred expansion disagrees: " + p.to_string());
    }
    for (int n = 1; n <= 7; ++n) {
        std::set<Composition> partitions;
        for (const auto& alpha : compositions_of(n))
            partitions.insert(sort_to_partition(alpha).as_composition());
        for (const auto& lambda : partitions) {
            QsymElement sum;
            for (const auto& alpha : compositions_of(n)) {
                if (sort_to_partition(alpha).as_composition() == lambda)
                    sum += psi_in_monomial(alpha);
            }
            h.check(sum == power_sum_in_monomial(Partition(lambda.parts())),
                    "power sum refinement fails: " + lambda.to_string());
        }
    }
    return h.result;
}

SuiteResult suite_borderstrips(int n_max) {
    Harness h("borderstrips", n_max);
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
        for (const auto& alpha : compositions_of(n)) {
            QsymElement dimm = kp_fundamental(poset_dual_immaculate(alpha));
            QsymElement ext = kp_fundamental(poset_extended(alpha));
            QsymElement sit, set;
            for (const auto& t : standard_tableaux(TabKind::SIT, alpha))
                sit.add(comp_of(t.descents(), n), 1);
            for (const auto& t : standard_tableaux(TabKind::SET, alpha))
                set.add(comp_of(t.descents(), n), 1);
            h.check(dimm == sit, "dual immaculate characteristic: " + alpha.to_string());
            h.check(ext == set, "extended characteristic: " + alpha.to_string());

            QsymElement srct, classes;
            for (const auto& t : srct_enumerate(alpha)) srct.add(comp_of(t.descents(), n), 1);
            for (const auto& e : srct_classes(alpha))
                classes += kp_fundamental(poset_quasischur(e));
            h.check(srct == classes, "quasisymmetric class characteristics: " + alpha.to_string());

            h.check(kp_fundamental(twisted_poset(TwistedFamily::RDIF, alpha)) == invol_psi(dimm),
                    "row-strict dual immaculate: " + alpha.to_string());
            h.check(kp_fundamental(twisted_poset(TwistedFamily::RESF, alpha)) == invol_psi(ext),
                    "row-strict extended: " + alpha.to_string());
            for (const auto& e : srct_classes(alpha)) {
                QsymElement cls = kp_fundamental(poset_quasischur(e));
                h.check(kp_fundamental(twisted_poset(TwistedFamily::YQS, e)) == invol_rho(cls),
                        "Young class twist: " + alpha.to_string());
                h.check(kp_fundamental(twisted_poset(TwistedFamily::YRQS, e)) == invol_psi(cls),
                        "Young row-strict class twist: " + alpha.to_string());
                h.check(kp_fundamental(twisted_poset(TwistedFamily::RQS, e)) ==
                            invol_rho(invol_psi(cls)),
                        "row-strict class twist: " + alpha.to_string());
            }

            auto nonzero = [](std::map<Composition, long long> m) {
                for (auto it = m.begin(); it != m.end();)
                    it = it->second == 0 ? m.erase(it) : std::next(it);
                return m;
            };
            h.check(nonzero(expand_in_psi(StripFlavor::DualImmaculate, alpha)) ==
                        kp_in_psi_via_starred(poset_dual_immaculate(alpha)),
                    "dual immaculate strip vector: " + alpha.to_string());
            h.check(nonzero(expand_in_psi(StripFlavor::Extended, alpha)) ==
                        kp_in_psi_via_starred(poset_extended(alpha)),
                    "extended strip vector: " + alpha.to_string());
        }
    }
    return h.result;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"relations", "interval", "hopf", "twists", "liu-weselcouch", "borderstrips"};
}

SuiteResult run_suite(const std::string& name, int n_max) {
    if (n_max < 1 || n_max > 9) throw std::invalid_argument("bound must be between 1 and 9");
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    if (name == "relations") r = suite_relations(n_max);
    else if (name == "interval") r = suite_interval(n_max);
    else if (name == "hopf") r = suite_hopf(n_max);
    else if (name == "twists") r = suite_twists(n_max);
    else if (name == "liu-weselcouch") r = suite_liu_weselcouch(n_max);
    else if (name == "borderstrips") r = suite_borderstrips(n_max);
    else throw std::invalid_argument("unknown suite: " + name);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<SuiteResult> run_suites(const std::string& name, int n_max) {
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const auto& suite : suite_names()) out.push_back(run_suite(suite, n_max));
    } else {
        out.push_back(run_suite(name, n_max));
    }
    return out;
}

std::string report_to_json(const std::vector<SuiteResult>& results) {
    nlohmann::json j;
    j["suites"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        nlohmann::json s;
        s["name"] = r.name;
        s["n"] = r.n_max;
        s["passed"] = r.passed;
        s["checks"] = r.checks;
        s["seconds"] = r.seconds;
        s["failures"] = r.failures;
        j["suites"].push_back(s);
        all = all && r.passed;
    }
    j["passed"] = all;
    return j.dump(2);
}

}  // namespace heckeposet
