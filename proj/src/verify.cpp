#include "gltrace/verify.hpp"

#include "gltrace/fq.hpp"
#include "gltrace/measures.hpp"
#include "gltrace/symfunc.hpp"
#include "gltrace/traces.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gltrace {

void VerifyReport::check(std::string identity, std::string instance, std::string left, std::string right) {
    const bool pass = left == right;
    rows.push_back({std::move(identity), std::move(instance), std::move(left), std::move(right), pass});
}

void VerifyReport::record(std::string identity, std::string instance, std::string left, std::string right,
                          bool pass) {
    rows.push_back({std::move(identity), std::move(instance), std::move(left), std::move(right), pass});
}

bool VerifyReport::passed() const { return !rows.empty() && failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.pass; }));
}

namespace {

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string qn(int q, int n) { return "q=" + std::to_string(q) + " n=" + std::to_string(n); }

Rational group_order(int n, int q) {
    Rational v(1);
    for (int i = 0; i < n; ++i) v *= Rational(q).pow(n) - Rational(q).pow(i);
    return v;
}

// q^{n(nu)} K_{lambda,nu}(q^{-1})
Rational unipotent_value_formula(const Partition& lambda, const Partition& nu, int q) {
    return Rational(q).pow(nu.n_stat()) * kostka_foulkes(lambda, nu).evaluate(Rational(1, q));
}

Family unipotent_class(const Partition& nu) {
    if (nu.empty()) return Family();
    return Family({{kUnitTag, 1, nu}});
}

std::string join(const std::set<long>& values) {
    std::string s;
    for (long v : values) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s.empty() ? "none" : s;
}

// ---- symmetric functions ---------------------------------------------------------

void suite_hl_kostka_foulkes(VerifyReport& rep) {
    const std::string id = "schur_expand(Q~_lambda(t)) = K_{mu,lambda}(t)";
    for (const Rational& t : {Rational(1, 2), Rational(1, 3)}) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                const auto expanded = schur_expand(modified_hl_q(lambda, t));
                for (const auto& mu : partitions_of(n)) {
                    const auto it = expanded.find(mu);
                    const Rational left = it == expanded.end() ? Rational(0) : it->second;
                    rep.check(id, "t=" + t.to_string() + " lambda=" + paren(lambda) + " mu=" + paren(mu),
                              left.to_string(), kostka_foulkes(mu, lambda).evaluate(t).to_string());
                }
            }
        }
    }
    // Symbolic in t: clear the M_q denominators with D(t) = prod_{k<=n} (1 - t^k).
    for (int n = 1; n <= 4; ++n) {
        RationalPolynomial big(Rational(1));
        for (int k = 1; k <= n; ++k) big *= RationalPolynomial(Rational(1)) - RationalPolynomial::monomial(static_cast<std::size_t>(k));
        for (const auto& lambda : partitions_of(n)) {
            const auto q_in_p = hl_q_in_p_symbolic(lambda);
            for (const auto& mu : partitions_of(n)) {
                RationalPolynomial left;
                for (const auto& [rho, c] : q_in_p) {
                    RationalPolynomial denom(Rational(1));
                    for (int part : rho.parts()) {
                        denom *= RationalPolynomial(Rational(1)) - RationalPolynomial::monomial(static_cast<std::size_t>(part));
                    }
                    left += c * big.divide_exact(denom) * RationalPolynomial(Rational(sn_character(mu, rho)));
                }
                const RationalPolynomial right = to_rational(kostka_foulkes(mu, lambda)) * big;
                rep.check(id, "symbolic lambda=" + paren(lambda) + " mu=" + paren(mu), left.to_string(), right.to_string());
            }
        }
    }
}

void suite_unipotent_characters(VerifyReport& rep) {
    const std::string id = "chi^lambda(unipotent nu) = q^{n(nu)} K_{lambda,nu}(1/q)";
    for (int q : {2, 3}) {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& nu : partitions_of(n)) {
                const auto values = unipotent_character_values(unipotent_class(nu), Rational(q));
                for (const auto& lambda : partitions_of(n)) {
                    rep.check(id, qn(q, n) + " nu=" + paren(nu) + " lambda=" + paren(lambda), values.at(lambda).to_string(),
                              unipotent_value_formula(lambda, nu, q).to_string());
                }
            }
        }
    }
}

// ---- dimensions and branching -----------------------------------------------------

void suite_dimension_squares(VerifyReport& rep) {
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 4; ++n) {
            Rational sum;
            for (const auto& f : fq::families_enumerate(n, field)) {
                const Rational d = green_dimension(f, Rational(q));
                sum += d * d;
            }
            rep.check("sum_f dim(f)^2 = |GL(n,q)|", qn(q, n), sum.to_string(), group_order(n, q).to_string());
        }
    }
}

void suite_branching(VerifyReport& rep) {
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 4; ++n) {
            for (const auto& f : fq::families_enumerate(n, field)) {
                for (Variant v : {Variant::GLB, Variant::GLU}) {
                    const Rational dim = green_dimension(f, Rational(q));
                    Rational below;
                    for (const auto& g : branching_predecessors(f, v)) below += green_dimension(g, Rational(q));
                    rep.record(v == Variant::GLB ? "dim(f) >= sum over GLB predecessors"
                                                 : "dim(f) >= sum over GLU predecessors",
                               qn(q, n) + " f=" + f.to_string(), dim.to_string(), below.to_string(), dim >= below);
                }
            }
        }
    }
}

// ---- growth chain --------------------------------------------------------------

void suite_extension_count(VerifyReport& rep) {
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 4; ++n) {
            // Observed counts per (lambda, mu) across every unipotent g of type lambda.
            std::map<std::pair<Partition, Partition>, std::set<long>> seen;
            std::map<Partition, long> per_type;
            fq::for_each_unipotent(field, n, [&](const fq::Matrix& g) {
                const Partition lambda = fq::unipotent_class_of(g);
                ++per_type[lambda];
                const auto counts = fq::extension_type_counts(g);
                std::set<Partition> targets;
                for (const auto& [row, col] : lambda.addable_corners()) {
                    (void)col;
                    targets.insert(lambda.add_box(static_cast<std::size_t>(row - 1)));
                }
                for (const auto& [mu, c] : counts) targets.insert(mu);
                for (const auto& mu : targets) {
                    const auto it = counts.find(mu);
                    seen[{lambda, mu}].insert(it == counts.end() ? 0 : it->second);
                }
            });
            for (const auto& [key, values] : seen) {
                const auto& [lambda, mu] = key;
                const Rational expected = extension_count(lambda, mu, Rational(q));
                const bool pass = values.size() == 1 && Rational(*values.begin()) == expected;
                rep.record("#{h in Ext(g) of type mu} = N_{lambda,mu}",
                           qn(q, n) + " lambda=" + paren(lambda) + " mu=" + paren(mu) + " over " +
                               std::to_string(per_type[lambda]) + " matrices",
                           join(values), expected.to_string(), pass);
            }
        }
    }
}

void suite_haar_flatness(VerifyReport& rep) {
    for (int q : {2, 3}) {
        const auto haar = MeasureParams::haar(Rational(q));
        const Rational qi = Rational(1, q);
        for (int n = 0; n <= 8; ++n) {
            const Rational flat = Rational(q).pow(-static_cast<long>(n) * (n - 1) / 2);
            for (const auto& lambda : partitions_of(n)) {
                const std::string inst = qn(q, n) + " lambda=" + paren(lambda);
                rep.check("cyl(lambda) = q^{-n(n-1)/2}", inst, cyl_prob_hl(haar, lambda).to_string(), flat.to_string());
                const Rational sp = specialize(haar.specialization(), hl_q_in_p(lambda, qi));
                const Rational closed = (Rational(1) - qi).pow(n) * Rational(q).pow(-lambda.n_stat());
                rep.check("Sp[Q_lambda(1/q)] = (1-1/q)^n q^{-n(lambda)}", inst, sp.to_string(), closed.to_string());
            }
        }
    }
}

std::string describe(const MeasureParams& p) {
    auto seq = [](const std::vector<Frequency>& s) {
        std::string out;
        for (const auto& f : s) {
            if (!out.empty()) out += ',';
            out += f.value.to_string() + (f.spread ? "^q" : "");
        }
        return "(" + out + ")";
    };
    return "r=" + seq(p.r()) + " c=" + seq(p.c()) + " q=" + p.q().to_string();
}

// Rational (r, c) grid with total mass at most 1.
std::vector<MeasureParams> general_grid(const Rational& q) {
    std::vector<MeasureParams> out;
    const std::vector<Rational> values{Rational(0), Rational(1, 4), Rational(1, 2)};
    for (const auto& r : values) {
        for (const auto& c : values) {
            for (bool spread : {false, true}) {
                if (r.is_zero() && spread) continue;
                std::vector<Frequency> rs, cs;
                if (!r.is_zero()) rs.push_back({r, spread});
                if (!c.is_zero()) cs.push_back({c, false});
                out.emplace_back(rs, cs, q);
            }
        }
    }
    out.emplace_back(std::vector<Frequency>{{Rational(1, 2), false}, {Rational(1, 4), false}},
                     std::vector<Frequency>{{Rational(1, 4), false}}, q);
    out.emplace_back(std::vector<Frequency>{{Rational(1, 3), true}}, std::vector<Frequency>{{Rational(1, 3), false}, {Rational(1, 3), false}}, q);
    return out;
}

void normalization_rows(VerifyReport& rep, const MeasureParams& p, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        long classes = 0;
        std::string worst = "1";
        bool pass = true;
        for (const auto& lambda : partitions_of(n)) {
            if (cyl_prob(p, lambda).sign() <= 0) continue;
            ++classes;
            Rational sum;
            for (const auto& [mu, prob] : transitions(p, lambda)) sum += prob;
            if (sum != Rational(1) && pass) {
                pass = false;
                worst = sum.to_string() + " at " + paren(lambda);
            }
        }
        rep.record("sum_mu P(lambda -> mu) = 1",
                   describe(p) + " |lambda|=" + std::to_string(n) + " classes=" + std::to_string(classes), worst, "1",
                   pass && classes > 0);
    }
}

void suite_transition_normalization(VerifyReport& rep) {
    for (int q : {2, 3}) {
        for (const auto& p : {MeasureParams::haar(Rational(q)), MeasureParams::delta(Rational(q)),
                              MeasureParams::single_row(Rational(q))}) {
            normalization_rows(rep, p, 20);
        }
        for (const auto& p : general_grid(Rational(q))) normalization_rows(rep, p, 8);
    }
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void suite_lln_haar(VerifyReport& rep) {
    const auto report = lln_experiment(MeasureParams::haar(Rational(2)), 1000, 200, 42, 2);
    const std::map<std::string, std::pair<double, double>> bands{{"lambda_1/n", {0.49, 0.51}},
                                                                 {"lambda_2/n", {0.24, 0.26}}};
    for (const auto& row : report.rows) {
        const auto it = bands.find(row.statistic);
        if (it == bands.end()) continue;
        const auto [lo, hi] = it->second;
        rep.record("mean " + row.statistic + " in band around " + row.predicted.to_string(),
                   "haar q=2 nmax=1000 trials=200 seed=42 stderr=" + fixed6(row.std_error), fixed6(row.empirical),
                   "[" + fixed6(lo) + ", " + fixed6(hi) + "]", row.empirical >= lo && row.empirical <= hi);
    }
}

void suite_parameter_map(VerifyReport& rep) {
    const std::vector<Specialization> grid{
        Specialization::thoma({Rational(1)}, {}),
        Specialization::thoma({}, {Rational(1)}),
        Specialization::thoma({Rational(1, 2), Rational(1, 2)}, {}),
        Specialization::thoma({Rational(1, 4)}, {Rational(1, 4)}),
        Specialization::thoma({Rational(1, 2)}, {Rational(1, 3)}),
        Specialization::thoma({Rational(1, 3)}, {Rational(1, 2), Rational(1, 6)}),
    };
    for (int q : {2, 3}) {
        for (const auto& sp : grid) {
            const auto params = params_from_trace(sp, Rational(q));
            for (int n = 0; n <= 5; ++n) {
                for (const auto& lambda : partitions_of(n)) {
                    rep.check("trace cylinder = cyl(r = alpha^(q), c = beta)", describe(params) + " lambda=" + paren(lambda),
                              cyl_prob_from_trace(sp, lambda, Rational(q)).to_string(),
                              cyl_prob(params, lambda).to_string());
                }
            }
        }
    }
}

void suite_consistency(VerifyReport& rep) {
    std::vector<MeasureParams> params{MeasureParams::haar(Rational(2)), MeasureParams::delta(Rational(2)),
                                      MeasureParams::single_row(Rational(2))};
    params.emplace_back(std::vector<Frequency>{{Rational(1, 4), false}}, std::vector<Frequency>{{Rational(1, 4), false}},
                        Rational(2));
    params.emplace_back(std::vector<Frequency>{{Rational(1, 2), true}}, std::vector<Frequency>{{Rational(1, 3), false}},
                        Rational(3));
    for (const auto& p : params) {
        for (int n = 0; n <= 10; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                Rational total;
                for (const auto& [row, col] : lambda.addable_corners()) {
                    (void)col;
                    const Partition mu = lambda.add_box(static_cast<std::size_t>(row - 1));
                    total += extension_count(lambda, mu, p.q()) * cyl_prob_hl(p, mu);
                }
                rep.check("cyl(lambda) = sum_mu N_{lambda,mu} cyl(mu)", describe(p) + " lambda=" + paren(lambda),
                          cyl_prob_hl(p, lambda).to_string(), total.to_string());
            }
        }
    }
    for (int q : {2, 3}) {
        for (const auto& p : {MeasureParams::haar(Rational(q)), MeasureParams::delta(Rational(q)),
                              MeasureParams::single_row(Rational(q))}) {
            for (int n = 0; n <= 8; ++n) {
                for (const auto& lambda : partitions_of(n)) {
                    rep.check("closed-form cyl = Hall-Littlewood cyl", describe(p) + " lambda=" + paren(lambda),
                              cyl_prob(p, lambda).to_string(), cyl_prob_hl(p, lambda).to_string());
                }
            }
        }
    }
}

void suite_positivity(VerifyReport& rep) {
    for (int q : {2, 3}) {
        for (const auto& p : general_grid(Rational(q))) {
            long checked = 0;
            std::string first_negative = "none";
            for (int n = 0; n <= 8; ++n) {
                for (const auto& lambda : partitions_of(n)) {
                    ++checked;
                    const Rational v = cyl_prob_hl(p, lambda);
                    if (v.sign() < 0 && first_negative == "none") first_negative = v.to_string() + " at " + paren(lambda);
                }
            }
            rep.record("cyl(lambda) >= 0 for |lambda| <= 8", describe(p) + " classes=" + std::to_string(checked),
                       first_negative, "none", first_negative == "none");
        }
    }
}

// ---- flag oracles --------------------------------------------------------------

fq::Matrix unipotent_jordan(const fq::FieldPtr& field, const Partition& nu) {
    fq::Matrix m = fq::Matrix::identity(field, nu.size());
    int offset = 0;
    for (int part : nu.parts()) {
        for (int i = 0; i + 1 < part; ++i) m.set(offset + i, offset + i + 1, 1);
        offset += part;
    }
    return m;
}

void suite_flag_characters(VerifyReport& rep) {
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 3; ++n) {
            std::map<std::pair<Partition, Partition>, std::set<long>> seen;
            fq::for_each_unipotent(field, n, [&](const fq::Matrix& g) {
                const Partition nu = fq::unipotent_class_of(g);
                for (const auto& mu : partitions_of(n)) seen[{nu, mu}].insert(fq::count_fixed_flags(g, mu));
            });
            for (const auto& [key, values] : seen) {
                const auto& [nu, mu] = key;
                Rational expected;
                for (const auto& lambda : partitions_of(n)) {
                    expected += Rational(kostka(lambda, mu)) * unipotent_value_formula(lambda, nu, q);
                }
                rep.record("psi_mu(g) = sum_lambda K_{lambda,mu} q^{n(nu)} K_{lambda,nu}(1/q)",
                           qn(q, n) + " nu=" + paren(nu) + " mu=" + paren(mu), join(values), expected.to_string(),
                           values.size() == 1 && Rational(*values.begin()) == expected);
            }
        }
    }
}

void suite_spherical(VerifyReport& rep) {
    const int q = 2;
    const auto field = fq::field_make(q);
    const std::vector<std::pair<Rational, Rational>> points{{Rational(1, 2), Rational(1, 2)},
                                                             {Rational(1, 3), Rational(2, 3)}};
    for (int n = 1; n <= 3; ++n) {
        std::map<std::string, std::map<Partition, Rational>> chi_cache;
        std::map<std::string, std::set<std::string>> seen;  // per (class, t) the left values observed
        std::map<std::string, std::string> expected;
        fq::for_each_matrix(field, n, [&](const fq::Matrix& g) {
            if (!g.invertible()) return;
            const ClassLabel cls = fq::class_of(g);
            const std::string key = cls.to_string();
            auto it = chi_cache.find(key);
            if (it == chi_cache.end()) it = chi_cache.emplace(key, unipotent_character_values(cls, Rational(q))).first;
            std::vector<long> fixed;
            for (int d = 0; d <= n; ++d) fixed.push_back(fq::count_fixed_subspaces(g, d));
            for (const auto& [t1, t2] : points) {
                Rational left;
                for (int d = 0; d <= n; ++d) left += t1.pow(d) * t2.pow(n - d) * Rational(fixed[static_cast<std::size_t>(d)]);
                const auto sp = Specialization::finite({std::max(t1, t2), std::min(t1, t2)}, {}, t1 + t2);
                Rational right;
                for (const auto& [lambda, chi] : it->second) right += specialize(sp, schur_in_p(lambda)) * chi;
                const std::string inst = "n=" + std::to_string(n) + " class=" + key + " t=(" + t1.to_string() + "," +
                                         t2.to_string() + ")";
                seen[inst].insert(left.to_string());
                expected[inst] = right.to_string();
            }
        });
        for (const auto& [inst, lefts] : seen) {
            std::string left;
            for (const auto& l : lefts) left += (left.empty() ? "" : " ") + l;
            rep.record("sum_d t1^d t2^(n-d) #fixed(g,d) = sum_lambda s_lambda(t1,t2) chi^lambda(g)", inst, left,
                       expected[inst], lefts.size() == 1 && *lefts.begin() == expected[inst]);
        }
    }
}

void suite_companion_flags(VerifyReport& rep) {
    const auto f2 = fq::field_make(2);
    const auto f4 = fq::field_make(4);
    const auto quad = fq::irreducible_polys(f2, 2).at(0);
    const std::string tag = fq::poly_tag(f2, quad);
    for (int m = 1; m <= 3; ++m) {
        for (const auto& nu : partitions_of(m)) {
            const fq::Matrix g = fq::companion_jordan(f2, quad, nu);
            const fq::Matrix u = unipotent_jordan(f4, nu);
            const auto chi = unipotent_character_values(Family({{tag, 2, nu}}), Rational(2));
            for (const auto& mu : partitions_of(m)) {
                const Partition doubled = mu.scaled(2);
                const long over_f2 = fq::count_fixed_flags(g, doubled);
                const std::string inst = "nu=" + paren(nu) + " mu=" + paren(mu);
                rep.check("#fixed flags of type 2mu over F_2 = #fixed flags of type mu over F_4", inst,
                          std::to_string(over_f2), std::to_string(fq::count_fixed_flags(u, mu)));
                Rational expected;
                for (const auto& [lambda, value] : chi) expected += Rational(kostka(lambda, doubled)) * value;
                rep.check("psi_{2mu}(g) = sum_lambda K_{lambda,2mu} chi^lambda(g)", inst, std::to_string(over_f2),
                          expected.to_string());
            }
        }
    }
}

void suite_schubert(VerifyReport& rep) {
    for (int q : {2, 3}) {
        for (int n = 1; n <= 4; ++n) {
            for (int code = 0; code < (1 << n); ++code) {
                std::vector<int> x(static_cast<std::size_t>(n));
                int m = 0;
                long weighted = 0;
                std::string label;
                for (int i = 0; i < n; ++i) {
                    x[static_cast<std::size_t>(i)] = (code >> i) & 1;
                    m += x[static_cast<std::size_t>(i)];
                    weighted += (i + 1) * x[static_cast<std::size_t>(i)];
                    label += std::to_string(x[static_cast<std::size_t>(i)]);
                }
                rep.check("#cell(x) = q^{sum i x_i - m(m+1)/2}", "q=" + std::to_string(q) + " x=" + label,
                          std::to_string(fq::schubert_cell_count(x, q)),
                          Rational(q).pow(weighted - static_cast<long>(m) * (m + 1) / 2).to_string());
            }
        }
    }
}

void suite_class_coverage(VerifyReport& rep) {
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 3; ++n) {
            const auto families = fq::families_enumerate(n, field);
            std::set<std::string> expected_keys;
            for (const auto& f : families) {
                auto blocks = f.blocks();
                std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.tag < b.tag; });
                expected_keys.insert(Family(blocks).to_string());
            }
            std::set<std::string> seen;
            long invertible = 0, unmatched = 0;
            fq::for_each_matrix(field, n, [&](const fq::Matrix& g) {
                if (!g.invertible()) return;
                ++invertible;
                auto blocks = fq::class_of(g).blocks();
                std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.tag < b.tag; });
                const std::string key = Family(blocks).to_string();
                if (!expected_keys.count(key)) ++unmatched;
                seen.insert(key);
            });
            rep.check("#invertible matrices = |GL(n,q)|", qn(q, n), std::to_string(invertible), group_order(n, q).to_string());
            rep.check("#classes met = #families", qn(q, n), std::to_string(seen.size()), std::to_string(families.size()));
            rep.check("matrices outside every family", qn(q, n), std::to_string(unmatched), "0");
        }
    }
}

// ---- biregular and Steinberg ----------------------------------------------------

void suite_biregular(VerifyReport& rep) {
    for (int q : {2, 3, 4}) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                rep.check("Sp_principal(s_lambda) = (q-1)^|lambda| q^{n(lambda)} / prod (q^h - 1)",
                          "q=" + std::to_string(q) + " lambda=" + paren(lambda),
                          sp_principal_schur(lambda, Rational(q)).to_string(),
                          principal_schur_closed_form(lambda, Rational(q)).to_string());
            }
        }
    }
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 3; ++n) {
            Rational norm(1);
            for (int i = 1; i <= n; ++i) norm *= Rational(q - 1) / (Rational(q).pow(i) - Rational(1));
            Rational total;
            for (const auto& s : fq::families_enumerate(n, field)) {
                const Family rest = s.with_diagram(kUnitTag, 1, Partition());
                const Rational coeff = biregular_coefficient(rest, Rational(q)) * sp_principal_schur(s.unit_diagram(), Rational(q));
                const Rational dim = green_dimension(s, Rational(q));
                total += coeff * dim;
                rep.check("C(f) Sp_principal(s_lambda) = prod (q-1)/(q^i-1) dim", qn(q, n) + " s=" + s.to_string(),
                          coeff.to_string(), (norm * dim).to_string());
            }
            rep.check("sum_s coefficient * dim(s) = prod (q-1)/(q^i-1) |GL(n,q)|", qn(q, n), total.to_string(),
                      (norm * group_order(n, q)).to_string());
        }
    }
}

void suite_steinberg(VerifyReport& rep) {
    const auto steinberg = Specialization::thoma({}, {Rational(1)});
    for (int q : {2, 3, 4, 5}) {
        for (int n = 1; n <= 4; ++n) {
            rep.check("St(identity) = q^{n(n-1)/2}", qn(q, n),
                      unipotent_trace_value(steinberg, unipotent_class(Partition::column(n)), Rational(q)).to_string(),
                      Rational(q).pow(n * (n - 1) / 2).to_string());
        }
        const auto field = fq::field_make(q);
        const std::string tag = fq::poly_tag(field, fq::irreducible_polys(field, 2).at(0));
        rep.check("St(elliptic) = -1", "q=" + std::to_string(q) + " class=" + tag,
                  unipotent_trace_value(steinberg, Family({{tag, 2, Partition{1}}}), Rational(q)).to_string(), "-1");
    }
}

struct SuiteEntry {
    std::string name;
    std::string description;
    std::function<void(VerifyReport&)> run;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> suites{
        {"hl-kostka-foulkes", "Schur expansion of modified Q equals the Kostka-Foulkes column", suite_hl_kostka_foulkes},
        {"dimension-squares", "Squared irreducible dimensions add up to the group order", suite_dimension_squares},
        {"branching", "Dimension dominates the sum over GLB and GLU predecessors", suite_branching},
        {"extension-count", "Brute-force GLU extension types match N_{lambda,mu}", suite_extension_count},
        {"haar-flatness", "Geometric row frequencies give flat cylinders", suite_haar_flatness},
        {"transition-normalization", "Growth-chain probabilities out of each class add up to 1",
         suite_transition_normalization},
        {"lln-haar", "Monte Carlo row frequencies of the Haar chain", suite_lln_haar},
        {"parameter-map", "Trace cylinders equal measure cylinders under alpha -> alpha^(q)", suite_parameter_map},
        {"flag-characters", "Fixed-flag counts decompose through Kostka numbers", suite_flag_characters},
        {"spherical", "Fixed-subspace generating sums decompose through two-variable Schur values", suite_spherical},
        {"biregular", "Principal Schur values and biregular coefficients", suite_biregular},
        {"steinberg", "Steinberg character at the identity and on the elliptic class", suite_steinberg},
        {"unipotent-characters", "Unipotent character values equal q^{n(nu)} K(1/q)", suite_unipotent_characters},
        {"schubert", "Schubert cell sizes", suite_schubert},
        {"class-coverage", "Every invertible matrix falls in exactly one enumerated class", suite_class_coverage},
        {"companion-flags", "Flags fixed by companion blocks over F_2 against F_4", suite_companion_flags},
        {"consistency", "Cylinder probabilities are coherent under one-box extension", suite_consistency},
        {"positivity", "Cylinder probabilities are non-negative on a parameter grid", suite_positivity},
    };
    return suites;
}

const SuiteEntry& find_suite(const std::string& name) {
    for (const auto& s : registry()) {
        if (s.name == name) return s;
    }
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : registry()) out.push_back(s.name);
        return out;
    }();
    return names;
}

const std::string& verify_suite_description(const std::string& name) { return find_suite(name).description; }

VerifyReport run_verify_suite(const std::string& name) {
    const auto& suite = find_suite(name);
    VerifyReport rep{name, {}};
    try {
        suite.run(rep);
    } catch (const std::exception& e) {
        rep.record("suite completed", name, std::string("exception: ") + e.what(), "no exception", false);
    }
    return rep;
}

}  // namespace gltrace
