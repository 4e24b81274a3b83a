#include "gltrace/symfunc.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace gltrace;

namespace {

const std::vector<Rational> kPoints{Rational(1, 2), Rational(1, 3), Rational(1, 7), Rational(1, 11)};

Specialization variables(const std::vector<Rational>& x) {
    Rational sum;
    for (const auto& v : x) sum += v;
    return Specialization::finite(x, {}, sum);
}

TPolynomial one_minus_t_pow(int k) {
    return TPolynomial(Integer(1)) - TPolynomial::monomial(static_cast<std::size_t>(k), Integer(1));
}

TPolynomial poly(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return TPolynomial(std::move(v));
}

}  // namespace

TEST(SymFunc, SchurInPowerSums) {
    const auto s2 = schur_in_p(Partition{2});
    EXPECT_EQ(s2.coeff(Partition{1, 1}), Rational(1, 2));
    EXPECT_EQ(s2.coeff(Partition{2}), Rational(1, 2));
    EXPECT_EQ(s2.terms().size(), 2u);
}

TEST(SymFunc, CharacterOrthogonalityAndDimension) {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts) {
            const auto hooks = a.hook_lengths();
            long hook_product = 1;
            for (int h : hooks) hook_product *= h;
            EXPECT_EQ(sn_character(a, Partition::column(n)), Integer(oracle::factorial(n) / hook_product));
            for (const auto& b : parts) {
                Rational inner;
                for (const auto& rho : parts) {
                    inner += Rational(sn_character(a, rho) * sn_character(b, rho)) / Rational(rho.z_factor());
                }
                EXPECT_EQ(inner, Rational(a == b ? 1 : 0)) << a << " " << b;
            }
        }
    }
}

TEST(SymFunc, SchurMatchesBialternant) {
    const auto sp = variables(kPoints);
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            EXPECT_EQ(specialize(sp, schur_in_p(lambda)), oracle::schur_bialternant(lambda, kPoints)) << lambda;
        }
    }
}

TEST(SymFunc, MonomialMatchesDirectSum) {
    const auto sp = variables(kPoints);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& mu : partitions_of(n)) {
            EXPECT_EQ(specialize(sp, monomial_in_p(mu)), oracle::monomial_symmetric(mu, kPoints)) << mu;
        }
    }
}

TEST(SymFunc, KostkaMatchesFilling) {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (const auto& mu : partitions_of(n)) {
                EXPECT_EQ(kostka(lambda, mu), Integer(oracle::kostka_by_filling(lambda, mu))) << lambda << mu;
            }
        }
    }
}

TEST(SymFunc, ChargeSmallWords) {
    EXPECT_EQ(charge({1}), 0);
    EXPECT_EQ(charge({2, 1}), 0);
    EXPECT_EQ(charge({1, 2}), 1);
    EXPECT_EQ(charge({3, 2, 1}), 0);
    EXPECT_EQ(charge({1, 2, 3}), 3);
    EXPECT_EQ(charge({2, 1, 1}), 0);
    EXPECT_EQ(charge({1, 1, 2}), 1);
    EXPECT_EQ(charge({1, 2, 1}), 0);
    // Standard subwords 2 1 3 and 1 2, each with charge 1.
    EXPECT_EQ(charge({2, 1, 1, 3, 2}), 2);
}

TEST(SymFunc, KostkaFoulkesDegreeFour) {
    EXPECT_EQ(kostka_foulkes(Partition{2}, Partition{1, 1}), poly({0, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{4}, Partition{3, 1}), poly({0, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{4}, Partition{2, 2}), poly({0, 0, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{4}, Partition{2, 1, 1}), poly({0, 0, 0, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{4}, Partition{1, 1, 1, 1}), poly({0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{3, 1}, Partition{2, 2}), poly({0, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{3, 1}, Partition{2, 1, 1}), poly({0, 1, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{3, 1}, Partition{1, 1, 1, 1}), poly({0, 0, 0, 1, 1, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{2, 2}, Partition{2, 1, 1}), poly({0, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{2, 2}, Partition{1, 1, 1, 1}), poly({0, 0, 1, 0, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{2, 1, 1}, Partition{1, 1, 1, 1}), poly({0, 1, 1, 1}));
    EXPECT_EQ(kostka_foulkes(Partition{2, 2}, Partition{3, 1}), TPolynomial());
}

// K_{lambda,(1^n)}(t) = t^{n(lambda')} prod_{i<=n}(1-t^i) / prod_hooks (1-t^h).
TEST(SymFunc, KostkaFoulkesAgainstFakeDegrees) {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            TPolynomial num = TPolynomial::monomial(static_cast<std::size_t>(lambda.transpose().n_stat()), Integer(1));
            for (int i = 1; i <= n; ++i) num *= one_minus_t_pow(i);
            TPolynomial den(Integer(1));
            for (int h : lambda.hook_lengths()) den *= one_minus_t_pow(h);
            EXPECT_EQ(kostka_foulkes(lambda, Partition::column(n)), num.divide_exact(den)) << lambda;
        }
    }
}

TEST(SymFunc, KostkaFoulkesStructure) {
    for (int n = 1; n <= 8; ++n) {
        const auto parts = partitions_of(n);
        const auto& k = kostka_foulkes_matrix(n);
        const auto& kinv = inverse_kostka_foulkes_matrix(n);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = 0; j < parts.size(); ++j) {
                const auto& kij = k[i][j];
                if (i == j) EXPECT_EQ(kij, TPolynomial(Integer(1)));
                if (!dominance_leq(parts[j], parts[i])) EXPECT_TRUE(kij.is_zero());
                if (!kij.is_zero() && i != j) {
                    EXPECT_EQ(kij.degree(), parts[j].n_stat() - parts[i].n_stat());
                    for (const auto& c : kij.coeffs()) EXPECT_GE(c, 0);
                }
                EXPECT_EQ(kij.evaluate(Rational(1)), Rational(kostka(parts[i], parts[j])));
                TPolynomial prod;
                for (std::size_t m = 0; m < parts.size(); ++m) prod += k[i][m] * kinv[m][j];
                EXPECT_EQ(prod, TPolynomial(Integer(i == j ? 1 : 0)));
            }
        }
    }
}

TEST(SymFunc, HallLittlewoodPAgainstSymmetrization) {
    const std::vector<Rational> x{Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)};
    for (const Rational& t : {Rational(1, 3), Rational(-2), Rational(0), Rational(2, 5)}) {
        for (int n = 1; n <= 5; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                if (lambda.length() > x.size()) continue;
                Rational lhs;
                for (const auto& [mu, c] : hl_p_in_schur(lambda, t)) lhs += c * oracle::schur_bialternant(mu, x);
                EXPECT_EQ(lhs, oracle::hall_littlewood_p(lambda, x, t)) << lambda << " t=" << t;
            }
        }
    }
}

TEST(SymFunc, HallLittlewoodAtSpecialT) {
    // P(t=0) = s, P(t=1) = m.
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto p0 = hl_p_in_schur(lambda, Rational(0));
            EXPECT_EQ(p0.size(), 1u);
            EXPECT_EQ(p0.at(lambda), Rational(1));
            PowerSumElement p1;
            for (const auto& [mu, c] : hl_p_in_schur(lambda, Rational(1))) p1 += schur_in_p(mu) * c;
            EXPECT_EQ(p1, monomial_in_p(lambda));
        }
    }
}

TEST(SymFunc, ModifiedHallLittlewoodExample) {
    const auto s = schur_expand(modified_hl_q(Partition{1, 1}, Rational(1, 3)));
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.at(Partition{1, 1}), Rational(1));
    EXPECT_EQ(s.at(Partition{2}), Rational(1, 3));
}

// Q~_mu = sum_lambda K_{lambda,mu}(t) s_lambda.
TEST(SymFunc, ModifiedHallLittlewoodIsKostkaFoulkesGenerating) {
    for (const Rational& t : {Rational(1, 2), Rational(-1, 3), Rational(1, 4), Rational(3)}) {
        for (int n = 1; n <= 7; ++n) {
            for (const auto& mu : partitions_of(n)) {
                const auto s = schur_expand(modified_hl_q(mu, t));
                for (const auto& lambda : partitions_of(n)) {
                    const Rational expected = kostka_foulkes(lambda, mu).evaluate(t);
                    const auto it = s.find(lambda);
                    EXPECT_EQ(it == s.end() ? Rational(0) : it->second, expected) << lambda << mu << " t=" << t;
                }
            }
        }
    }
}

TEST(SymFunc, ModifiedRejectsRootOfUnity) {
    EXPECT_THROW(modified_hl_q(Partition{2}, Rational(1)), std::domain_error);
    EXPECT_THROW(modified_hl_q(Partition{1, 1}, Rational(-1)), std::domain_error);
}

TEST(SymFunc, SymbolicQMatchesNumeric) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto sym = hl_q_in_p_symbolic(lambda);
            for (const Rational& t : {Rational(1, 2), Rational(-3), Rational(2, 7)}) {
                PowerSumElement from_sym;
                for (const auto& [rho, c] : sym) from_sym.add_term(rho, c.evaluate(t));
                EXPECT_EQ(from_sym, hl_q_in_p(lambda, t));
            }
        }
    }
}

TEST(SymFunc, SchurExpandRoundTripAndRejection) {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto s = schur_expand(schur_in_p(lambda));
            EXPECT_EQ(s.size(), 1u);
            EXPECT_EQ(s.at(lambda), Rational(1));
        }
    }
    EXPECT_THROW(schur_expand(PowerSumElement::p(Partition{1}) + PowerSumElement::p(Partition{2})),
                 std::invalid_argument);
}

TEST(SymFunc, FiniteSpecializationValidation) {
    EXPECT_THROW(Specialization::finite({Rational(1, 3), Rational(1, 2)}, {}, Rational(1)), std::invalid_argument);
    EXPECT_THROW(Specialization::finite({Rational(-1, 3)}, {}, Rational(1)), std::invalid_argument);
    EXPECT_THROW(Specialization::thoma({Rational(2, 3)}, {Rational(1, 2)}), std::invalid_argument);
    const auto sp = Specialization::thoma({Rational(1, 2)}, {Rational(1, 3)});
    EXPECT_EQ(sp.power_sum(1), Rational(1));
    EXPECT_EQ(sp.power_sum(2), Rational(1, 4) - Rational(1, 9));
    EXPECT_EQ(sp.power_sum(3), Rational(1, 8) + Rational(1, 27));
}

// Thoma-type specializations are Schur-positive.
TEST(SymFunc, SpecializationsAreSchurPositive) {
    const std::vector<Specialization> sps{
        Specialization::thoma({Rational(1, 2), Rational(1, 5)}, {Rational(1, 4)}),
        Specialization::finite({Rational(1, 3)}, {Rational(1, 3)}, Rational(1)),
        geometric_spread({Rational(1, 2), Rational(1, 3)}, Rational(3)),
        geometric_spread({Rational(1)}, Rational(2)),
    };
    for (const auto& sp : sps) {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                EXPECT_GE(specialize(sp, schur_in_p(lambda)), Rational(0)) << lambda;
            }
        }
    }
}

TEST(SymFunc, GeometricSpreadPowerSums) {
    const Rational q(3);
    const std::vector<Rational> x{Rational(1, 2), Rational(1, 4)};
    const auto sp = geometric_spread(x, q);
    EXPECT_EQ(sp.power_sum(1), Rational(3, 4));
    // Truncated geometric sums approach the closed form from below.
    for (int k = 2; k <= 4; ++k) {
        Rational partial;
        for (const auto& xi : x) {
            for (int j = 1; j <= 30; ++j) partial += ((Rational(1) - q.inverse()) * xi * q.pow(1 - j)).pow(k);
        }
        const Rational gap = sp.power_sum(k) - partial;
        EXPECT_GT(gap, Rational(0));
        EXPECT_LT(gap, Rational(1, 1000000000));
    }
    EXPECT_THROW(geometric_spread({Rational(3, 4), Rational(1, 2)}, q), std::invalid_argument);
    EXPECT_THROW(geometric_spread(x, Rational(1)), std::invalid_argument);
}

TEST(SymFunc, PlethysmCommutesWithSpecialization) {
    const auto sp = Specialization::thoma({Rational(1, 2), Rational(1, 5)}, {Rational(1, 4)});
    for (int d = 1; d <= 3; ++d) {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                const auto f = schur_in_p(lambda);
                EXPECT_EQ(specialize(sp, plethysm_pl(f, d)), specialize(sp.plethysm(d), f));
            }
        }
    }
}

TEST(SymFunc, PowerSumRing) {
    const auto a = PowerSumElement::p(Partition{2}) * Rational(3);
    const auto b = PowerSumElement::p(Partition{1}) + PowerSumElement::p(Partition{2});
    const auto c = a * b;
    EXPECT_EQ(c.coeff(Partition{2, 1}), Rational(3));
    EXPECT_EQ(c.coeff(Partition{2, 2}), Rational(3));
    EXPECT_EQ(c.homogeneous_degree(), -1);
    EXPECT_TRUE((a - a).is_zero());
}
