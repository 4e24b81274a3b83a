#include "gltrace/fq.hpp"
#include "gltrace/traces.hpp"

#include <gtest/gtest.h>

using namespace gltrace;

namespace {

Family fam(std::initializer_list<Block> blocks) { return Family(std::vector<Block>(blocks)); }

const Specialization kTrivial = Specialization::thoma({Rational(1)}, {});
const Specialization kSteinberg = Specialization::thoma({}, {Rational(1)});

}  // namespace

TEST(Family, Validation) {
    EXPECT_THROW(fam({{"x-1", 2, Partition{1}}}), std::invalid_argument);
    EXPECT_THROW(fam({{"a", 1, Partition{1}}, {"a", 1, Partition{1}}}), std::invalid_argument);
    EXPECT_THROW(fam({{"a", 1, Partition()}}), std::invalid_argument);
    EXPECT_EQ(fam({{"x-1", 1, Partition{2, 1}}, {"c", 2, Partition{1}}}).size(), 5);
}

TEST(Traces, GreenDimensionExamples) {
    EXPECT_EQ(green_dimension(fam({{"x-1", 1, Partition{1, 1}}}), Rational(2)), Rational(2));
    EXPECT_EQ(green_dimension(fam({{"x-1", 1, Partition{2}}}), Rational(2)), Rational(1));
    EXPECT_EQ(green_dimension(fam({{"c2", 2, Partition{1}}}), Rational(2)), Rational(1));
    EXPECT_EQ(green_dimension(Family(), Rational(3)), Rational(1));
    EXPECT_THROW(green_dimension(Family(), Rational(1)), std::invalid_argument);
}

TEST(Traces, DimensionSumOfSquares) {
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 4; ++n) {
            Rational sum;
            for (const auto& f : fq::families_enumerate(n, field)) {
                const Rational d = green_dimension(f, Rational(q));
                EXPECT_TRUE(d.is_integer());
                sum += d * d;
            }
            Rational order(1);
            for (int i = 0; i < n; ++i) order *= Rational(q).pow(n) - Rational(q).pow(i);
            EXPECT_EQ(sum, order) << "n=" << n << " q=" << q;
        }
    }
}

TEST(Traces, BranchingPredecessorsExamples) {
    const auto glb = branching_predecessors(fam({{"x-1", 1, Partition{2, 1}}}), Variant::GLB);
    ASSERT_EQ(glb.size(), 2u);
    EXPECT_EQ(glb[0], fam({{"x-1", 1, Partition{1, 1}}}));
    EXPECT_EQ(glb[1], fam({{"x-1", 1, Partition{2}}}));
    EXPECT_TRUE(branching_predecessors(fam({{"c2", 2, Partition{1}}}), Variant::GLB).empty());
    const auto glu = branching_predecessors(fam({{"a1", 1, Partition{1}}, {"a2", 1, Partition{1}}}), Variant::GLU);
    ASSERT_EQ(glu.size(), 2u);
    EXPECT_EQ(glu[0], fam({{"a2", 1, Partition{1}}}));
    EXPECT_EQ(glu[1], fam({{"a1", 1, Partition{1}}}));
}

TEST(Traces, BranchingInequality) {
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 4; ++n) {
            for (const auto& f : fq::families_enumerate(n, field)) {
                for (Variant v : {Variant::GLB, Variant::GLU}) {
                    Rational below;
                    for (const auto& g : branching_predecessors(f, v)) below += green_dimension(g, Rational(q));
                    EXPECT_GE(green_dimension(f, Rational(q)), below);
                }
            }
        }
    }
}

TEST(Traces, UnipotentBlockValueExamples) {
    EXPECT_EQ(unipotent_block_value(kTrivial, 1, Partition{1, 1}, Rational(5)), Rational(1));
    EXPECT_EQ(unipotent_block_value(kSteinberg, 1, Partition{1, 1}, Rational(2)), Rational(2));
    EXPECT_EQ(unipotent_block_value(kSteinberg, 2, Partition{1}, Rational(2)), Rational(-1));
}

TEST(Traces, UnipotentTraceExamples) {
    const auto sp = Specialization::thoma({Rational(1, 2)}, {Rational(1, 4)});
    EXPECT_EQ(unipotent_trace_value(sp, fam({{"x-1", 1, Partition{1}}}), Rational(3)), Rational(1));
    EXPECT_EQ(unipotent_trace_value(kTrivial, fam({{"x-1", 1, Partition{1}}, {"c2", 2, Partition{1}}}), Rational(2)),
              Rational(1));
    // Trivial character is identically 1; Steinberg at the identity has its dimension.
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(unipotent_trace_value(kTrivial, fam({{"x-1", 1, Partition::column(n)}}), Rational(3)), Rational(1));
        EXPECT_EQ(unipotent_trace_value(kSteinberg, fam({{"x-1", 1, Partition::column(n)}}), Rational(2)),
                  Rational(2).pow(n * (n - 1) / 2));
    }
    EXPECT_THROW(unipotent_trace_value(Specialization::finite({}, {}, Rational(1, 2)), Family(), Rational(2)),
                 std::invalid_argument);
}

// A trace value is the coefficient-weighted sum of unipotent character values.
TEST(Traces, TraceIsCoefficientWeightedCharacterSum) {
    const auto sp = Specialization::thoma({Rational(1, 3), Rational(1, 6)}, {Rational(1, 4)});
    const std::vector<ClassLabel> classes{
        fam({{"x-1", 1, Partition{2, 1}}}),
        fam({{"x-1", 1, Partition{1}}, {"c", 2, Partition{1}}}),
        fam({{"x-2", 1, Partition{1, 1}}, {"x-1", 1, Partition{1}}}),
        fam({{"c", 3, Partition{1}}}),
        fam({{"c", 2, Partition{2}}}),
    };
    for (const Rational& q : {Rational(2), Rational(3), Rational(7, 2)}) {
        for (const auto& cls : classes) {
            const auto chi = unipotent_character_values(cls, q);
            const auto coeffs = trace_coefficients(sp, cls.size());
            Rational sum;
            for (const auto& [lambda, c] : coeffs) sum += c * chi.at(lambda);
            EXPECT_EQ(sum, unipotent_trace_value(sp, cls, q));
        }
    }
}

TEST(Traces, TraceCoefficientExamples) {
    const auto a = trace_coefficients(kTrivial, 3);
    EXPECT_EQ(a.at(Partition{3}), Rational(1));
    EXPECT_EQ(a.at(Partition{2, 1}), Rational(0));
    EXPECT_EQ(a.at(Partition{1, 1, 1}), Rational(0));
    const auto b = trace_coefficients(kSteinberg, 3);
    EXPECT_EQ(b.at(Partition{1, 1, 1}), Rational(1));
    EXPECT_EQ(b.at(Partition{3}), Rational(0));
    const auto c = trace_coefficients(Specialization::thoma({Rational(1, 2), Rational(1, 2)}, {}), 2);
    EXPECT_EQ(c.at(Partition{2}), Rational(3, 4));
    EXPECT_EQ(c.at(Partition{1, 1}), Rational(1, 4));
}

TEST(Traces, ThomaPositivityGrid) {
    const std::vector<Rational> grid{Rational(0), Rational(1, 5), Rational(1, 3), Rational(1, 2)};
    for (const auto& a1 : grid) {
        for (const auto& a2 : grid) {
            for (const auto& b1 : grid) {
                if (a2 > a1 || a1 + a2 + b1 > Rational(1)) continue;
                const auto sp = Specialization::thoma({a1, a2}, {b1});
                for (int n = 1; n <= 6; ++n) {
                    Rational total;
                    for (const auto& [lambda, c] : trace_coefficients(sp, n)) {
                        EXPECT_GE(c, Rational(0));
                        total += c * Rational(kostka(lambda, Partition::column(n)));
                    }
                    // sum_lambda dim(lambda) sp(s_lambda) = sp(p_1^n) = 1.
                    EXPECT_EQ(total, Rational(1));
                }
            }
        }
    }
}

TEST(Traces, BiregularCoefficientExamples) {
    EXPECT_EQ(biregular_coefficient(Family(), Rational(2)), Rational(1));
    EXPECT_EQ(biregular_coefficient(fam({{"c2", 2, Partition{1}}}), Rational(2)), Rational(1, 3));
    EXPECT_THROW(biregular_coefficient(fam({{"a", 1, Partition{1}}}), Rational(2)), std::invalid_argument);
    EXPECT_THROW(biregular_coefficient(fam({{"x-1", 1, Partition{1}}}), Rational(3)), std::invalid_argument);
    EXPECT_NO_THROW(biregular_coefficient(fam({{"x-2", 1, Partition{1}}}), Rational(3)));
}

TEST(Traces, PrincipalSchurExamples) {
    EXPECT_EQ(sp_principal_schur(Partition{1}, Rational(5)), Rational(1));
    EXPECT_EQ(sp_principal_schur(Partition{2}, Rational(2)), Rational(1, 3));
    EXPECT_EQ(sp_principal_schur(Partition{1, 1}, Rational(2)), Rational(2, 3));
    for (int q = 2; q <= 4; ++q) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                EXPECT_EQ(sp_principal_schur(lambda, Rational(q)), principal_schur_closed_form(lambda, Rational(q)));
            }
        }
    }
}

// Coefficient of chi^s in the restricted biregular trace equals
// prod_i (q-1)/(q^i-1) times dim(s), for every s.
TEST(Traces, BiregularDecompositionMatchesRegularCharacter) {
    for (int q : {2, 3}) {
        const auto field = fq::field_make(q);
        for (int n = 1; n <= 3; ++n) {
            Rational norm(1);
            for (int i = 1; i <= n; ++i) norm *= Rational(q - 1) / (Rational(q).pow(i) - Rational(1));
            for (const auto& s : fq::families_enumerate(n, field)) {
                const Family rest = s.with_diagram(kUnitTag, 1, Partition());
                const Rational coeff =
                    biregular_coefficient(rest, Rational(q)) * sp_principal_schur(s.unit_diagram(), Rational(q));
                EXPECT_EQ(coeff, norm * green_dimension(s, Rational(q)));
            }
        }
    }
}

TEST(Traces, GluCoefficients) {
    GluTraceParams single{{{"x-1", kTrivial}, {"x-2", Specialization::finite({}, {}, Rational(0))}}, Family()};
    const auto a = glu_trace_coefficients(single, 2);
    EXPECT_EQ(a.at({Partition{2}, Partition()}), Rational(1));
    EXPECT_EQ(a.at({Partition{1, 1}, Partition()}), Rational(0));
    EXPECT_EQ(a.at({Partition{1}, Partition{1}}), Rational(0));

    const auto half = Specialization::finite({Rational(1, 2)}, {}, Rational(1, 2));
    GluTraceParams two{{{"x-1", half}, {"x-2", half}}, Family()};
    const auto b = glu_trace_coefficients(two, 2);
    EXPECT_EQ(b.at({Partition{1}, Partition{1}}), Rational(1, 4));

    GluTraceParams with_background{{{"x-1", kTrivial}}, fam({{"c", 2, Partition{1}}})};
    EXPECT_TRUE(glu_trace_coefficients(with_background, 1).empty());
    EXPECT_EQ(glu_trace_coefficients(with_background, 3).size(), 1u);
    EXPECT_EQ(glu_trace_coefficients(with_background, 4).size(), 2u);

    GluTraceParams bad{{{"x-1", half}}, Family()};
    EXPECT_THROW(glu_trace_coefficients(bad, 2), std::invalid_argument);
    GluTraceParams linear_background{{{"x-1", kTrivial}}, fam({{"x-2", 1, Partition{1}}})};
    EXPECT_THROW(glu_trace_coefficients(linear_background, 2), std::invalid_argument);
}
