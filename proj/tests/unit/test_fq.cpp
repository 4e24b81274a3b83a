#include "gltrace/fq.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace gltrace;
using namespace gltrace::fq;

namespace {

long gaussian_binomial(int n, int k, long q) {
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long a = 1, b = 1;
        for (int j = 0; j < n - i; ++j) a *= q;
        for (int j = 0; j < i + 1; ++j) b *= q;
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

}  // namespace

TEST(Fq, FieldConstruction) {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto f = field_make(q);
        EXPECT_EQ(f->order(), q);
    }
    EXPECT_THROW(field_make(6), std::invalid_argument);
    EXPECT_THROW(field_make(16), std::invalid_argument);
    const auto f4 = field_make(4);
    // x is element 2; x*x = x+1 is element 3.
    EXPECT_EQ(f4->mul(2, 2), 3);
    EXPECT_EQ(f4->add(2, 1), 3);
    EXPECT_EQ(field_make(9)->mul(3, 3), 2);  // x^2 = -1
}

TEST(Fq, UnipotentClass) {
    const auto f2 = field_make(2);
    EXPECT_EQ(unipotent_class_of(Matrix::identity(f2, 3)), Partition({1, 1, 1}));
    auto j = Matrix::identity(f2, 4);
    for (int i = 0; i < 3; ++i) j.set(i, i + 1, 1);
    EXPECT_EQ(unipotent_class_of(j), Partition{4});
    auto e12 = Matrix::identity(f2, 3);
    e12.set(0, 1, 1);
    EXPECT_EQ(unipotent_class_of(e12), Partition({2, 1}));
    EXPECT_THROW(unipotent_class_of(Matrix::from_rows(field_make(3), {{2, 0}, {0, 1}})), std::invalid_argument);
}

TEST(Fq, SubspaceCountsAreGaussianBinomials) {
    for (int q : {2, 3, 4}) {
        const auto f = field_make(q);
        for (int n = 0; n <= 4; ++n) {
            for (int d = 0; d <= n; ++d) {
                const auto subs = subspaces(f, n, d);
                EXPECT_EQ(static_cast<long>(subs.size()), gaussian_binomial(n, d, q));
                std::set<std::vector<std::vector<Elem>>> distinct;
                for (const auto& s : subs) distinct.insert(s.basis);
                EXPECT_EQ(distinct.size(), subs.size());
            }
        }
    }
}

TEST(Fq, FixedFlagsAndSubspaces) {
    const auto f2 = field_make(2);
    const auto id = Matrix::identity(f2, 2);
    auto u = Matrix::identity(f2, 2);
    u.set(0, 1, 1);
    EXPECT_EQ(count_fixed_flags(id, Partition{1, 1}), 3);
    EXPECT_EQ(count_fixed_flags(u, Partition{1, 1}), 1);
    EXPECT_EQ(count_fixed_flags(u, Partition{2}), 1);
    EXPECT_EQ(count_fixed_subspaces(id, 1), 3);
    EXPECT_EQ(count_fixed_subspaces(u, 1), 1);
    EXPECT_EQ(count_fixed_subspaces(u, 0), 1);
    // Full flags fixed by the identity: [n]_q!.
    EXPECT_EQ(count_fixed_flags(Matrix::identity(f2, 3), Partition{1, 1, 1}), 21);
}

TEST(Fq, SchubertCells) {
    EXPECT_EQ(schubert_cell_count({1, 0, 0}, 2), 1);
    EXPECT_EQ(schubert_cell_count({0, 1}, 2), 2);
    EXPECT_EQ(schubert_cell_count({1, 1, 1}, 3), 1);
    for (int q : {2, 3}) {
        for (int n = 1; n <= 4; ++n) {
            for (int code = 0; code < (1 << n); ++code) {
                std::vector<int> x(static_cast<std::size_t>(n));
                int m = 0, weighted = 0;
                for (int i = 0; i < n; ++i) {
                    x[i] = (code >> i) & 1;
                    m += x[i];
                    weighted += (i + 1) * x[i];
                }
                long expected = 1;
                for (int e = 0; e < weighted - m * (m + 1) / 2; ++e) expected *= q;
                EXPECT_EQ(schubert_cell_count(x, q), expected);
            }
        }
    }
}

TEST(Fq, Extensions) {
    const auto f2 = field_make(2);
    const auto f3 = field_make(3);
    const auto empty_glu = ext_enumerate(Matrix(f2, 0, 0), Variant::GLU);
    ASSERT_EQ(empty_glu.size(), 1u);
    EXPECT_EQ(empty_glu[0], Matrix::identity(f2, 1));
    const auto one = ext_enumerate(Matrix::identity(f2, 1), Variant::GLU);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0], Matrix::identity(f2, 2));
    EXPECT_EQ(one[1], Matrix::from_rows(f2, {{1, 1}, {0, 1}}));
    EXPECT_EQ(ext_enumerate(Matrix::identity(f3, 1), Variant::GLB).size(), 6u);
    EXPECT_EQ(ext_enumerate(Matrix::identity(f3, 2), Variant::GLB).size(), 18u);
}

TEST(Fq, IrreduciblePolynomials) {
    const auto f2 = field_make(2);
    const auto lin = irreducible_polys(f2, 1);
    ASSERT_EQ(lin.size(), 1u);
    EXPECT_EQ(poly_tag(f2, lin[0]), "x-1");
    const auto quad = irreducible_polys(f2, 2);
    ASSERT_EQ(quad.size(), 1u);
    EXPECT_EQ(poly_tag(f2, quad[0]), "x^2+x+1");
    EXPECT_EQ(irreducible_polys(f2, 3).size(), 2u);
    EXPECT_EQ(irreducible_polys(f2, 4).size(), 3u);
    EXPECT_EQ(irreducible_polys(field_make(3), 2).size(), 3u);
    EXPECT_EQ(irreducible_polys(field_make(3), 3).size(), 8u);
    EXPECT_EQ(irreducible_polys(field_make(4), 2).size(), 6u);
    EXPECT_EQ(poly_tag(field_make(3), irreducible_polys(field_make(3), 1)[1]), "x-2");
}

TEST(Fq, FamiliesEnumerate) {
    const auto f2 = field_make(2);
    EXPECT_EQ(families_enumerate(0, f2).size(), 1u);
    EXPECT_EQ(families_enumerate(1, f2).size(), 1u);
    const auto two = families_enumerate(2, f2);
    EXPECT_EQ(two.size(), 3u);
    // Class numbers of GL(n,2) and GL(n,3).
    EXPECT_EQ(families_enumerate(3, f2).size(), 6u);
    EXPECT_EQ(families_enumerate(4, f2).size(), 14u);
    EXPECT_EQ(families_enumerate(2, field_make(3)).size(), 8u);
    EXPECT_EQ(families_enumerate(3, field_make(3)).size(), 24u);
}

TEST(Fq, ClassCoverage) {
    for (int q : {2, 3}) {
        const auto f = field_make(q);
        for (int n = 1; n <= 3; ++n) {
            const auto families = families_enumerate(n, f);
            std::map<std::string, int> seen;
            long group_order = 0;
            for_each_matrix(f, n, [&](const Matrix& m) {
                if (!m.invertible()) return;
                ++group_order;
                const ClassLabel cls = class_of(m);
                int matches = 0;
                for (const auto& fam : families) {
                    if (std::is_permutation(fam.blocks().begin(), fam.blocks().end(), cls.blocks().begin(),
                                            cls.blocks().end())) {
                        ++matches;
                    }
                }
                EXPECT_EQ(matches, 1);
                std::string key;
                for (const auto& b : cls.blocks()) key += b.tag + ":" + b.diagram.to_string() + ";";
                ++seen[key];
            });
            EXPECT_EQ(seen.size(), families.size());
            long expected = 1;
            long qn = 1;
            for (int i = 0; i < n; ++i) qn *= q;
            long qi = 1;
            for (int i = 0; i < n; ++i, qi *= q) expected *= qn - qi;
            EXPECT_EQ(group_order, expected);
        }
    }
}

TEST(Fq, CompanionJordanHasItsClass) {
    const auto f2 = field_make(2);
    const auto quad = irreducible_polys(f2, 2)[0];
    for (const Partition& nu : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
        const auto m = companion_jordan(f2, quad, nu);
        const ClassLabel cls = class_of(m);
        ASSERT_EQ(cls.blocks().size(), 1u);
        EXPECT_EQ(cls.blocks()[0].diagram, nu);
        EXPECT_EQ(cls.blocks()[0].degree, 2);
    }
}

TEST(Fq, UnipotentCount) {
    for (int q : {2, 3}) {
        const auto f = field_make(q);
        for (int n = 0; n <= 3; ++n) {
            long count = 0, filtered = 0;
            for_each_unipotent(f, n, [&](const Matrix&) { ++count; });
            const Matrix id = Matrix::identity(f, n);
            if (n > 0) {
                for_each_matrix(f, n, [&](const Matrix& m) {
                    if ((m - id).pow(n).is_zero()) ++filtered;
                });
            } else {
                filtered = 1;
            }
            long expected = 1;
            for (int i = 0; i < n * (n - 1); ++i) expected *= q;
            EXPECT_EQ(count, expected);
            EXPECT_EQ(filtered, expected);
        }
    }
}

TEST(Fq, ExtensionTypeCountsMatchClassification) {
    for (int q : {2, 3}) {
        const auto f = field_make(q);
        for (int n = 0; n <= 3; ++n) {
            for_each_unipotent(f, n, [&](const Matrix& g) {
                std::map<Partition, long> direct;
                for (const auto& h : ext_enumerate(g, Variant::GLU)) ++direct[unipotent_class_of(h)];
                EXPECT_EQ(extension_type_counts(g), direct);
            });
        }
    }
}
