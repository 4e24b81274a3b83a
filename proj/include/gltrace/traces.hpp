#pragma once

#include "gltrace/family.hpp"
#include "gltrace/rational.hpp"
#include "gltrace/symfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gltrace {

/// Dimension of the irreducible representation of GL(|f|, q) indexed by f
/// (q-analogue of the hook formula). Rejects q <= 1.
Rational green_dimension(const Family& f, const Rational& q);

enum class Variant { GLB, GLU };

/// Families reachable by removing one box: from the unit block (GLB) or
/// from any degree-1 block (GLU). Ordered by block, then by row.
std::vector<Family> branching_predecessors(const Family& f, Variant variant);

/// Value of an extreme unipotent trace on one primary block of degree d
/// with Jordan data lambda: q^{d n(lambda)} sp(Pl_d Q~_lambda(.; q^{-d})).
Rational unipotent_block_value(const Specialization& sp, int d, const Partition& lambda, const Rational& q);

/// Product of block values over the primary decomposition.
Rational unipotent_trace_value(const Specialization& sp, const ClassLabel& cls, const Rational& q);

/// Unipotent character values on a class: lambda (|lambda| = |cls|) maps to
/// chi^lambda(g). Obtained as Schur coefficients of
/// prod_blocks q^{d n(nu)} Pl_d Q~_nu(.; q^{-d}).
std::map<Partition, Rational> unipotent_character_values(const ClassLabel& cls, const Rational& q);

/// lambda |- n maps to sp(s_lambda). Requires gamma = 1.
std::map<Partition, Rational> trace_coefficients(const Specialization& sp, int n);

/// C(f) = (q-1)^{|f|} prod_blocks q^{d n(lambda)} / prod_box (q^{d h} - 1).
/// Rejects the unit tag; when q is an integer, also rejects more than q-2
/// distinct degree-1 tags.
Rational biregular_coefficient(const Family& f, const Rational& q);

/// sp(s_lambda) for sp with beta = the geometric spread of (1), gamma = 1.
Rational sp_principal_schur(const Partition& lambda, const Rational& q);

/// The right side of the principal specialization identity:
/// (q-1)^{|lambda|} q^{n(lambda)} / prod_box (q^h - 1).
Rational principal_schur_closed_form(const Partition& lambda, const Rational& q);

/// Parameters of a GLU trace: one (alpha, beta, gamma) triple per linear
/// tag, plus a background family with no degree-1 blocks.
struct GluTraceParams {
    struct Component {
        std::string tag;
        Specialization sp;
    };
    std::vector<Component> components;
    Family background;
};

/// Key: one partition per component, in component order.
using PartitionTuple = std::vector<Partition>;

/// (lambda^j)_j with sum |lambda^j| = n - |f| maps to prod_j sp_j(s_{lambda^j}).
/// Empty when n < |f|. Rejects gamma sums other than 1 and backgrounds with
/// linear blocks.
std::map<PartitionTuple, Rational> glu_trace_coefficients(const GluTraceParams& params, int n);

}  // namespace gltrace
