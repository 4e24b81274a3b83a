#include "gltrace/traces.hpp"

#include <stdexcept>

namespace gltrace {

namespace {

void require_q(const Rational& q) {
    if (q <= Rational(1)) throw std::invalid_argument("q must exceed 1");
}

void require_unit_gamma(const Specialization& sp) {
    if (sp.power_sum(1) != Rational(1)) throw std::invalid_argument("specialization must have gamma = 1");
}

// q^{d n(lambda)} / prod_box (q^{d h} - 1)
Rational hook_factor(int d, const Partition& lambda, const Rational& q) {
    Rational v = q.pow(d * lambda.n_stat());
    for (int h : lambda.hook_lengths()) v /= q.pow(static_cast<long>(d) * h) - Rational(1);
    return v;
}

}  // namespace

Rational green_dimension(const Family& f, const Rational& q) {
    require_q(q);
    Rational v(1);
    for (int i = 1; i <= f.size(); ++i) v *= q.pow(i) - Rational(1);
    for (const auto& b : f.blocks()) v *= hook_factor(b.degree, b.diagram, q);
    return v;
}

std::vector<Family> branching_predecessors(const Family& f, Variant variant) {
    std::vector<Family> out;
    for (const auto& b : f.blocks()) {
        const bool eligible = variant == Variant::GLB ? b.tag == kUnitTag : b.degree == 1;
        if (!eligible) continue;
        for (const auto& [row, col] : b.diagram.removable_corners()) {
            (void)col;
            out.push_back(f.with_diagram(b.tag, b.degree, b.diagram.remove_box(static_cast<std::size_t>(row - 1))));
        }
    }
    return out;
}

Rational unipotent_block_value(const Specialization& sp, int d, const Partition& lambda, const Rational& q) {
    require_q(q);
    require_unit_gamma(sp);
    if (d < 1) throw std::invalid_argument("block degree must be positive");
    const Rational t = q.pow(-d);
    return q.pow(d * lambda.n_stat()) * specialize(sp.plethysm(d), modified_hl_q(lambda, t));
}

Rational unipotent_trace_value(const Specialization& sp, const ClassLabel& cls, const Rational& q) {
    require_q(q);
    require_unit_gamma(sp);
    Rational v(1);
    for (const auto& b : cls.blocks()) v *= unipotent_block_value(sp, b.degree, b.diagram, q);
    return v;
}

std::map<Partition, Rational> unipotent_character_values(const ClassLabel& cls, const Rational& q) {
    require_q(q);
    PowerSumElement product = PowerSumElement::one();
    for (const auto& b : cls.blocks()) {
        const Rational t = q.pow(-b.degree);
        product = product * (plethysm_pl(modified_hl_q(b.diagram, t), b.degree) * q.pow(b.degree * b.diagram.n_stat()));
    }
    const auto expanded = schur_expand(product);
    std::map<Partition, Rational> out;
    for (const auto& lambda : partitions_of(cls.size())) {
        const auto it = expanded.find(lambda);
        out.emplace(lambda, it == expanded.end() ? Rational(0) : it->second);
    }
    return out;
}

std::map<Partition, Rational> trace_coefficients(const Specialization& sp, int n) {
    require_unit_gamma(sp);
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::map<Partition, Rational> out;
    for (const auto& lambda : partitions_of(n)) out.emplace(lambda, specialize(sp, schur_in_p(lambda)));
    return out;
}

Rational biregular_coefficient(const Family& f, const Rational& q) {
    require_q(q);
    if (f.has_unit()) throw std::invalid_argument("biregular coefficients exclude the x-1 block");
    if (q.is_integer()) {
        const Integer available = q.numerator() - 2;
        if (Integer(f.nonunit_linear_count()) > available) {
            throw std::invalid_argument("more linear tags than polynomials x-a with a != 0, 1");
        }
    }
    Rational v = (q - Rational(1)).pow(f.size());
    for (const auto& b : f.blocks()) v *= hook_factor(b.degree, b.diagram, q);
    return v;
}

Rational sp_principal_schur(const Partition& lambda, const Rational& q) {
    require_q(q);
    const std::vector<Rational> one{Rational(1)};
    const Specialization sp = Specialization::power_values(Rational(1), [one, q](int k) {
        const Rational v = spread_power_sum(one, q, k);
        return k % 2 == 0 ? -v : v;
    });
    return specialize(sp, schur_in_p(lambda));
}

Rational principal_schur_closed_form(const Partition& lambda, const Rational& q) {
    require_q(q);
    return (q - Rational(1)).pow(lambda.size()) * hook_factor(1, lambda, q);
}

std::map<PartitionTuple, Rational> glu_trace_coefficients(const GluTraceParams& params, int n) {
    Rational gamma_sum;
    for (const auto& c : params.components) gamma_sum += c.sp.power_sum(1);
    if (gamma_sum != Rational(1)) throw std::invalid_argument("gamma values must sum to 1");
    for (const auto& b : params.background.blocks()) {
        if (b.degree == 1) throw std::invalid_argument("background family may not contain linear blocks");
    }
    std::map<PartitionTuple, Rational> out;
    const int free = n - params.background.size();
    if (free < 0 || params.components.empty()) return out;

    // Per component, the values sp_j(s_lambda) for every |lambda| <= free.
    std::vector<std::vector<std::map<Partition, Rational>>> values(params.components.size());
    for (std::size_t j = 0; j < params.components.size(); ++j) {
        for (int m = 0; m <= free; ++m) {
            std::map<Partition, Rational> row;
            for (const auto& lambda : partitions_of(m)) row.emplace(lambda, specialize(params.components[j].sp, schur_in_p(lambda)));
            values[j].push_back(std::move(row));
        }
    }
    PartitionTuple key(params.components.size());
    auto recurse = [&](auto&& self, std::size_t j, int left, const Rational& acc) -> void {
        if (j + 1 == params.components.size()) {
            for (const auto& [lambda, v] : values[j][static_cast<std::size_t>(left)]) {
                key[j] = lambda;
                out.emplace(key, acc * v);
            }
            return;
        }
        for (int m = 0; m <= left; ++m) {
            for (const auto& [lambda, v] : values[j][static_cast<std::size_t>(m)]) {
                key[j] = lambda;
                self(self, j + 1, left - m, acc * v);
            }
        }
    };
    recurse(recurse, 0, free, Rational(1));
    return out;
}

}  // namespace gltrace
