#include "smc/nullhomotopy.hpp"

#include <sstream>

namespace smc {

MonoidalNatTransformation Nullhomotopy::as_transformation() const {
    MonoidalNatTransformation t;
    t.source = subject;
    t.target = constant_unit_functor(subject.dom, subject.cod);
    t.components = components;
    return t;
}

ValidationReport validate_nullhomotopy(const Nullhomotopy& nh) {
    ValidationReport report = validate_monoidal_nat(nh.as_transformation());
    const FinCategory& n = nh.subject.cod->cat();
    for (std::size_t x = 0; x < nh.components.size(); ++x)
        if (!is_isomorphism(n, nh.components[x]))
            report.add("nullhomotopy component at object #" + std::to_string(x) +
                       " is not an isomorphism");
    return report;
}

std::vector<Nullhomotopy> nullhomotopies(const MonoidalFunctor& f, SearchBudget& budget) {
    const MonoidalStructure& dm = *f.dom;
    const MonoidalStructure& cm = *f.cod;
    const FinCategory& d = dm.cat();
    const FinCategory& n = cm.cat();

    std::vector<Nullhomotopy> out;
    std::vector<int> comp(d.num_objects(), -1);

    // Naturality against the constant functor: comp[src] = comp[dst] ∘ F(f).
    auto squares_ok = [&](int x) {
        for (int mor = 0; mor < d.num_morphisms(); ++mor) {
            int s = d.src(mor), t = d.dst(mor);
            if (std::max(s, t) != x || comp[s] < 0 || comp[t] < 0) continue;
            if (n.compose(comp[t], f.on_mor(mor)) != comp[s]) return false;
        }
        // Monoidality instances with both factors and the product assigned.
        for (int a = 0; a < d.num_objects(); ++a)
            for (int b = 0; b < d.num_objects(); ++b) {
                int ab = dm.tensor_obj(a, b);
                if (std::max({a, b, ab}) != x) continue;
                if (comp[a] < 0 || comp[b] < 0 || comp[ab] < 0) continue;
                int lhs = n.compose(comp[ab], f.m(a, b));
                int rhs = n.compose(cm.lunit(cm.unit), cm.tensor_mor(comp[a], comp[b]));
                if (lhs != rhs) return false;
            }
        // Unit condition once the unit component is known.
        if (x == dm.unit && n.compose(comp[dm.unit], f.e) != n.identity(cm.unit))
            return false;
        return true;
    };

    auto assign = [&](auto&& self, int x) -> void {
        if (x == d.num_objects()) {
            Nullhomotopy nh{f, comp};
            if (validate_nullhomotopy(nh).ok()) out.push_back(std::move(nh));
            return;
        }
        for (int c : n.iso_hom(f.on_obj(x), cm.unit)) {
            budget.charge();
            comp[x] = c;
            if (squares_ok(x)) self(self, x + 1);
        }
        comp[x] = -1;
    };
    assign(assign, 0);
    return out;
}

Nullhomotopy compose_nullhomotopy(const MonoidalFunctor& p, const Nullhomotopy& theta,
                                  const MonoidalFunctor& q) {
    if (p.cod != theta.subject.dom || theta.subject.cod != q.dom)
        throw ContractError("compose_nullhomotopy: chain is not composable");
    const FinCategory& n_prime = q.cod->cat();

    Nullhomotopy out;
    out.subject = compose_monoidal_functors(compose_monoidal_functors(p, theta.subject), q);
    int e_inv = *inverse_of(n_prime, q.e);
    out.components.reserve(p.dom->num_objects());
    for (int x = 0; x < p.dom->num_objects(); ++x)
        out.components.push_back(
            n_prime.compose(e_inv, q.on_mor(theta.components[p.on_obj(x)])));
    return out;
}

bool is_theta_trivial(const MonoidalFunctor& f, SearchBudget& budget) {
    return !nullhomotopies(f, budget).empty();
}

std::string functor_key(const MonoidalFunctor& f) {
    std::ostringstream key;
    key << f.dom->name() << "->" << f.cod->name() << " [obj:";
    for (std::size_t i = 0; i < f.object_map.size(); ++i)
        key << (i ? "," : "") << f.cod->cat().object_name(f.object_map[i]);
    key << "; mor:";
    for (std::size_t i = 0; i < f.morphism_map.size(); ++i)
        key << (i ? "," : "") << f.cod->cat().morphism_name(f.morphism_map[i]);
    key << "; e:" << f.cod->cat().morphism_name(f.e) << "; m:";
    for (std::size_t i = 0; i < f.m_table.size(); ++i)
        key << (i ? "," : "") << f.cod->cat().morphism_name(f.m_table[i]);
    key << "]";
    return key.str();
}

OrthogonalityReport orthogonal(MonPtr m, MonPtr n, SearchBudget& budget) {
    OrthogonalityReport report;
    report.orthogonal = true;
    for (const MonoidalFunctor& f : enumerate_monoidal_functors(m, n, budget)) {
        int count = static_cast<int>(nullhomotopies(f, budget).size());
        report.counts.emplace_back(functor_key(f), count);
        if (count != 1) report.orthogonal = false;
    }
    return report;
}

ValidationReport check_structure_axioms(const std::vector<AxiomSample>& samples) {
    ValidationReport report;
    int index = 0;
    for (const AxiomSample& s : samples) {
        // Axiom a): id • theta • id = theta.
        Nullhomotopy via_ids =
            compose_nullhomotopy(identity_monoidal_functor(s.theta.subject.dom), s.theta,
                                 identity_monoidal_functor(s.theta.subject.cod));
        if (!(via_ids == s.theta))
            report.add("axiom a) violated on sample #" + std::to_string(index));

        // Axiom b): (p∘p') • theta • (q'∘q) = p' • (p • theta • q) • q'.
        MonoidalFunctor pp = compose_monoidal_functors(s.p_prime, s.p);
        MonoidalFunctor qq = compose_monoidal_functors(s.q, s.q_prime);
        Nullhomotopy one_shot = compose_nullhomotopy(pp, s.theta, qq);
        Nullhomotopy nested =
            compose_nullhomotopy(s.p_prime, compose_nullhomotopy(s.p, s.theta, s.q),
                                 s.q_prime);
        if (!(one_shot == nested))
            report.add("axiom b) violated on sample #" + std::to_string(index));
        ++index;
    }
    return report;
}

}  // namespace smc
