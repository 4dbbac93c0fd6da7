#include "smc/twogroup.hpp"

#include <algorithm>

namespace smc {

std::optional<InvertibilityWitness> weakly_invertible(const MonoidalStructure& m, int x) {
    const FinCategory& c = m.cat();
    for (int b = 0; b < m.num_objects(); ++b) {
        auto hs = c.iso_hom(m.unit, m.tensor_obj(x, b));
        if (hs.empty()) continue;
        auto ks = c.iso_hom(m.tensor_obj(b, x), m.unit);
        if (ks.empty()) continue;
        return InvertibilityWitness{x, b, hs.front(), ks.front()};
    }
    return std::nullopt;
}

TwoGroupReport is_two_group(const MonoidalStructure& m) {
    TwoGroupReport report;
    report.non_invertible_morphisms = is_groupoid(m.cat()).non_invertible;
    for (int x = 0; x < m.num_objects(); ++x)
        if (!weakly_invertible(m, x)) report.non_invertible_objects.push_back(x);
    report.is_two_group =
        report.non_invertible_morphisms.empty() && report.non_invertible_objects.empty();
    return report;
}

SubcategoryResult monoidal_subcategory(MonPtr m, const std::vector<int>& objs,
                                       const std::vector<int>& mors,
                                       const std::string& name) {
    const FinCategory& c = m->cat();

    std::vector<int> obj_index(m->num_objects(), -1);
    for (int i = 0; i < static_cast<int>(objs.size()); ++i) obj_index[objs[i]] = i;
    std::vector<int> mor_index(c.num_morphisms(), -1);
    for (int i = 0; i < static_cast<int>(mors.size()); ++i) mor_index[mors[i]] = i;

    auto require_obj = [&](int parent_obj, const char* what) {
        if (obj_index[parent_obj] < 0)
            throw InternalCheckError(name + ": " + what + " leaves the selected objects");
        return obj_index[parent_obj];
    };
    auto require_mor = [&](int parent_mor, const char* what) {
        if (mor_index[parent_mor] < 0)
            throw InternalCheckError(name + ": " + what + " leaves the selected morphisms");
        return mor_index[parent_mor];
    };

    auto base = std::make_shared<FinCategory>();
    base->name = name;
    for (int x : objs) base->objects.push_back(c.object_name(x));
    for (int f : mors)
        base->morphisms.push_back({c.morphism_name(f), obj_index[c.src(f)],
                                   obj_index[c.dst(f)]});
    for (int x : objs) base->identities.push_back(require_mor(c.identity(x), "identity"));
    base->compose_table.assign(mors.size() * mors.size(), -1);
    for (std::size_t g = 0; g < mors.size(); ++g)
        for (std::size_t f = 0; f < mors.size(); ++f) {
            if (!c.composable(mors[g], mors[f])) continue;
            base->compose_table[g * mors.size() + f] =
                require_mor(c.compose(mors[g], mors[f]), "composite");
        }

    auto sub = std::make_shared<MonoidalStructure>();
    sub->base = base;
    sub->unit = require_obj(m->unit, "unit");
    const int n = static_cast<int>(objs.size());
    sub->tensor_obj_table.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sub->tensor_obj_table[static_cast<std::size_t>(i) * n + j] =
                require_obj(m->tensor_obj(objs[i], objs[j]), "tensor of objects");
    const int k = static_cast<int>(mors.size());
    sub->tensor_mor_table.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub->tensor_mor_table[static_cast<std::size_t>(i) * k + j] =
                require_mor(m->tensor_mor(mors[i], mors[j]), "tensor of morphisms");
    sub->assoc_table.resize(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                sub->assoc_table[(static_cast<std::size_t>(i) * n + j) * n + l] =
                    require_mor(m->assoc(objs[i], objs[j], objs[l]), "associator");
    for (int i = 0; i < n; ++i) {
        sub->lunit_table.push_back(require_mor(m->lunit(objs[i]), "left unitor"));
        sub->runit_table.push_back(require_mor(m->runit(objs[i]), "right unitor"));
    }
    if (m->braided()) {
        std::vector<int> braid(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                braid[static_cast<std::size_t>(i) * n + j] =
                    require_mor(m->braiding(objs[i], objs[j]), "braiding");
        sub->braiding_table = std::move(braid);
        sub->symmetric = m->symmetric;
    }

    SubcategoryResult out;
    out.sub = sub;
    out.object_in_parent = objs;
    out.morphism_in_parent = mors;

    MonoidalFunctor inc;
    inc.dom = sub;
    inc.cod = m;
    inc.object_map = objs;
    inc.morphism_map = mors;
    inc.e = c.identity(m->unit);
    inc.m_table.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inc.m_table[static_cast<std::size_t>(i) * n + j] =
                c.identity(m->tensor_obj(objs[i], objs[j]));
    out.inclusion = std::move(inc);
    return out;
}

SubcategoryResult pic(MonPtr m) {
    const FinCategory& c = m->cat();
    std::vector<int> objs;
    for (int x = 0; x < m->num_objects(); ++x)
        if (weakly_invertible(*m, x)) objs.push_back(x);
    std::vector<char> selected(m->num_objects(), 0);
    for (int x : objs) selected[x] = 1;
    std::vector<int> mors;
    for (int f = 0; f < c.num_morphisms(); ++f)
        if (selected[c.src(f)] && selected[c.dst(f)] && is_isomorphism(c, f))
            mors.push_back(f);
    return monoidal_subcategory(m, objs, mors, "Pic(" + m->name() + ")");
}

std::pair<int, int> zigzag_composites(const MonoidalStructure& m,
                                      const InvertibilityWitness& w) {
    const FinCategory& c = m.cat();
    const int a = w.object, b = w.weak_inverse;

    // A -> I⊗A -> (A⊗B)⊗A -> A⊗(B⊗A) -> A⊗I -> A
    int z1 = *inverse_of(c, m.lunit(a));
    z1 = c.compose(m.tensor_mor(w.h, c.identity(a)), z1);
    z1 = c.compose(m.assoc(a, b, a), z1);
    z1 = c.compose(m.tensor_mor(c.identity(a), w.k), z1);
    z1 = c.compose(m.runit(a), z1);

    // B -> B⊗I -> B⊗(A⊗B) -> (B⊗A)⊗B -> I⊗B -> B
    int z2 = *inverse_of(c, m.runit(b));
    z2 = c.compose(m.tensor_mor(c.identity(b), w.h), z2);
    z2 = c.compose(*inverse_of(c, m.assoc(b, a, b)), z2);
    z2 = c.compose(m.tensor_mor(w.k, c.identity(b)), z2);
    z2 = c.compose(m.lunit(b), z2);

    return {z1, z2};
}

AdjointEquivalence adjoint_equivalence(const MonoidalStructure& m,
                                       const InvertibilityWitness& w) {
    const FinCategory& c = m.cat();
    auto is_fixed = [&](const InvertibilityWitness& cand) {
        auto [z1, z2] = zigzag_composites(m, cand);
        return z1 == c.identity(cand.object) && z2 == c.identity(cand.weak_inverse);
    };
    if (is_fixed(w)) return AdjointEquivalence{w};
    for (int k : c.iso_hom(m.tensor_obj(w.weak_inverse, w.object), m.unit)) {
        InvertibilityWitness cand = w;
        cand.k = k;
        if (is_fixed(cand)) return AdjointEquivalence{cand};
    }
    throw InternalCheckError("adjoint_equivalence: no k fixes the zigzags; input is not a"
                             " witness in a valid 2-group");
}

PurityReport is_pure(const MonoidalStructure& m) {
    const FinCategory& c = m.cat();
    PurityReport report;
    for (int x = 0; x < m.num_objects(); ++x)
        if (weakly_invertible(m, x)) report.invertible_objects.push_back(x);

    bool cond3 = true;
    for (int x : report.invertible_objects)
        for (int y : report.invertible_objects)
            if (c.iso_hom(x, y).size() != 1) {
                cond3 = false;
                report.bad_pairs.emplace_back(x, y);
            }

    bool cond2 = c.iso_hom(m.unit, m.unit).size() == 1;
    for (int x : report.invertible_objects)
        if (c.iso_hom(x, m.unit).empty()) cond2 = false;

    if (cond2 != cond3)
        throw InternalCheckError("is_pure: purity conditions (2) and (3) disagree on " +
                                 m.name());
    report.pure = cond3;
    return report;
}

}  // namespace smc
