#include "smc/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace smc {

ValidationReport validate_monoid(const FinMonoid& m) {
    ValidationReport report;
    const int n = m.size();
    if (m.op_table.size() != static_cast<std::size_t>(n) * n) {
        report.add("multiplication table has wrong size");
        return report;
    }
    if (m.unit < 0 || m.unit >= n) {
        report.add("unit element reference is dangling");
        return report;
    }
    for (int v : m.op_table)
        if (v < 0 || v >= n) {
            report.add("multiplication table has a dangling reference");
            return report;
        }
    for (int a = 0; a < n; ++a) {
        if (m.op(m.unit, a) != a || m.op(a, m.unit) != a)
            report.add("unit law violated at " + m.elements[a]);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c)))
                    report.add("associativity violated at (" + m.elements[a] + ", " +
                               m.elements[b] + ", " + m.elements[c] + ")");
    }
    if (m.commutative)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < a; ++b)
                if (m.op(a, b) != m.op(b, a))
                    report.add("commutativity violated at (" + m.elements[a] + ", " +
                               m.elements[b] + ")");
    return report;
}

ValidationReport validate_monoid_map(const MonoidMap& f) {
    ValidationReport report;
    if (!f.dom || !f.cod || static_cast<int>(f.map.size()) != f.dom->size()) {
        report.add("monoid map is not total");
        return report;
    }
    if (f.map[f.dom->unit] != f.cod->unit) report.add("monoid map does not preserve unit");
    for (int a = 0; a < f.dom->size(); ++a)
        for (int b = 0; b < f.dom->size(); ++b)
            if (f.map[f.dom->op(a, b)] != f.cod->op(f.map[a], f.map[b]))
                report.add("monoid map does not preserve (" + f.dom->elements[a] + ", " +
                           f.dom->elements[b] + ")");
    return report;
}

namespace {

std::optional<int> monoid_inverse(const FinMonoid& m, int a) {
    for (int b = 0; b < m.size(); ++b)
        if (m.op(a, b) == m.unit && m.op(b, a) == m.unit) return b;
    return std::nullopt;
}

}  // namespace

bool monoid_is_group(const FinMonoid& m) {
    for (int a = 0; a < m.size(); ++a)
        if (!monoid_inverse(m, a)) return false;
    return true;
}

bool monoid_is_pure(const FinMonoid& m) {
    for (int a = 0; a < m.size(); ++a)
        if (a != m.unit && monoid_inverse(m, a)) return false;
    return true;
}

namespace {

std::vector<int> class_index(const std::vector<std::vector<int>>& classes, int n) {
    std::vector<int> idx(n, -1);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
        for (int x : classes[c]) idx[x] = c;
    return idx;
}

FinMonoid monoid_on_partition(const MonoidalStructure& m,
                              const std::vector<std::vector<int>>& classes,
                              const std::string& name) {
    const FinCategory& c = m.cat();
    FinMonoid out;
    out.name = name;
    std::vector<int> idx = class_index(classes, c.num_objects());
    for (const auto& cls : classes) out.elements.push_back("[" + c.object_name(cls.front()) + "]");
    const int n = static_cast<int>(classes.size());
    out.op_table.assign(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int product = idx[m.tensor_obj(classes[a].front(), classes[b].front())];
            // Well-definedness across all representatives.
            for (int x : classes[a])
                for (int y : classes[b])
                    if (idx[m.tensor_obj(x, y)] != product)
                        throw InternalCheckError(name + ": product of classes depends on"
                                                 " representatives");
            out.op_table[static_cast<std::size_t>(a) * n + b] = product;
        }
    out.unit = idx[m.unit];
    out.commutative = m.symmetric;
    return out;
}

}  // namespace

FinMonoid K(const MonoidalStructure& m) {
    return monoid_on_partition(m, iso_classes(m.cat()), "K(" + m.name() + ")");
}

FinMonoid pi0(const MonoidalStructure& m) {
    return monoid_on_partition(m, connected_components(m.cat()), "pi0(" + m.name() + ")");
}

FinMonoid pi1(const MonoidalStructure& m) {
    const FinCategory& c = m.cat();
    std::vector<int> endos = c.hom(m.unit, m.unit);
    FinMonoid out;
    out.name = "pi1(" + m.name() + ")";
    for (int f : endos) out.elements.push_back(c.morphism_name(f));
    const int n = static_cast<int>(endos.size());
    std::vector<int> pos(c.num_morphisms(), -1);
    for (int i = 0; i < n; ++i) pos[endos[i]] = i;
    out.op_table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.op_table[static_cast<std::size_t>(a) * n + b] =
                pos[c.compose(endos[a], endos[b])];
    out.unit = pos[c.identity(m.unit)];
    out.commutative = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (out.op(a, b) != out.op(b, a))
                throw InternalCheckError("pi1(" + m.name() + ") is not commutative");
    return out;
}

MonPtr i0(const FinMonoid& m) {
    const int n = m.size();
    auto base = std::make_shared<FinCategory>();
    base->name = "i0(" + m.name + ")";
    base->objects = m.elements;
    for (int x = 0; x < n; ++x) base->morphisms.push_back({"id_" + m.elements[x], x, x});
    base->identities.resize(n);
    std::iota(base->identities.begin(), base->identities.end(), 0);
    base->compose_table.assign(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) base->compose_table[static_cast<std::size_t>(x) * n + x] = x;

    auto out = std::make_shared<MonoidalStructure>();
    out->base = base;
    out->unit = m.unit;
    out->tensor_obj_table = m.op_table;
    out->tensor_mor_table = m.op_table;  // identities tensor to identities
    out->assoc_table.resize(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                out->assoc_table[(static_cast<std::size_t>(x) * n + y) * n + z] =
                    m.op(m.op(x, y), z);
    out->lunit_table.resize(n);
    out->runit_table.resize(n);
    for (int x = 0; x < n; ++x) {
        out->lunit_table[x] = m.op(m.unit, x);
        out->runit_table[x] = m.op(x, m.unit);
    }
    if (m.commutative) {
        std::vector<int> braid(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                braid[static_cast<std::size_t>(x) * n + y] = m.op(x, y);
        out->braiding_table = std::move(braid);
        out->symmetric = true;
    }
    return out;
}

MonPtr i1(const FinMonoid& m) {
    if (!m.commutative)
        throw ContractError("i1 requires a commutative monoid (interchange law)");
    const int n = m.size();
    auto base = std::make_shared<FinCategory>();
    base->name = "i1(" + m.name + ")";
    base->objects = {"*"};
    for (int a = 0; a < n; ++a) base->morphisms.push_back({m.elements[a], 0, 0});
    base->identities = {m.unit};
    base->compose_table = m.op_table;

    auto out = std::make_shared<MonoidalStructure>();
    out->base = base;
    out->unit = 0;
    out->tensor_obj_table = {0};
    out->tensor_mor_table = m.op_table;
    out->assoc_table = {m.unit};
    out->lunit_table = {m.unit};
    out->runit_table = {m.unit};
    out->braiding_table = std::vector<int>{m.unit};
    out->symmetric = true;
    return out;
}

SubmonoidResult monoid_units(const FinMonoid& m) {
    std::vector<int> units;
    for (int a = 0; a < m.size(); ++a)
        if (monoid_inverse(m, a)) units.push_back(a);
    std::vector<int> pos(m.size(), -1);
    for (int i = 0; i < static_cast<int>(units.size()); ++i) pos[units[i]] = i;

    SubmonoidResult out;
    out.sub.name = "units(" + m.name + ")";
    for (int u : units) out.sub.elements.push_back(m.elements[u]);
    const int n = static_cast<int>(units.size());
    out.sub.op_table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int product = pos[m.op(units[a], units[b])];
            if (product < 0)
                throw InternalCheckError("monoid_units: units are not closed under product");
            out.sub.op_table[static_cast<std::size_t>(a) * n + b] = product;
        }
    out.sub.unit = pos[m.unit];
    out.sub.commutative = m.commutative;
    if (!monoid_is_group(out.sub))
        throw InternalCheckError("monoid_units: result is not a group");
    out.inclusion = MonoidMap{std::make_shared<FinMonoid>(out.sub),
                              std::make_shared<FinMonoid>(m), units};
    return out;
}

MonoidQuotientResult monoid_quotient_by(const FinMonoid& m,
                                        const std::vector<int>& identified_with_unit) {
    const int n = m.size();

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    };

    for (int a : identified_with_unit) unite(a, m.unit);

    // Saturate to a congruence: a ~ b forces ac ~ bc and ca ~ cb.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (find(a) != find(b)) continue;
                for (int c = 0; c < n; ++c) {
                    if (find(m.op(a, c)) != find(m.op(b, c))) {
                        unite(m.op(a, c), m.op(b, c));
                        changed = true;
                    }
                    if (find(m.op(c, a)) != find(m.op(c, b))) {
                        unite(m.op(c, a), m.op(c, b));
                        changed = true;
                    }
                }
            }
    }

    std::vector<std::vector<int>> classes;
    std::vector<int> cls_of(n, -1);
    for (int x = 0; x < n; ++x) {
        int root = find(x);
        if (cls_of[root] < 0) {
            cls_of[root] = static_cast<int>(classes.size());
            classes.push_back({});
        }
        cls_of[x] = cls_of[root];
        classes[cls_of[x]].push_back(x);
    }

    MonoidQuotientResult out;
    out.quotient.name = "quot(" + m.name + ")";
    for (const auto& cls : classes)
        out.quotient.elements.push_back("[" + m.elements[cls.front()] + "]");
    const int q = static_cast<int>(classes.size());
    out.quotient.op_table.resize(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            int product = cls_of[m.op(classes[a].front(), classes[b].front())];
            for (int x : classes[a])
                for (int y : classes[b])
                    if (cls_of[m.op(x, y)] != product)
                        throw InternalCheckError("monoid quotient: relation is not a"
                                                 " congruence");
            out.quotient.op_table[static_cast<std::size_t>(a) * q + b] = product;
        }
    out.quotient.unit = cls_of[m.unit];
    out.quotient.commutative = m.commutative;
    out.projection = MonoidMap{std::make_shared<FinMonoid>(m),
                               std::make_shared<FinMonoid>(out.quotient), cls_of};
    return out;
}

MonoidQuotientResult monoid_purify(const FinMonoid& m) {
    if (!m.commutative)
        throw ContractError("monoid_purify requires a commutative monoid");
    std::vector<int> units;
    for (int a = 0; a < m.size(); ++a)
        if (monoid_inverse(m, a)) units.push_back(a);
    MonoidQuotientResult out = monoid_quotient_by(m, units);
    out.quotient.name = "purify(" + m.name + ")";
    if (!monoid_is_pure(out.quotient))
        throw InternalCheckError("monoid_purify: quotient is not pure");
    return out;
}

SubmonoidResult torsion_submonoid(const FinMonoid& m) {
    std::vector<int> torsion;
    for (int a = 0; a < m.size(); ++a) {
        int x = a, steps = 0;
        while (x != m.unit && steps <= m.size()) {
            x = m.op(a, x);
            ++steps;
        }
        if (x == m.unit) torsion.push_back(a);
    }
    std::vector<int> pos(m.size(), -1);
    for (int i = 0; i < static_cast<int>(torsion.size()); ++i) pos[torsion[i]] = i;

    SubmonoidResult out;
    out.sub.name = "t(" + m.name + ")";
    for (int t : torsion) out.sub.elements.push_back(m.elements[t]);
    const int n = static_cast<int>(torsion.size());
    out.sub.op_table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int product = pos[m.op(torsion[a], torsion[b])];
            if (product < 0)
                throw InternalCheckError("torsion_submonoid: not closed under product"
                                         " (input is not commutative-group-like)");
            out.sub.op_table[static_cast<std::size_t>(a) * n + b] = product;
        }
    out.sub.unit = pos[m.unit];
    out.sub.commutative = m.commutative;
    out.inclusion = MonoidMap{std::make_shared<FinMonoid>(out.sub),
                              std::make_shared<FinMonoid>(m), torsion};
    return out;
}

namespace {

/// (preperiod, period) of the power sequence of an element; isomorphism
/// candidates must match on it.
std::pair<int, int> power_signature(const FinMonoid& m, int a) {
    std::vector<int> seen_at(m.size(), -1);
    int x = a, step = 0;
    while (seen_at[x] < 0) {
        seen_at[x] = step++;
        x = m.op(x, a);
    }
    return {seen_at[x], step - seen_at[x]};
}

}  // namespace

std::optional<std::vector<int>> find_monoid_isomorphism(const FinMonoid& a,
                                                        const FinMonoid& b) {
    if (a.size() != b.size()) return std::nullopt;
    const int n = a.size();
    std::vector<std::pair<int, int>> siga(n), sigb(n);
    for (int i = 0; i < n; ++i) {
        siga[i] = power_signature(a, i);
        sigb[i] = power_signature(b, i);
    }
    {
        auto sa = siga, sb = sigb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    map[a.unit] = b.unit;
    used[b.unit] = 1;

    auto consistent = [&](int x) {
        for (int y = 0; y < n; ++y) {
            if (map[y] < 0) continue;
            int xy = a.op(x, y), yx = a.op(y, x);
            if (map[xy] >= 0 && b.op(map[x], map[y]) != map[xy]) return false;
            if (map[yx] >= 0 && b.op(map[y], map[x]) != map[yx]) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, int x) -> bool {
        while (x < n && map[x] >= 0) ++x;
        if (x == n) return true;
        for (int y = 0; y < n; ++y) {
            if (used[y] || sigb[y] != siga[x]) continue;
            map[x] = y;
            used[y] = 1;
            if (consistent(x) && self(self, x + 1)) return true;
            map[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return map;
}

MonoidMap K_map(const MonoidalFunctor& f, MonoidPtr k_dom, MonoidPtr k_cod) {
    auto dom_classes = iso_classes(f.dom->cat());
    auto cod_classes = iso_classes(f.cod->cat());
    if (static_cast<int>(dom_classes.size()) != k_dom->size() ||
        static_cast<int>(cod_classes.size()) != k_cod->size())
        throw ContractError("K_map: monoids do not match the functor endpoints");
    std::vector<int> cod_idx = class_index(cod_classes, f.cod->num_objects());
    MonoidMap out{k_dom, k_cod, {}};
    for (const auto& cls : dom_classes) out.map.push_back(cod_idx[f.on_obj(cls.front())]);
    return out;
}

MonoidMap pi0_map(const MonoidalFunctor& f, MonoidPtr p_dom, MonoidPtr p_cod) {
    auto dom_classes = connected_components(f.dom->cat());
    auto cod_classes = connected_components(f.cod->cat());
    if (static_cast<int>(dom_classes.size()) != p_dom->size() ||
        static_cast<int>(cod_classes.size()) != p_cod->size())
        throw ContractError("pi0_map: monoids do not match the functor endpoints");
    std::vector<int> cod_idx = class_index(cod_classes, f.cod->num_objects());
    MonoidMap out{p_dom, p_cod, {}};
    for (const auto& cls : dom_classes) out.map.push_back(cod_idx[f.on_obj(cls.front())]);
    return out;
}

MonoidMap pi1_map(const MonoidalFunctor& f, MonoidPtr p_dom, MonoidPtr p_cod) {
    const FinCategory& d = f.dom->cat();
    const FinCategory& n = f.cod->cat();
    std::vector<int> dom_endos = d.hom(f.dom->unit, f.dom->unit);
    std::vector<int> cod_endos = n.hom(f.cod->unit, f.cod->unit);
    if (static_cast<int>(dom_endos.size()) != p_dom->size() ||
        static_cast<int>(cod_endos.size()) != p_cod->size())
        throw ContractError("pi1_map: monoids do not match the functor endpoints");
    int e_inv = *inverse_of(n, f.e);
    MonoidMap out{p_dom, p_cod, {}};
    for (int alpha : dom_endos) {
        int image = n.compose(e_inv, n.compose(f.on_mor(alpha), f.e));
        auto it = std::find(cod_endos.begin(), cod_endos.end(), image);
        if (it == cod_endos.end())
            throw InternalCheckError("pi1_map: image is not a unit endomorphism");
        out.map.push_back(static_cast<int>(it - cod_endos.begin()));
    }
    return out;
}

namespace {

std::string render_row(const FinMonoid& a, const FinMonoid& b, const FinMonoid& c) {
    return a.name + " -> " + b.name + " -> " + c.name;
}

}  // namespace

IsoReport compare_exact_rows(const FinMonoid& top_left, const MonoidMap& top_incl,
                             const FinMonoid& top_mid, const MonoidMap& top_proj,
                             const FinMonoid& top_right, const FinMonoid& bot_left,
                             const MonoidMap& bot_incl, const FinMonoid& bot_mid,
                             const MonoidMap& bot_proj, const FinMonoid& bot_right,
                             const std::vector<int>& middle_iso) {
    IsoReport report;
    report.top_row = render_row(top_left, top_mid, top_right);
    report.bottom_row = render_row(bot_left, bot_mid, bot_right);
    report.middle_iso = middle_iso;

    // Left square: bot_incl ∘ left = middle ∘ top_incl.
    std::vector<int> left(top_left.size(), -1);
    for (int a = 0; a < top_left.size(); ++a) {
        int want = middle_iso[top_incl.map[a]];
        for (int u = 0; u < bot_left.size(); ++u)
            if (bot_incl.map[u] == want) {
                left[a] = u;
                break;
            }
        if (left[a] < 0) return report;  // ok stays false
    }
    // Right square: right ∘ top_proj = bot_proj ∘ middle.
    std::vector<int> right(top_right.size(), -1);
    for (int x = 0; x < top_mid.size(); ++x) {
        int src = top_proj.map[x];
        int want = bot_proj.map[middle_iso[x]];
        if (right[src] >= 0 && right[src] != want) return report;
        right[src] = want;
    }
    for (int v : right)
        if (v < 0) return report;

    auto is_iso = [](const MonoidMap& f) {
        if (!validate_monoid_map(f).ok()) return false;
        std::vector<char> hit(f.cod->size(), 0);
        for (int v : f.map) {
            if (hit[v]) return false;
            hit[v] = 1;
        }
        return f.dom->size() == f.cod->size();
    };
    auto tl = std::make_shared<FinMonoid>(top_left);
    auto bl = std::make_shared<FinMonoid>(bot_left);
    auto tm = std::make_shared<FinMonoid>(top_mid);
    auto bm = std::make_shared<FinMonoid>(bot_mid);
    auto tr = std::make_shared<FinMonoid>(top_right);
    auto br = std::make_shared<FinMonoid>(bot_right);
    if (!is_iso(MonoidMap{tl, bl, left}) || !is_iso(MonoidMap{tm, bm, middle_iso}) ||
        !is_iso(MonoidMap{tr, br, right}))
        return report;

    // Re-verify both squares exhaustively.
    for (int a = 0; a < top_left.size(); ++a)
        if (bot_incl.map[left[a]] != middle_iso[top_incl.map[a]]) return report;
    for (int x = 0; x < top_mid.size(); ++x)
        if (right[top_proj.map[x]] != bot_proj.map[middle_iso[x]]) return report;

    report.left_iso = left;
    report.right_iso = right;
    report.ok = true;
    return report;
}

IsoReport compare_K_sequences(MonPtr m, SearchBudget& budget) {
    CanonicalSequence seq = canonical_sequence(m, budget);

    auto top_left = K(*seq.picard.sub);
    auto top_mid = K(*m);
    auto top_right = K(*seq.purification.quotient);
    auto tl = std::make_shared<FinMonoid>(top_left);
    auto tm = std::make_shared<FinMonoid>(top_mid);
    auto tr = std::make_shared<FinMonoid>(top_right);
    MonoidMap top_incl = K_map(seq.picard.inclusion, tl, tm);
    MonoidMap top_proj = K_map(seq.purification.projection, tm, tr);

    auto bottom = monoid_units(top_mid);
    auto bottom_q = monoid_purify(top_mid);

    std::vector<int> middle(top_mid.size());
    std::iota(middle.begin(), middle.end(), 0);
    return compare_exact_rows(top_left, top_incl, top_mid, top_proj, top_right, bottom.sub,
                        bottom.inclusion, top_mid, bottom_q.projection, bottom_q.quotient,
                        middle);
}

IsoReport compare_pi_sequences(const FinMonoid& m, int k, SearchBudget& budget) {
    if (k != 0 && k != 1) throw ContractError("compare_pi_sequences: k must be 0 or 1");
    MonPtr mk = k == 0 ? i0(m) : i1(m);
    CanonicalSequence seq = canonical_sequence(mk, budget);

    auto invariant = [&](const MonoidalStructure& s) { return k == 0 ? pi0(s) : pi1(s); };
    auto invariant_map = [&](const MonoidalFunctor& f, MonoidPtr d, MonoidPtr c) {
        return k == 0 ? pi0_map(f, d, c) : pi1_map(f, d, c);
    };

    auto top_left = invariant(*seq.picard.sub);
    auto top_mid = invariant(*mk);
    auto top_right = invariant(*seq.purification.quotient);
    auto tl = std::make_shared<FinMonoid>(top_left);
    auto tm = std::make_shared<FinMonoid>(top_mid);
    auto tr = std::make_shared<FinMonoid>(top_right);
    MonoidMap top_incl = invariant_map(seq.picard.inclusion, tl, tm);
    MonoidMap top_proj = invariant_map(seq.purification.projection, tm, tr);

    auto bottom = monoid_units(m);
    auto bottom_q = monoid_purify(m);

    // The canonical identification pi_k(i_k(m)) = m is index-wise: for k = 0
    // the components of a discrete category are singletons in element
    // order; for k = 1 the unit endomorphisms are the elements in order.
    if (top_mid.size() != m.size())
        throw InternalCheckError("compare_pi_sequences: invariant of i_k(m) has wrong size");
    std::vector<int> middle(m.size());
    std::iota(middle.begin(), middle.end(), 0);

    return compare_exact_rows(top_left, top_incl, top_mid, top_proj, top_right, bottom.sub,
                        bottom.inclusion, m, bottom_q.projection, bottom_q.quotient, middle);
}

}  // namespace smc
