#include "smc/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace smc {

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& issue : issues) out << issue << "\n";
    return out.str();
}

int FinCategory::compose(int g, int f) const {
    if (!composable(g, f))
        throw ContractError("compose(" + morphisms[g].name + ", " + morphisms[f].name +
                            "): target of second argument is not source of first");
    int c = compose_table[static_cast<std::size_t>(g) * morphisms.size() + f];
    if (c < 0)
        throw ContractError("compose table has no entry for composable pair (" +
                            morphisms[g].name + ", " + morphisms[f].name + ")");
    return c;
}

std::vector<int> FinCategory::hom(int x, int y) const {
    std::vector<int> out;
    for (int f = 0; f < num_morphisms(); ++f)
        if (morphisms[f].src == x && morphisms[f].dst == y) out.push_back(f);
    return out;
}

std::vector<int> FinCategory::iso_hom(int x, int y) const {
    std::vector<int> out;
    for (int f : hom(x, y))
        if (is_isomorphism(*this, f)) out.push_back(f);
    return out;
}

namespace {

bool in_range(int i, int n) { return 0 <= i && i < n; }

}  // namespace

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport report;
    const int n_obj = c.num_objects();
    const int n_mor = c.num_morphisms();

    // Structural checks first; axiom checks assume well-formed tables.
    for (int f = 0; f < n_mor; ++f) {
        if (!in_range(c.morphisms[f].src, n_obj) || !in_range(c.morphisms[f].dst, n_obj))
            report.add("morphism " + c.morphism_name(f) + ": dangling endpoint reference");
    }
    if (static_cast<int>(c.identities.size()) != n_obj)
        report.add("identity table has " + std::to_string(c.identities.size()) +
                   " entries, expected one per object");
    if (c.compose_table.size() != static_cast<std::size_t>(n_mor) * n_mor)
        report.add("compose table has wrong size");
    if (!report.ok()) return report;

    for (int x = 0; x < n_obj; ++x) {
        int i = c.identities[x];
        if (!in_range(i, n_mor)) {
            report.add("identity of " + c.object_name(x) + ": dangling morphism reference");
            continue;
        }
        if (c.src(i) != x || c.dst(i) != x)
            report.add("identity of " + c.object_name(x) + " is " + c.morphism_name(i) +
                       " which is not an endomorphism of " + c.object_name(x));
    }

    for (int g = 0; g < n_mor; ++g) {
        for (int f = 0; f < n_mor; ++f) {
            int entry = c.compose_table[static_cast<std::size_t>(g) * n_mor + f];
            if (!c.composable(g, f)) {
                if (entry != -1)
                    report.add("compose(" + c.morphism_name(g) + ", " + c.morphism_name(f) +
                               ") defined on a non-composable pair");
                continue;
            }
            if (entry == -1) {
                report.add("compose(" + c.morphism_name(g) + ", " + c.morphism_name(f) +
                           ") missing for a composable pair");
                continue;
            }
            if (!in_range(entry, n_mor)) {
                report.add("compose(" + c.morphism_name(g) + ", " + c.morphism_name(f) +
                           ") is a dangling morphism reference");
                continue;
            }
            if (c.src(entry) != c.src(f) || c.dst(entry) != c.dst(g))
                report.add("compose(" + c.morphism_name(g) + ", " + c.morphism_name(f) +
                           ") = " + c.morphism_name(entry) + " has wrong endpoints");
        }
    }
    if (!report.ok()) return report;

    auto comp = [&](int g, int f) {
        return c.compose_table[static_cast<std::size_t>(g) * n_mor + f];
    };

    // Identity laws.
    for (int f = 0; f < n_mor; ++f) {
        int idl = c.identities[c.dst(f)];
        int idr = c.identities[c.src(f)];
        if (comp(idl, f) != f)
            report.add("identity law violated at (" + c.object_name(c.dst(f)) + ", " +
                       c.morphism_name(f) + "): id∘f = " + c.morphism_name(comp(idl, f)));
        if (comp(f, idr) != f)
            report.add("identity law violated at (" + c.object_name(c.src(f)) + ", " +
                       c.morphism_name(f) + "): f∘id = " + c.morphism_name(comp(f, idr)));
    }

    // Associativity on every composable triple.
    for (int h = 0; h < n_mor; ++h)
        for (int g = 0; g < n_mor; ++g) {
            if (!c.composable(h, g)) continue;
            for (int f = 0; f < n_mor; ++f) {
                if (!c.composable(g, f)) continue;
                int left = comp(comp(h, g), f);
                int right = comp(h, comp(g, f));
                if (left != right)
                    report.add("associativity violated on (" + c.morphism_name(h) + ", " +
                               c.morphism_name(g) + ", " + c.morphism_name(f) + "): " +
                               c.morphism_name(left) + " != " + c.morphism_name(right));
            }
        }

    return report;
}

ValidationReport validate_functor(const FinFunctor& fun) {
    ValidationReport report;
    if (!fun.dom || !fun.cod) {
        report.add("functor lacks domain or codomain");
        return report;
    }
    const FinCategory& a = *fun.dom;
    const FinCategory& b = *fun.cod;
    if (static_cast<int>(fun.object_map.size()) != a.num_objects() ||
        static_cast<int>(fun.morphism_map.size()) != a.num_morphisms()) {
        report.add("functor maps are not total");
        return report;
    }
    for (int x : fun.object_map)
        if (!in_range(x, b.num_objects())) {
            report.add("object map has a dangling reference");
            return report;
        }
    for (int f : fun.morphism_map)
        if (!in_range(f, b.num_morphisms())) {
            report.add("morphism map has a dangling reference");
            return report;
        }
    for (int f = 0; f < a.num_morphisms(); ++f) {
        int ff = fun.morphism_map[f];
        if (b.src(ff) != fun.object_map[a.src(f)] || b.dst(ff) != fun.object_map[a.dst(f)])
            report.add("functor does not preserve endpoints of " + a.morphism_name(f));
    }
    for (int x = 0; x < a.num_objects(); ++x)
        if (fun.morphism_map[a.identity(x)] != b.identity(fun.object_map[x]))
            report.add("functor does not preserve identity of " + a.object_name(x));
    for (int g = 0; g < a.num_morphisms(); ++g)
        for (int f = 0; f < a.num_morphisms(); ++f) {
            if (!a.composable(g, f)) continue;
            int lhs = fun.morphism_map[a.compose(g, f)];
            int rhs = b.compose(fun.morphism_map[g], fun.morphism_map[f]);
            if (lhs != rhs)
                report.add("functor does not preserve compose(" + a.morphism_name(g) + ", " +
                           a.morphism_name(f) + ")");
        }
    return report;
}

ValidationReport validate_nat(const NatTransformation& t) {
    ValidationReport report;
    if (t.source.dom != t.target.dom || t.source.cod != t.target.cod) {
        report.add("natural transformation between non-parallel functors");
        return report;
    }
    const FinCategory& a = *t.source.dom;
    const FinCategory& b = *t.source.cod;
    if (static_cast<int>(t.components.size()) != a.num_objects()) {
        report.add("component family is not total");
        return report;
    }
    for (int x = 0; x < a.num_objects(); ++x) {
        int cx = t.components[x];
        if (!in_range(cx, b.num_morphisms())) {
            report.add("component at " + a.object_name(x) + " is a dangling reference");
            return report;
        }
        if (b.src(cx) != t.source.object_map[x] || b.dst(cx) != t.target.object_map[x])
            report.add("component at " + a.object_name(x) + " has wrong endpoints");
    }
    if (!report.ok()) return report;
    for (int f = 0; f < a.num_morphisms(); ++f) {
        int x = a.src(f), y = a.dst(f);
        int lhs = b.compose(t.target.morphism_map[f], t.components[x]);
        int rhs = b.compose(t.components[y], t.source.morphism_map[f]);
        if (lhs != rhs)
            report.add("naturality violated at " + a.morphism_name(f));
    }
    return report;
}

FinFunctor identity_functor(CatPtr c) {
    FinFunctor f;
    f.dom = c;
    f.cod = c;
    f.object_map.resize(c->num_objects());
    std::iota(f.object_map.begin(), f.object_map.end(), 0);
    f.morphism_map.resize(c->num_morphisms());
    std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
    return f;
}

FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g) {
    if (f.cod != g.dom)
        throw ContractError("compose_functors: codomain of first is not domain of second");
    FinFunctor out;
    out.dom = f.dom;
    out.cod = g.cod;
    out.object_map.reserve(f.object_map.size());
    for (int x : f.object_map) out.object_map.push_back(g.object_map[x]);
    out.morphism_map.reserve(f.morphism_map.size());
    for (int m : f.morphism_map) out.morphism_map.push_back(g.morphism_map[m]);
    return out;
}

namespace {

/// Backtracking enumeration core. Object maps are explored in lexicographic
/// order; morphism images in index order, with identities forced and each
/// composition constraint checked as soon as all three participants are
/// assigned.
class FunctorSearch {
public:
    FunctorSearch(CatPtr a, CatPtr b, SearchBudget& budget)
        : a_(std::move(a)), b_(std::move(b)), budget_(budget) {}

    std::vector<FinFunctor> run() {
        obj_.assign(a_->num_objects(), -1);
        mor_.assign(a_->num_morphisms(), -1);
        out_.clear();
        assign_object(0);
        return out_;
    }

private:
    void assign_object(int x) {
        if (x == a_->num_objects()) {
            assign_morphism(0);
            return;
        }
        for (int y = 0; y < b_->num_objects(); ++y) {
            budget_.charge();
            obj_[x] = y;
            assign_object(x + 1);
        }
        obj_[x] = -1;
    }

    void assign_morphism(int f) {
        if (f == a_->num_morphisms()) {
            emit();
            return;
        }
        const int sx = obj_[a_->src(f)];
        const int dy = obj_[a_->dst(f)];
        for (int g = 0; g < b_->num_morphisms(); ++g) {
            if (b_->src(g) != sx || b_->dst(g) != dy) continue;
            if (is_identity_of_[f] >= 0 && g != b_->identity(obj_[is_identity_of_[f]])) continue;
            budget_.charge();
            mor_[f] = g;
            if (consistent_up_to(f)) assign_morphism(f + 1);
        }
        mor_[f] = -1;
    }

    // All composition constraints whose latest participant is f.
    bool consistent_up_to(int f) {
        const int n = a_->num_morphisms();
        for (int g = 0; g <= f; ++g)
            for (int h = 0; h <= f; ++h) {
                if (!a_->composable(g, h)) continue;
                int c = a_->compose(g, h);
                if (c > f) continue;
                if (g != f && h != f && c != f) continue;
                if (b_->compose(mor_[g], mor_[h]) != mor_[c]) return false;
            }
        (void)n;
        return true;
    }

    void emit() {
        FinFunctor fun;
        fun.dom = a_;
        fun.cod = b_;
        fun.object_map = obj_;
        fun.morphism_map = mor_;
        out_.push_back(std::move(fun));
    }

public:
    std::vector<int> is_identity_of_;  // morphism -> object it is the identity of, else -1

private:
    CatPtr a_;
    CatPtr b_;
    SearchBudget& budget_;
    std::vector<int> obj_, mor_;
    std::vector<FinFunctor> out_;
};

}  // namespace

std::vector<FinFunctor> enumerate_functors(CatPtr a, CatPtr b, SearchBudget& budget) {
    FunctorSearch search(a, b, budget);
    search.is_identity_of_.assign(a->num_morphisms(), -1);
    for (int x = 0; x < a->num_objects(); ++x) search.is_identity_of_[a->identity(x)] = x;
    return search.run();
}

std::vector<NatTransformation> enumerate_natural_transformations(const FinFunctor& f,
                                                                 const FinFunctor& g,
                                                                 SearchBudget& budget) {
    if (f.dom != g.dom || f.cod != g.cod)
        throw ContractError("enumerate_natural_transformations: functors are not parallel");
    const FinCategory& a = *f.dom;
    const FinCategory& b = *f.cod;

    std::vector<NatTransformation> out;
    std::vector<int> comp(a.num_objects(), -1);

    // Naturality squares indexed by the larger endpoint, so each square is
    // checked exactly once, as soon as it is fully assigned.
    auto squares_ok = [&](int x) {
        for (int m = 0; m < a.num_morphisms(); ++m) {
            int s = a.src(m), d = a.dst(m);
            if (std::max(s, d) != x) continue;
            int lhs = b.compose(g.morphism_map[m], comp[s]);
            int rhs = b.compose(comp[d], f.morphism_map[m]);
            if (lhs != rhs) return false;
        }
        return true;
    };

    auto assign = [&](auto&& self, int x) -> void {
        if (x == a.num_objects()) {
            out.push_back(NatTransformation{f, g, comp});
            return;
        }
        for (int c : b.hom(f.object_map[x], g.object_map[x])) {
            budget.charge();
            comp[x] = c;
            if (squares_ok(x)) self(self, x + 1);
        }
        comp[x] = -1;
    };
    assign(assign, 0);
    return out;
}

std::optional<int> inverse_of(const FinCategory& c, int f) {
    int x = c.src(f), y = c.dst(f);
    for (int g : c.hom(y, x))
        if (c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y)) return g;
    return std::nullopt;
}

bool is_isomorphism(const FinCategory& c, int f) { return inverse_of(c, f).has_value(); }

namespace {

/// Union-find partition refinement shared by both partitions.
class Partition {
public:
    explicit Partition(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int x, int y) { parent_[find(x)] = find(y); }

    std::vector<std::vector<int>> classes() {
        std::vector<std::vector<int>> by_root(parent_.size());
        for (int x = 0; x < static_cast<int>(parent_.size()); ++x)
            by_root[find(x)].push_back(x);
        std::vector<std::vector<int>> out;
        for (auto& cls : by_root)
            if (!cls.empty()) out.push_back(std::move(cls));
        std::sort(out.begin(), out.end(),
                  [](const auto& l, const auto& r) { return l.front() < r.front(); });
        return out;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

std::vector<std::vector<int>> iso_classes(const FinCategory& c) {
    Partition p(c.num_objects());
    for (int f = 0; f < c.num_morphisms(); ++f)
        if (is_isomorphism(c, f)) p.unite(c.src(f), c.dst(f));
    return p.classes();
}

std::vector<std::vector<int>> connected_components(const FinCategory& c) {
    Partition p(c.num_objects());
    for (int f = 0; f < c.num_morphisms(); ++f) p.unite(c.src(f), c.dst(f));
    return p.classes();
}

GroupoidReport is_groupoid(const FinCategory& c) {
    GroupoidReport report;
    for (int f = 0; f < c.num_morphisms(); ++f)
        if (!is_isomorphism(c, f)) report.non_invertible.push_back(f);
    report.is_groupoid = report.non_invertible.empty();
    return report;
}

}  // namespace smc
