#ifndef SMC_FINCAT_HPP
#define SMC_FINCAT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smc/diagnostics.hpp"

namespace smc {

/// A finite category given by complete object/morphism tables. Morphism
/// identity is nominal: two morphisms are equal iff they have the same index.
/// Instances are immutable after construction; every operation on them is a
/// pure function.
struct FinCategory {
    struct Morphism {
        std::string name;
        int src = -1;
        int dst = -1;
    };

    std::string name;                    // document name, used in reports
    std::vector<std::string> objects;    // object identifiers
    std::vector<Morphism> morphisms;     // morphism table
    std::vector<int> identities;         // object -> identity morphism
    std::vector<int> compose_table;      // g*|mor|+f -> g∘f, -1 off composable pairs

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms.size()); }

    int src(int f) const { return morphisms[f].src; }
    int dst(int f) const { return morphisms[f].dst; }
    int identity(int x) const { return identities[x]; }

    bool composable(int g, int f) const { return morphisms[f].dst == morphisms[g].src; }

    /// g∘f; ContractError if the pair is not composable.
    int compose(int g, int f) const;

    /// Morphisms x -> y in index order.
    std::vector<int> hom(int x, int y) const;

    /// Isomorphisms x -> y in index order.
    std::vector<int> iso_hom(int x, int y) const;

    const std::string& object_name(int x) const { return objects[x]; }
    const std::string& morphism_name(int f) const { return morphisms[f].name; }
};

using CatPtr = std::shared_ptr<const FinCategory>;

/// Functor between finite categories, stored as total index maps.
struct FinFunctor {
    CatPtr dom;
    CatPtr cod;
    std::vector<int> object_map;
    std::vector<int> morphism_map;

    int on_obj(int x) const { return object_map[x]; }
    int on_mor(int f) const { return morphism_map[f]; }

    friend bool operator==(const FinFunctor& a, const FinFunctor& b) {
        return a.dom == b.dom && a.cod == b.cod && a.object_map == b.object_map &&
               a.morphism_map == b.morphism_map;
    }
};

/// Natural transformation between parallel functors; components[x] is the
/// morphism F(x) -> G(x) in the codomain.
struct NatTransformation {
    FinFunctor source;
    FinFunctor target;
    std::vector<int> components;

    friend bool operator==(const NatTransformation& a, const NatTransformation& b) {
        return a.source == b.source && a.target == b.target && a.components == b.components;
    }
};

/// Checks every category axiom instance: table typing, composability
/// domain, identity laws, associativity. Returns one issue per violation.
ValidationReport validate_category(const FinCategory& c);

/// Checks that a functor's maps are total, typed, and preserve identities
/// and composition.
ValidationReport validate_functor(const FinFunctor& f);

/// Checks component typing and every naturality square.
ValidationReport validate_nat(const NatTransformation& t);

FinFunctor identity_functor(CatPtr c);

/// g∘f for composable functors.
FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g);

/// All functors a -> b in lexicographic order (object_map, then
/// morphism_map). Exhaustive and duplicate-free; throws BudgetError instead
/// of ever returning a truncated list.
std::vector<FinFunctor> enumerate_functors(CatPtr a, CatPtr b, SearchBudget& budget);

/// All natural transformations f => g for parallel functors, in
/// lexicographic component order.
std::vector<NatTransformation> enumerate_natural_transformations(const FinFunctor& f,
                                                                 const FinFunctor& g,
                                                                 SearchBudget& budget);

/// Two-sided inverse of f, if one exists (exhaustive search).
std::optional<int> inverse_of(const FinCategory& c, int f);

bool is_isomorphism(const FinCategory& c, int f);

/// Partition of objects by "an isomorphism exists between"; classes are
/// listed by least member, members ascending.
std::vector<std::vector<int>> iso_classes(const FinCategory& c);

/// Partition of objects by the equivalence closure of "some morphism exists
/// between"; same ordering convention as iso_classes.
std::vector<std::vector<int>> connected_components(const FinCategory& c);

struct GroupoidReport {
    bool is_groupoid = false;
    std::vector<int> non_invertible;  // witnesses, in index order

    explicit operator bool() const { return is_groupoid; }
};

GroupoidReport is_groupoid(const FinCategory& c);

}  // namespace smc

#endif
