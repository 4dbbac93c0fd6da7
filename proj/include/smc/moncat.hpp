#ifndef SMC_MONCAT_HPP
#define SMC_MONCAT_HPP

#include <optional>
#include <vector>

#include "smc/fincat.hpp"

namespace smc {

/// Monoidal (optionally braided/symmetric) structure over a finite base
/// category. All coherence data is explicit: components of the associator,
/// unitors and braiding are stored per object tuple, never strictified.
struct MonoidalStructure {
    CatPtr base;
    int unit = -1;
    std::vector<int> tensor_obj_table;            // x*n+y -> object
    std::vector<int> tensor_mor_table;            // f*m+g -> morphism  (f⊗g)
    std::vector<int> assoc_table;                 // (x*n+y)*n+z -> a_{x,y,z}
    std::vector<int> lunit_table;                 // x -> l_x : I⊗x -> x
    std::vector<int> runit_table;                 // x -> r_x : x⊗I -> x
    std::optional<std::vector<int>> braiding_table;  // x*n+y -> b_{x,y}
    bool symmetric = false;

    const FinCategory& cat() const { return *base; }
    int num_objects() const { return base->num_objects(); }
    int num_morphisms() const { return base->num_morphisms(); }

    int tensor_obj(int x, int y) const {
        return tensor_obj_table[static_cast<std::size_t>(x) * num_objects() + y];
    }
    int tensor_mor(int f, int g) const {
        return tensor_mor_table[static_cast<std::size_t>(f) * num_morphisms() + g];
    }
    int assoc(int x, int y, int z) const {
        std::size_t n = num_objects();
        return assoc_table[(static_cast<std::size_t>(x) * n + y) * n + z];
    }
    int lunit(int x) const { return lunit_table[x]; }
    int runit(int x) const { return runit_table[x]; }
    bool braided() const { return braiding_table.has_value(); }
    int braiding(int x, int y) const {
        return (*braiding_table)[static_cast<std::size_t>(x) * num_objects() + y];
    }

    const std::string& name() const { return base->name; }
};

using MonPtr = std::shared_ptr<const MonoidalStructure>;

/// Strong monoidal functor: coherence maps e : I_N -> F(I_M) and
/// m_{X,Y} : FX ⊗ FY -> F(X⊗Y) are required to be isomorphisms.
struct MonoidalFunctor {
    MonPtr dom;
    MonPtr cod;
    std::vector<int> object_map;
    std::vector<int> morphism_map;
    int e = -1;
    std::vector<int> m_table;  // x*n+y over domain objects -> morphism of cod

    int on_obj(int x) const { return object_map[x]; }
    int on_mor(int f) const { return morphism_map[f]; }
    int m(int x, int y) const {
        return m_table[static_cast<std::size_t>(x) * dom->num_objects() + y];
    }

    FinFunctor underlying() const { return FinFunctor{dom->base, cod->base, object_map, morphism_map}; }

    friend bool operator==(const MonoidalFunctor& a, const MonoidalFunctor& b) {
        return a.dom == b.dom && a.cod == b.cod && a.object_map == b.object_map &&
               a.morphism_map == b.morphism_map && a.e == b.e && a.m_table == b.m_table;
    }
};

/// Monoidal natural transformation between parallel monoidal functors.
struct MonoidalNatTransformation {
    MonoidalFunctor source;
    MonoidalFunctor target;
    std::vector<int> components;  // per domain object

    NatTransformation underlying() const {
        return NatTransformation{source.underlying(), target.underlying(), components};
    }
};

/// Checks every monoidal axiom instance over the base category:
/// bifunctoriality (identities + interchange), naturality of all structure
/// maps, invertibility of their components, pentagon, triangle, both
/// hexagons when braided, and the symmetry involution when flagged.
ValidationReport validate_monoidal(const MonoidalStructure& m);

/// Coherence check for a strong monoidal functor, including naturality of m,
/// the associativity hexagon, both unit squares, invertibility of e and m,
/// and braiding compatibility when both sides are symmetric.
ValidationReport validate_monoidal_functor(const MonoidalFunctor& f);

ValidationReport validate_monoidal_nat(const MonoidalNatTransformation& t);

MonoidalFunctor identity_monoidal_functor(MonPtr m);

/// g∘f with e_{g∘f} = g(e_f)∘e_g and m_{g∘f} = g(m_f)∘m_g.
MonoidalFunctor compose_monoidal_functors(const MonoidalFunctor& f, const MonoidalFunctor& g);

/// The constant functor at I_N, with e = id and m = l_I.
MonoidalFunctor constant_unit_functor(MonPtr m, MonPtr n);

/// All strong monoidal functors m -> n (full coherence data), deterministic
/// order: underlying functor order, then lexicographic (e, m-table). When
/// both structures are symmetric, only braiding-compatible functors qualify.
std::vector<MonoidalFunctor> enumerate_monoidal_functors(MonPtr m, MonPtr n,
                                                         SearchBudget& budget);

}  // namespace smc

#endif
