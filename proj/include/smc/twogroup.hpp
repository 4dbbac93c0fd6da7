#ifndef SMC_TWOGROUP_HPP
#define SMC_TWOGROUP_HPP

#include <optional>
#include <vector>

#include "smc/moncat.hpp"

namespace smc {

/// Evidence that an object is weakly invertible: a weak inverse together
/// with isomorphisms h : I -> A⊗B and k : B⊗A -> I.
struct InvertibilityWitness {
    int object = -1;
    int weak_inverse = -1;
    int h = -1;
    int k = -1;
};

/// An invertibility witness whose two zigzag composites are identities.
struct AdjointEquivalence {
    InvertibilityWitness data;
};

/// Searches all objects B and isomorphism pairs (h, k); returns the first
/// witness in lexicographic (B, h, k) order, or nothing.
std::optional<InvertibilityWitness> weakly_invertible(const MonoidalStructure& m, int x);

struct TwoGroupReport {
    bool is_two_group = false;
    std::vector<int> non_invertible_morphisms;  // groupoid failures
    std::vector<int> non_invertible_objects;    // weak-invertibility failures

    explicit operator bool() const { return is_two_group; }
};

TwoGroupReport is_two_group(const MonoidalStructure& m);

/// A monoidal subcategory carved out of a parent, with the inclusion
/// functor and the index maps back into the parent.
struct SubcategoryResult {
    MonPtr sub;
    MonoidalFunctor inclusion;
    std::vector<int> object_in_parent;    // sub object -> parent object
    std::vector<int> morphism_in_parent;  // sub morphism -> parent morphism
};

/// Carves the monoidal subcategory on the given objects and morphisms out
/// of the parent; throws InternalCheckError when the selection is not
/// closed under the parent's structure. The inclusion carries identity
/// coherence maps.
SubcategoryResult monoidal_subcategory(MonPtr m, const std::vector<int>& objects,
                                       const std::vector<int>& morphisms,
                                       const std::string& name);

/// The Picard 2-group: all weakly invertible objects and all isomorphisms
/// between them, with the inherited monoidal (and symmetric) structure.
SubcategoryResult pic(MonPtr m);

/// Both zigzag composites of the adjoint-equivalence condition; identities
/// iff the witness is an adjoint equivalence.
std::pair<int, int> zigzag_composites(const MonoidalStructure& m,
                                      const InvertibilityWitness& w);

/// Fixes k so that both zigzags become identities, keeping (A, B, h). The
/// input k is preferred when it already works; otherwise candidates are
/// tried in index order and the result is re-verified.
AdjointEquivalence adjoint_equivalence(const MonoidalStructure& m,
                                       const InvertibilityWitness& w);

struct PurityReport {
    bool pure = false;
    // Condition (3) failures: pairs of weakly invertible objects with
    // iso-count != 1.
    std::vector<std::pair<int, int>> bad_pairs;
    std::vector<int> invertible_objects;

    explicit operator bool() const { return pure; }
};

/// Purity via condition (3) (exactly one isomorphism between any two weakly
/// invertible objects), cross-checked against condition (2) (all weakly
/// invertible objects isomorphic to I, and Aut(I) trivial). Disagreement is
/// an InternalCheckError.
PurityReport is_pure(const MonoidalStructure& m);

}  // namespace smc

#endif
