#ifndef SMC_TOR2GROUP_HPP
#define SMC_TOR2GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "smc/invariants.hpp"
#include "smc/torsion.hpp"

namespace smc {

/// X together with the least n >= 1 and an isomorphism X^⊗n -> I. Powers
/// follow the recursion X^⊗(m+1) = X ⊗ X^⊗m.
struct TorsionWitness {
    int object = -1;
    int exponent = 0;
    int iso = -1;
};

/// n-th tensor power of an object.
int tensor_power(const MonoidalStructure& g, int x, int n);

/// Least n with X^⊗n ≅ I, searched up to the exponent of the finite group
/// K(g). For a finite 2-group the search always succeeds; exhausting the
/// bound is an internal error.
std::optional<TorsionWitness> torsion_order(const MonoidalStructure& g, int x);

/// Full subcategory of torsion objects with its inclusion.
SubcategoryResult torsion_part(MonPtr g);

/// The torsion-free quotient Φ(G): arrow classes [A, f] with torsion
/// coefficients, every morphism usable as a connector.
Purification phi(MonPtr g);

struct TorsionFreeReport {
    bool torsion_free = false;
    std::vector<int> witnesses;  // torsion objects with iso-count to I != 1

    explicit operator bool() const { return torsion_free; }
};

TorsionFreeReport is_torsion_free(const MonoidalStructure& g);

/// Full verification of the torsion sequence T(G) -> G -> Φ(G): structure
/// of both ends, uniqueness of the connecting nullhomotopy, torsion
/// transfer, orthogonality samples, probe exactness over the corpus
/// 2-groups, and the π0/π1 rows against the classical group-level rows.
/// Strongness probes are run and reported informationally only.
struct TorsionSequenceReport {
    bool pass = true;
    std::vector<std::string> lines;
    std::vector<std::string> informational;

    explicit operator bool() const { return pass; }
};

TorsionSequenceReport torsion_sequence_report(MonPtr g, const std::vector<MonPtr>& corpus,
                                              SearchBudget& budget);

}  // namespace smc

#endif
