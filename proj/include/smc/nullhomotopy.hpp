#ifndef SMC_NULLHOMOTOPY_HPP
#define SMC_NULLHOMOTOPY_HPP

#include <string>
#include <vector>

#include "smc/moncat.hpp"

namespace smc {

/// A nullhomotopy on F : M -> N is a monoidal natural isomorphism from F to
/// the constant functor at I_N, stored as its component family. Equality is
/// component-wise.
struct Nullhomotopy {
    MonoidalFunctor subject;
    std::vector<int> components;  // per domain object: iso F(X) -> I_N

    MonoidalNatTransformation as_transformation() const;

    friend bool operator==(const Nullhomotopy& a, const Nullhomotopy& b) {
        return a.subject == b.subject && a.components == b.components;
    }
};

/// Exhaustive, deterministic enumeration of Θ(F): all monoidal natural
/// isomorphisms F => Δ_{I_N}. Components are searched among isomorphisms
/// F(X) -> I_N only, pruned by naturality along each morphism, and each
/// candidate family is confirmed by the full validator.
std::vector<Nullhomotopy> nullhomotopies(const MonoidalFunctor& f, SearchBudget& budget);

/// Validation of a claimed nullhomotopy.
ValidationReport validate_nullhomotopy(const Nullhomotopy& nh);

/// (p • theta • q) for a composable chain p : M' -> M, subject(theta) : M -> N,
/// q : N -> N'; component at X is e_q^{-1} ∘ q(theta_{pX}).
Nullhomotopy compose_nullhomotopy(const MonoidalFunctor& p, const Nullhomotopy& theta,
                                  const MonoidalFunctor& q);

bool is_theta_trivial(const MonoidalFunctor& f, SearchBudget& budget);

struct OrthogonalityReport {
    bool orthogonal = false;
    // One row per enumerated functor: readable functor key and |Θ(F)|.
    std::vector<std::pair<std::string, int>> counts;

    explicit operator bool() const { return orthogonal; }
};

/// m ⊥ n: every strong (symmetric) monoidal functor m -> n has exactly one
/// nullhomotopy. The count table lists every functor enumerated.
OrthogonalityReport orthogonal(MonPtr m, MonPtr n, SearchBudget& budget);

/// One composable chain p', p, (f, theta), q, q' used to exercise the two
/// nullhomotopy-structure axioms.
struct AxiomSample {
    MonoidalFunctor p_prime;
    MonoidalFunctor p;
    Nullhomotopy theta;
    MonoidalFunctor q;
    MonoidalFunctor q_prime;
};

/// Verifies axiom a) (identity composition is the identity) and axiom b)
/// (pasting associativity) exactly on each sample.
ValidationReport check_structure_axioms(const std::vector<AxiomSample>& samples);

/// Readable key for a functor, stable across runs; used by report tables.
std::string functor_key(const MonoidalFunctor& f);

}  // namespace smc

#endif
