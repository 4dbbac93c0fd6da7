#ifndef SMC_TORSION_HPP
#define SMC_TORSION_HPP

#include <string>
#include <vector>

#include "smc/nullhomotopy.hpp"
#include "smc/twogroup.hpp"

namespace smc {

/// One member of a 2-isomorphism class: a coefficient object A together
/// with f : X -> Y⊗A. Indices refer to the source category.
struct ArrowClassMember {
    int coeff = -1;  // object A
    int mor = -1;    // f
};

/// An arrow-class quotient of a symmetric monoidal category: the objects
/// are kept, the morphisms X -> Y become 2-isomorphism classes [A, f] with
/// A drawn from a fixed coefficient subcategory. Covers both the
/// purification (coefficients = Picard objects) and the §9 torsion-free
/// quotient (coefficients = torsion objects).
struct Purification {
    MonPtr source;
    MonPtr quotient;
    MonoidalFunctor projection;          // strict on objects, f -> [I, r^{-1}∘f]
    std::vector<int> coeff_objects;      // coefficient objects, source ids
    std::vector<ArrowClassMember> reps;  // per quotient morphism: canonical member

    /// Quotient target object of a quotient morphism.
    int target_of(int q_mor) const { return quotient->cat().dst(q_mor); }

    /// Class of the 1-arrow (A, f) : src(f) -> y; ContractError if the pair
    /// is not well-typed, InternalCheckError if it escapes the class table.
    int class_of(int y, int coeff, int mor) const;

    std::vector<int> class_table;  // (y*|obj| + A)*|mor| + f -> quotient morphism
};

/// The generalized quotient builder. connectors[a] lists, for each pair of
/// coefficient objects, the morphisms usable as 2-arrows; class equality is
/// the closure of f' = (Y⊗α)∘f over those.
Purification build_arrow_class_quotient(MonPtr m, const std::vector<int>& coeff_objects,
                                        const std::vector<int>& connector_morphisms,
                                        const std::string& quotient_name);

/// P(M): classes over the Picard objects with isomorphism connectors.
/// Requires a braided (symmetric) input; the tensor of classes needs b.
Purification purify(MonPtr m);

/// [A,f] = [B,g] as arrows src(f) -> y, via an exhaustive search for an
/// isomorphism α : A -> B between weakly invertible objects making the
/// comparison triangle commute.
bool arrow_class_eq(const MonoidalStructure& m, int y, ArrowClassMember a,
                    ArrowClassMember b);

/// A pair of composable monoidal functors with a nullhomotopy on their
/// composite, the raw material of a homotopy-exact sequence.
struct ExactSequenceCandidate {
    MonoidalFunctor left;   // t : T -> X
    MonoidalFunctor right;  // f : X -> F
    Nullhomotopy theta;     // in Θ(right ∘ left)
};

/// Pic(M) -> M -> P(M) with the canonical connecting nullhomotopy
/// μ_A = [A, l_A^{-1}]; asserts μ is the unique element of Θ(p∘j).
struct CanonicalSequence {
    SubcategoryResult picard;
    Purification purification;
    ExactSequenceCandidate sequence;
};

CanonicalSequence canonical_sequence(MonPtr m, SearchBudget& budget);

struct KernelProbe {
    MonoidalFunctor h;  // L -> X
    Nullhomotopy phi;   // in Θ(right ∘ h)
};
struct CokernelProbe {
    MonoidalFunctor g;  // X -> N
    Nullhomotopy psi;   // in Θ(g ∘ left)
};
struct StrongKernelProbe {
    MonoidalFunctor a;  // A -> T
    Nullhomotopy phi;   // in Θ(left ∘ a), compatible with theta
};
struct StrongCokernelProbe {
    MonoidalFunctor a;  // F -> A
    Nullhomotopy phi;   // in Θ(a ∘ right), compatible with theta
};

struct ProbeSet {
    std::vector<KernelProbe> kernel;
    std::vector<CokernelProbe> cokernel;
    std::vector<StrongKernelProbe> strong_kernel;
    std::vector<StrongCokernelProbe> strong_cokernel;
};

/// Generates the finite stand-in for Def 4.2's universal quantifier: every
/// enumerable functor from/to each corpus category, with every nullhomotopy
/// making it a probe. Strong probes are filtered by the compatibility
/// equations.
ProbeSet make_probes(const ExactSequenceCandidate& seq, const std::vector<MonPtr>& corpus,
                     SearchBudget& budget, bool with_strong);

struct ExactnessReport {
    struct Entry {
        std::string probe;
        int count = 0;  // mediators (or mediating nullhomotopies) found
    };
    std::vector<Entry> entries;
    bool pass = true;
    int probes_checked = 0;

    explicit operator bool() const { return pass; }
    std::string summary(const std::string& what) const;
};

/// Universal property of the homotopy kernel on each probe: exactly one
/// mediator with t∘h' = h and h'•theta = phi. Strong probes additionally
/// require a unique mediating nullhomotopy.
ExactnessReport verify_kernel(const ExactSequenceCandidate& seq,
                              const std::vector<KernelProbe>& probes,
                              const std::vector<StrongKernelProbe>& strong_probes,
                              SearchBudget& budget);

/// Dual check. When `mediator_formula` is non-null the unique mediator is
/// additionally compared against the arrow-class formula
/// r ∘ (GY ⊗ psi_A) ∘ m_G^{-1} ∘ G(f) on every quotient morphism.
ExactnessReport verify_cokernel(const ExactSequenceCandidate& seq,
                                const std::vector<CokernelProbe>& probes,
                                const std::vector<StrongCokernelProbe>& strong_probes,
                                SearchBudget& budget,
                                const Purification* mediator_formula = nullptr);

/// Lemma: [A,f] invertible in the quotient iff f invertible in the source;
/// in particular the projection reflects isomorphisms.
ValidationReport lemma35_check(const Purification& p);

/// Lemma: every [A,f] : X -> Y factors as p(r_Y) ∘ (Y ⊗ μ_A) ∘ p(f).
ValidationReport lemma36_check(const Purification& p);

/// S(M): objects (X, x : X -> I iso), singleton hom-sets, together with the
/// forgetful functor; the strong homotopy kernel of the identity.
struct TrivialReflection {
    MonPtr category;
    MonoidalFunctor arrow;  // epsilon : S(M) -> M, or eta : M -> R(M)
};

TrivialReflection kernel_of_identity(MonPtr m);

/// R(M): the indiscrete category on the objects of M; the strong homotopy
/// cokernel of the identity.
TrivialReflection cokernel_of_identity(MonPtr m);

/// Every hom-set a singleton; cross-checked against Θ-triviality of the
/// identity functor.
bool is_trivial_category(MonPtr m, SearchBudget& budget);

}  // namespace smc

#endif
