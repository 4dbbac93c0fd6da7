#ifndef SMC_INVARIANTS_HPP
#define SMC_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "smc/torsion.hpp"

namespace smc {

/// Finite monoid as a total multiplication table.
struct FinMonoid {
    std::string name;
    std::vector<std::string> elements;
    std::vector<int> op_table;  // a*|elements|+b -> a·b
    int unit = -1;
    bool commutative = false;

    int size() const { return static_cast<int>(elements.size()); }
    int op(int a, int b) const {
        return op_table[static_cast<std::size_t>(a) * elements.size() + b];
    }

    friend bool operator==(const FinMonoid& a, const FinMonoid& b) {
        return a.elements == b.elements && a.op_table == b.op_table && a.unit == b.unit;
    }
};

using MonoidPtr = std::shared_ptr<const FinMonoid>;

struct MonoidMap {
    MonoidPtr dom;
    MonoidPtr cod;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
};

ValidationReport validate_monoid(const FinMonoid& m);
ValidationReport validate_monoid_map(const MonoidMap& f);

bool monoid_is_group(const FinMonoid& m);

/// Only the unit is invertible.
bool monoid_is_pure(const FinMonoid& m);

/// Iso-class monoid: elements are the isomorphism classes of objects,
/// [X]·[Y] = [X⊗Y]. Well-definedness across representatives is asserted.
FinMonoid K(const MonoidalStructure& m);

/// Connected-component monoid, same product formula.
FinMonoid pi0(const MonoidalStructure& m);

/// Endomorphism monoid of the unit object under composition. Always
/// commutative; a non-commutative result is an internal error.
FinMonoid pi1(const MonoidalStructure& m);

/// The discrete monoidal category on a monoid, strict structure maps;
/// symmetric (with identity braiding) iff the monoid is commutative.
MonPtr i0(const FinMonoid& m);

/// The one-object symmetric monoidal category whose endomorphisms are the
/// monoid; requires commutativity (it is exactly the interchange law).
MonPtr i1(const FinMonoid& m);

struct SubmonoidResult {
    FinMonoid sub;
    MonoidMap inclusion;
};

/// Group of two-sided invertible elements with its inclusion.
SubmonoidResult monoid_units(const FinMonoid& m);

struct MonoidQuotientResult {
    FinMonoid quotient;
    MonoidMap projection;
};

/// Quotient by the monoid congruence generated by e ~ 1 for the given
/// elements, computed by fixed-point closure over the multiplication table.
MonoidQuotientResult monoid_quotient_by(const FinMonoid& m,
                                        const std::vector<int>& identified_with_unit);

/// Quotient by the monoid congruence generated by u ~ 1 for every unit u.
/// The result is pure; purity is asserted.
MonoidQuotientResult monoid_purify(const FinMonoid& m);

/// Elements with some power equal to the unit; for an abelian group, the
/// torsion subgroup.
SubmonoidResult torsion_submonoid(const FinMonoid& m);

/// Unit-preserving monoid isomorphism, if one exists; candidates are pruned
/// by element order profiles before the exhaustive bijection search.
std::optional<std::vector<int>> find_monoid_isomorphism(const FinMonoid& a,
                                                        const FinMonoid& b);

/// The invariants applied to a monoidal functor. K and π0 send a class to
/// the class of the image; π1 conjugates a unit endomorphism through e_F.
/// The monoid arguments must be the ones produced by K/pi0/pi1 on the
/// functor's endpoints (their element order is relied on).
MonoidMap K_map(const MonoidalFunctor& f, MonoidPtr k_dom, MonoidPtr k_cod);
MonoidMap pi0_map(const MonoidalFunctor& f, MonoidPtr p_dom, MonoidPtr p_cod);
MonoidMap pi1_map(const MonoidalFunctor& f, MonoidPtr p_dom, MonoidPtr p_cod);

/// Comparison of two short exact rows of monoids by explicit isomorphisms
/// making both squares commute.
struct IsoReport {
    bool ok = false;
    std::string top_row;     // rendered rows for the report text
    std::string bottom_row;
    std::vector<int> left_iso, middle_iso, right_iso;

    explicit operator bool() const { return ok; }
};

/// Compares two three-term rows of monoid maps through a given middle
/// identification: the left square forces the left isomorphism through the
/// injective bottom inclusion, the right square forces the right one
/// through the surjective top projection; everything is re-verified
/// exhaustively. ok=false when no compatible isomorphisms exist.
IsoReport compare_exact_rows(const FinMonoid& top_left, const MonoidMap& top_incl,
                             const FinMonoid& top_mid, const MonoidMap& top_proj,
                             const FinMonoid& top_right, const FinMonoid& bot_left,
                             const MonoidMap& bot_incl, const FinMonoid& bot_mid,
                             const MonoidMap& bot_proj, const FinMonoid& bot_right,
                             const std::vector<int>& middle_iso);

/// Rows K(Pic M) -> K(M) -> K(P(M)) versus units(K M) -> K(M) -> purify(K M).
IsoReport compare_K_sequences(MonPtr m, SearchBudget& budget);

/// Rows π_k of the canonical sequence of i_k(m) versus
/// units(m) -> m -> purify(m), for k in {0, 1}.
IsoReport compare_pi_sequences(const FinMonoid& m, int k, SearchBudget& budget);

}  // namespace smc

#endif
