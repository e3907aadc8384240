#pragma once

#include <vector>

#include "arithgraph/divisor.hpp"
#include "arithgraph/morphism.hpp"
#include "arithgraph/snf.hpp"

namespace arithgraph {

// Critical group of an arithmetical structure: the torsion part of the
// cokernel of the Laplacian, read off the Smith normal form. The diagonal
// has exactly one zero; its U-row is +-r^t, which is why degree-zero
// divisors have vanishing free coordinate.
class CriticalGroup {
public:
    explicit CriticalGroup(ArithStructure st);

    const ArithStructure& structure() const { return structure_; }
    const SnfDecomposition& snf() const { return snf_; }

    // invariant factors > 1 in divisibility order; units and the zero dropped
    const IntVec& invariant_factors() const { return factors_; }
    const Int& order() const { return order_; }
    std::size_t factor_count() const { return factors_.size(); }

    const std::vector<std::size_t>& torsion_indices() const { return torsion_indices_; }
    std::size_t free_row() const { return free_row_; }

private:
    ArithStructure structure_;
    SnfDecomposition snf_;
    IntVec factors_;
    Int order_;
    std::vector<std::size_t> torsion_indices_;
    std::size_t free_row_ = 0;
};

CriticalGroup critical_group(const ArithStructure& st);

// Divisor class in SNF coordinates, coords[i] reduced mod the i-th factor.
struct GroupElement {
    IntVec coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(const CriticalGroup& k);
GroupElement reduce_coords(const CriticalGroup& k, const IntVec& raw);

// Class of a degree-zero divisor; throws NonzeroDegree otherwise.
GroupElement class_of(const CriticalGroup& k, const Divisor& d);

// Degree-zero divisor representing e, with the free SNF coordinate zero.
Divisor class_representative(const CriticalGroup& k, const GroupElement& e);

// All |K| elements in odometer order; throws GroupTooLarge above the cap.
std::vector<GroupElement> enumerate_elements(const CriticalGroup& k, const Int& cap);

// Homomorphism between critical groups in SNF coordinates. The matrix acts
// on source coordinates; images are reduced mod the target factors.
struct GroupHom {
    IntVec source_factors;
    IntVec target_factors;
    IntMatrix matrix;  // target rank x source rank
};

GroupElement apply_hom(const GroupHom& hom, const GroupElement& e);

// Pushforward homomorphism K(domain structure) -> K(codomain structure),
// requiring k2 to be built on the pullback of k1's structure along h.
GroupHom induced_pushforward(const HarmonicData& h, const CriticalGroup& k2,
                             const CriticalGroup& k1);

// Pullback homomorphism K(codomain structure) -> K(domain structure).
GroupHom induced_pullback(const HarmonicData& h, const CriticalGroup& k1,
                          const CriticalGroup& k2);

enum class VerifyMethod { Enumerated, Computed };

struct HomVerdict {
    bool holds;
    VerifyMethod method;
};

// Exhaustive when the source has at most `bound` elements, otherwise decided
// by a Smith normal form computation on the coordinate lattice.
HomVerdict verify_surjective(const GroupHom& hom, const Int& bound);
HomVerdict verify_injective(const GroupHom& hom, const Int& bound);

Int factor_product(const IntVec& factors);

}  // namespace arithgraph
