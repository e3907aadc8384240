#include "arithgraph/critical.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "arithgraph/errors.hpp"

namespace arithgraph {

CriticalGroup::CriticalGroup(ArithStructure st)
    : structure_(std::move(st)), snf_(smith_normal_form(laplacian(structure_))) {
    const IntVec diag = snf_.diagonal();
    const std::size_t n = diag.size();
    if (snf_.rank != n - 1)
        throw std::logic_error("arithmetical Laplacian must have exactly one zero in its SNF");
    free_row_ = n - 1;

    order_ = 1;
    for (std::size_t i = 0; i < snf_.rank; ++i) {
        if (diag[i] > 1) {
            torsion_indices_.push_back(i);
            factors_.push_back(diag[i]);
            order_ *= diag[i];
        }
    }
}

CriticalGroup critical_group(const ArithStructure& st) { return CriticalGroup(st); }

GroupElement identity_element(const CriticalGroup& k) {
    return GroupElement{IntVec(k.factor_count())};
}

GroupElement reduce_coords(const CriticalGroup& k, const IntVec& raw) {
    if (raw.size() != k.factor_count()) fail("LengthMismatch", "coordinate tuple has wrong length");
    IntVec coords(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        coords[i] = mod_floor(raw[i], k.invariant_factors()[i]);
    return GroupElement{std::move(coords)};
}

GroupElement class_of(const CriticalGroup& k, const Divisor& d) {
    if (d.graph != k.structure().graph)
        fail("GraphMismatch", "divisor lives on a different graph");
    const Int deg = dot(d.values, k.structure().r);
    if (deg != 0) fail("NonzeroDegree", "divisor has degree " + deg.get_str());

    const IntVec y = k.snf().u * d.values;
    IntVec coords(k.factor_count());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = mod_floor(y[k.torsion_indices()[i]], k.invariant_factors()[i]);
    return GroupElement{std::move(coords)};
}

Divisor class_representative(const CriticalGroup& k, const GroupElement& e) {
    if (e.coords.size() != k.factor_count())
        fail("LengthMismatch", "coordinate tuple has wrong length");
    IntVec y(k.structure().graph.vertex_count());
    for (std::size_t i = 0; i < e.coords.size(); ++i) y[k.torsion_indices()[i]] = e.coords[i];
    return Divisor{k.structure().graph, k.snf().u_inv * y};
}

std::vector<GroupElement> enumerate_elements(const CriticalGroup& k, const Int& cap) {
    if (k.order() > cap)
        fail("GroupTooLarge", "group order " + k.order().get_str() + " exceeds cap " + cap.get_str());
    std::vector<GroupElement> out;
    IntVec coords(k.factor_count());
    for (;;) {
        out.push_back(GroupElement{coords});
        std::size_t pos = coords.size();
        while (pos > 0 && coords[pos - 1] == k.invariant_factors()[pos - 1] - 1)
            coords[--pos] = 0;
        if (pos == 0) break;
        ++coords[pos - 1];
    }
    return out;
}

GroupElement apply_hom(const GroupHom& hom, const GroupElement& e) {
    if (e.coords.size() != hom.source_factors.size())
        fail("LengthMismatch", "coordinate tuple has wrong length");
    IntVec out(hom.target_factors.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < e.coords.size(); ++j) acc += hom.matrix(i, j) * e.coords[j];
        out[i] = mod_floor(acc, hom.target_factors[i]);
    }
    return GroupElement{std::move(out)};
}

namespace {

// Builds the hom matrix by mapping a representative of each source generator
// through `push` and reading coordinates in the target. Well-definedness is
// checked exactly: e_i times column i must vanish mod the target factors.
template <typename F>
GroupHom build_hom(const CriticalGroup& source, const CriticalGroup& target, F&& push) {
    GroupHom hom;
    hom.source_factors = source.invariant_factors();
    hom.target_factors = target.invariant_factors();
    hom.matrix = IntMatrix(target.factor_count(), source.factor_count());

    for (std::size_t j = 0; j < source.factor_count(); ++j) {
        IntVec gen(source.factor_count());
        gen[j] = 1;
        const Divisor rep = class_representative(source, GroupElement{std::move(gen)});
        const GroupElement image = class_of(target, push(rep));
        for (std::size_t i = 0; i < target.factor_count(); ++i)
            hom.matrix(i, j) = image.coords[i];
    }

    for (std::size_t j = 0; j < source.factor_count(); ++j)
        for (std::size_t i = 0; i < target.factor_count(); ++i)
            if (mod_floor(hom.source_factors[j] * hom.matrix(i, j), hom.target_factors[i]) != 0)
                throw std::logic_error("induced map is not well-defined on the quotient");
    return hom;
}

void require_pullback_pair(const HarmonicData& h, const CriticalGroup& k2,
                           const CriticalGroup& k1) {
    if (h.constant) fail("ConstantMorphism", "induced maps require a non-constant morphism");
    if (k1.structure().graph != h.morphism.codomain() ||
        k2.structure().graph != h.morphism.domain())
        fail("StructureMismatch", "groups do not live on the morphism's graphs");
    if (!(k2.structure() == pullback_structure(h, k1.structure())))
        fail("StructureMismatch", "domain structure is not the pullback of the codomain structure");
}

}  // namespace

GroupHom induced_pushforward(const HarmonicData& h, const CriticalGroup& k2,
                             const CriticalGroup& k1) {
    require_pullback_pair(h, k2, k1);
    return build_hom(k2, k1, [&](const Divisor& d) { return pushforward(h, d); });
}

GroupHom induced_pullback(const HarmonicData& h, const CriticalGroup& k1,
                          const CriticalGroup& k2) {
    require_pullback_pair(h, k2, k1);
    return build_hom(k1, k2, [&](const Divisor& d) { return pullback_divisor(h, d); });
}

Int factor_product(const IntVec& factors) {
    Int p = 1;
    for (const Int& f : factors) p *= f;
    return p;
}

namespace {

// Odometer over coordinate tuples bounded by `radices`.
bool next_tuple(IntVec& t, const IntVec& radices) {
    std::size_t pos = t.size();
    while (pos > 0 && t[pos - 1] == radices[pos - 1] - 1) t[--pos] = 0;
    if (pos == 0) return false;
    ++t[pos - 1];
    return true;
}

// [hom.matrix | Diag(target factors)]: its cokernel is target/image and its
// integer kernel projects onto the kernel of the induced map.
IntMatrix augmented_matrix(const GroupHom& hom) {
    const std::size_t t = hom.target_factors.size();
    const std::size_t s = hom.source_factors.size();
    IntMatrix b(t, s + t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < s; ++j) b(i, j) = hom.matrix(i, j);
        b(i, s + i) = hom.target_factors[i];
    }
    return b;
}

}  // namespace

HomVerdict verify_surjective(const GroupHom& hom, const Int& bound) {
    const Int source_order = factor_product(hom.source_factors);
    const Int target_order = factor_product(hom.target_factors);
    if (source_order <= bound) {
        if (target_order > source_order) return {false, VerifyMethod::Enumerated};
        std::set<IntVec> images;
        IntVec coords(hom.source_factors.size());
        do {
            images.insert(apply_hom(hom, GroupElement{coords}).coords);
        } while (next_tuple(coords, hom.source_factors));
        return {Int(images.size()) == target_order, VerifyMethod::Enumerated};
    }
    // Surjective iff the columns of the hom together with the target moduli
    // generate all of Z^t, i.e. every SNF diagonal entry of the augmented
    // matrix is a unit.
    const SnfDecomposition snf = smith_normal_form(augmented_matrix(hom));
    const std::size_t t = hom.target_factors.size();
    if (snf.rank < t) return {false, VerifyMethod::Computed};
    for (std::size_t i = 0; i < t; ++i)
        if (snf.d(i, i) != 1) return {false, VerifyMethod::Computed};
    return {true, VerifyMethod::Computed};
}

HomVerdict verify_injective(const GroupHom& hom, const Int& bound) {
    const Int source_order = factor_product(hom.source_factors);
    if (source_order <= bound) {
        long zeros = 0;
        IntVec coords(hom.source_factors.size());
        do {
            if (is_zero(apply_hom(hom, GroupElement{coords}).coords)) ++zeros;
        } while (next_tuple(coords, hom.source_factors));
        return {zeros == 1, VerifyMethod::Enumerated};
    }
    // Kernel elements are projections of integer kernel vectors of the
    // augmented matrix; the map is injective iff every such projection is
    // zero mod the source factors.
    const IntMatrix b = augmented_matrix(hom);
    const SnfDecomposition snf = smith_normal_form(b);
    const std::size_t s = hom.source_factors.size();
    for (std::size_t c = snf.rank; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < s; ++i)
            if (mod_floor(snf.v(i, c), hom.source_factors[i]) != 0)
                return {false, VerifyMethod::Computed};
    }
    return {true, VerifyMethod::Computed};
}

}  // namespace arithgraph
