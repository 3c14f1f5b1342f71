#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqring/errors.hpp"
#include "fqring/gf.hpp"
#include "fqring/poly.hpp"

namespace fqring {

/// Cap on explicit point counts and on q^n for full grids; every algorithm
/// downstream enumerates points, so larger sets are rejected up front.
inline constexpr std::uint64_t kMaxPoints = 1u << 16;

namespace detail {
struct PointSetData;
}

/// A nonempty finite set S of points in F_q^n, held in canonical order:
/// lexicographic by coordinate, coordinates compared by enumeration index,
/// first coordinate most significant. Construction sorts and deduplicates.
/// Copies share one immutable backing object.
class PointSet {
public:
    /// All q^n points of F_q^n. Rejects q^n beyond the point cap.
    static PointSet full(FieldSpec spec, std::size_t nvars);
    /// An explicit set; points are sorted and deduplicated. Rejects an
    /// empty set, arity mismatches and foreign field elements.
    static PointSet of(FieldSpec spec, std::size_t nvars,
                       std::vector<std::vector<FieldElement>> points);

    FieldSpec spec() const;
    std::size_t nvars() const;
    std::size_t size() const;
    std::span<const FieldElement> point(std::size_t i) const;
    /// Position of the point in canonical order, if present.
    std::optional<std::size_t> index_of(std::span<const FieldElement> pt) const;
    bool is_full() const;

    /// Reduced polynomial vanishing on all of S except points[i], where it
    /// takes value 1: the product over coordinates of 1 - (x_j - a_j)^(q-1).
    /// Built once per set and verified against every point.
    const Polynomial& indicator_representative(std::size_t i) const;

    bool operator==(const PointSet& other) const;
    bool operator!=(const PointSet& other) const { return !(*this == other); }

    const detail::PointSetData* data() const { return data_.get(); }

private:
    explicit PointSet(std::shared_ptr<const detail::PointSetData> data)
        : data_(std::move(data)) {}

    std::shared_ptr<const detail::PointSetData> data_;
};

/// A subset T of a fixed PointSet S, as one membership flag per point of S.
class SubsetOfS {
public:
    SubsetOfS(PointSet ambient, std::vector<bool> flags);

    static SubsetOfS none(PointSet ambient);
    static SubsetOfS all(PointSet ambient);
    static SubsetOfS of_indices(PointSet ambient,
                                std::span<const std::size_t> indices);

    const PointSet& ambient() const { return ambient_; }
    const std::vector<bool>& flags() const { return flags_; }
    bool contains(std::size_t i) const { return flags_[i]; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool is_all() const { return count() == flags_.size(); }
    std::vector<std::size_t> indices() const;

    SubsetOfS complement() const;

    bool operator==(const SubsetOfS& other) const;
    bool operator!=(const SubsetOfS& other) const { return !(*this == other); }

private:
    PointSet ambient_;
    std::vector<bool> flags_;
};

SubsetOfS set_union(const SubsetOfS& a, const SubsetOfS& b);
SubsetOfS set_intersection(const SubsetOfS& a, const SubsetOfS& b);
SubsetOfS set_difference(const SubsetOfS& a, const SubsetOfS& b);
bool is_subset(const SubsetOfS& a, const SubsetOfS& b);

/// An element of the coordinate ring K[S]: the function S -> F_q it induces.
/// The evaluation vector (one value per point of S, in S's order) is the
/// identity-bearing canonical form; the stored polynomial representative is
/// advisory (display, export) and always consistent with the values.
class RingElement {
public:
    /// Element with the given evaluation vector; the representative is the
    /// interpolant through the set's indicator polynomials.
    static RingElement from_values(PointSet ring, std::vector<FieldElement> values);

    const PointSet& ring() const { return ring_; }
    const std::vector<FieldElement>& values() const { return values_; }
    FieldElement value_at(std::size_t i) const { return values_[i]; }
    const Polynomial& representative() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_nowhere_zero() const;

    /// Equality of induced functions; representatives never participate.
    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

    friend RingElement r_add(const RingElement& a, const RingElement& b);
    friend RingElement r_sub(const RingElement& a, const RingElement& b);
    friend RingElement r_mul(const RingElement& a, const RingElement& b);
    friend RingElement r_neg(const RingElement& a);
    friend RingElement r_scale(const FieldElement& c, const RingElement& a);
    friend RingElement r_pow(const RingElement& a, std::uint64_t e);

    friend RingElement operator+(const RingElement& a, const RingElement& b) { return r_add(a, b); }
    friend RingElement operator-(const RingElement& a, const RingElement& b) { return r_sub(a, b); }
    friend RingElement operator*(const RingElement& a, const RingElement& b) { return r_mul(a, b); }
    friend RingElement operator-(const RingElement& a) { return r_neg(a); }
    friend RingElement operator*(const FieldElement& c, const RingElement& a) { return r_scale(c, a); }

    friend RingElement embed(const Polynomial& f, const PointSet& S);
    friend RingElement indicator(const PointSet& S, std::size_t i);
    friend RingElement interpolate(const PointSet& S,
                                   std::vector<FieldElement> values);

private:
    enum class Checked { verify, trust };
    RingElement(PointSet ring, std::vector<FieldElement> values,
                Polynomial rep, Checked mode);

    PointSet ring_;
    std::vector<FieldElement> values_;
    Polynomial rep_;
};

/// The residue class [f] in K[S]: values by evaluation at each point,
/// representative reduced via the field equations.
RingElement embed(const Polynomial& f, const PointSet& S);

/// The idempotent taking value 1 at points[i] of S and 0 elsewhere.
RingElement indicator(const PointSet& S, std::size_t i);
/// Same, addressed by the point itself; the point must lie in S.
RingElement indicator(const PointSet& S, std::span<const FieldElement> a);

/// Element with a prescribed evaluation vector (Lagrange-style combination
/// of indicators).
RingElement interpolate(const PointSet& S, std::vector<FieldElement> values);

/// Generators of the vanishing ideal of S inside the full polynomial ring
/// K[x_0..x_{n-1}]: the n field equations x_i^q - x_i plus, when S is a
/// proper subset of the grid, the sum of the indicator polynomials of the
/// complement. Requires q^n within the point cap.
std::vector<Polynomial> ideal_of_pointset(const PointSet& S);

} // namespace fqring
