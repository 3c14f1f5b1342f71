#include "fqring/ring.hpp"

#include <algorithm>
#include <mutex>

namespace fqring {
namespace detail {

struct PointSetData {
    FieldSpec spec;
    std::size_t nvars;
    std::vector<std::vector<FieldElement>> pts;

    mutable std::once_flag indicator_once;
    mutable std::vector<Polynomial> indicator_reps;

    PointSetData(FieldSpec s, std::size_t n,
                 std::vector<std::vector<FieldElement>> p)
        : spec(s), nvars(n), pts(std::move(p)) {}
};

namespace {

bool point_less(std::span<const FieldElement> a,
                std::span<const FieldElement> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].index() != b[i].index()) return a[i].index() < b[i].index();
    }
    return false;
}

// q^n, saturating just past the point cap.
std::uint64_t grid_size_capped(const FieldSpec& spec, std::size_t nvars) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
        total *= spec.q();
        if (total > kMaxPoints) return kMaxPoints + 1;
    }
    return total;
}

// 1 at pt, 0 at every other grid point: prod_j (1 - (x_j - pt_j)^(q-1)).
Polynomial delta_poly(const FieldSpec& spec, std::size_t nvars,
                      std::span<const FieldElement> pt) {
    Polynomial acc = Polynomial::one(spec, nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
        Polynomial base = Polynomial::variable(spec, nvars, j) -
                          Polynomial::constant(spec, nvars, pt[j]);
        acc = acc * (Polynomial::one(spec, nvars) - pow(base, spec.q() - 1));
    }
    return acc;
}

} // namespace
} // namespace detail

PointSet PointSet::full(FieldSpec spec, std::size_t nvars) {
    const std::uint64_t total = detail::grid_size_capped(spec, nvars);
    if (total > kMaxPoints) {
        throw CapacityError("full point set q^n exceeds the cap of 2^16");
    }
    std::vector<std::vector<FieldElement>> pts;
    pts.reserve(total);
    std::vector<std::uint32_t> odo(nvars, 0);
    for (std::uint64_t c = 0; c < total; ++c) {
        std::vector<FieldElement> pt;
        pt.reserve(nvars);
        for (std::size_t j = 0; j < nvars; ++j) pt.push_back(spec.element(odo[j]));
        pts.push_back(std::move(pt));
        for (std::size_t j = nvars; j-- > 0;) {
            if (++odo[j] < spec.q()) break;
            odo[j] = 0;
        }
    }
    return PointSet(std::make_shared<detail::PointSetData>(spec, nvars,
                                                           std::move(pts)));
}

PointSet PointSet::of(FieldSpec spec, std::size_t nvars,
                      std::vector<std::vector<FieldElement>> points) {
    for (const auto& pt : points) {
        if (pt.size() != nvars) {
            throw DomainError("point has " + std::to_string(pt.size()) +
                              " coordinates, expected " +
                              std::to_string(nvars));
        }
        for (const auto& c : pt) {
            if (c.spec() != spec) {
                throw SpecMismatchError("point coordinate from " +
                                        c.spec().descriptor() +
                                        ", expected " + spec.descriptor());
            }
        }
    }
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) {
                  return detail::point_less(a, b);
              });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const auto& a, const auto& b) {
                                 return !detail::point_less(a, b) &&
                                        !detail::point_less(b, a);
                             }),
                 points.end());
    if (points.empty()) {
        throw DomainError("point set must be nonempty");
    }
    if (points.size() > kMaxPoints) {
        throw CapacityError("point set exceeds the cap of 2^16 points");
    }
    return PointSet(std::make_shared<detail::PointSetData>(spec, nvars,
                                                           std::move(points)));
}

FieldSpec PointSet::spec() const { return data_->spec; }
std::size_t PointSet::nvars() const { return data_->nvars; }
std::size_t PointSet::size() const { return data_->pts.size(); }

std::span<const FieldElement> PointSet::point(std::size_t i) const {
    return data_->pts[i];
}

std::optional<std::size_t> PointSet::index_of(
    std::span<const FieldElement> pt) const {
    if (pt.size() != data_->nvars) return std::nullopt;
    auto it = std::lower_bound(data_->pts.begin(), data_->pts.end(), pt,
                               [](const auto& a, std::span<const FieldElement> b) {
                                   return detail::point_less(a, b);
                               });
    if (it == data_->pts.end()) return std::nullopt;
    for (std::size_t j = 0; j < pt.size(); ++j) {
        if ((*it)[j] != pt[j]) return std::nullopt;
    }
    return static_cast<std::size_t>(it - data_->pts.begin());
}

bool PointSet::is_full() const {
    return data_->pts.size() == detail::grid_size_capped(data_->spec,
                                                         data_->nvars);
}

const Polynomial& PointSet::indicator_representative(std::size_t i) const {
    const detail::PointSetData& d = *data_;
    std::call_once(d.indicator_once, [&d] {
        std::vector<Polynomial> reps;
        reps.reserve(d.pts.size());
        for (const auto& pt : d.pts) {
            reps.push_back(detail::delta_poly(d.spec, d.nvars, pt));
        }
        // The interpolation fast path leans on this family being exact, so
        // verify the full identity matrix once.
        for (std::size_t a = 0; a < d.pts.size(); ++a) {
            for (std::size_t b = 0; b < d.pts.size(); ++b) {
                const FieldElement want = a == b ? d.spec.one() : d.spec.zero();
                if (reps[a].evaluate(d.pts[b]) != want) {
                    throw Error("indicator polynomial family is inconsistent");
                }
            }
        }
        d.indicator_reps = std::move(reps);
    });
    return d.indicator_reps[i];
}

bool PointSet::operator==(const PointSet& other) const {
    if (data_ == other.data_) return true;
    return data_->spec == other.data_->spec &&
           data_->nvars == other.data_->nvars && data_->pts == other.data_->pts;
}

SubsetOfS::SubsetOfS(PointSet ambient, std::vector<bool> flags)
    : ambient_(std::move(ambient)), flags_(std::move(flags)) {
    if (flags_.size() != ambient_.size()) {
        throw DomainError("subset flag count " + std::to_string(flags_.size()) +
                          " differs from point count " +
                          std::to_string(ambient_.size()));
    }
}

SubsetOfS SubsetOfS::none(PointSet ambient) {
    std::vector<bool> flags(ambient.size(), false);
    return SubsetOfS(std::move(ambient), std::move(flags));
}

SubsetOfS SubsetOfS::all(PointSet ambient) {
    std::vector<bool> flags(ambient.size(), true);
    return SubsetOfS(std::move(ambient), std::move(flags));
}

SubsetOfS SubsetOfS::of_indices(PointSet ambient,
                                std::span<const std::size_t> indices) {
    std::vector<bool> flags(ambient.size(), false);
    for (std::size_t i : indices) {
        if (i >= flags.size()) {
            throw DomainError("subset index out of range");
        }
        flags[i] = true;
    }
    return SubsetOfS(std::move(ambient), std::move(flags));
}

std::size_t SubsetOfS::count() const {
    return static_cast<std::size_t>(
        std::count(flags_.begin(), flags_.end(), true));
}

std::vector<std::size_t> SubsetOfS::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flags_.size(); ++i) {
        if (flags_[i]) out.push_back(i);
    }
    return out;
}

SubsetOfS SubsetOfS::complement() const {
    std::vector<bool> flags(flags_.size());
    for (std::size_t i = 0; i < flags_.size(); ++i) flags[i] = !flags_[i];
    return SubsetOfS(ambient_, std::move(flags));
}

bool SubsetOfS::operator==(const SubsetOfS& other) const {
    return ambient_ == other.ambient_ && flags_ == other.flags_;
}

namespace {

void check_same_ambient(const SubsetOfS& a, const SubsetOfS& b) {
    if (a.ambient() != b.ambient()) {
        throw SpecMismatchError("subsets of different point sets");
    }
}

} // namespace

SubsetOfS set_union(const SubsetOfS& a, const SubsetOfS& b) {
    check_same_ambient(a, b);
    std::vector<bool> flags(a.flags().size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
        flags[i] = a.contains(i) || b.contains(i);
    }
    return SubsetOfS(a.ambient(), std::move(flags));
}

SubsetOfS set_intersection(const SubsetOfS& a, const SubsetOfS& b) {
    check_same_ambient(a, b);
    std::vector<bool> flags(a.flags().size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
        flags[i] = a.contains(i) && b.contains(i);
    }
    return SubsetOfS(a.ambient(), std::move(flags));
}

SubsetOfS set_difference(const SubsetOfS& a, const SubsetOfS& b) {
    check_same_ambient(a, b);
    std::vector<bool> flags(a.flags().size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
        flags[i] = a.contains(i) && !b.contains(i);
    }
    return SubsetOfS(a.ambient(), std::move(flags));
}

bool is_subset(const SubsetOfS& a, const SubsetOfS& b) {
    check_same_ambient(a, b);
    for (std::size_t i = 0; i < a.flags().size(); ++i) {
        if (a.contains(i) && !b.contains(i)) return false;
    }
    return true;
}

RingElement::RingElement(PointSet ring, std::vector<FieldElement> values,
                         Polynomial rep, Checked mode)
    : ring_(std::move(ring)), values_(std::move(values)), rep_(std::move(rep)) {
    if (values_.size() != ring_.size()) {
        throw DomainError("value vector length " +
                          std::to_string(values_.size()) +
                          " differs from point count " +
                          std::to_string(ring_.size()));
    }
    for (const auto& v : values_) {
        if (v.spec() != ring_.spec()) {
            throw SpecMismatchError("value from a different field");
        }
    }
    if (rep_.spec() != ring_.spec() || rep_.nvars() != ring_.nvars()) {
        throw SpecMismatchError("representative incompatible with the ring");
    }
    if (mode == Checked::verify) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (rep_.evaluate(ring_.point(i)) != values_[i]) {
                throw Error("representative disagrees with evaluation vector");
            }
        }
    }
}

RingElement RingElement::from_values(PointSet ring,
                                     std::vector<FieldElement> values) {
    return interpolate(ring, std::move(values));
}

bool RingElement::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const FieldElement& v) { return v.is_zero(); });
}

bool RingElement::is_one() const {
    const FieldElement one = ring_.spec().one();
    return std::all_of(values_.begin(), values_.end(),
                       [&one](const FieldElement& v) { return v == one; });
}

bool RingElement::is_nowhere_zero() const {
    return std::none_of(values_.begin(), values_.end(),
                        [](const FieldElement& v) { return v.is_zero(); });
}

bool RingElement::operator==(const RingElement& other) const {
    return ring_ == other.ring_ && values_ == other.values_;
}

namespace {

void check_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring()) {
        throw SpecMismatchError("ring elements over different point sets");
    }
}

} // namespace

RingElement r_add(const RingElement& a, const RingElement& b) {
    check_same_ring(a, b);
    std::vector<FieldElement> values;
    values.reserve(a.values_.size());
    for (std::size_t i = 0; i < a.values_.size(); ++i) {
        values.push_back(a.values_[i] + b.values_[i]);
    }
    return RingElement(a.ring_, std::move(values), a.rep_ + b.rep_,
                       RingElement::Checked::verify);
}

RingElement r_sub(const RingElement& a, const RingElement& b) {
    check_same_ring(a, b);
    std::vector<FieldElement> values;
    values.reserve(a.values_.size());
    for (std::size_t i = 0; i < a.values_.size(); ++i) {
        values.push_back(a.values_[i] - b.values_[i]);
    }
    return RingElement(a.ring_, std::move(values), a.rep_ - b.rep_,
                       RingElement::Checked::verify);
}

RingElement r_mul(const RingElement& a, const RingElement& b) {
    check_same_ring(a, b);
    std::vector<FieldElement> values;
    values.reserve(a.values_.size());
    for (std::size_t i = 0; i < a.values_.size(); ++i) {
        values.push_back(a.values_[i] * b.values_[i]);
    }
    return RingElement(a.ring_, std::move(values),
                       reduce_exponents(a.rep_ * b.rep_),
                       RingElement::Checked::verify);
}

RingElement r_neg(const RingElement& a) {
    std::vector<FieldElement> values;
    values.reserve(a.values_.size());
    for (const auto& v : a.values_) values.push_back(-v);
    return RingElement(a.ring_, std::move(values), -a.rep_,
                       RingElement::Checked::verify);
}

RingElement r_scale(const FieldElement& c, const RingElement& a) {
    std::vector<FieldElement> values;
    values.reserve(a.values_.size());
    for (const auto& v : a.values_) values.push_back(c * v);
    return RingElement(a.ring_, std::move(values), c * a.rep_,
                       RingElement::Checked::verify);
}

RingElement r_pow(const RingElement& a, std::uint64_t e) {
    RingElement result = embed(Polynomial::one(a.ring().spec(), a.ring().nvars()),
                               a.ring());
    RingElement base = a;
    while (e) {
        if (e & 1) result = r_mul(result, base);
        if (e >>= 1) base = r_mul(base, base);
    }
    return result;
}

RingElement embed(const Polynomial& f, const PointSet& S) {
    if (f.spec() != S.spec() || f.nvars() != S.nvars()) {
        throw SpecMismatchError("polynomial incompatible with the point set");
    }
    std::vector<FieldElement> values;
    values.reserve(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        values.push_back(f.evaluate(S.point(i)));
    }
    return RingElement(S, std::move(values), reduce_exponents(f),
                       RingElement::Checked::verify);
}

RingElement indicator(const PointSet& S, std::size_t i) {
    if (i >= S.size()) {
        throw DomainError("point index out of range");
    }
    std::vector<FieldElement> values(S.size(), S.spec().zero());
    values[i] = S.spec().one();
    return RingElement(S, std::move(values), S.indicator_representative(i),
                       RingElement::Checked::trust);
}

RingElement indicator(const PointSet& S, std::span<const FieldElement> a) {
    auto idx = S.index_of(a);
    if (!idx) {
        throw DomainError("point does not belong to the set");
    }
    return indicator(S, *idx);
}

RingElement interpolate(const PointSet& S, std::vector<FieldElement> values) {
    if (values.size() != S.size()) {
        throw DomainError("need exactly one value per point");
    }
    Polynomial rep(S.spec(), S.nvars());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_zero()) continue;
        for (const auto& [m, c] : S.indicator_representative(i).terms()) {
            rep.add_term(m, values[i] * c);
        }
    }
    // Correct by linearity: the indicator family was verified pointwise when
    // it was built, and rep is its weighted sum.
    return RingElement(S, std::move(values), std::move(rep),
                       RingElement::Checked::trust);
}

std::vector<Polynomial> ideal_of_pointset(const PointSet& S) {
    const FieldSpec K = S.spec();
    const std::size_t n = S.nvars();
    const std::uint64_t total = detail::grid_size_capped(K, n);
    if (total > kMaxPoints) {
        throw CapacityError("ambient grid q^n exceeds the cap of 2^16");
    }
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial g(K, n);
        Monomial hi(n, 0), lo(n, 0);
        hi[i] = K.q();
        lo[i] = 1;
        g.add_term(std::move(hi), K.one());
        g.add_term(std::move(lo), -K.one());
        gens.push_back(std::move(g));
    }
    if (S.size() < total) {
        Polynomial comp(K, n);
        std::vector<std::uint32_t> odo(n, 0);
        std::vector<FieldElement> pt(n, K.zero());
        for (std::uint64_t c = 0; c < total; ++c) {
            for (std::size_t j = 0; j < n; ++j) pt[j] = K.element(odo[j]);
            if (!S.index_of(pt)) {
                comp = comp + detail::delta_poly(K, n, pt);
            }
            for (std::size_t j = n; j-- > 0;) {
                if (++odo[j] < K.q()) break;
                odo[j] = 0;
            }
        }
        gens.push_back(std::move(comp));
    }
    return gens;
}

} // namespace fqring
