#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "premod/cyclotomic.hpp"
#include "premod/error.hpp"
#include "premod/premodular.hpp"

namespace premod {

/// A finite abelian group Z_{n1} x ... x Z_{nk} with a Q/Z-valued quadratic form.
///
/// Elements are indexed in mixed radix with the first coordinate most
/// significant, so index order is lexicographic coordinate order. The form is
/// stored as a full table; values are reduced into [0, 1).
class MetricGroup {
public:
    using Element = std::size_t;
    static constexpr std::size_t kMaxOrder = 4096;

    MetricGroup() : MetricGroup({}, {Rational(0)}) {}
    /// Throws Error(GroupsTooLarge) beyond kMaxOrder and Error(InvalidArgument)
    /// on shape errors or non-positive orders.
    MetricGroup(std::vector<long> orders, std::vector<Rational> qtable);

    /// q(x) = sum_i x_i^2 q_i + sum_{i<j} x_i x_j b_ij, with b_ij listed row by row.
    static MetricGroup from_generators(std::vector<long> orders, std::vector<Rational> q_diag,
                                       std::vector<Rational> b_upper = {});

    const std::vector<long>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::size_t size() const { return qnum_.size(); }
    long exponent() const;

    std::vector<long> coords(Element x) const;
    Element element(const std::vector<long>& coords) const;
    Element generator(std::size_t i) const;
    Element zero() const { return 0; }
    Element add(Element x, Element y) const;
    Element neg(Element x) const;
    Element scale(long n, Element x) const;
    long order_of(Element x) const;

    /// q(x) = qnum(x) / den(), with 0 <= qnum < den.
    long long den() const { return den_; }
    long long qnum(Element x) const { return qnum_[x]; }
    /// Numerator of b(x, y) = q(x+y) - q(x) - q(y) over den(), reduced into [0, den).
    long long bnum(Element x, Element y) const;
    Rational q(Element x) const;
    Rational b(Element x, Element y) const;

    /// "(c1,...,ck)", "()" for the trivial group.
    std::string element_name(Element x) const;
    /// Inverse of element_name; throws Error(ParseError).
    Element parse_element(const std::string& name) const;

    friend bool operator==(const MetricGroup&, const MetricGroup&) = default;

private:
    std::vector<long> orders_;
    std::vector<std::size_t> strides_;
    long long den_ = 1;
    std::vector<long long> qnum_;
};

ValidationReport validate_metric_group(const MetricGroup& mg);

std::vector<MetricGroup::Element> radical(const MetricGroup& mg);
/// sum_x exp(2 pi i q(x)) at conductor den().
CycNum gauss_sum(const MetricGroup& mg);
/// s with gauss_sum = sqrt|A| exp(2 pi i s / 8); nullopt when the radical is nontrivial.
std::optional<int> signature_mod8(const MetricGroup& mg);

/// Pointed premodular datum: labels are elements, d = 1, theta = exp(2 pi i q),
/// s_{x,y} = exp(2 pi i b(x,y)).
PremodularData to_premodular(const MetricGroup& mg);

MetricGroup orthogonal_sum(const MetricGroup& a, const MetricGroup& b);

/// True iff some group isomorphism phi: A -> B has q_B o phi = q_A and, when
/// points are given, phi(pt_a) = pt_b.
bool isometric(const MetricGroup& a, const MetricGroup& b,
               std::optional<std::pair<MetricGroup::Element, MetricGroup::Element>> points = std::nullopt);
bool isometry_rel_point(const MetricGroup& a, const MetricGroup& b, MetricGroup::Element pt_a,
                        MetricGroup::Element pt_b);

/// The unique fermion of a slightly degenerate form (radical {0, e}, q(e) = 1/2).
std::optional<MetricGroup::Element> transparent_fermion(const MetricGroup& mg);

/// sVec plus random nondegenerate blocks, shuffled, of order at most max_order.
MetricGroup random_slightly_degenerate(std::mt19937_64& rng, std::size_t max_order = 64);

}  // namespace premod
