#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "premod/cyclotomic.hpp"
#include "premod/fusion_ring.hpp"

namespace premod {

using CycMatrix = std::vector<std::vector<CycNum>>;

/// Ribbon data on a fusion ring: spherical dimensions d, twists theta and the
/// unnormalized S-matrix s (Hopf-link values), all at one common conductor.
///
/// When no S-matrix is supplied it is synthesized from the balancing formula
///     s_{a,b} = theta_a^{-1} theta_b^{-1} sum_c N^c_{a,b} theta_c d_c.
class PremodularData {
public:
    PremodularData() = default;
    /// Values are lifted to `conductor`; throws Error(InvalidArgument) if a
    /// value's conductor does not divide it or the vector shapes are wrong.
    PremodularData(FusionRing ring, long conductor, std::vector<CycNum> dims,
                   std::vector<CycNum> twists, std::optional<CycMatrix> s = std::nullopt);

    const FusionRing& ring() const { return ring_; }
    long conductor() const { return conductor_; }
    std::size_t rank() const { return ring_.rank(); }
    const CycNum& dim(Label a) const { return dims_.at(a); }
    const CycNum& twist(Label a) const { return twists_.at(a); }
    const CycNum& s(Label a, Label b) const { return s_.at(a).at(b); }
    const std::vector<CycNum>& dims() const { return dims_; }
    const std::vector<CycNum>& twists() const { return twists_; }
    const CycMatrix& s_matrix() const { return s_; }
    bool s_supplied() const { return s_supplied_; }

    /// Restriction to a fusion- and dual-closed label subset (sorted, containing the unit).
    PremodularData restrict_to(const std::vector<Label>& subset) const;

    friend bool operator==(const PremodularData&, const PremodularData&) = default;

private:
    FusionRing ring_;
    long conductor_ = 1;
    std::vector<CycNum> dims_;
    std::vector<CycNum> twists_;
    CycMatrix s_;
    bool s_supplied_ = false;
    bool s_synthesized_ok_ = true;
};

/// Balancing-formula S-matrix; throws Error(DivisionByZero) if a twist vanishes.
CycMatrix balanced_s_matrix(const FusionRing& ring, const std::vector<CycNum>& dims,
                            const std::vector<CycNum>& twists, long conductor);

/// Pairwise checks are split by row over `threads` workers; the report does not
/// depend on the thread count.
ValidationReport validate_premodular(const PremodularData& data, unsigned threads = 1);

/// Framed S-matrix entry s_{a,b} / (d_a d_b).
CycNum framed_s_entry(const PremodularData& data, Label a, Label b);
CycNum framed_s_entry(const PremodularData& data, const std::string& a, const std::string& b);

/// True iff the double braiding of a and b is trivial (framed S entry equal to one).
bool transparent_to(const PremodularData& data, Label a, Label b);

/// Labels transparent to every member of `sub`. Throws Error(NotASubcategory)
/// unless `sub` contains the unit and is closed under fusion and duals.
std::vector<Label> relative_centralizer(const PremodularData& data, const std::vector<Label>& sub);

std::vector<Label> transparent_labels(const PremodularData& data);
PremodularData mueger_centre(const PremodularData& data);

enum class CentreKind { Nondegenerate, SlightlyDegenerate, OtherDegenerate };
std::string_view to_string(CentreKind kind);

struct CentreClassification {
    CentreKind kind = CentreKind::Nondegenerate;
    std::vector<Label> transparent;
    std::optional<Label> fermion;
    std::size_t bosons = 0;    // transparent simples with theta = 1
    std::size_t fermions = 0;  // transparent simples with theta = -1
};

CentreClassification classify_degeneracy(const PremodularData& data);

/// sum_a d_a^2.
CycNum global_dimension(const PremodularData& data);
/// sum_a d_a^2 theta_a.
CycNum gauss_sum(const PremodularData& data);

/// s * conj(s) == (sum d^2) * Id.
bool unitarity_identity_holds(const PremodularData& data);
/// s * s == (sum d^2) * C, with C the charge-conjugation permutation a -> a*.
bool charge_conjugation_identity_holds(const PremodularData& data);

}  // namespace premod
