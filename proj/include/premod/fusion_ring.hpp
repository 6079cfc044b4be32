#pragma once

#include <optional>
#include <string>
#include <vector>

#include "premod/error.hpp"

namespace premod {

using Label = std::size_t;
using IntMatrix = std::vector<std::vector<long>>;

/// Based fusion ring K0(B): simple labels, multiplicities N^c_{a,b}, duality and unit.
///
/// Construction only checks shapes; axioms are checked by validate_fusion_ring.
class FusionRing {
public:
    struct Term {
        Label label;
        long mult;
        friend bool operator==(const Term&, const Term&) = default;
    };

    FusionRing() = default;
    /// `fusion` is indexed [a][b][c] = N^c_{a,b}.
    FusionRing(std::vector<std::string> labels, Label unit, std::vector<Label> dual,
               std::vector<std::vector<std::vector<long>>> fusion);

    /// Ring of a finite group given by its multiplication table (mult[a][b] = a*b).
    static FusionRing group_ring(std::vector<std::string> labels, Label unit,
                                 const std::vector<std::vector<Label>>& mult);

    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Label a) const { return labels_.at(a); }
    Label unit() const { return unit_; }
    Label dual(Label a) const { return dual_.at(a); }
    const std::vector<Label>& duals() const { return dual_; }

    long n(Label a, Label b, Label c) const { return fusion_[(a * rank() + b) * rank() + c]; }
    /// Nonzero terms of a (x) b.
    const std::vector<Term>& product(Label a, Label b) const { return products_[a * rank() + b]; }
    /// Label of a (x) b when the product is a single simple with multiplicity one.
    std::optional<Label> simple_product(Label a, Label b) const;
    bool is_invertible(Label a) const;

    /// Throws Error(UnknownLabel).
    Label index_of(const std::string& name) const;

    /// Restriction to a fusion-closed subset; `subset` is sorted and contains the unit.
    FusionRing restrict_to(const std::vector<Label>& subset) const;

    friend bool operator==(const FusionRing&, const FusionRing&) = default;

private:
    std::vector<std::string> labels_;
    Label unit_ = 0;
    std::vector<Label> dual_;
    std::vector<long> fusion_;
    std::vector<std::vector<Term>> products_;
};

ValidationReport validate_fusion_ring(const FusionRing& ring);

/// (N_a)_{c,b} = N^c_{a,b}.
IntMatrix fusion_matrix(const FusionRing& ring, Label a);
IntMatrix fusion_matrix(const FusionRing& ring, const std::string& a);

/// D with D e_a = e_{a*}.
IntMatrix dual_permutation_matrix(const FusionRing& ring);

struct FpDims {
    double total = 0.0;
    std::vector<double> dims;
};

/// Frobenius-Perron dimensions by power iteration on sum_a N_a.
/// Throws Error(NonConvergent) if the iteration does not settle within 1e5 steps.
FpDims fpdim(const FusionRing& ring);

}  // namespace premod
