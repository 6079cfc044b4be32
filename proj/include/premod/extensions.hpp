#pragma once

#include <vector>

#include "premod/metric_groups.hpp"

namespace premod {

/// One class of pointed minimal nondegenerate extensions A -> A' with |A'| = 2|A|.
struct PointedExtension {
    MetricGroup group;
    /// Image of the transparent fermion of A.
    MetricGroup::Element fermion = 0;
    /// Images of the generators of A, in generator order.
    std::vector<MetricGroup::Element> embedding;
    CycNum gauss;
    int signature = 0;
};

struct ExtensionOptions {
    /// Cap on |A'|.
    std::size_t max_order = 64;
    unsigned threads = 1;
    /// Classes are taken up to isometries fixing the fermion; false allows any isometry.
    bool fix_fermion = true;
};

/// All pointed extensions of a slightly degenerate metric group, one per class,
/// sorted by (orders, signature, q table). Throws Error(NotSlightlyDegenerate)
/// and Error(GroupsTooLarge) when 2|A| exceeds options.max_order.
std::vector<PointedExtension> enumerate_pointed_extensions(const MetricGroup& mg,
                                                           const ExtensionOptions& options = {});

/// Image of every element of A under the embedding.
std::vector<MetricGroup::Element> embedded_image(const MetricGroup& base, const PointedExtension& ext);

/// Integer Smith normal form of a square relation matrix: returns the diagonal
/// and fills `col` with the unimodular column transform V, so that U R V = diag.
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> rel,
                                         std::vector<std::vector<long long>>& col);

}  // namespace premod
