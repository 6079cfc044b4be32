#include "premod/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace premod {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

void add_capped(ValidationReport& report, const std::string& kind, std::vector<std::string> witness,
                std::string detail = {}) {
    std::size_t count = 0;
    for (const auto& v : report.violations)
        if (v.kind == kind) ++count;
    if (count < kMaxWitnesses) report.add(kind, std::move(witness), std::move(detail));
}

}  // namespace

FusionRing::FusionRing(std::vector<std::string> labels, Label unit, std::vector<Label> dual,
                       std::vector<std::vector<std::vector<long>>> fusion)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)) {
    const std::size_t r = labels_.size();
    if (r == 0) throw Error(ErrorKind::InvalidArgument, "fusion ring needs at least one label");
    if (unit_ >= r) throw Error(ErrorKind::InvalidArgument, "unit index out of range");
    if (dual_.size() != r) throw Error(ErrorKind::InvalidArgument, "dual table has wrong length");
    for (Label d : dual_)
        if (d >= r) throw Error(ErrorKind::InvalidArgument, "dual index out of range");
    if (fusion.size() != r) throw Error(ErrorKind::InvalidArgument, "fusion tensor has wrong shape");
    fusion_.assign(r * r * r, 0);
    products_.assign(r * r, {});
    for (Label a = 0; a < r; ++a) {
        if (fusion[a].size() != r) throw Error(ErrorKind::InvalidArgument, "fusion tensor has wrong shape");
        for (Label b = 0; b < r; ++b) {
            if (fusion[a][b].size() != r)
                throw Error(ErrorKind::InvalidArgument, "fusion tensor has wrong shape");
            for (Label c = 0; c < r; ++c) {
                const long m = fusion[a][b][c];
                fusion_[(a * r + b) * r + c] = m;
                if (m != 0) products_[a * r + b].push_back({c, m});
            }
        }
    }
}

FusionRing FusionRing::group_ring(std::vector<std::string> labels, Label unit,
                                  const std::vector<std::vector<Label>>& mult) {
    const std::size_t r = labels.size();
    std::vector<std::vector<std::vector<long>>> fusion(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    std::vector<Label> dual(r, 0);
    for (Label a = 0; a < r; ++a) {
        for (Label b = 0; b < r; ++b) {
            fusion[a][b][mult.at(a).at(b)] = 1;
            if (mult[a][b] == unit) dual[a] = b;
        }
    }
    return FusionRing(std::move(labels), unit, std::move(dual), std::move(fusion));
}

std::optional<Label> FusionRing::simple_product(Label a, Label b) const {
    const auto& terms = product(a, b);
    if (terms.size() == 1 && terms[0].mult == 1) return terms[0].label;
    return std::nullopt;
}

bool FusionRing::is_invertible(Label a) const {
    const auto p = simple_product(a, dual(a));
    return p && *p == unit_;
}

Label FusionRing::index_of(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) throw Error(ErrorKind::UnknownLabel, "no label '" + name + "'");
    return static_cast<Label>(it - labels_.begin());
}

FusionRing FusionRing::restrict_to(const std::vector<Label>& subset) const {
    const std::size_t k = subset.size();
    std::vector<std::size_t> position(rank(), k);
    for (std::size_t i = 0; i < k; ++i) position[subset[i]] = i;
    if (position[unit_] == k) throw Error(ErrorKind::NotASubcategory, "subset does not contain the unit");
    std::vector<std::string> labels;
    std::vector<Label> dual;
    std::vector<std::vector<std::vector<long>>> fusion(k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (std::size_t i = 0; i < k; ++i) {
        labels.push_back(labels_[subset[i]]);
        if (position[dual_[subset[i]]] == k) throw Error(ErrorKind::NotASubcategory, "subset not closed under duals");
        dual.push_back(position[dual_[subset[i]]]);
        for (std::size_t j = 0; j < k; ++j) {
            for (const auto& t : product(subset[i], subset[j])) {
                if (position[t.label] == k)
                    throw Error(ErrorKind::NotASubcategory, "subset not closed under fusion");
                fusion[i][j][position[t.label]] = t.mult;
            }
        }
    }
    return FusionRing(std::move(labels), position[unit_], std::move(dual), std::move(fusion));
}

ValidationReport validate_fusion_ring(const FusionRing& ring) {
    ValidationReport report;
    const std::size_t r = ring.rank();
    const auto& name = [&](Label a) { return ring.label(a); };
    const Label u = ring.unit();

    for (Label a = 0; a < r; ++a)
        for (Label b = 0; b < r; ++b)
            for (Label c = 0; c < r; ++c)
                if (ring.n(a, b, c) < 0) add_capped(report, "NegativeMultiplicity", {name(a), name(b), name(c)});

    for (Label b = 0; b < r; ++b) {
        for (Label c = 0; c < r; ++c) {
            const long expected = b == c ? 1 : 0;
            if (ring.n(u, b, c) != expected || ring.n(b, u, c) != expected)
                add_capped(report, "UnitViolation", {name(b), name(c)});
        }
    }

    if (ring.dual(u) != u) add_capped(report, "DualityViolation", {name(u)}, "unit is not self-dual");
    for (Label a = 0; a < r; ++a) {
        if (ring.dual(ring.dual(a)) != a) add_capped(report, "DualNotInvolution", {name(a)});
        for (Label b = 0; b < r; ++b) {
            const long expected = b == ring.dual(a) ? 1 : 0;
            if (ring.n(a, b, u) != expected)
                add_capped(report, "DualityViolation", {name(a), name(b)},
                           "N^I_{a,b} = " + std::to_string(ring.n(a, b, u)));
        }
    }

    for (Label a = 0; a < r; ++a)
        for (Label b = a + 1; b < r; ++b)
            for (Label c = 0; c < r; ++c)
                if (ring.n(a, b, c) != ring.n(b, a, c))
                    add_capped(report, "CommutativityViolation", {name(a), name(b), name(c)});

    // (a b) c == a (b c), compared coefficientwise over d.
    std::vector<long> left(r), right(r);
    for (Label a = 0; a < r; ++a) {
        for (Label b = 0; b < r; ++b) {
            for (Label c = 0; c < r; ++c) {
                std::fill(left.begin(), left.end(), 0);
                std::fill(right.begin(), right.end(), 0);
                for (const auto& e : ring.product(a, b))
                    for (const auto& d : ring.product(e.label, c)) left[d.label] += e.mult * d.mult;
                for (const auto& f : ring.product(b, c))
                    for (const auto& d : ring.product(a, f.label)) right[d.label] += f.mult * d.mult;
                for (Label d = 0; d < r; ++d)
                    if (left[d] != right[d])
                        add_capped(report, "AssociativityViolation", {name(a), name(b), name(c), name(d)});
            }
        }
    }
    return report;
}

IntMatrix fusion_matrix(const FusionRing& ring, Label a) {
    if (a >= ring.rank()) throw Error(ErrorKind::UnknownLabel, "label index " + std::to_string(a));
    const std::size_t r = ring.rank();
    IntMatrix m(r, std::vector<long>(r, 0));
    for (Label b = 0; b < r; ++b)
        for (const auto& t : ring.product(a, b)) m[t.label][b] = t.mult;
    return m;
}

IntMatrix fusion_matrix(const FusionRing& ring, const std::string& a) {
    return fusion_matrix(ring, ring.index_of(a));
}

IntMatrix dual_permutation_matrix(const FusionRing& ring) {
    const std::size_t r = ring.rank();
    IntMatrix d(r, std::vector<long>(r, 0));
    for (Label a = 0; a < r; ++a) d[ring.dual(a)][a] = 1;
    return d;
}

FpDims fpdim(const FusionRing& ring) {
    const std::size_t r = ring.rank();
    // T = I + sum_a N_a is entrywise positive, so its Perron vector is the
    // unique positive common eigenvector of all fusion matrices.
    std::vector<std::vector<double>> t(r, std::vector<double>(r, 0.0));
    for (Label i = 0; i < r; ++i) t[i][i] = 1.0;
    for (Label a = 0; a < r; ++a)
        for (Label b = 0; b < r; ++b)
            for (const auto& term : ring.product(a, b)) t[term.label][b] += static_cast<double>(term.mult);

    std::vector<double> v(r, 1.0), next(r);
    bool converged = false;
    for (int step = 0; step < 100000; ++step) {
        double norm = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < r; ++j) acc += t[i][j] * v[j];
            next[i] = acc;
            norm = std::max(norm, std::abs(acc));
        }
        double delta = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            next[i] /= norm;
            delta = std::max(delta, std::abs(next[i] - v[i]));
        }
        v.swap(next);
        if (delta < 1e-13) {
            converged = true;
            break;
        }
    }
    if (!converged) throw Error(ErrorKind::NonConvergent, "power iteration did not converge");

    FpDims out;
    const double scale = v[ring.unit()];
    out.dims.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        out.dims[i] = v[i] / scale;
        out.total += out.dims[i] * out.dims[i];
    }
    for (Label a = 0; a < r; ++a) {
        for (Label b = 0; b < r; ++b) {
            double acc = 0.0;
            for (const auto& term : ring.product(a, b)) acc += term.mult * out.dims[term.label];
            if (std::abs(acc - out.dims[a] * out.dims[b]) > 1e-9 * std::max(1.0, acc))
                throw Error(ErrorKind::NonConvergent, "FP vector is not a character of the ring");
        }
    }
    return out;
}

}  // namespace premod
