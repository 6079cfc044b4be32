#include "premod/premodular.hpp"

#include <algorithm>
#include <thread>

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

CycNum lifted(const CycNum& x, long conductor) {
    if (conductor % x.conductor() != 0)
        throw Error(ErrorKind::InvalidArgument, "value with conductor " + std::to_string(x.conductor()) +
                                                    " does not live at conductor " + std::to_string(conductor));
    return x.lift(conductor);
}

// sum_c N^c_{a,b} w_c
CycNum fuse_weighted(const FusionRing& ring, Label a, Label b, const std::vector<CycNum>& w, long conductor) {
    CycNum acc(Rational(0), conductor);
    for (const auto& t : ring.product(a, b)) acc += CycNum(Rational(t.mult), conductor) * w[t.label];
    return acc;
}

bool is_closed_subset(const FusionRing& ring, const std::vector<Label>& sub) {
    std::vector<bool> member(ring.rank(), false);
    for (Label a : sub) {
        if (a >= ring.rank()) throw Error(ErrorKind::UnknownLabel, "label index " + std::to_string(a));
        member[a] = true;
    }
    if (!member[ring.unit()]) return false;
    for (Label a : sub) {
        if (!member[ring.dual(a)]) return false;
        for (Label b : sub)
            for (const auto& t : ring.product(a, b))
                if (!member[t.label]) return false;
    }
    return true;
}

}  // namespace

CycMatrix balanced_s_matrix(const FusionRing& ring, const std::vector<CycNum>& dims,
                            const std::vector<CycNum>& twists, long conductor) {
    const std::size_t r = ring.rank();
    std::vector<CycNum> weights(r), inv_twist(r);
    for (Label c = 0; c < r; ++c) {
        weights[c] = twists[c] * dims[c];
        inv_twist[c] = twists[c].inverse();
    }
    CycMatrix s(r, std::vector<CycNum>(r));
    for (Label a = 0; a < r; ++a) {
        for (Label b = a; b < r; ++b) {
            s[a][b] = inv_twist[a] * inv_twist[b] * fuse_weighted(ring, a, b, weights, conductor);
            s[b][a] = s[a][b];
        }
    }
    return s;
}

PremodularData::PremodularData(FusionRing ring, long conductor, std::vector<CycNum> dims,
                               std::vector<CycNum> twists, std::optional<CycMatrix> s)
    : ring_(std::move(ring)), conductor_(conductor) {
    if (conductor_ < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
    const std::size_t r = ring_.rank();
    if (dims.size() != r || twists.size() != r)
        throw Error(ErrorKind::InvalidArgument, "dims/twists length does not match the label count");
    for (auto& d : dims) dims_.push_back(lifted(d, conductor_));
    for (auto& t : twists) twists_.push_back(lifted(t, conductor_));
    if (s) {
        if (s->size() != r) throw Error(ErrorKind::InvalidArgument, "S-matrix has wrong shape");
        for (auto& row : *s) {
            if (row.size() != r) throw Error(ErrorKind::InvalidArgument, "S-matrix has wrong shape");
            std::vector<CycNum> lifted_row;
            for (auto& x : row) lifted_row.push_back(lifted(x, conductor_));
            s_.push_back(std::move(lifted_row));
        }
        s_supplied_ = true;
    } else {
        try {
            s_ = balanced_s_matrix(ring_, dims_, twists_, conductor_);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DivisionByZero) throw;
            s_.assign(r, std::vector<CycNum>(r, CycNum(Rational(0), conductor_)));
            s_synthesized_ok_ = false;
        }
    }
}

PremodularData PremodularData::restrict_to(const std::vector<Label>& subset) const {
    FusionRing sub = ring_.restrict_to(subset);
    std::vector<CycNum> dims, twists;
    CycMatrix s;
    for (Label a : subset) {
        dims.push_back(dims_[a]);
        twists.push_back(twists_[a]);
        std::vector<CycNum> row;
        for (Label b : subset) row.push_back(s_[a][b]);
        s.push_back(std::move(row));
    }
    // A synthesized s restricts to the synthesized s of the restriction.
    std::optional<CycMatrix> supplied;
    if (s_supplied_) supplied = std::move(s);
    return PremodularData(std::move(sub), conductor_, std::move(dims), std::move(twists), std::move(supplied));
}

ValidationReport validate_premodular(const PremodularData& data, unsigned threads) {
    ValidationReport report = validate_fusion_ring(data.ring());
    if (!report.ok()) return report;

    const FusionRing& ring = data.ring();
    const std::size_t r = ring.rank();
    const long n = data.conductor();
    const Label u = ring.unit();
    const auto& name = [&](Label a) { return ring.label(a); };
    const CycNum one(Rational(1), n);

    if (data.dim(u) != one) add_capped(report, "UnitDimension", {name(u)}, "d_I = " + data.dim(u).to_string());
    if (data.twist(u) != one) add_capped(report, "UnitTwist", {name(u)}, "theta_I = " + data.twist(u).to_string());
    for (Label a = 0; a < r; ++a) {
        if (data.dim(a).is_zero()) add_capped(report, "ZeroDimension", {name(a)});
        if (data.twist(a).is_zero()) add_capped(report, "ZeroTwist", {name(a)});
        if (data.dim(a) != data.dim(ring.dual(a))) add_capped(report, "DualDimension", {name(a), name(ring.dual(a))});
        if (data.twist(a) != data.twist(ring.dual(a))) add_capped(report, "DualTwist", {name(a), name(ring.dual(a))});
    }

    const bool zero_twist = report.has("ZeroTwist");
    std::vector<CycNum> weights(r);
    if (!zero_twist)
        for (Label c = 0; c < r; ++c) weights[c] = data.twist(c) * data.dim(c);

    // Row a checks pairs (a, b); rows are independent and merged in order.
    const auto row_checks = [&](Label a) {
        ValidationReport row;
        for (Label b = a; b < r; ++b)
            if (data.dim(a) * data.dim(b) != fuse_weighted(ring, a, b, data.dims(), n))
                add_capped(row, "DimensionCharacterViolation", {name(a), name(b)});
        if (zero_twist) return row;
        if (data.s(u, a) != data.dim(a)) add_capped(row, "SUnitRow", {name(a)});
        for (Label b = 0; b < r; ++b) {
            if (b >= a) {
                if (data.s(a, b) != data.s(b, a)) add_capped(row, "SSymmetry", {name(a), name(b)});
                if (data.s(a, b) * data.twist(a) * data.twist(b) != fuse_weighted(ring, a, b, weights, n))
                    add_capped(row, "BalancingViolation", {name(a), name(b)});
            }
            if (data.s(a, b).conj() != data.s(ring.dual(a), b))
                add_capped(row, "SConjugation", {name(a), name(b)});
        }
        return row;
    };
    std::vector<ValidationReport> rows(r);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(r)));
    if (workers == 1) {
        for (Label a = 0; a < r; ++a) rows[a] = row_checks(a);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (Label a = w; a < r; a += workers) rows[a] = row_checks(a);
            });
        for (auto& t : pool) t.join();
    }
    // Dimension violations come first, as in a single pass over the rows.
    for (const auto& row : rows)
        for (const auto& v : row.violations)
            if (v.kind == "DimensionCharacterViolation") add_capped(report, v.kind, v.witness, v.detail);
    for (const auto& row : rows)
        for (const auto& v : row.violations)
            if (v.kind != "DimensionCharacterViolation") add_capped(report, v.kind, v.witness, v.detail);
    return report;
}

CycNum framed_s_entry(const PremodularData& data, Label a, Label b) {
    if (a >= data.rank() || b >= data.rank()) throw Error(ErrorKind::UnknownLabel, "label index out of range");
    return data.s(a, b) / (data.dim(a) * data.dim(b));
}

CycNum framed_s_entry(const PremodularData& data, const std::string& a, const std::string& b) {
    return framed_s_entry(data, data.ring().index_of(a), data.ring().index_of(b));
}

bool transparent_to(const PremodularData& data, Label a, Label b) {
    return data.s(a, b) == data.dim(a) * data.dim(b);
}

std::vector<Label> relative_centralizer(const PremodularData& data, const std::vector<Label>& sub) {
    std::vector<Label> sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!is_closed_subset(data.ring(), sorted))
        throw Error(ErrorKind::NotASubcategory, "label set is not closed under fusion and duals");
    std::vector<Label> out;
    for (Label b = 0; b < data.rank(); ++b) {
        bool all = true;
        for (Label x : sorted) {
            if (!transparent_to(data, b, x)) {
                all = false;
                break;
            }
        }
        if (all) out.push_back(b);
    }
    if (!is_closed_subset(data.ring(), out))
        throw Error(ErrorKind::CrossCheckMismatch, "centralizer is not a fusion subcategory");
    return out;
}

std::vector<Label> transparent_labels(const PremodularData& data) {
    std::vector<Label> all(data.rank());
    for (Label a = 0; a < data.rank(); ++a) all[a] = a;
    return relative_centralizer(data, all);
}

PremodularData mueger_centre(const PremodularData& data) { return data.restrict_to(transparent_labels(data)); }

std::string_view to_string(CentreKind kind) {
    switch (kind) {
        case CentreKind::Nondegenerate: return "nondegenerate";
        case CentreKind::SlightlyDegenerate: return "slightly_degenerate";
        case CentreKind::OtherDegenerate: return "other_degenerate";
    }
    return "unknown";
}

CentreClassification classify_degeneracy(const PremodularData& data) {
    CentreClassification out;
    out.transparent = transparent_labels(data);
    const long n = data.conductor();
    const Label u = data.ring().unit();
    for (Label a : out.transparent) {
        if (data.twist(a) == CycNum(Rational(1), n)) ++out.bosons;
        if (data.twist(a) == CycNum(Rational(-1), n)) ++out.fermions;
    }
    if (out.transparent.size() == 1) {
        out.kind = CentreKind::Nondegenerate;
        return out;
    }
    out.kind = CentreKind::OtherDegenerate;
    if (out.transparent.size() == 2) {
        const Label e = out.transparent[0] == u ? out.transparent[1] : out.transparent[0];
        const auto square = data.ring().simple_product(e, e);
        if (square && *square == u && data.twist(e) == CycNum(Rational(-1), n)) {
            out.kind = CentreKind::SlightlyDegenerate;
            out.fermion = e;
        }
    }
    return out;
}

CycNum global_dimension(const PremodularData& data) {
    CycNum acc(Rational(0), data.conductor());
    for (Label a = 0; a < data.rank(); ++a) acc += data.dim(a) * data.dim(a);
    return acc;
}

CycNum gauss_sum(const PremodularData& data) {
    CycNum acc(Rational(0), data.conductor());
    for (Label a = 0; a < data.rank(); ++a) acc += data.dim(a) * data.dim(a) * data.twist(a);
    return acc;
}

namespace {

CycMatrix multiply(const CycMatrix& x, const CycMatrix& y, long conductor) {
    const std::size_t r = x.size();
    CycMatrix out(r, std::vector<CycNum>(r, CycNum(Rational(0), conductor)));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) out[a][c] += x[a][b] * y[b][c];
    return out;
}

// Compares m against dim * P where P is the permutation matrix of `perm`.
bool is_scaled_permutation(const CycMatrix& m, const CycNum& dim, const std::vector<Label>& perm, long conductor) {
    const CycNum zero(Rational(0), conductor);
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t c = 0; c < m.size(); ++c)
            if (m[a][c] != (perm[a] == c ? dim : zero)) return false;
    return true;
}

}  // namespace

bool unitarity_identity_holds(const PremodularData& data) {
    const std::size_t r = data.rank();
    CycMatrix conj_s(r, std::vector<CycNum>(r));
    for (Label a = 0; a < r; ++a)
        for (Label b = 0; b < r; ++b) conj_s[a][b] = data.s(a, b).conj();
    std::vector<Label> identity(r);
    for (Label a = 0; a < r; ++a) identity[a] = a;
    return is_scaled_permutation(multiply(data.s_matrix(), conj_s, data.conductor()), global_dimension(data),
                                 identity, data.conductor());
}

bool charge_conjugation_identity_holds(const PremodularData& data) {
    return is_scaled_permutation(multiply(data.s_matrix(), data.s_matrix(), data.conductor()),
                                 global_dimension(data), data.ring().duals(), data.conductor());
}

}  // namespace premod
