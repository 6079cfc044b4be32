#include "premod/klein.hpp"

namespace premod {

namespace {

using QMatrix = std::vector<std::vector<Rational>>;

QMatrix to_rational(const IntMatrix& m) {
    QMatrix out(m.size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j];
    return out;
}

Rational trace_of_product(const QMatrix& x, const QMatrix& y) {
    Rational acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) acc += x[i][j] * y[j][i];
    return acc;
}

// (Id + sign * m) / 2
QMatrix half_idempotent(const QMatrix& m, int sign) {
    QMatrix out = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out[i][j] = (Rational(i == j ? 1 : 0) + sign * m[i][j]) / 2;
        }
    }
    return out;
}

}  // namespace

CycNum eta_scalar(const PremodularData& data, Label a) {
    if (a >= data.rank()) throw Error(ErrorKind::UnknownLabel, "label index " + std::to_string(a));
    return data.twist(a) * data.dim(a);
}

CycNum eta_scalar(const PremodularData& data, const std::string& a) {
    return eta_scalar(data, data.ring().index_of(a));
}

std::string_view to_string(KappaVerdict v) {
    switch (v) {
        case KappaVerdict::ExtensionExistsSClass: return "extension_exists_S";
        case KappaVerdict::Inconsistent: return "inconsistent";
    }
    return "unknown";
}

KappaReport kappa_lagrangian(const PremodularData& data) {
    const CentreClassification cls = classify_degeneracy(data);
    if (cls.kind != CentreKind::SlightlyDegenerate)
        throw Error(ErrorKind::NotSlightlyDegenerate,
                    "Mueger centre is not sVec (" + std::string(to_string(cls.kind)) + ")");
    const FusionRing& ring = data.ring();
    const Label e = *cls.fermion;

    KappaReport report;
    report.fermion = e;
    for (Label b = 0; b < ring.rank(); ++b) {
        if (ring.dual(b) == b) ++report.n_self_dual;
        // b == e (x) *b; e is invertible so the product is simple.
        if (ring.simple_product(e, ring.dual(b)) == b) ++report.n_e_twisted;
    }
    const long sd = static_cast<long>(report.n_self_dual);
    const long tw = static_cast<long>(report.n_e_twisted);
    report.kappa_plus = Rational(sd + tw, 2);
    report.kappa_minus = Rational(sd - tw, 2);
    report.kappa_plus.canonicalize();
    report.kappa_minus.canonicalize();

    // Independent route: trace of b -> ((1 +- e)/2) *b on K0(B) (x) Q.
    const QMatrix fusion_e = to_rational(fusion_matrix(ring, e));
    const QMatrix duality = to_rational(dual_permutation_matrix(ring));
    report.matrix_kappa_plus = trace_of_product(half_idempotent(fusion_e, +1), duality);
    report.matrix_kappa_minus = trace_of_product(half_idempotent(fusion_e, -1), duality);

    if (report.matrix_kappa_plus != report.kappa_plus || report.matrix_kappa_minus != report.kappa_minus)
        throw Error(ErrorKind::CrossCheckMismatch, "matrix trace disagrees with the closed-form count");
    // A simple with b = e (x) *b contradicts eta(e) = -1, so such data is rejected.
    const bool consistent = report.n_e_twisted == 0 && report.kappa_minus > 0;
    report.verdict = consistent ? KappaVerdict::ExtensionExistsSClass : KappaVerdict::Inconsistent;
    return report;
}

std::string_view to_string(TheoremVerdict v) {
    switch (v) {
        case TheoremVerdict::AlreadyNondegenerate: return "already_nondegenerate";
        case TheoremVerdict::ExtensionExistsS: return "extension_exists_S";
        case TheoremVerdict::OutsideScope: return "outside_scope";
        case TheoremVerdict::Inconsistent: return "inconsistent";
    }
    return "unknown";
}

MainTheoremVerdict main_theorem_verdict(const PremodularData& data) {
    MainTheoremVerdict out;
    out.classification = classify_degeneracy(data);
    switch (out.classification.kind) {
        case CentreKind::Nondegenerate:
            out.kind = TheoremVerdict::AlreadyNondegenerate;
            out.message = "already nondegenerate (M = B)";
            break;
        case CentreKind::SlightlyDegenerate: {
            out.kappa = kappa_lagrangian(data);
            if (out.kappa->verdict == KappaVerdict::ExtensionExistsSClass) {
                out.kind = TheoremVerdict::ExtensionExistsS;
                out.message = "Z(Sigma B) ~ S, minimal nondegenerate extension exists (kappa(L-) = " +
                              rational_to_string(out.kappa->kappa_minus) + " > 0)";
            } else {
                out.kind = TheoremVerdict::Inconsistent;
                out.message = "inconsistent: kappa(L-) = " + rational_to_string(out.kappa->kappa_minus) +
                              ", n_e_twisted = " + std::to_string(out.kappa->n_e_twisted);
            }
            break;
        }
        case CentreKind::OtherDegenerate:
            out.kind = TheoremVerdict::OutsideScope;
            out.message = "outside scope: Mueger centre is neither Vec nor sVec (Tannakian component present)";
            break;
    }
    return out;
}

}  // namespace premod
