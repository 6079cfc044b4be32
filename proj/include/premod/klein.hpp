#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "premod/premodular.hpp"

namespace premod {

/// eta(a) = theta_a * d_a, the value of the framed loop on a simple in the
/// ribbon gauge. The opposite orientation convention gives the complex
/// conjugate and changes no verdict.
CycNum eta_scalar(const PremodularData& data, Label a);
CycNum eta_scalar(const PremodularData& data, const std::string& a);

enum class KappaVerdict { ExtensionExistsSClass, Inconsistent };
std::string_view to_string(KappaVerdict v);

/// Grothendieck-level Klein invariant of the two summands L+ and L- of the
/// Lagrangian object, computed twice: by counting, and as exact traces of
/// ((1 +- M_e) / 2) * D on K0(B) (x) Q.
struct KappaReport {
    Label fermion = 0;
    std::size_t n_self_dual = 0;
    std::size_t n_e_twisted = 0;
    Rational kappa_plus;
    Rational kappa_minus;
    Rational matrix_kappa_plus;
    Rational matrix_kappa_minus;
    KappaVerdict verdict = KappaVerdict::Inconsistent;
};

/// Throws Error(NotSlightlyDegenerate) unless the Mueger centre is sVec, and
/// Error(CrossCheckMismatch) if the two computations disagree.
KappaReport kappa_lagrangian(const PremodularData& data);

enum class TheoremVerdict { AlreadyNondegenerate, ExtensionExistsS, OutsideScope, Inconsistent };
std::string_view to_string(TheoremVerdict v);

struct MainTheoremVerdict {
    TheoremVerdict kind = TheoremVerdict::OutsideScope;
    std::string message;
    CentreClassification classification;
    std::optional<KappaReport> kappa;
    /// Klein invariant of the magnetic object in the two candidate centres, for context.
    Rational reference_kappa_s = Rational(1);
    Rational reference_kappa_t = Rational(-1);
};

MainTheoremVerdict main_theorem_verdict(const PremodularData& data);

}  // namespace premod
