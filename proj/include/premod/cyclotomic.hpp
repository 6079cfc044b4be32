#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace premod {

using Rational = mpq_class;

/// Formats a rational as "p/q" (always with a denominator, "0/1" for zero).
std::string rational_to_string(const Rational& r);
/// Parses "p/q" or "p"; throws Error(ParseError) on malformed input or q == 0.
Rational rational_from_string(const std::string& s);

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Results are cached; the cache is internally synchronized.
const std::vector<long>& cyclotomic_polynomial(long n);

/// An exact element of Q(zeta_N) stored in the power basis of Q[x]/Phi_N(x).
///
/// Coefficients are kept as integer numerators over one positive common
/// denominator, reduced so that gcd(den, nums...) == 1. Two values with
/// different conductors compare equal when their lifts to the lcm agree.
class CycNum {
public:
    /// Zero at conductor 1.
    CycNum();
    /// The rational r embedded at conductor n.
    explicit CycNum(const Rational& r, long n = 1);
    CycNum(long value) : CycNum(Rational(value)) {}

    /// zeta_q^p = exp(2 pi i p / q), at conductor q / gcd(p, q).
    static CycNum root(long p, long q);
    /// sum_k counts[k] zeta_n^k, with counts.size() == n.
    static CycNum from_root_counts(long n, const std::vector<long>& counts);
    /// Value from explicit power-basis coordinates; throws unless size == phi(n).
    static CycNum from_coeffs(long n, const std::vector<Rational>& coeffs);

    long conductor() const { return n_; }
    std::size_t degree() const { return num_.size(); }
    std::vector<Rational> coeffs() const;
    Rational coeff(std::size_t i) const;

    bool is_zero() const;
    bool is_rational() const;
    /// Exact rational value; only meaningful when is_rational().
    Rational rational_value() const;

    /// Image under zeta_N -> zeta_M^{M/N}; M must be a multiple of N.
    CycNum lift(long m) const;

    CycNum conj() const;
    /// Galois action zeta -> zeta^k for gcd(k, N) == 1.
    CycNum galois(long k) const;
    CycNum inverse() const;
    CycNum pow(long e) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    /// Human readable form, e.g. "1 + 2*z8^3" where zN is exp(2 pi i / N).
    std::string to_string() const;

private:
    CycNum(long n, std::vector<mpz_class> num, mpz_class den);
    void normalize();
    void align_with(CycNum& other);
    CycNum with_conductor(long m) const;

    long n_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

}  // namespace premod
