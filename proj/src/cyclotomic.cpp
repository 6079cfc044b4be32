#include "premod/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "premod/error.hpp"

namespace premod {

namespace {

using Poly = std::vector<mpz_class>;

long mobius(long n) {
    long result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

Poly compute_cyclotomic(long n) {
    Poly poly{1};
    std::vector<long> divide_by;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const long mu = mobius(n / d);
        if (mu == 1) {
            Poly next(poly.size() + d);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + d] += poly[i];
                next[i] -= poly[i];
            }
            poly = std::move(next);
        } else if (mu == -1) {
            divide_by.push_back(d);
        }
    }
    for (long d : divide_by) {
        // Exact division by x^d - 1.
        const std::size_t deg = poly.size() - 1;
        Poly quot(deg - d + 1);
        for (std::size_t i = deg; i >= static_cast<std::size_t>(d); --i) {
            const mpz_class c = poly[i];
            quot[i - d] = c;
            poly[i] = 0;
            poly[i - d] += c;
        }
        poly = std::move(quot);
    }
    return poly;
}

// Reduces p in place modulo the monic polynomial phi and truncates to deg(phi).
void reduce_mod(Poly& p, const std::vector<long>& phi) {
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (p[i] == 0) continue;
        const mpz_class c = p[i];
        for (std::size_t j = 0; j < deg; ++j) {
            if (phi[j] != 0) p[i - deg + j] -= c * phi[j];
        }
        p[i] = 0;
    }
    p.resize(deg);
}

long lcm_checked(long a, long b) {
    return std::lcm(a, b);
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::NonConvergent: return "NonConvergent";
        case ErrorKind::NotASubcategory: return "NotASubcategory";
        case ErrorKind::DegenerateEigenproblem: return "DegenerateEigenproblem";
        case ErrorKind::NotSlightlyDegenerate: return "NotSlightlyDegenerate";
        case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
        case ErrorKind::GroupsTooLarge: return "GroupsTooLarge";
        case ErrorKind::UnknownCatalogKey: return "UnknownCatalogKey";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        const auto& v = violations[i];
        if (i) os << "; ";
        os << v.kind;
        if (!v.witness.empty()) {
            os << " at (";
            for (std::size_t j = 0; j < v.witness.size(); ++j) os << (j ? "," : "") << v.witness[j];
            os << ")";
        }
        if (!v.detail.empty()) os << ": " << v.detail;
    }
    return os.str();
}

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    mpz_class p, q;
    if (num.empty() || den.empty() || p.set_str(num, 10) != 0 || q.set_str(den, 10) != 0)
        throw Error(ErrorKind::ParseError, "malformed rational '" + s + "'");
    if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<long>& cyclotomic_polynomial(long n) {
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<const std::vector<long>>> cache;
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    const Poly poly = compute_cyclotomic(n);
    auto coeffs = std::make_unique<std::vector<long>>();
    coeffs->reserve(poly.size());
    for (const auto& c : poly) {
        if (!c.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "cyclotomic coefficient overflow");
        coeffs->push_back(c.get_si());
    }
    return *cache.emplace(n, std::move(coeffs)).first->second;
}

CycNum::CycNum() : n_(1), num_(1), den_(1) {}

CycNum::CycNum(const Rational& r, long n) : n_(n), num_(euler_phi(n)), den_(1) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
    num_[0] = r.get_num();
    den_ = r.get_den();
    normalize();
}

CycNum::CycNum(long n, std::vector<mpz_class> num, mpz_class den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

CycNum CycNum::root(long p, long q) {
    if (q < 1) throw Error(ErrorKind::InvalidArgument, "root denominator must be >= 1");
    long k = p % q;
    if (k < 0) k += q;
    const long g = std::gcd(k, q);
    const long n = q / g;
    const long e = k / g;
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    Poly poly(std::max<std::size_t>(deg, e + 1));
    poly[e] = 1;
    reduce_mod(poly, phi);
    return CycNum(n, std::move(poly), 1);
}

CycNum CycNum::from_root_counts(long n, const std::vector<long>& counts) {
    if (n < 1 || static_cast<long>(counts.size()) != n)
        throw Error(ErrorKind::InvalidArgument, "root counts must have one entry per residue mod n");
    const auto& phi = cyclotomic_polynomial(n);
    Poly poly(std::max<std::size_t>(phi.size() - 1, n));
    for (long k = 0; k < n; ++k) poly[k] = counts[k];
    reduce_mod(poly, phi);
    return CycNum(n, std::move(poly), 1);
}

CycNum CycNum::from_coeffs(long n, const std::vector<Rational>& coeffs) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
        throw Error(ErrorKind::InvalidArgument, "coefficient count " + std::to_string(coeffs.size()) +
                                                    " does not match phi(" + std::to_string(n) + ")");
    mpz_class den = 1;
    for (const auto& c : coeffs) den = lcm(den, mpz_class(c.get_den()));
    Poly num;
    num.reserve(coeffs.size());
    for (const auto& c : coeffs) num.push_back(c.get_num() * (den / c.get_den()));
    return CycNum(n, std::move(num), std::move(den));
}

std::vector<Rational> CycNum::coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
    return out;
}

Rational CycNum::coeff(std::size_t i) const {
    Rational r(num_.at(i), den_);
    r.canonicalize();
    return r;
}

bool CycNum::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const { return coeff(0); }

void CycNum::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) g = gcd(g, c);
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        den_ /= g;
        for (auto& c : num_) c /= g;
    }
}

CycNum CycNum::with_conductor(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0)
        throw Error(ErrorKind::InvalidArgument,
                    "cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(m));
    const long f = m / n_;
    const auto& phi = cyclotomic_polynomial(m);
    const std::size_t deg = phi.size() - 1;
    Poly poly(std::max<std::size_t>(deg, (num_.size() - 1) * f + 1));
    for (std::size_t i = 0; i < num_.size(); ++i) poly[i * f] = num_[i];
    reduce_mod(poly, phi);
    return CycNum(m, std::move(poly), den_);
}

CycNum CycNum::lift(long m) const { return with_conductor(m); }

void CycNum::align_with(CycNum& other) {
    if (n_ == other.n_) return;
    const long m = lcm_checked(n_, other.n_);
    *this = with_conductor(m);
    other = other.with_conductor(m);
}

CycNum CycNum::galois(long k) const {
    long kk = k % n_;
    if (kk < 0) kk += n_;
    if (std::gcd(kk, n_) != 1)
        throw Error(ErrorKind::InvalidArgument, "Galois exponent must be a unit mod the conductor");
    if (kk == 1 || is_rational()) return *this;
    const auto& phi = cyclotomic_polynomial(n_);
    Poly poly(std::max<std::size_t>(phi.size() - 1, n_));
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        poly[(static_cast<long>(i) * kk) % n_] += num_[i];
    }
    reduce_mod(poly, phi);
    return CycNum(n_, std::move(poly), den_);
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (is_rational()) return CycNum(1 / rational_value(), n_);
    // Units on the unit circle (twists, roots of unity) invert by conjugation.
    const CycNum c = conj();
    if (*this * c == CycNum(1)) return c;
    // General case: x^{-1} = prod_{sigma != 1} sigma(x) / N(x).
    CycNum others(Rational(1), n_);
    for (long k = 2; k < n_; ++k)
        if (std::gcd(k, n_) == 1) others *= galois(k);
    const CycNum norm = *this * others;
    if (!norm.is_rational()) throw Error(ErrorKind::CrossCheckMismatch, "field norm is not rational");
    return others * CycNum(1 / norm.rational_value(), n_);
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result(Rational(1), n_);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    CycNum other = rhs;
    align_with(other);
    if (den_ == other.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum& CycNum::operator*=(const CycNum& rhs) {
    CycNum other = rhs;
    align_with(other);
    const std::size_t deg = num_.size();
    Poly prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (num_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (other.num_[j] != 0) prod[i + j] += num_[i] * other.num_[j];
        }
    }
    reduce_mod(prod, cyclotomic_polynomial(n_));
    num_ = std::move(prod);
    den_ *= other.den_;
    normalize();
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return *this *= rhs.inverse();
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.n_ == b.n_) return a.den_ == b.den_ && a.num_ == b.num_;
    const long m = std::lcm(a.n_, b.n_);
    const CycNum la = a.with_conductor(m);
    const CycNum lb = b.with_conductor(m);
    return la.den_ == lb.den_ && la.num_ == lb.num_;
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    const double d = mpq_class(1, den_).get_d();
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_);
        acc += num_[i].get_d() * d * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CycNum::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        Rational c = coeff(i);
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit_coeff = c == 1;
        if (i == 0 || !unit_coeff) os << c.get_str();
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "z" << n_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace premod
