#include "premod/center_components.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

namespace premod {

namespace {

constexpr double kMergeTolerance = 1e-9;
constexpr double kDistinctTolerance = 1e-6;
constexpr double kHomomorphismTolerance = 1e-8;
constexpr int kRetries = 8;

Rational fractional_part(const Rational& x) {
    mpz_class floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(floor_value);
}

double sup_distance(const std::vector<std::complex<double>>& x, const std::vector<std::complex<double>>& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

// Uniform in [-1, 1) from the top 53 bits; independent of the standard library's distributions.
double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

bool is_homomorphism(const FusionRing& ring, const std::vector<std::complex<double>>& chi) {
    if (std::abs(chi[ring.unit()] - 1.0) > kHomomorphismTolerance) return false;
    for (Label a = 0; a < ring.rank(); ++a) {
        for (Label b = 0; b < ring.rank(); ++b) {
            std::complex<double> acc = 0.0;
            for (const auto& t : ring.product(a, b)) acc += static_cast<double>(t.mult) * chi[t.label];
            if (std::abs(acc - chi[a] * chi[b]) > kHomomorphismTolerance * std::max(1.0, std::abs(acc)))
                return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::vector<std::complex<double>>> numeric_ring_characters(const FusionRing& ring, std::uint64_t seed) {
    const std::size_t k = ring.rank();
    std::vector<Eigen::MatrixXd> mats;
    for (Label a = 0; a < k; ++a) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
        for (Label b = 0; b < k; ++b)
            for (const auto& t : ring.product(a, b)) m(t.label, b) = static_cast<double>(t.mult);
        mats.push_back(std::move(m));
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt <= kRetries; ++attempt) {
        Eigen::MatrixXd generic = Eigen::MatrixXd::Zero(k, k);
        for (Label a = 0; a < k; ++a) generic += unit_interval(rng) * mats[a];

        Eigen::EigenSolver<Eigen::MatrixXd> solver(generic);
        if (solver.info() != Eigen::Success) continue;
        const Eigen::VectorXcd values = solver.eigenvalues();
        const Eigen::MatrixXcd vectors = solver.eigenvectors();

        bool separated = true;
        for (std::size_t i = 0; i < k && separated; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (std::abs(values(i) - values(j)) < kDistinctTolerance) {
                    separated = false;
                    break;
                }
        if (!separated) continue;

        std::vector<std::vector<std::complex<double>>> chars;
        bool valid = true;
        for (std::size_t i = 0; i < k && valid; ++i) {
            const Eigen::VectorXcd v = vectors.col(static_cast<Eigen::Index>(i));
            Eigen::Index pivot = 0;
            v.cwiseAbs().maxCoeff(&pivot);
            std::vector<std::complex<double>> chi(k);
            for (Label a = 0; a < k; ++a) chi[a] = (mats[a].cast<std::complex<double>>() * v)(pivot) / v(pivot);
            if (!is_homomorphism(ring, chi)) {
                valid = false;
                break;
            }
            bool duplicate = false;
            for (const auto& other : chars)
                if (sup_distance(other, chi) < kMergeTolerance) duplicate = true;
            if (!duplicate) chars.push_back(std::move(chi));
        }
        if (!valid || chars.size() != k) continue;
        bool distinct = true;
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = i + 1; j < chars.size(); ++j)
                if (sup_distance(chars[i], chars[j]) < kDistinctTolerance) distinct = false;
        if (distinct) return chars;
    }
    throw Error(ErrorKind::DegenerateEigenproblem,
                "could not separate characters after " + std::to_string(kRetries) + " retries");
}

bool is_group_like(const FusionRing& ring) {
    for (Label a = 0; a < ring.rank(); ++a)
        if (!ring.is_invertible(a)) return false;
    return true;
}

std::vector<std::vector<Rational>> group_ring_characters(const FusionRing& ring) {
    if (!is_group_like(ring)) throw Error(ErrorKind::InvalidArgument, "ring has non-invertible simples");
    const std::size_t k = ring.rank();
    const auto mul = [&](Label a, Label b) { return *ring.simple_product(a, b); };

    // Grow a subgroup H one cyclic extension at a time, extending every
    // character of H in all m ways, where m is the order of g modulo H.
    std::vector<Label> members{ring.unit()};
    std::vector<bool> in_subgroup(k, false);
    in_subgroup[ring.unit()] = true;
    std::vector<std::vector<Rational>> chars{std::vector<Rational>(k, Rational(0))};

    while (members.size() < k) {
        Label g = 0;
        while (in_subgroup[g]) ++g;
        long m = 1;
        Label power = g;
        while (!in_subgroup[power]) {
            power = mul(power, g);
            ++m;
        }
        std::vector<Label> grown;
        std::vector<std::pair<Label, long>> decomposition;  // element -> (h, j) with element = h g^j
        Label shift = ring.unit();
        for (long j = 0; j < m; ++j) {
            for (Label h : members) {
                const Label x = mul(h, shift);
                grown.push_back(x);
                decomposition.emplace_back(h, j);
            }
            shift = mul(shift, g);
        }
        std::vector<std::vector<Rational>> extended;
        for (const auto& chi : chars) {
            for (long r = 0; r < m; ++r) {
                const Rational at_g = fractional_part((chi[power] + r) / Rational(m));
                std::vector<Rational> next(k, Rational(0));
                for (std::size_t i = 0; i < grown.size(); ++i) {
                    const auto& [h, j] = decomposition[i];
                    next[grown[i]] = fractional_part(chi[h] + at_g * j);
                }
                extended.push_back(std::move(next));
            }
        }
        for (Label x : grown) in_subgroup[x] = true;
        members = std::move(grown);
        chars = std::move(extended);
    }
    return chars;
}

ComponentAnalysis ring_characters(const PremodularData& data, std::uint64_t seed) {
    const CentreClassification cls = classify_degeneracy(data);
    const FusionRing sub = data.ring().restrict_to(cls.transparent);

    ComponentAnalysis out;
    out.labels = cls.transparent;
    out.seed = seed;
    std::vector<std::vector<Rational>> exponents;
    if (is_group_like(sub)) {
        out.exact = true;
        exponents = group_ring_characters(sub);
        for (const auto& chi : exponents) {
            std::vector<std::complex<double>> values;
            for (const auto& e : chi) values.push_back(std::polar(1.0, 2.0 * M_PI * e.get_d()));
            out.characters.push_back(std::move(values));
        }
    } else {
        out.characters = numeric_ring_characters(sub, seed);
    }

    // Deterministic order: decreasing (re, im) on a 1e-9 grid, label by label.
    std::vector<std::size_t> order(out.characters.size());
    std::iota(order.begin(), order.end(), 0);
    const auto key = [&](std::size_t i) {
        std::vector<long long> k;
        for (const auto& z : out.characters[i]) {
            k.push_back(-std::llround(z.real() / kMergeTolerance));
            k.push_back(-std::llround(z.imag() / kMergeTolerance));
        }
        return k;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    {
        std::vector<std::vector<std::complex<double>>> sorted;
        std::vector<std::vector<Rational>> sorted_exact;
        for (std::size_t i : order) {
            sorted.push_back(out.characters[i]);
            if (out.exact) sorted_exact.push_back(exponents[i]);
        }
        out.characters = std::move(sorted);
        if (out.exact) out.exact_exponents = std::move(sorted_exact);
    }
    out.count = out.characters.size();
    if (out.count != cls.transparent.size())
        throw Error(ErrorKind::CrossCheckMismatch, "character count " + std::to_string(out.count) +
                                                       " != transparent simples " +
                                                       std::to_string(cls.transparent.size()));

    const FpDims fp = fpdim(sub);
    std::optional<std::size_t> dim_index;
    for (std::size_t i = 0; i < out.characters.size(); ++i) {
        double dist = 0.0;
        for (std::size_t j = 0; j < fp.dims.size(); ++j)
            dist = std::max(dist, std::abs(out.characters[i][j] - fp.dims[j]));
        if (dist < 1e-8) {
            dim_index = i;
            break;
        }
    }
    if (!dim_index) throw Error(ErrorKind::CrossCheckMismatch, "no character matches the FP dimensions");
    out.dim_index = *dim_index;

    if (cls.kind == CentreKind::SlightlyDegenerate) {
        const auto pos = static_cast<std::size_t>(
            std::find(cls.transparent.begin(), cls.transparent.end(), *cls.fermion) - cls.transparent.begin());
        for (std::size_t i = 0; i < out.characters.size(); ++i)
            if (std::abs(out.characters[i][pos] + 1.0) < 1e-8) out.magnetic_index = i;
    }
    return out;
}

std::size_t component_count(const PremodularData& data, std::uint64_t seed) {
    return ring_characters(data, seed).count;
}

}  // namespace premod
