#pragma once

// Brute-force oracles shared by the unit and acceptance tests. They only use
// group addition and table lookups, never the library's validators.

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "premod/catalog.hpp"
#include "premod/metric_groups.hpp"
#include "premod/premodular.hpp"

namespace testsupport {

using premod::CycNum;
using premod::MetricGroup;
using premod::Rational;
using Element = MetricGroup::Element;

inline Rational frac(Rational x) {
    while (x >= 1) x -= 1;
    while (x < 0) x += 1;
    return x;
}

inline bool quadratic_law_holds(const MetricGroup& mg) {
    for (Element x = 0; x < mg.size(); ++x) {
        Element y = mg.zero();
        for (long n = 0; n <= mg.exponent(); ++n) {
            if (mg.q(y) != frac(Rational(n * n) * mg.q(x))) return false;
            y = mg.add(y, x);
        }
    }
    return true;
}

inline bool bi_additive(const MetricGroup& mg) {
    const auto b = [&](Element x, Element y) { return frac(mg.q(mg.add(x, y)) - mg.q(x) - mg.q(y)); };
    for (Element x = 0; x < mg.size(); ++x)
        for (Element y = 0; y < mg.size(); ++y)
            for (Element z = 0; z < mg.size(); ++z)
                if (b(mg.add(x, y), z) != frac(b(x, z) + b(y, z))) return false;
    return true;
}

inline std::vector<Element> brute_radical(const MetricGroup& mg) {
    std::vector<Element> out;
    for (Element x = 0; x < mg.size(); ++x) {
        bool in = true;
        for (Element y = 0; y < mg.size() && in; ++y)
            if (frac(mg.q(mg.add(x, y)) - mg.q(x) - mg.q(y)) != 0) in = false;
        if (in) out.push_back(x);
    }
    return out;
}

/// Exhaustive search over all bijections; only for |A| <= 8.
inline bool brute_isometric(const MetricGroup& a, const MetricGroup& b, long pa = -1, long pb = -1) {
    if (a.size() != b.size()) return false;
    std::vector<Element> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[a.zero()] != b.zero()) continue;
        if (pa >= 0 && perm[static_cast<Element>(pa)] != static_cast<Element>(pb)) continue;
        bool ok = true;
        for (Element x = 0; x < a.size() && ok; ++x) {
            if (a.q(x) != b.q(perm[x])) ok = false;
            for (Element y = 0; y < a.size() && ok; ++y)
                if (perm[a.add(x, y)] != b.add(perm[x], perm[y])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// A random element of Q(zeta_n) with small integer coefficients on roots.
inline CycNum random_cyc(std::mt19937_64& rng, long n) {
    CycNum x(Rational(0), n);
    for (int t = 0; t < 4; ++t) {
        const long k = static_cast<long>(rng() % static_cast<unsigned long>(n));
        const long c = static_cast<long>(rng() % 7) - 3;
        const long d = 1 + static_cast<long>(rng() % 3);
        Rational r(c, d);
        r.canonicalize();
        x += CycNum(r) * CycNum::root(k, n);
    }
    return x;
}

inline std::complex<double> zeta(long p, long q) { return std::polar(1.0, 2.0 * M_PI * static_cast<double>(p) / q); }

inline premod::FusionRing ising_ring() {
    std::vector<std::vector<std::vector<long>>> n(3, std::vector<std::vector<long>>(3, std::vector<long>(3, 0)));
    for (int a = 0; a < 3; ++a) n[0][a][a] = n[a][0][a] = 1;
    n[1][1][0] = 1;
    n[1][2][2] = n[2][1][2] = 1;
    n[2][2][0] = n[2][2][1] = 1;
    return premod::FusionRing({"1", "psi", "sigma"}, 0, {0, 1, 2}, n);
}

inline CycNum sqrt2() { return CycNum::root(1, 8) + CycNum::root(-1, 8); }

inline premod::PremodularData ising_data(long nu) {
    return premod::PremodularData(ising_ring(), 16, {CycNum(1), CycNum(1), sqrt2()},
                                  {CycNum(1), CycNum(-1), CycNum::root(nu, 16)});
}

inline premod::PremodularData svec_data() {
    return premod::PremodularData(premod::FusionRing::group_ring({"1", "e"}, 0, {{0, 1}, {1, 0}}), 2,
                                  {CycNum(1), CycNum(1)}, {CycNum(1), CycNum(-1)});
}

inline MetricGroup cyclic(long n, long num, long den) {
    return MetricGroup::from_generators({n}, {Rational(num, den)});
}

struct Pointed {
    MetricGroup group;
    Element fermion;
};

// Every nondegenerate form on Z4 and on Z2 x Z2 with an order-two element of
// q = 1/2 whose centralizer is itself, up to isometry fixing that element.
// Values of q are searched over all of (1/16)Z / Z.
inline std::vector<Pointed> brute_svec_extensions() {
    std::vector<Pointed> all;
    for (const std::vector<long>& orders : {std::vector<long>{4}, std::vector<long>{2, 2}}) {
        for (int code = 0; code < 16 * 16 * 16; ++code) {
            std::vector<Rational> q{Rational(0)};
            for (int k = code, i = 0; i < 3; ++i, k /= 16) {
                Rational v(k % 16, 16);
                v.canonicalize();
                q.push_back(v);
            }
            const MetricGroup mg(orders, q);
            if (!quadratic_law_holds(mg) || !bi_additive(mg)) continue;
            if (brute_radical(mg).size() != 1) continue;
            for (Element f = 1; f < 4; ++f) {
                if (mg.add(f, f) != 0 || mg.q(f) != Rational(1, 2)) continue;
                // Centralizer of {0, f} must be {0, f}.
                std::size_t cent = 0;
                for (Element x = 0; x < 4; ++x)
                    if (frac(mg.q(mg.add(x, f)) - mg.q(x) - mg.q(f)) == 0) ++cent;
                if (cent != 2) continue;
                all.push_back({mg, f});
            }
        }
    }
    std::vector<Pointed> classes;
    for (const auto& p : all) {
        bool seen = false;
        for (const auto& c : classes)
            if (brute_isometric(p.group, c.group, static_cast<long>(p.fermion), static_cast<long>(c.fermion)))
                seen = true;
        if (!seen) classes.push_back(p);
    }
    return classes;
}

}  // namespace testsupport
