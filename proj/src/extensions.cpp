#include "premod/extensions.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace premod {

namespace {

using Element = MetricGroup::Element;
using IMatrix = std::vector<std::vector<long long>>;

void swap_rows(IMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IMatrix& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

// row_i -= f * row_j
void row_axpy(IMatrix& m, std::size_t i, std::size_t j, long long f) {
    for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] -= f * m[j][c];
}

void col_axpy(IMatrix& m, std::size_t i, std::size_t j, long long f) {
    for (auto& row : m) row[i] -= f * row[j];
}

long long floor_mod(long long a, long long m) {
    const long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::vector<long long> smith_normal_form(IMatrix rel, IMatrix& col) {
    const std::size_t n = rel.size();
    col.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) col[i][i] = 1;

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block goes to (t, t).
            std::size_t pr = n, pc = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (rel[i][j] != 0 && (pr == n || std::llabs(rel[i][j]) < std::llabs(rel[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == n) break;
            swap_rows(rel, t, pr);
            swap_cols(rel, t, pc);
            swap_cols(col, t, pc);
            const long long p = rel[t][t];

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                row_axpy(rel, i, t, rel[i][t] / p);
                if (rel[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                const long long f = rel[t][j] / p;
                col_axpy(rel, j, t, f);
                col_axpy(col, j, t, f);
                if (rel[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: pull an offending row into row t and go again.
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (rel[i][j] % p != 0) {
                        row_axpy(rel, t, i, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    std::vector<long long> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = std::llabs(rel[i][i]);
    return diag;
}

namespace {

struct Candidate {
    MetricGroup group;
    Element fermion;
    std::vector<Element> embedding;
};

// A' = <A, t | 2t = a0>, with elements written as (a, eps), eps in {0, 1}.
class Overgroup {
public:
    Overgroup(const MetricGroup& base, Element a0) {
        const std::size_t k = base.rank();
        IMatrix rel(k + 1, std::vector<long long>(k + 1, 0));
        for (std::size_t i = 0; i < k; ++i) rel[i][i] = base.orders()[i];
        const auto c = base.coords(a0);
        for (std::size_t i = 0; i < k; ++i) rel[k][i] = -c[i];
        rel[k][k] = 2;
        IMatrix v;
        const auto diag = smith_normal_form(rel, v);
        for (std::size_t j = 0; j < diag.size(); ++j)
            if (diag[j] != 1) kept_.push_back(j);
        std::stable_sort(kept_.begin(), kept_.end(), [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
        for (std::size_t j : kept_) orders_.push_back(static_cast<long>(diag[j]));
        // Images of the generators g_1..g_k, t as rows of V.
        gens_ = std::move(v);
        std::vector<long> strides(orders_.size(), 1);
        for (std::size_t i = orders_.size(); i-- > 1;) strides[i - 1] = strides[i] * orders_[i];
        strides_ = std::move(strides);
        size_ = 1;
        for (long n : orders_) size_ *= static_cast<std::size_t>(n);
    }

    const std::vector<long>& orders() const { return orders_; }
    std::size_t size() const { return size_; }

    // Index in A' of (a, eps) with a given by coordinates in A.
    Element index(const std::vector<long>& a, int eps) const {
        Element out = 0;
        for (std::size_t s = 0; s < kept_.size(); ++s) {
            const std::size_t j = kept_[s];
            long long y = 0;
            for (std::size_t i = 0; i < a.size(); ++i) y += a[i] * gens_[i][j];
            y += eps * gens_[a.size()][j];
            out += static_cast<Element>(floor_mod(y, orders_[s])) * static_cast<Element>(strides_[s]);
        }
        return out;
    }

private:
    IMatrix gens_;
    std::vector<std::size_t> kept_;
    std::vector<long> orders_;
    std::vector<long> strides_;
    std::size_t size_ = 1;
};

// All characters chi of A with 2 chi(g_i) = b(g_i, a0), as values on generators.
std::vector<std::vector<Rational>> half_characters(const MetricGroup& base, Element a0) {
    std::vector<std::vector<Rational>> out{{}};
    for (std::size_t i = 0; i < base.rank(); ++i) {
        const long n = base.orders()[i];
        const Rational target = base.b(base.generator(i), a0);
        std::vector<Rational> options;
        for (long c = 0; c < n; ++c) {
            Rational v(c, n);
            v.canonicalize();
            Rational twice = 2 * v;
            if (twice >= 1) twice -= 1;
            if (twice == target) options.push_back(v);
        }
        std::vector<std::vector<Rational>> next;
        for (const auto& partial : out)
            for (const auto& v : options) {
                next.push_back(partial);
                next.back().push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Candidate> candidates_for(const MetricGroup& base, Element fermion, Element a0) {
    std::vector<Candidate> out;
    const Overgroup over(base, a0);
    std::vector<std::vector<long>> coords(base.size());
    for (Element a = 0; a < base.size(); ++a) coords[a] = base.coords(a);

    const Rational qa0 = base.q(a0);
    for (const auto& chi : half_characters(base, a0)) {
        const auto chi_of = [&](Element a) {
            Rational v = 0;
            for (std::size_t i = 0; i < chi.size(); ++i) v += chi[i] * coords[a][i];
            return v;
        };
        {
            Rational d = chi_of(a0) - qa0;
            if (d.get_den() != 1) continue;
        }
        for (int m = 0; m < 4; ++m) {
            const Rational x = (qa0 + m) / 4;
            std::vector<Rational> table(over.size());
            for (Element a = 0; a < base.size(); ++a) {
                table[over.index(coords[a], 0)] = base.q(a);
                table[over.index(coords[a], 1)] = base.q(a) + x + chi_of(a);
            }
            MetricGroup group(over.orders(), std::move(table));
            if (!validate_metric_group(group).ok()) continue;
            if (radical(group).size() != 1) continue;

            std::vector<Element> image(base.size());
            for (Element a = 0; a < base.size(); ++a) image[a] = over.index(coords[a], 0);
            // The centralizer of the image must be exactly {0, e}.
            std::size_t central = 0;
            bool bad = false;
            for (Element y = 0; y < group.size() && !bad; ++y) {
                bool in = true;
                for (std::size_t i = 0; i < base.rank() && in; ++i)
                    if (group.bnum(image[base.generator(i)], y) != 0) in = false;
                if (in) {
                    ++central;
                    if (y != group.zero() && y != image[fermion]) bad = true;
                }
            }
            if (bad || central != 2) continue;

            std::vector<Element> embedding;
            for (std::size_t i = 0; i < base.rank(); ++i) embedding.push_back(image[base.generator(i)]);
            out.push_back({std::move(group), image[fermion], std::move(embedding)});
        }
    }
    return out;
}

bool same_class(const Candidate& a, const PointedExtension& b, bool fix_fermion) {
    if (a.group.orders() != b.group.orders()) return false;
    return fix_fermion ? isometry_rel_point(a.group, b.group, a.fermion, b.fermion) : isometric(a.group, b.group);
}

bool table_less(const MetricGroup& a, const MetricGroup& b) {
    for (Element x = 0; x < a.size(); ++x) {
        const Rational qa = a.q(x), qb = b.q(x);
        if (qa != qb) return qa < qb;
    }
    return false;
}

}  // namespace

std::vector<PointedExtension> enumerate_pointed_extensions(const MetricGroup& mg, const ExtensionOptions& options) {
    const auto report = validate_metric_group(mg);
    if (!report.ok()) throw Error(ErrorKind::ValidationError, report.summary());
    const auto fermion = transparent_fermion(mg);
    if (!fermion)
        throw Error(ErrorKind::NotSlightlyDegenerate, "the radical of q is not {0, e} with q(e) = 1/2");
    if (2 * mg.size() > options.max_order)
        throw Error(ErrorKind::GroupsTooLarge, "extensions have order " + std::to_string(2 * mg.size()) +
                                                   ", above the cap " + std::to_string(options.max_order));

    // t and t + a give a0 and a0 + 2a, so one a0 per coset of 2A suffices.
    std::vector<Element> reps;
    {
        std::vector<bool> covered(mg.size(), false);
        std::vector<Element> doubles;
        for (Element a = 0; a < mg.size(); ++a) doubles.push_back(mg.add(a, a));
        std::sort(doubles.begin(), doubles.end());
        doubles.erase(std::unique(doubles.begin(), doubles.end()), doubles.end());
        for (Element a = 0; a < mg.size(); ++a) {
            if (covered[a]) continue;
            reps.push_back(a);
            for (Element d : doubles) covered[mg.add(a, d)] = true;
        }
    }

    std::vector<std::vector<Candidate>> per_rep(reps.size());
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(reps.size())));
    if (threads == 1) {
        for (std::size_t r = 0; r < reps.size(); ++r) per_rep[r] = candidates_for(mg, *fermion, reps[r]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t r = w; r < reps.size(); r += threads) per_rep[r] = candidates_for(mg, *fermion, reps[r]);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<PointedExtension> classes;
    for (auto& list : per_rep)
        for (auto& cand : list) {
            bool seen = false;
            for (const auto& c : classes)
                if (same_class(cand, c, options.fix_fermion)) {
                    seen = true;
                    break;
                }
            if (seen) continue;
            PointedExtension ext;
            ext.gauss = gauss_sum(cand.group);
            ext.signature = signature_mod8(cand.group).value_or(-1);
            if (ext.signature < 0) throw Error(ErrorKind::CrossCheckMismatch, "extension without a signature");
            ext.group = std::move(cand.group);
            ext.fermion = cand.fermion;
            ext.embedding = std::move(cand.embedding);
            classes.push_back(std::move(ext));
        }

    std::stable_sort(classes.begin(), classes.end(), [](const PointedExtension& a, const PointedExtension& b) {
        if (a.group.orders() != b.group.orders()) return a.group.orders() < b.group.orders();
        if (a.signature != b.signature) return a.signature < b.signature;
        return table_less(a.group, b.group);
    });
    return classes;
}

std::vector<Element> embedded_image(const MetricGroup& base, const PointedExtension& ext) {
    std::vector<Element> out(base.size());
    for (Element a = 0; a < base.size(); ++a) {
        const auto c = base.coords(a);
        Element y = ext.group.zero();
        for (std::size_t i = 0; i < c.size(); ++i) y = ext.group.add(y, ext.group.scale(c[i], ext.embedding[i]));
        out[a] = y;
    }
    return out;
}

}  // namespace premod
