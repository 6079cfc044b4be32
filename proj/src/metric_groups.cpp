#include "premod/metric_groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace premod {

namespace {

using Element = MetricGroup::Element;

constexpr std::size_t kMaxWitnesses = 16;
constexpr long kMaxDenominator = 1L << 40;

void add_capped(ValidationReport& report, const std::string& kind, std::vector<std::string> witness,
                std::string detail = {}) {
    std::size_t count = 0;
    for (const auto& v : report.violations)
        if (v.kind == kind) ++count;
    if (count < kMaxWitnesses) report.add(kind, std::move(witness), std::move(detail));
}

long long mod(__int128 x, long long m) {
    long long r = static_cast<long long>(x % m);
    return r < 0 ? r + m : r;
}

Rational fractional_part(const Rational& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(fl);
}

}  // namespace

MetricGroup::MetricGroup(std::vector<long> orders, std::vector<Rational> qtable) : orders_(std::move(orders)) {
    std::size_t size = 1;
    for (long n : orders_) {
        if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic orders must be positive");
        size *= static_cast<std::size_t>(n);
        if (size > kMaxOrder)
            throw Error(ErrorKind::GroupsTooLarge, "group order exceeds " + std::to_string(kMaxOrder));
    }
    if (qtable.size() != size)
        throw Error(ErrorKind::InvalidArgument, "q table has " + std::to_string(qtable.size()) +
                                                    " entries, group has " + std::to_string(size));
    strides_.assign(orders_.size(), 1);
    for (std::size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * orders_[i];

    mpz_class den = 1;
    for (auto& v : qtable) {
        v.canonicalize();
        v = fractional_part(v);
        den = lcm(den, mpz_class(v.get_den()));
        if (den > kMaxDenominator) throw Error(ErrorKind::InvalidArgument, "q denominators too large");
    }
    den_ = den.get_si();
    qnum_.reserve(size);
    for (const auto& v : qtable) {
        const mpz_class num = v.get_num() * (den / v.get_den());
        qnum_.push_back(num.get_si());
    }
}

MetricGroup MetricGroup::from_generators(std::vector<long> orders, std::vector<Rational> q_diag,
                                         std::vector<Rational> b_upper) {
    for (auto& v : q_diag) v.canonicalize();
    for (auto& v : b_upper) v.canonicalize();
    const std::size_t k = orders.size();
    if (q_diag.size() != k) throw Error(ErrorKind::InvalidArgument, "need one q value per generator");
    if (!b_upper.empty() && b_upper.size() != k * (k - 1) / 2)
        throw Error(ErrorKind::InvalidArgument, "need k(k-1)/2 off-diagonal b values");
    std::size_t size = 1;
    for (long n : orders) {
        if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic orders must be positive");
        size *= static_cast<std::size_t>(n);
        if (size > kMaxOrder)
            throw Error(ErrorKind::GroupsTooLarge, "group order exceeds " + std::to_string(kMaxOrder));
    }
    std::vector<Rational> table(size);
    std::vector<long> c(k, 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
        Rational v = 0;
        std::size_t pair = 0;
        for (std::size_t i = 0; i < k; ++i) {
            v += q_diag[i] * c[i] * c[i];
            for (std::size_t j = i + 1; j < k; ++j, ++pair)
                if (!b_upper.empty()) v += b_upper[pair] * c[i] * c[j];
        }
        table[idx] = v;
        for (std::size_t i = k; i-- > 0;) {
            if (++c[i] < orders[i]) break;
            c[i] = 0;
        }
    }
    return MetricGroup(std::move(orders), std::move(table));
}

long MetricGroup::exponent() const {
    long e = 1;
    for (long n : orders_) e = std::lcm(e, n);
    return e;
}

std::vector<long> MetricGroup::coords(Element x) const {
    std::vector<long> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = static_cast<long>((x / strides_[i]) % orders_[i]);
    return c;
}

MetricGroup::Element MetricGroup::element(const std::vector<long>& c) const {
    if (c.size() != orders_.size()) throw Error(ErrorKind::InvalidArgument, "coordinate count mismatch");
    Element x = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        long v = c[i] % orders_[i];
        if (v < 0) v += orders_[i];
        x += static_cast<std::size_t>(v) * strides_[i];
    }
    return x;
}

MetricGroup::Element MetricGroup::generator(std::size_t i) const {
    return orders_.at(i) == 1 ? 0 : strides_[i];
}

MetricGroup::Element MetricGroup::add(Element x, Element y) const {
    Element out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const long n = orders_[i];
        const long a = static_cast<long>((x / strides_[i]) % n);
        const long b = static_cast<long>((y / strides_[i]) % n);
        out += static_cast<std::size_t>((a + b) % n) * strides_[i];
    }
    return out;
}

MetricGroup::Element MetricGroup::neg(Element x) const {
    Element out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const long n = orders_[i];
        const long a = static_cast<long>((x / strides_[i]) % n);
        out += static_cast<std::size_t>((n - a) % n) * strides_[i];
    }
    return out;
}

MetricGroup::Element MetricGroup::scale(long m, Element x) const {
    Element out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const long n = orders_[i];
        const long a = static_cast<long>((x / strides_[i]) % n);
        long v = static_cast<long>((static_cast<__int128>(a) * m) % n);
        if (v < 0) v += n;
        out += static_cast<std::size_t>(v) * strides_[i];
    }
    return out;
}

long MetricGroup::order_of(Element x) const {
    long o = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const long n = orders_[i];
        const long a = static_cast<long>((x / strides_[i]) % n);
        o = std::lcm(o, n / std::gcd(a, n));
    }
    return o;
}

long long MetricGroup::bnum(Element x, Element y) const {
    return mod(static_cast<__int128>(qnum_[add(x, y)]) - qnum_[x] - qnum_[y], den_);
}

Rational MetricGroup::q(Element x) const {
    Rational r(static_cast<long>(qnum_.at(x)), static_cast<long>(den_));
    r.canonicalize();
    return r;
}

Rational MetricGroup::b(Element x, Element y) const {
    Rational r(static_cast<long>(bnum(x, y)), static_cast<long>(den_));
    r.canonicalize();
    return r;
}

std::string MetricGroup::element_name(Element x) const {
    std::string out = "(";
    const auto c = coords(x);
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + ")";
}

MetricGroup::Element MetricGroup::parse_element(const std::string& name) const {
    if (name.size() < 2 || name.front() != '(' || name.back() != ')')
        throw Error(ErrorKind::ParseError, "element key '" + name + "' is not of the form (c1,...,ck)");
    std::vector<long> c;
    const std::string body = name.substr(1, name.size() - 2);
    std::size_t pos = 0;
    while (!body.empty() && pos <= body.size()) {
        const std::size_t comma = body.find(',', pos);
        const std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            const long v = std::stol(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            c.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad coordinate in element key '" + name + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (c.size() != orders_.size())
        throw Error(ErrorKind::ParseError, "element key '" + name + "' has wrong number of coordinates");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] < 0 || c[i] >= orders_[i])
            throw Error(ErrorKind::ParseError, "coordinate out of range in '" + name + "'");
    return element(c);
}

ValidationReport validate_metric_group(const MetricGroup& mg) {
    ValidationReport report;
    const long long den = mg.den();
    const long exp = mg.exponent();

    // q(n x) == n^2 q(x) for 0 <= n <= exponent.
    if (mg.qnum(mg.zero()) != 0) add_capped(report, "QuadraticLawViolation", {mg.element_name(0)}, "q(0) != 0");
    for (Element x = 0; x < mg.size(); ++x) {
        Element y = x;
        for (long n = 1; n <= exp; ++n) {
            const long long expected = mod(static_cast<__int128>(n) * n * mg.qnum(x), den);
            if (mg.qnum(y) != expected) {
                add_capped(report, "QuadraticLawViolation", {mg.element_name(x), std::to_string(n)},
                           "q(" + std::to_string(n) + "x) = " + rational_to_string(mg.q(y)) + " != " +
                               std::to_string(n) + "^2 q(x) mod 1");
                break;
            }
            y = mg.add(y, x);
        }
    }

    // b is bi-additive iff q equals the polynomial in coordinates determined by
    // its generator values, with coefficients well defined on each cyclic factor.
    const std::size_t k = mg.rank();
    std::vector<long long> qg(k);
    std::vector<std::vector<long long>> bg(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        qg[i] = mg.qnum(mg.generator(i));
        for (std::size_t j = i + 1; j < k; ++j) {
            bg[i][j] = mg.bnum(mg.generator(i), mg.generator(j));
            const long ni = mg.orders()[i], nj = mg.orders()[j];
            if (mod(static_cast<__int128>(ni) * bg[i][j], den) != 0 || mod(static_cast<__int128>(nj) * bg[i][j], den) != 0)
                add_capped(report, "BilinearityViolation",
                           {mg.element_name(mg.generator(i)), mg.element_name(mg.generator(j))},
                           "b(g_i, g_j) not annihilated by the generator orders");
        }
    }
    for (Element x = 0; x < mg.size(); ++x) {
        const auto c = mg.coords(x);
        __int128 acc = 0;
        for (std::size_t i = 0; i < k; ++i) {
            acc = mod(acc + static_cast<__int128>(c[i]) * c[i] % den * qg[i], den);
            for (std::size_t j = i + 1; j < k; ++j)
                acc = mod(acc + static_cast<__int128>(c[i]) * c[j] % den * bg[i][j], den);
        }
        if (static_cast<long long>(acc) != mg.qnum(x))
            add_capped(report, "BilinearityViolation", {mg.element_name(x)},
                       "q(x+y) - q(x) - q(y) is not bi-additive");
    }
    return report;
}

std::vector<Element> radical(const MetricGroup& mg) {
    std::vector<Element> out;
    for (Element x = 0; x < mg.size(); ++x) {
        bool in = true;
        for (std::size_t i = 0; i < mg.rank() && in; ++i)
            if (mg.bnum(x, mg.generator(i)) != 0) in = false;
        if (in) out.push_back(x);
    }
    return out;
}

CycNum gauss_sum(const MetricGroup& mg) {
    std::vector<long> counts(static_cast<std::size_t>(mg.den()), 0);
    for (Element x = 0; x < mg.size(); ++x) ++counts[static_cast<std::size_t>(mg.qnum(x))];
    return CycNum::from_root_counts(mg.den(), counts);
}

std::optional<int> signature_mod8(const MetricGroup& mg) {
    if (radical(mg).size() != 1) return std::nullopt;
    const std::complex<double> normalized = gauss_sum(mg).to_complex() / std::sqrt(static_cast<double>(mg.size()));
    for (int s = 0; s < 8; ++s)
        if (std::abs(normalized - std::polar(1.0, 2.0 * M_PI * s / 8.0)) < 1e-9) return s;
    return std::nullopt;
}

PremodularData to_premodular(const MetricGroup& mg) {
    const std::size_t n = mg.size();
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
    for (Element x = 0; x < n; ++x) {
        labels.push_back(mg.element_name(x));
        for (Element y = 0; y < n; ++y) mult[x][y] = mg.add(x, y);
    }
    FusionRing ring = FusionRing::group_ring(std::move(labels), mg.zero(), mult);
    const long conductor = static_cast<long>(mg.den());
    std::vector<CycNum> dims(n, CycNum(Rational(1), conductor));
    std::vector<CycNum> twists;
    std::map<long long, CycNum> roots;
    const auto root = [&](long long k) -> const CycNum& {
        auto it = roots.find(k);
        if (it == roots.end()) it = roots.emplace(k, CycNum::root(k, conductor).lift(conductor)).first;
        return it->second;
    };
    for (Element x = 0; x < n; ++x) twists.push_back(root(mg.qnum(x)));
    CycMatrix s(n, std::vector<CycNum>(n));
    for (Element x = 0; x < n; ++x)
        for (Element y = x; y < n; ++y) s[x][y] = s[y][x] = root(mg.bnum(x, y));
    return PremodularData(std::move(ring), conductor, std::move(dims), std::move(twists), std::move(s));
}

MetricGroup orthogonal_sum(const MetricGroup& a, const MetricGroup& b) {
    std::vector<long> orders = a.orders();
    orders.insert(orders.end(), b.orders().begin(), b.orders().end());
    std::vector<Rational> table;
    table.reserve(a.size() * b.size());
    for (Element x = 0; x < a.size(); ++x)
        for (Element y = 0; y < b.size(); ++y) table.push_back(a.q(x) + b.q(y));
    return MetricGroup(std::move(orders), std::move(table));
}

namespace {

// Backtracking search for generator images of an isometry A -> B.
class IsometrySearch {
public:
    IsometrySearch(const MetricGroup& a, const MetricGroup& b,
                   std::optional<std::pair<Element, Element>> points)
        : a_(a), b_(b), points_(points), images_(a.rank()) {
        for (Element y = 0; y < b.size(); ++y) buckets_[{b.order_of(y), b.q(y)}].push_back(y);
    }

    bool run() {
        span_ = {b_.zero()};
        return extend(0);
    }

private:
    bool extend(std::size_t i) {
        if (i == a_.rank()) return finish();
        const Element g = a_.generator(i);
        const auto it = buckets_.find({a_.order_of(g), a_.q(g)});
        if (it == buckets_.end()) return false;
        const long n = a_.orders()[i];
        for (Element y : it->second) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (b_.b(y, images_[j]) != a_.b(g, a_.generator(j))) ok = false;
            if (!ok) continue;
            // Injectivity on the span of the images chosen so far.
            std::vector<Element> grown;
            grown.reserve(span_.size() * static_cast<std::size_t>(n));
            std::vector<bool> seen(b_.size(), false);
            Element shift = b_.zero();
            for (long t = 0; t < n && ok; ++t) {
                for (Element s : span_) {
                    const Element z = b_.add(s, shift);
                    if (seen[z]) {
                        ok = false;
                        break;
                    }
                    seen[z] = true;
                    grown.push_back(z);
                }
                shift = b_.add(shift, y);
            }
            if (!ok) continue;
            images_[i] = y;
            std::vector<Element> saved = std::move(span_);
            span_ = std::move(grown);
            if (extend(i + 1)) return true;
            span_ = std::move(saved);
        }
        return false;
    }

    Element apply(Element x) const {
        const auto c = a_.coords(x);
        Element out = b_.zero();
        for (std::size_t i = 0; i < c.size(); ++i) out = b_.add(out, b_.scale(c[i], images_[i]));
        return out;
    }

    bool finish() const {
        if (points_ && apply(points_->first) != points_->second) return false;
        for (Element x = 0; x < a_.size(); ++x)
            if (b_.q(apply(x)) != a_.q(x)) return false;
        return true;
    }

    const MetricGroup& a_;
    const MetricGroup& b_;
    std::optional<std::pair<Element, Element>> points_;
    std::map<std::pair<long, Rational>, std::vector<Element>> buckets_;
    std::vector<Element> images_;
    std::vector<Element> span_;
};

std::map<std::pair<long, Rational>, std::size_t> order_value_profile(const MetricGroup& g) {
    std::map<std::pair<long, Rational>, std::size_t> out;
    for (Element x = 0; x < g.size(); ++x) ++out[{g.order_of(x), g.q(x)}];
    return out;
}

}  // namespace

bool isometric(const MetricGroup& a, const MetricGroup& b, std::optional<std::pair<Element, Element>> points) {
    if (a.size() != b.size()) return false;
    if (points) {
        if (points->first >= a.size() || points->second >= b.size())
            throw Error(ErrorKind::InvalidArgument, "point outside the group");
        if (a.order_of(points->first) != b.order_of(points->second) || a.q(points->first) != b.q(points->second))
            return false;
    }
    if (order_value_profile(a) != order_value_profile(b)) return false;
    return IsometrySearch(a, b, points).run();
}

bool isometry_rel_point(const MetricGroup& a, const MetricGroup& b, Element pt_a, Element pt_b) {
    return isometric(a, b, std::make_pair(pt_a, pt_b));
}

std::optional<Element> transparent_fermion(const MetricGroup& mg) {
    const auto rad = radical(mg);
    if (rad.size() != 2) return std::nullopt;
    const Element e = rad[0] == mg.zero() ? rad[1] : rad[0];
    if (mg.q(e) != Rational(1, 2)) return std::nullopt;
    return e;
}

MetricGroup random_slightly_degenerate(std::mt19937_64& rng, std::size_t max_order) {
    const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    const auto cyclic = [](long n, long num, long den) {
        return MetricGroup::from_generators({n}, {Rational(num, den)});
    };
    const auto odd_unit = [&](long n) {
        long u;
        do u = 1 + static_cast<long>(pick(static_cast<std::size_t>(n - 1)));
        while (std::gcd(u, n) != 1);
        return u;
    };

    std::vector<MetricGroup> blocks{cyclic(2, 1, 2)};
    std::size_t order = 2;
    const std::size_t wanted = pick(5);
    for (std::size_t attempt = 0; attempt < 16 && blocks.size() <= wanted; ++attempt) {
        MetricGroup block;
        switch (pick(8)) {
            case 0: block = cyclic(2, pick(2) ? 1 : 3, 4); break;
            case 1: block = cyclic(4, 2 * static_cast<long>(pick(4)) + 1, 8); break;
            case 2: block = cyclic(8, 2 * static_cast<long>(pick(8)) + 1, 16); break;
            case 3: block = cyclic(3, odd_unit(3), 3); break;
            case 4: block = cyclic(5, odd_unit(5), 5); break;
            case 5: block = MetricGroup::from_generators({2, 2}, {Rational(0), Rational(0)}, {Rational(1, 2)}); break;
            case 6:
                block = MetricGroup::from_generators({2, 2}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 2)});
                break;
            default:
                block = MetricGroup::from_generators({4, 4}, {Rational(0), Rational(0)}, {Rational(1, 4)});
                break;
        }
        if (order * block.size() > max_order) continue;
        order *= block.size();
        blocks.push_back(std::move(block));
    }
    for (std::size_t i = blocks.size(); i > 1; --i) std::swap(blocks[i - 1], blocks[pick(i)]);
    MetricGroup out = blocks[0];
    for (std::size_t i = 1; i < blocks.size(); ++i) out = orthogonal_sum(out, blocks[i]);
    return out;
}

}  // namespace premod
