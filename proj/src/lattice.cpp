#include "k3lat/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace k3lat {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw DomainError("Gram matrix is not symmetric");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (gram_.at(i, i) % 2 != 0) throw DomainError("lattice is not even");
}

DiscriminantForm DiscriminantForm::literal(std::vector<Int> orders, std::vector<Rat> q,
                                           RatMatrix b) {
    DiscriminantForm f;
    f.orders = std::move(orders);
    f.q = std::move(q);
    f.b = std::move(b);
    if (f.q.size() != f.orders.size() || f.b.rows() != f.orders.size() ||
        f.b.cols() != f.orders.size())
        throw DimensionError("literal discriminant form shape mismatch");
    for (auto& x : f.q) x = reduce_mod(x, 2);
    for (std::size_t i = 0; i < f.orders.size(); ++i)
        for (std::size_t j = 0; j < f.orders.size(); ++j)
            f.b.at(i, j) = reduce_mod(f.b.at(i, j), 1);
    if (!f.consistent()) throw DomainError("inconsistent literal discriminant form");
    return f;
}

Int DiscriminantForm::group_order() const {
    Int p = 1;
    for (const Int& d : orders) p *= d;
    return p;
}

// q(gi+gj) = q(gi)+q(gj)+2b(gi,gj) mod 2 holds for any element combination
// once b is symmetric with diagonal matching q mod 1, which is what we check.
bool DiscriminantForm::consistent() const {
    const std::size_t m = orders.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (reduce_mod(q[i], 1) != b.at(i, i)) return false;
        for (std::size_t j = 0; j < m; ++j)
            if (b.at(i, j) != b.at(j, i)) return false;
    }
    return true;
}

namespace {

// prime factors by trial division; inputs here are elementary divisors (small)
std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool integral_vector(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integral(x); });
}

std::vector<Rat> scale(const std::vector<Rat>& v, const Rat& s) {
    std::vector<Rat> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

std::vector<Rat> mul_row(const std::vector<Rat>& v, const RatMatrix& m) {
    std::vector<Rat> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += v[i] * m.at(i, j);
        out[j] = s;
    }
    return out;
}

Rat dot(const std::vector<Rat>& v, const std::vector<Rat>& w) {
    Rat s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
    return s;
}

} // namespace

DiscriminantForm discriminant_form(const Lattice& l) {
    const IntMatrix& a = l.gram();
    if (det(a) == 0) throw SingularMatrixError("singular Gram matrix");
    SnfResult s = snf(a);
    RatMatrix vinv = rational_inverse(s.v);
    RatMatrix ainv = rational_inverse(a);

    DiscriminantForm f;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = s.d.at(i, i);
        if (di <= 1) continue;
        std::vector<Rat> g(n);
        for (std::size_t j = 0; j < n; ++j) g[j] = vinv.at(i, j);
        f.orders.push_back(di);
        f.generators.push_back(std::move(g));
    }
    const std::size_t m = f.orders.size();
    f.q.resize(m);
    f.b = RatMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rat> gi_dual = mul_row(f.generators[i], ainv);
        f.q[i] = reduce_mod(dot(gi_dual, f.generators[i]), 2);
        for (std::size_t j = 0; j < m; ++j)
            f.b.at(i, j) = reduce_mod(dot(gi_dual, f.generators[j]), 1);
        // exact-order check: d_i * g in L, (d_i/p) * g not in L for p | d_i
        if (!integral_vector(scale(gi_dual, Rat(f.orders[i]))))
            throw DomainError("generator order check failed");
        for (const Int& p : prime_factors(f.orders[i]))
            if (integral_vector(scale(gi_dual, Rat(f.orders[i] / p))))
                throw DomainError("generator has smaller order than its divisor");
    }
    return f;
}

Rat qvalue(const Lattice& l, const std::vector<Rat>& v) {
    if (v.size() != l.rank()) throw DimensionError("vector length mismatch");
    if (det(l.gram()) == 0) throw SingularMatrixError("singular Gram matrix");
    RatMatrix ainv = rational_inverse(l.gram());
    return reduce_mod(dot(mul_row(v, ainv), v), 2);
}

Rat bvalue(const Lattice& l, const std::vector<Rat>& v, const std::vector<Rat>& w) {
    if (v.size() != l.rank() || w.size() != l.rank())
        throw DimensionError("vector length mismatch");
    if (det(l.gram()) == 0) throw SingularMatrixError("singular Gram matrix");
    RatMatrix ainv = rational_inverse(l.gram());
    return reduce_mod(dot(mul_row(v, ainv), w), 1);
}

DiscriminantForm negate_form(const DiscriminantForm& f) {
    DiscriminantForm out = f;
    for (auto& x : out.q) x = reduce_mod(-x, 2);
    for (std::size_t i = 0; i < out.orders.size(); ++i)
        for (std::size_t j = 0; j < out.orders.size(); ++j)
            out.b.at(i, j) = reduce_mod(-out.b.at(i, j), 1);
    return out;
}

namespace {

constexpr std::uint64_t kIsoGroupCap = 10000;

struct GroupView {
    std::vector<std::uint64_t> orders;
    std::vector<std::vector<std::uint64_t>> elements;  // exponent tuples
    std::vector<std::uint64_t> elem_order;
    std::vector<Rat> elem_q;
    const DiscriminantForm* f;

    std::uint64_t size() const { return elements.size(); }

    std::vector<std::uint64_t> add(const std::vector<std::uint64_t>& x,
                                   const std::vector<std::uint64_t>& y) const {
        std::vector<std::uint64_t> z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % orders[i];
        return z;
    }

    std::uint64_t index_of(const std::vector<std::uint64_t>& x) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < x.size(); ++i) idx = idx * orders[i] + x[i];
        return idx;
    }
};

Rat q_of(const DiscriminantForm& f, const std::vector<std::uint64_t>& x) {
    const std::size_t m = f.orders.size();
    Rat val = 0;
    for (std::size_t i = 0; i < m; ++i) val += Rat(Int(x[i]) * Int(x[i])) * f.q[i];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            val += 2 * Rat(Int(x[i]) * Int(x[j])) * f.b.at(i, j);
    return reduce_mod(val, 2);
}

Rat b_of(const DiscriminantForm& f, const std::vector<std::uint64_t>& x,
         const std::vector<std::uint64_t>& y) {
    const std::size_t m = f.orders.size();
    Rat val = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            val += Rat(Int(x[i]) * Int(y[j])) * f.b.at(i, j);
    return reduce_mod(val, 1);
}

GroupView enumerate_group(const DiscriminantForm& f) {
    GroupView g;
    g.f = &f;
    std::uint64_t total = 1;
    for (const Int& d : f.orders) {
        if (d > Int(kIsoGroupCap)) throw TooLargeError("group order exceeds search cap");
        g.orders.push_back(d.get_ui());
        total *= d.get_ui();
        if (total > kIsoGroupCap) throw TooLargeError("group order exceeds search cap");
    }
    const std::size_t m = g.orders.size();
    std::vector<std::uint64_t> cur(m, 0);
    for (std::uint64_t c = 0; c < total; ++c) {
        g.elements.push_back(cur);
        std::uint64_t o = 1;
        for (std::size_t i = 0; i < m; ++i)
            if (cur[i]) {
                std::uint64_t d = g.orders[i] / std::gcd(g.orders[i], cur[i]);
                o = std::lcm(o, d);
            }
        g.elem_order.push_back(o);
        g.elem_q.push_back(q_of(f, cur));
        for (std::size_t i = m; i-- > 0;) {
            if (++cur[i] < g.orders[i]) break;
            cur[i] = 0;
        }
    }
    return g;
}

bool generates_whole_group(const GroupView& g,
                           const std::vector<std::vector<std::uint64_t>>& gens) {
    std::vector<char> seen(g.size(), 0);
    std::vector<std::vector<std::uint64_t>> frontier;
    std::vector<std::uint64_t> zero(g.orders.size(), 0);
    seen[g.index_of(zero)] = 1;
    frontier.push_back(zero);
    std::uint64_t count = 1;
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& e : frontier)
            for (const auto& gen : gens) {
                auto s = g.add(e, gen);
                auto idx = g.index_of(s);
                if (!seen[idx]) {
                    seen[idx] = 1;
                    ++count;
                    next.push_back(std::move(s));
                }
            }
        frontier = std::move(next);
    }
    return count == g.size();
}

bool search_images(const DiscriminantForm& f1, const GroupView& g2, std::size_t i,
                   std::vector<std::vector<std::uint64_t>>& imgs) {
    if (i == f1.orders.size()) return generates_whole_group(g2, imgs);
    const std::uint64_t want_order = f1.orders[i].get_ui();
    const Rat want_q = f1.q[i];
    for (std::size_t e = 0; e < g2.size(); ++e) {
        if (g2.elem_order[e] != want_order || g2.elem_q[e] != want_q) continue;
        const auto& cand = g2.elements[e];
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
            if (b_of(*g2.f, imgs[j], cand) != f1.b.at(j, i)) ok = false;
        if (!ok) continue;
        imgs.push_back(cand);
        if (search_images(f1, g2, i + 1, imgs)) return true;
        imgs.pop_back();
    }
    return false;
}

} // namespace

bool disc_forms_isomorphic(const DiscriminantForm& f1, const DiscriminantForm& f2) {
    if (f1.group_order() != f2.group_order()) return false;
    if (f1.group_order() > Int(kIsoGroupCap)) throw TooLargeError("group order exceeds search cap");
    GroupView g2 = enumerate_group(f2);
    std::vector<std::vector<std::uint64_t>> imgs;
    return search_images(f1, g2, 0, imgs);
}

Lattice orthogonal_complement(const Lattice& l, const std::vector<Int>& v) {
    const std::size_t n = l.rank();
    if (v.size() != n) throw DimensionError("vector length mismatch");
    Int content = 0;
    for (const Int& x : v) content = gcd(content, x);
    if (content == 0) throw DomainError("zero vector has no complement");
    if (content != 1) throw DomainError("vector is not primitive");

    // pairing map x -> x . v as a 1 x n integer matrix
    IntMatrix pairing(1, n);
    for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += l.gram().at(j, i) * v[i];
        pairing.at(0, j) = s;
    }
    IntMatrix basis = integer_kernel(pairing);  // n x (n-1) for nonsingular gram
    IntMatrix g = basis.transpose() * (l.gram() * basis);
    return Lattice(std::move(g));
}

std::vector<BinaryQuadraticForm> transcendental_candidates(const Lattice& ns) {
    if (ns.rank() != 20) throw DomainError("Neron-Severi lattice must have rank 20");
    Int d = ns.determinant();
    if (d >= 0) throw DomainError("Neron-Severi determinant must be negative");
    DiscriminantForm target = negate_form(discriminant_form(ns));
    std::vector<BinaryQuadraticForm> out;
    for (const auto& f : enumerate_even_forms(-d)) {
        DiscriminantForm df = discriminant_form(Lattice(f.gram()));
        if (disc_forms_isomorphic(target, df)) out.push_back(f);
    }
    return out;
}

std::string TranscendentalCheck::describe() const {
    switch (reason) {
        case Reason::match: return "match";
        case Reason::det_mismatch: return "determinant mismatch";
        case Reason::form_mismatch: return "discriminant form mismatch";
    }
    return "?";
}

TranscendentalCheck check_transcendental(const Lattice& ns, const Lattice& t) {
    if (ns.rank() + t.rank() != 22)
        throw DomainError("ranks must sum to 22");
    Int dn = ns.determinant(), dt = t.determinant();
    if (abs(dn) != abs(dt)) return {false, TranscendentalCheck::Reason::det_mismatch};
    if (!disc_forms_isomorphic(negate_form(discriminant_form(ns)), discriminant_form(t)))
        return {false, TranscendentalCheck::Reason::form_mismatch};
    return {true, TranscendentalCheck::Reason::match};
}

} // namespace k3lat
