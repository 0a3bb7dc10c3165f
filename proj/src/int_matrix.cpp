#include "k3lat/int_matrix.hpp"

#include <algorithm>
#include <optional>

namespace k3lat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged initializer");
        for (const auto& x : r) e_.push_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != m.cols_) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

bool RatMatrix::is_integral() const {
    for (const auto& x : e_)
        if (x.get_den() != 1) return false;
    return true;
}

IntMatrix RatMatrix::to_int() const {
    if (!is_integral()) throw DomainError("matrix has non-integral entries");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).get_num();
    return m;
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

std::vector<Int> SnfResult::nontrivial_divisors() const {
    std::vector<Int> out;
    for (const Int& x : diagonal())
        if (x > 1) out.push_back(x);
    return out;
}

SnfResult snf(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SnfResult res{a, IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    const std::size_t lim = std::min(m, n);

    auto add_row = [&](IntMatrix& mat, std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < mat.cols(); ++j) mat.at(dst, j) += f * mat.at(src, j);
    };
    auto add_col = [&](IntMatrix& mat, std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < mat.rows(); ++i) mat.at(i, dst) += f * mat.at(i, src);
    };

    for (std::size_t s = 0; s < lim; ++s) {
        for (;;) {
            // smallest-absolute-value nonzero pivot keeps intermediates small
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = s; i < m; ++i)
                for (std::size_t j = s; j < n; ++j)
                    if (d.at(i, j) != 0 &&
                        (!best || mpz_cmpabs(d.at(i, j).get_mpz_t(),
                                             d.at(best->first, best->second).get_mpz_t()) < 0))
                        best = {{i, j}};
            if (!best) break;
            if (best->first != s) {
                d.swap_rows(s, best->first);
                u.swap_rows(s, best->first);
                res.sign_u = -res.sign_u;
            }
            if (best->second != s) {
                d.swap_cols(s, best->second);
                v.swap_cols(s, best->second);
                res.sign_v = -res.sign_v;
            }
            const Int piv = d.at(s, s);
            bool clean = true;
            for (std::size_t i = s + 1; i < m; ++i) {
                if (d.at(i, s) == 0) continue;
                Int k = d.at(i, s) / piv;  // truncated; remainder re-handled next pass
                if (k != 0) {
                    add_row(d, i, s, -k);
                    add_row(u, i, s, -k);
                }
                if (d.at(i, s) != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (d.at(s, j) == 0) continue;
                Int k = d.at(s, j) / piv;
                if (k != 0) {
                    add_col(d, j, s, -k);
                    add_col(v, j, s, -k);
                }
                if (d.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility chain: fold in any offending row and redo the block
            bool chain_ok = true;
            for (std::size_t i = s + 1; i < m && chain_ok; ++i)
                for (std::size_t j = s + 1; j < n; ++j)
                    if (d.at(i, j) % piv != 0) {
                        add_row(d, s, i, 1);
                        add_row(u, s, i, 1);
                        chain_ok = false;
                        break;
                    }
            if (chain_ok) break;
        }
        if (d.at(s, s) < 0) {
            for (std::size_t j = 0; j < n; ++j) d.at(s, j) = -d.at(s, j);
            for (std::size_t j = 0; j < m; ++j) u.at(s, j) = -u.at(s, j);
            res.sign_u = -res.sign_u;
        }
    }
    return res;
}

Int det(const IntMatrix& a) {
    if (!a.is_square()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

Int det_via_snf(const IntMatrix& a) {
    if (!a.is_square()) throw DimensionError("determinant of non-square matrix");
    SnfResult r = snf(a);
    Int prod = 1;
    for (const Int& x : r.diagonal()) prod *= x;
    // U A V = D  =>  det A = det D / (det U det V)
    return Int(r.sign_u * r.sign_v) * prod;
}

RatMatrix rational_inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix w = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w.at(p, c) == 0) ++p;
        if (p == n) throw SingularMatrixError("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(c, j), w.at(p, j));
                std::swap(inv.at(c, j), inv.at(p, j));
            }
        Rat piv = w.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            w.at(c, j) /= piv;
            inv.at(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || w.at(r, c) == 0) continue;
            Rat f = w.at(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(r, j) -= f * w.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

RatMatrix rational_inverse(const IntMatrix& a) {
    return rational_inverse(RatMatrix::from_int(a));
}

std::size_t rank(const IntMatrix& a) {
    std::size_t r = 0;
    for (const Int& x : snf(a).diagonal())
        if (x != 0) ++r;
    return r;
}

std::pair<std::size_t, std::size_t> signature(const IntMatrix& a) {
    if (!a.is_symmetric()) throw DomainError("signature of non-symmetric matrix");
    const std::size_t n = a.rows();
    RatMatrix w = RatMatrix::from_int(a);
    std::size_t pos = 0, neg = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (w.at(s, s) == 0) {
            // congruent repair: prefer a later nonzero diagonal, else fold in a
            // row that pairs with s
            std::size_t swp = s;
            for (std::size_t i = s + 1; i < n; ++i)
                if (w.at(i, i) != 0) { swp = i; break; }
            if (swp != s) {
                for (std::size_t j = 0; j < n; ++j) std::swap(w.at(s, j), w.at(swp, j));
                for (std::size_t i = 0; i < n; ++i) std::swap(w.at(i, s), w.at(i, swp));
            } else {
                std::size_t k = n;
                for (std::size_t j = s + 1; j < n; ++j)
                    if (w.at(s, j) != 0) { k = j; break; }
                if (k == n) continue;  // fully zero direction
                for (std::size_t j = 0; j < n; ++j) w.at(s, j) += w.at(k, j);
                for (std::size_t i = 0; i < n; ++i) w.at(i, s) += w.at(i, k);
            }
        }
        const Rat piv = w.at(s, s);
        if (piv > 0) ++pos; else ++neg;
        for (std::size_t i = s + 1; i < n; ++i) {
            if (w.at(i, s) == 0) continue;
            Rat f = w.at(i, s) / piv;
            for (std::size_t j = 0; j < n; ++j) w.at(i, j) -= f * w.at(s, j);
            for (std::size_t j = 0; j < n; ++j) w.at(j, i) -= f * w.at(j, s);
        }
    }
    return {pos, neg};
}

IntMatrix integer_kernel(const IntMatrix& a) {
    SnfResult r = snf(a);
    const std::size_t n = a.cols();
    const std::size_t lim = std::min(a.rows(), n);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= lim || r.d.at(j, j) == 0) keep.push_back(j);
    IntMatrix k(n, keep.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) k.at(i, j) = r.v.at(i, keep[j]);
    return k;
}

} // namespace k3lat
