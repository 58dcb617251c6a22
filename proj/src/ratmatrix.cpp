#include "druz/ratmatrix.hpp"

#include <algorithm>

#ifdef DRUZ_HAVE_OPENMP
#include <omp.h>
#endif

namespace druz {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::from_rows(std::vector<std::vector<Rat>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw error("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = std::move(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

std::vector<Rat> RatMatrix::row(int i) const {
    std::vector<Rat> r(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
    return r;
}

std::vector<Rat> RatMatrix::col(int j) const {
    std::vector<Rat> c(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<size_t>(i)] = at(i, j);
    return c;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& r) { return r.is_zero(); });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw error("matrix dimension mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix dimension mismatch");
    RatMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix dimension mismatch");
    RatMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

RatMatrix& RatMatrix::operator*=(const Rat& c) {
    for (auto& v : data_) v *= c;
    return *this;
}

std::vector<Rat> RatMatrix::apply(std::span<const Rat> v) const {
    if (static_cast<int>(v.size()) != cols_) throw error("matrix dimension mismatch");
    std::vector<Rat> out(static_cast<size_t>(rows_), Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

RrefResult rank_and_rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int j = 0; j < a.cols() && r < a.rows(); ++j) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (!a.at(i, j).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int k = 0; k < a.cols(); ++k) std::swap(a.at(pivot, k), a.at(r, k));
        Rat inv = a.at(r, j).inv();
        for (int k = j; k < a.cols(); ++k) a.at(r, k) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, j).is_zero()) continue;
            Rat f = a.at(i, j);
            for (int k = j; k < a.cols(); ++k) a.at(i, k) -= f * a.at(r, k);
        }
        pivots.push_back(j);
        ++r;
    }
    return {r, std::move(a), std::move(pivots)};
}

int rank(const RatMatrix& m) { return rank_and_rref(m).rank; }

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    RrefResult rr = rank_and_rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : rr.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        std::vector<Rat> v(static_cast<size_t>(m.cols()), Rat(0));
        v[static_cast<size_t>(j)] = Rat(1);
        for (int i = 0; i < rr.rank; ++i)
            v[static_cast<size_t>(rr.pivot_cols[static_cast<size_t>(i)])] = -rr.rref.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw error("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return Rat(1);

    // clear denominators per row, then integer Bareiss
    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(n),
                                          std::vector<mpz_class>(static_cast<size_t>(n)));
    mpz_class scale(1);
    for (int i = 0; i < n; ++i) {
        mpz_class l(1);
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            const Rat& v = m.at(i, j);
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.num() * (l / v.den());
        }
        scale *= l;
    }

    int sign = 1;
    mpz_class prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Rat(0);
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                    a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                             num.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    mpz_class det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (sign < 0) det = -det;
    return Rat(std::move(det), std::move(scale));
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw error("inverse of a non-square matrix");
    int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    RrefResult rr = rank_and_rref(aug);
    if (rr.rank < n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (rr.pivot_cols[static_cast<size_t>(i)] != i) return std::nullopt;
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.rref.at(i, n + j);
    return inv;
}

RatMatrix right_inverse(const RatMatrix& b) {
    int r = b.rows(), n = b.cols();
    if (r > n) throw error("right inverse requires rows <= cols");
    RrefResult rr = rank_and_rref(b);
    if (rr.rank < r) throw error("right inverse of a rank-deficient matrix");
    RatMatrix bp(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            bp.at(i, j) = b.at(i, rr.pivot_cols[static_cast<size_t>(j)]);
    auto bp_inv = inverse(bp);
    if (!bp_inv) throw error("right inverse of a rank-deficient matrix");
    RatMatrix c(n, r);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
            c.at(rr.pivot_cols[static_cast<size_t>(j)], k) = bp_inv->at(j, k);
    return c;
}

RatMatrix matrix_with_kernel(const std::vector<std::vector<Rat>>& span_vectors, int n) {
    int s = static_cast<int>(span_vectors.size());
    if (s == 0) return RatMatrix::identity(n);
    if (s >= n) throw error("matrix_with_kernel requires fewer than n vectors");
    RatMatrix m(s, n);
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(span_vectors[static_cast<size_t>(i)].size()) != n)
            throw error("kernel vector arity mismatch");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = span_vectors[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    if (rank(m) < s) throw error("matrix_with_kernel requires independent vectors");
    auto rows = kernel_basis(m);
    return RatMatrix::from_rows(std::move(rows));
}

namespace {

Rat principal_minor(const RatMatrix& a, const std::vector<int>& idx) {
    int k = static_cast<int>(idx.size());
    RatMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub.at(i, j) = a.at(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
    return determinant(sub);
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<MinorSizeReport> scan_impl(const RatMatrix& a, int lo, int hi, bool parallel) {
    if (a.rows() != a.cols()) throw error("principal minors of a non-square matrix");
    int n = a.rows();
    if (n > 16) throw error("principal minor scan capped at 16x16");
    if (lo < 2 || hi < lo || hi > n) throw error("bad principal minor size range");
    std::vector<MinorSizeReport> reports;
    for (int size = lo; size <= hi; ++size) {
        auto subsets = combinations(n, size);
        long witness = -1;
#ifdef DRUZ_HAVE_OPENMP
        if (parallel) {
            long count = static_cast<long>(subsets.size());
            long local_best = count;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : local_best)
            for (long t = 0; t < count; ++t) {
                if (!principal_minor(a, subsets[static_cast<size_t>(t)]).is_zero())
                    local_best = std::min(local_best, t);
            }
            witness = local_best == count ? -1 : local_best;
        } else
#else
        (void)parallel;
#endif
        {
            for (size_t t = 0; t < subsets.size(); ++t) {
                if (!principal_minor(a, subsets[t]).is_zero()) {
                    witness = static_cast<long>(t);
                    break;
                }
            }
        }
        MinorSizeReport rep{size, witness < 0, std::nullopt, std::nullopt};
        if (witness >= 0) {
            rep.witness_indices = subsets[static_cast<size_t>(witness)];
            rep.witness_value = principal_minor(a, *rep.witness_indices);
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace

std::vector<MinorSizeReport> principal_minor_scan(const RatMatrix& a, int lo, int hi) {
    return scan_impl(a, lo, hi, true);
}

std::vector<MinorSizeReport> principal_minor_scan_serial(const RatMatrix& a, int lo, int hi) {
    return scan_impl(a, lo, hi, false);
}

}  // namespace druz
