#include "druz/polymap.hpp"

#include "druz/kernels.hpp"

#include <algorithm>
#include <map>

#ifdef DRUZ_HAVE_OPENMP
#include <omp.h>
#endif

namespace druz {

PolyMap::PolyMap(std::vector<Polynomial> components) : comps_(std::move(components)) {
    int n = static_cast<int>(comps_.size());
    for (const auto& c : comps_)
        if (c.arity() != n) throw error("map components must have arity equal to the dimension");
}

PolyMap PolyMap::identity(int n) {
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
    return PolyMap(std::move(comps));
}

std::vector<Polynomial> PolyMap::minus_identity() const {
    std::vector<Polynomial> h;
    h.reserve(comps_.size());
    for (int i = 0; i < dim(); ++i)
        h.push_back(comps_[static_cast<size_t>(i)] - Polynomial::variable(dim(), i));
    return h;
}

std::vector<Rat> PolyMap::evaluate(std::span<const Rat> point) const {
    std::vector<Rat> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.evaluate(point));
    return out;
}

PolyMatrix::PolyMatrix(int rows, int cols, int arity)
    : rows_(rows), cols_(cols), arity_(arity) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Polynomial(arity));
}

PolyMatrix PolyMatrix::identity(int n, int arity) {
    PolyMatrix m(n, n, arity);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(arity, Rat(1));
    return m;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial PolyMatrix::trace() const {
    if (rows_ != cols_) throw error("trace of a non-square matrix");
    Polynomial t(arity_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RatMatrix PolyMatrix::evaluate(std::span<const Rat> point) const {
    RatMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
}

PolyMatrix PolyMatrix::lift_arity(int new_arity) const {
    PolyMatrix m(rows_, cols_, new_arity);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).lift_arity(new_arity);
    return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.arity_ != b.arity_)
        throw error("matrix dimension mismatch");
    PolyMatrix c(a.rows_, a.cols_, a.arity_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.arity_ != b.arity_)
        throw error("matrix dimension mismatch");
    PolyMatrix c(a.rows_, a.cols_, a.arity_);
    for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

PolyMatrix mul_serial(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_ || a.arity_ != b.arity_) throw error("matrix dimension mismatch");
    PolyMatrix c(a.rows_, b.cols_, a.arity_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            Polynomial acc(a.arity_);
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc += kernels::mul_serial(a.at(i, k), b.at(k, j));
            }
            c.at(i, j) = std::move(acc);
        }
    return c;
}

PolyMatrix mul_parallel(const PolyMatrix& a, const PolyMatrix& b) {
#ifndef DRUZ_HAVE_OPENMP
    return mul_serial(a, b);
#else
    if (a.cols_ != b.rows_ || a.arity_ != b.arity_) throw error("matrix dimension mismatch");
    PolyMatrix c(a.rows_, b.cols_, a.arity_);
    int total = a.rows_ * b.cols_;
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < total; ++t) {
        int i = t / b.cols_;
        int j = t % b.cols_;
        Polynomial acc(a.arity_);
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
            acc += kernels::mul_serial(a.at(i, k), b.at(k, j));
        }
        c.at(i, j) = std::move(acc);
    }
    return c;
#endif
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (kernels::parallel_enabled() && kernels::max_threads() > 1 &&
        a.rows_ * b.cols_ >= 16)
        return mul_parallel(a, b);
    return mul_serial(a, b);
}

std::vector<Polynomial> PolyMatrix::apply(std::span<const Rat> v) const {
    if (static_cast<int>(v.size()) != cols_) throw error("matrix dimension mismatch");
    std::vector<Polynomial> out(static_cast<size_t>(rows_), Polynomial(arity_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (v[static_cast<size_t>(j)].is_zero() || at(i, j).is_zero()) continue;
            out[static_cast<size_t>(i)] += v[static_cast<size_t>(j)] * at(i, j);
        }
    return out;
}

PolyMatrix jacobian_of(const std::vector<Polynomial>& comps) {
    int rows = static_cast<int>(comps.size());
    int arity = rows == 0 ? 0 : comps[0].arity();
    PolyMatrix j(rows, arity, arity);
    for (int i = 0; i < rows; ++i)
        for (int v = 0; v < arity; ++v) j.at(i, v) = comps[static_cast<size_t>(i)].derivative(v);
    return j;
}

PolyMatrix jacobian(const PolyMap& f) { return jacobian_of(f.components()); }

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw error("determinant of a non-square matrix");
    int n = m.rows();
    int arity = m.arity();
    if (n == 0) return Polynomial::constant(arity, Rat(1));
    std::vector<std::vector<Polynomial>> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)].push_back(m.at(i, j));
    int sign = 1;
    Polynomial prev = Polynomial::constant(arity, Rat(1));
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Polynomial(arity);
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        bool failed = false;
#ifdef DRUZ_HAVE_OPENMP
        bool par = kernels::parallel_enabled() && kernels::max_threads() > 1 && (n - k) > 4;
#pragma omp parallel for collapse(2) schedule(dynamic, 1) if (par)
#endif
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num =
                    kernels::mul_serial(a[static_cast<size_t>(k)][static_cast<size_t>(k)],
                                        a[static_cast<size_t>(i)][static_cast<size_t>(j)]) -
                    kernels::mul_serial(a[static_cast<size_t>(i)][static_cast<size_t>(k)],
                                        a[static_cast<size_t>(k)][static_cast<size_t>(j)]);
                auto q = num.divide_exact(prev);
                if (!q)
                    failed = true;
                else
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(*q);
            }
        }
        if (failed) throw error("fraction-free elimination lost exactness");
        for (int i = k + 1; i < n; ++i)
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = Polynomial(arity);
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    Polynomial det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (sign < 0) det = -det;
    return det;
}

Polynomial jacobian_determinant(const PolyMap& f) { return determinant(jacobian(f)); }

bool is_keller(const PolyMap& f) {
    return jacobian_determinant(f) == Polynomial::constant(f.dim(), Rat(1));
}

std::optional<int> nilpotency_index(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw error("nilpotency index of a non-square matrix");
    if (m.rows() == 0) return 1;
    PolyMatrix p = m;
    for (int k = 1; k <= m.rows(); ++k) {
        if (p.is_zero()) return k;
        if (k < m.rows()) p = p * m;
    }
    return std::nullopt;
}

std::vector<std::vector<Rat>> constant_kernel(const PolyMatrix& m) {
    // one linear condition on v per (row, monomial) pair
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < m.rows(); ++i) {
        std::map<Monomial, std::vector<Rat>, GrlexDesc> conditions;
        for (int j = 0; j < m.cols(); ++j) {
            for (const auto& [mono, c] : m.at(i, j).terms()) {
                auto it = conditions.find(mono);
                if (it == conditions.end())
                    it = conditions
                             .emplace(mono, std::vector<Rat>(static_cast<size_t>(m.cols()), Rat(0)))
                             .first;
                it->second[static_cast<size_t>(j)] = c;
            }
        }
        for (auto& [mono, row] : conditions) rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        // zero matrix: the kernel is everything
        std::vector<std::vector<Rat>> basis;
        for (int j = 0; j < m.cols(); ++j) {
            std::vector<Rat> v(static_cast<size_t>(m.cols()), Rat(0));
            v[static_cast<size_t>(j)] = Rat(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return kernel_basis(RatMatrix::from_rows(std::move(rows)));
}

int generic_rank(const PolyMatrix& m) {
    int maxr = std::min(m.rows(), m.cols());
    if (maxr == 0) return 0;
    // lower bound from deterministic evaluation points
    int lower = 0;
    for (long p = 1; p <= 3; ++p) {
        std::vector<Rat> point;
        point.reserve(static_cast<size_t>(m.arity()));
        for (int j = 0; j < m.arity(); ++j)
            point.push_back(Rat(p + 2 * j + 1, p + 1));
        lower = std::max(lower, rank(m.evaluate(point)));
        if (lower == maxr) return maxr;
    }
    // raise until every (r+1)-minor vanishes symbolically
    auto all_minors_vanish = [&](int k) {
        std::vector<int> rows_idx(static_cast<size_t>(k)), cols_idx(static_cast<size_t>(k));
        std::vector<std::vector<int>> row_sets, col_sets;
        std::vector<int> idx(static_cast<size_t>(k));
        auto gen = [&](int total) {
            std::vector<std::vector<int>> sets;
            for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
            while (true) {
                sets.push_back(idx);
                int i = k - 1;
                while (i >= 0 && idx[static_cast<size_t>(i)] == total - k + i) --i;
                if (i < 0) break;
                ++idx[static_cast<size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            }
            return sets;
        };
        row_sets = gen(m.rows());
        col_sets = gen(m.cols());
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) {
                PolyMatrix sub(k, k, m.arity());
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        sub.at(i, j) = m.at(rs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]);
                if (!determinant(sub).is_zero()) return false;
            }
        return true;
    };
    int r = lower;
    while (r < maxr && !all_minors_vanish(r + 1)) ++r;
    return r;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    if (outer.dim() != inner.dim()) throw error("map dimension mismatch");
    return PolyMap(substitute_all(outer.components(), inner.components()));
}

std::vector<Polynomial> substitute_all(const std::vector<Polynomial>& polys,
                                       std::span<const Polynomial> g) {
    std::vector<Polynomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.substitute(g));
    return out;
}

std::optional<int64_t> map_degree(const PolyMap& f) {
    std::optional<int64_t> d;
    for (const auto& c : f.components()) {
        auto cd = c.degree();
        if (cd && (!d || *cd > *d)) d = cd;
    }
    return d;
}

PolyMap linear_map(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw error("linear_map requires a square matrix");
    return PolyMap(linear_forms(m));
}

std::vector<Polynomial> linear_forms(const RatMatrix& m) {
    std::vector<Polynomial> forms;
    forms.reserve(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Polynomial f(m.cols());
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                f += m.at(i, j) * Polynomial::variable(m.cols(), j);
        forms.push_back(std::move(f));
    }
    return forms;
}

HomogeneousProfile derive_profile(const PolyMap& f) {
    auto h = f.minus_identity();
    HomogeneousProfile prof;
    for (size_t i = 0; i < h.size(); ++i) {
        if (h[i].is_zero()) {
            prof.degrees.push_back(2);
            prof.defaulted.push_back(true);
        } else if (h[i].is_homogeneous()) {
            prof.degrees.push_back(static_cast<int>(*h[i].degree()));
            prof.defaulted.push_back(false);
        } else {
            throw error("component " + std::to_string(i + 1) +
                        " of F - X is not homogeneous");
        }
    }
    return prof;
}

static void validate_profile(const std::vector<Polynomial>& h,
                             const HomogeneousProfile& prof) {
    if (prof.degrees.size() != h.size()) throw error("profile dimension mismatch");
    for (size_t i = 0; i < h.size(); ++i) {
        if (prof.degrees[i] < 1) throw error("profile degrees must be >= 1");
        if (h[i].is_zero()) continue;
        if (!h[i].is_homogeneous() ||
            *h[i].degree() != static_cast<int64_t>(prof.degrees[i]))
            throw error("profile mismatch with the actual degree of component " +
                        std::to_string(i + 1));
    }
}

bool euler_form_check(const PolyMap& f, const HomogeneousProfile& prof) {
    auto h = f.minus_identity();
    validate_profile(h, prof);
    int n = f.dim();
    PolyMatrix jh = jacobian_of(h);
    for (int i = 0; i < n; ++i) {
        // ((I + D' JH) X)_i = x_i + (1/d_i) * sum_j dH_i/dx_j * x_j
        Polynomial rhs = Polynomial::variable(n, i);
        Polynomial acc(n);
        for (int j = 0; j < n; ++j) {
            if (jh.at(i, j).is_zero()) continue;
            acc += jh.at(i, j) * Polynomial::variable(n, j);
        }
        acc *= Rat(1, prof.degrees[static_cast<size_t>(i)]);
        rhs += acc;
        if (rhs != f.comp(i)) return false;
    }
    return true;
}

std::optional<DetectedPowerLinear> detect_power_linear(const PolyMap& f) {
    int n = f.dim();
    auto h = f.minus_identity();
    RatMatrix a(n, n);
    std::vector<int> degs(static_cast<size_t>(n), 2);
    std::vector<bool> defaulted(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        const Polynomial& hi = h[static_cast<size_t>(i)];
        if (hi.is_zero()) {
            defaulted[static_cast<size_t>(i)] = true;
            continue;
        }
        if (!hi.is_homogeneous()) return std::nullopt;
        int64_t d = *hi.degree();
        if (d < 2) return std::nullopt;
        auto j0 = hi.first_variable();
        std::vector<uint32_t> pure(static_cast<size_t>(n), 0);
        pure[static_cast<size_t>(*j0)] = static_cast<uint32_t>(d);
        Rat c0 = hi.coeff(Monomial(pure));
        auto root = nth_root(c0, static_cast<unsigned long>(d));
        if (!root || root->is_zero()) return std::nullopt;
        // even-degree sign ambiguity: positive leading coefficient
        if (d % 2 == 0 && root->sign() < 0) *root = -*root;
        std::vector<Rat> coeffs(static_cast<size_t>(n), Rat(0));
        coeffs[static_cast<size_t>(*j0)] = *root;
        Rat denom = Rat(d) * root->pow(d - 1);
        for (int j = 0; j < n; ++j) {
            if (j == *j0) continue;
            std::vector<uint32_t> mixed(static_cast<size_t>(n), 0);
            mixed[static_cast<size_t>(*j0)] = static_cast<uint32_t>(d - 1);
            mixed[static_cast<size_t>(j)] = 1;
            coeffs[static_cast<size_t>(j)] = hi.coeff(Monomial(mixed)) / denom;
        }
        Polynomial form(n);
        for (int j = 0; j < n; ++j)
            if (!coeffs[static_cast<size_t>(j)].is_zero())
                form += coeffs[static_cast<size_t>(j)] * Polynomial::variable(n, j);
        if (form.pow(static_cast<uint32_t>(d)) != hi) return std::nullopt;
        for (int j = 0; j < n; ++j) a.at(i, j) = coeffs[static_cast<size_t>(j)];
        degs[static_cast<size_t>(i)] = static_cast<int>(d);
    }
    return DetectedPowerLinear{PowerLinearData{std::move(a), std::move(degs)},
                               std::move(defaulted)};
}

}  // namespace druz
