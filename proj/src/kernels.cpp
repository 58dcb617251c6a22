#include "druz/kernels.hpp"

#include <atomic>
#include <vector>

#ifdef DRUZ_HAVE_OPENMP
#include <omp.h>
#endif

namespace druz::kernels {

namespace {

std::atomic<bool> g_parallel{true};

// 64 * 64 term products; below this the setup costs more than the loop
constexpr size_t kParallelWork = 4096;

void accumulate_range(Polynomial::TermMap& acc,
                      const std::vector<const Polynomial::TermMap::value_type*>& lhs,
                      size_t begin, size_t end, const Polynomial& b, int64_t bound) {
    for (size_t i = begin; i < end; ++i) {
        const Monomial& ma = lhs[i]->first;
        const Rat& ca = lhs[i]->second;
        uint64_t da = ma.degree();
        for (const auto& [mb, cb] : b.terms()) {
            // terms are sorted by descending degree: once one product fits
            // the bound, all later ones do too
            if (bound >= 0 && static_cast<int64_t>(da + mb.degree()) > bound) continue;
            Monomial m = ma.times(mb);
            auto [it, inserted] = acc.try_emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
}

std::vector<const Polynomial::TermMap::value_type*> term_pointers(const Polynomial& p) {
    std::vector<const Polynomial::TermMap::value_type*> v;
    v.reserve(p.term_count());
    for (const auto& t : p.terms()) v.push_back(&t);
    return v;
}

}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel_enabled(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

int max_threads() {
#ifdef DRUZ_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Polynomial mul_serial(const Polynomial& a, const Polynomial& b, int64_t bound) {
    if (a.arity() != b.arity()) throw error("polynomial arity mismatch");
    Polynomial::TermMap acc;
    auto lhs = term_pointers(a);
    accumulate_range(acc, lhs, 0, lhs.size(), b, bound);
    return Polynomial::from_terms(a.arity(), std::move(acc));
}

Polynomial mul_parallel(const Polynomial& a, const Polynomial& b, int64_t bound) {
#ifndef DRUZ_HAVE_OPENMP
    return mul_serial(a, b, bound);
#else
    if (a.arity() != b.arity()) throw error("polynomial arity mismatch");
    auto lhs = term_pointers(a);
    int nt = std::min<int>(max_threads(), std::max<int>(1, static_cast<int>(lhs.size())));
    std::vector<Polynomial::TermMap> partial(static_cast<size_t>(nt));
#pragma omp parallel num_threads(nt)
    {
        int t = omp_get_thread_num();
        size_t chunk = (lhs.size() + static_cast<size_t>(nt) - 1) / static_cast<size_t>(nt);
        size_t begin = static_cast<size_t>(t) * chunk;
        size_t end = std::min(lhs.size(), begin + chunk);
        if (begin < end)
            accumulate_range(partial[static_cast<size_t>(t)], lhs, begin, end, b, bound);
    }
    Polynomial::TermMap acc = std::move(partial[0]);
    for (size_t t = 1; t < partial.size(); ++t) {
        for (auto& [m, c] : partial[t]) {
            auto [it, inserted] = acc.try_emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    return Polynomial::from_terms(a.arity(), std::move(acc));
#endif
}

Polynomial mul(const Polynomial& a, const Polynomial& b, int64_t bound) {
    size_t work = a.term_count() * b.term_count();
    if (parallel_enabled() && max_threads() > 1 && work >= kParallelWork)
        return mul_parallel(a, b, bound);
    return mul_serial(a, b, bound);
}

}  // namespace druz::kernels
